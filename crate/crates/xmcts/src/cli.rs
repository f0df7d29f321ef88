//! Command-line front end: interactive play, self-play batches, one-off
//! analysis and transcript replay.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use xmcts_core::enhancements::EnhancementFlags;
use xmcts_core::explain::{explain, ExplanationReport, ThresholdConfig};
use xmcts_core::game::{initial_state, BoardSize, GameId, GameOutcome, GameState};
use xmcts_core::mcts::{Engine, SearchConfig};

use crate::selfplay::{self, SelfPlaySpec};
use crate::session::{Controller, GameSession, SessionConfig};
use crate::transcript::Transcript;

#[derive(Debug, Parser)]
#[command(name = "xmcts", version, about = "Explainable MCTS for board games")]
pub struct Cli {
    /// Run the HTTP service.
    #[arg(long)]
    pub serve: bool,
    #[arg(long, env = "XMCTS_PORT", default_value_t = 8080)]
    pub port: u16,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play one game on the console.
    Play(PlayArgs),
    /// Run engine-versus-engine games.
    Selfplay(SelfPlayArgs),
    /// Search one position and print the explanation.
    Analyze(AnalyzeArgs),
    /// Print a saved transcript turn by turn.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Seat {
    Human,
    Mcts,
}

#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    #[arg(long, default_value = "connect_four")]
    pub game: GameId,
    /// Board size as WxH.
    #[arg(long)]
    pub size: Option<BoardSize>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Enhancements: comma list of solver, mast, nst, grave, pn (or none).
    #[arg(long, default_value = "solver")]
    pub enh: EnhancementFlags,
    /// Iterations per move (1000 when no budget is given).
    #[arg(long)]
    pub iterations: Option<u64>,
    /// Milliseconds per move.
    #[arg(long)]
    pub time_ms: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl SearchArgs {
    pub fn config(&self, enh: EnhancementFlags) -> SearchConfig {
        let iterations = match (self.iterations, self.time_ms) {
            (None, None) => Some(1000),
            (i, _) => i,
        };
        SearchConfig {
            iterations,
            time_ms: self.time_ms,
            seed: self.seed,
            enhancements: enh,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PlayArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, value_enum, default_value = "human")]
    pub p1: Seat,
    #[arg(long, value_enum, default_value = "mcts")]
    pub p2: Seat,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = 2)]
    pub verbosity: u8,
    /// Transcript file to write at the end.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SelfPlayArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, default_value_t = 10)]
    pub games: usize,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Enhancements of the second engine (defaults to --enh).
    #[arg(long)]
    pub enh_p2: Option<EnhancementFlags>,
    /// Swap seats every other game.
    #[arg(long)]
    pub alternate: bool,
    #[arg(long, default_value_t = 2)]
    pub verbosity: u8,
    /// Directory for one transcript per game.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Moves leading to the position, comma separated.
    #[arg(long, default_value = "")]
    pub moves: String,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = 2)]
    pub verbosity: u8,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    pub path: PathBuf,
}

fn print_report(out: &mut impl Write, report: &ExplanationReport) -> Result<()> {
    writeln!(out, "{}", report.raw_dump.trim_end())?;
    if !report.prose.is_empty() {
        writeln!(out, "{}", report.prose)?;
    }
    Ok(())
}

fn describe_outcome(o: Option<GameOutcome>) -> String {
    match o.map(|o| o.winner()) {
        None => "unfinished".into(),
        Some(None) => "draw".into(),
        Some(Some(p)) => format!("player {p} wins"),
    }
}

pub fn play(args: &PlayArgs, input: &mut impl BufRead, out: &mut impl Write) -> Result<()> {
    let seat = |s: Seat| match s {
        Seat::Human => Controller::Human,
        Seat::Mcts => Controller::Engine {
            config: args.search.config(args.search.enh),
        },
    };
    let mut config = SessionConfig::new(args.game.game, args.game.size, [seat(args.p1), seat(args.p2)]);
    config.verbosity = args.verbosity;
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let mut session = GameSession::new(config)?.with_timestamp(now);
    while !session.is_over() {
        writeln!(out, "\n{}", session.state().render().trim_end())?;
        let mover = session.state().to_move();
        match session.controller(mover) {
            Controller::Human => {
                write!(out, "player {mover} move: ")?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 || line.trim() == "quit" {
                    break;
                }
                if let Err(e) = session.submit_move(line.trim()) {
                    writeln!(out, "{e}")?;
                }
            }
            Controller::Engine { .. } => {
                let turn = session.engine_move()?;
                writeln!(out, "player {mover} plays {}", turn.notation)?;
                if let Some(r) = &turn.report {
                    print_report(out, r)?;
                }
            }
        }
    }
    writeln!(out, "\n{}", session.state().render().trim_end())?;
    writeln!(out, "result: {}", describe_outcome(session.outcome()))?;
    if let Some(path) = &args.out {
        session.transcript().save(path)?;
        writeln!(out, "transcript written to {}", path.display())?;
    }
    Ok(())
}

pub fn selfplay_spec(args: &SelfPlayArgs) -> SelfPlaySpec {
    let a = args.search.config(args.search.enh);
    let b = args.search.config(args.enh_p2.unwrap_or(args.search.enh));
    SelfPlaySpec {
        game: args.game.game,
        size: args.game.size,
        configs: [a, b],
        games: args.games,
        seed: args.search.seed,
        alternate: args.alternate,
        verbosity: args.verbosity,
    }
}

pub fn selfplay(args: &SelfPlayArgs, out: &mut impl Write) -> Result<()> {
    let spec = selfplay_spec(args);
    let results = selfplay::run(&spec)?;
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for r in &results {
            r.transcript.save(&dir.join(format!("game-{:03}.json", r.index)))?;
        }
    }
    for r in &results {
        writeln!(
            out,
            "game {:>3}: {} plies, {} (A plays {})",
            r.index,
            r.transcript.turns.len(),
            describe_outcome(Some(r.outcome)),
            if r.first == 0 { "first" } else { "second" }
        )?;
    }
    write!(out, "{}", selfplay::summary_table(&spec, &results))?;
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs, out: &mut impl Write) -> Result<()> {
    let mut state = initial_state(args.game.game, args.game.size)?;
    for m in args.moves.split(',').map(str::trim).filter(|m| !m.is_empty()) {
        state = state.apply_notation(m)?;
    }
    if state.is_terminal() {
        bail!("position is already decided: {}", describe_outcome(state.outcome()));
    }
    writeln!(out, "{}", state.render().trim_end())?;
    let engine = Engine::new(args.search.config(args.search.enh));
    let result = engine.analyze(&state, None)?;
    let report = explain(&result.snapshot, &ThresholdConfig::default(), args.verbosity)?;
    print_report(out, &report)
}

pub fn replay(args: &ReplayArgs, out: &mut impl Write) -> Result<()> {
    let t = Transcript::load(&args.path)?;
    t.replay()?;
    writeln!(out, "{} {}", t.header.game, t.header.size)?;
    for turn in &t.turns {
        writeln!(out, "\n{}. player {}: {}", turn.ply, turn.mover, turn.notation)?;
        writeln!(out, "{}", turn.state.trim_end())?;
        if let Some(r) = &turn.report {
            print_report(out, r)?;
        }
    }
    writeln!(out, "\nresult: {}", describe_outcome(t.outcome))?;
    Ok(())
}
