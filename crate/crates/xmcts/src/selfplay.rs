//! Engine-versus-engine batches. Games run side by side and each one is
//! seeded from the batch seed and its index, so a batch is reproducible.

use std::fmt::Write;

use xmcts_core::batch;
use xmcts_core::game::{BoardSize, GameId, GameOutcome, Player};
use xmcts_core::mcts::SearchConfig;

use crate::session::{Controller, GameSession, SessionConfig, SessionError};
use crate::transcript::Transcript;

#[derive(Debug, Clone)]
pub struct SelfPlaySpec {
    pub game: GameId,
    pub size: Option<BoardSize>,
    /// Engine settings A and B; A plays first unless colors alternate.
    pub configs: [SearchConfig; 2],
    pub games: usize,
    pub seed: u64,
    /// Swap seats on odd-numbered games.
    pub alternate: bool,
    pub verbosity: u8,
}

#[derive(Debug, Clone)]
pub struct GameResult {
    pub index: usize,
    /// Index into `configs` of the engine playing first.
    pub first: usize,
    pub outcome: GameOutcome,
    pub transcript: Transcript,
}

impl GameResult {
    /// Reward of config `c` in this game (1 win, 0 draw, -1 loss).
    pub fn utility_of(&self, c: usize) -> f64 {
        let seat = if c == self.first { Player::FIRST } else { Player::SECOND };
        self.outcome.utility(seat)
    }
}

pub fn play_game(spec: &SelfPlaySpec, index: usize) -> Result<GameResult, SessionError> {
    let first = if spec.alternate { index % 2 } else { 0 };
    let seat_config = |c: usize| {
        let mut cfg = spec.configs[c].clone();
        cfg.seed = spec.seed.wrapping_add(index as u64);
        Controller::Engine { config: cfg }
    };
    let mut config = SessionConfig::new(spec.game, spec.size, [seat_config(first), seat_config(1 - first)]);
    config.verbosity = spec.verbosity;
    let mut session = GameSession::new(config)?;
    while !session.is_over() {
        session.engine_move()?;
    }
    Ok(GameResult {
        index,
        first,
        outcome: session.outcome().expect("finished game has an outcome"),
        transcript: session.transcript(),
    })
}

pub fn run(spec: &SelfPlaySpec) -> Result<Vec<GameResult>, SessionError> {
    batch::map_indexed(spec.games, |i| play_game(spec, i))
        .into_iter()
        .collect()
}

/// Win/draw/loss counts of each config.
pub fn summary_table(spec: &SelfPlaySpec, results: &[GameResult]) -> String {
    let mut out = String::from("config  enhancements          games  wins  draws  losses  win rate\n");
    for c in 0..2 {
        let (mut w, mut d, mut l) = (0, 0, 0);
        for r in results {
            match r.utility_of(c) {
                u if u > 0.0 => w += 1,
                u if u < 0.0 => l += 1,
                _ => d += 1,
            }
        }
        let rate = if results.is_empty() {
            0.0
        } else {
            w as f64 / results.len() as f64
        };
        let _ = writeln!(
            out,
            "{:<7} {:<21} {:>5} {:>5} {:>6} {:>7} {:>8.1}%",
            if c == 0 { "A" } else { "B" },
            spec.configs[c].enhancements.to_string(),
            results.len(),
            w,
            d,
            l,
            100.0 * rate
        );
    }
    out
}
