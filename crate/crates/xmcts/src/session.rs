use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use xmcts_core::explain::{explain, ExplainError, ExplanationReport, ThresholdConfig, TurnSnapshot};
use xmcts_core::game::{initial_state, AnyGame, BoardSize, GameError, GameId, GameOutcome, GameState, Player};
use xmcts_core::mcts::{Engine, SearchConfig, SearchError};

use crate::transcript::{Transcript, TranscriptHeader, TurnRecord};

/// Who decides the moves of one seat.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Controller {
    Human,
    Engine {
        #[serde(default)]
        config: SearchConfig,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionConfig {
    pub game: GameId,
    pub size: BoardSize,
    pub controllers: [Controller; 2],
    /// Prose detail of engine reports (0 none, 1 brief, 2 full).
    pub verbosity: u8,
    #[serde(default)]
    pub thresholds: ThresholdConfig,
    /// Iteration budget for `analyze`; defaults to the play budget.
    #[serde(default)]
    pub analysis_iterations: Option<u64>,
}

impl SessionConfig {
    pub fn new(game: GameId, size: Option<BoardSize>, controllers: [Controller; 2]) -> Self {
        SessionConfig {
            game,
            size: size.unwrap_or_else(|| game.default_size()),
            controllers,
            verbosity: 2,
            thresholds: ThresholdConfig::default(),
            analysis_iterations: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("it is not a human's turn (player {0} is an engine)")]
    NotYourTurn(Player),
    #[error("it is not an engine's turn (player {0} is human)")]
    NotEngineTurn(Player),
    #[error("game already over")]
    GameOver,
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Explain(#[from] ExplainError),
}

impl SessionError {
    /// Stable machine-readable code for the wire format.
    pub fn code(&self) -> &'static str {
        match self {
            SessionError::Game(GameError::UnknownGame(_)) => "unknown_game",
            SessionError::Game(GameError::UnsupportedSize { .. } | GameError::MalformedSize(_)) => "invalid_size",
            SessionError::Game(GameError::GameOver) | SessionError::GameOver => "game_over",
            SessionError::Game(_) => "illegal_move",
            SessionError::NotYourTurn(_) => "not_your_turn",
            SessionError::NotEngineTurn(_) => "not_engine_turn",
            SessionError::Search(SearchError::InvalidConfig(_)) => "invalid_config",
            SessionError::Search(_) | SessionError::Explain(_) => "search_failed",
        }
    }
}

/// One game in progress with its controllers and annotated history.
#[derive(Debug)]
pub struct GameSession {
    config: SessionConfig,
    state: AnyGame,
    engines: [Option<Engine<AnyGame>>; 2],
    turns: Vec<TurnRecord>,
    stop: Arc<AtomicBool>,
    created_unix: Option<u64>,
}

impl GameSession {
    pub fn new(config: SessionConfig) -> Result<Self, SessionError> {
        let state = initial_state(config.game, Some(config.size))?;
        let stop = Arc::new(AtomicBool::new(false));
        let mut engines = [None, None];
        for (seat, controller) in config.controllers.iter().enumerate() {
            if let Controller::Engine { config: cfg } = controller {
                cfg.validate()?;
                let mut cfg = cfg.clone();
                cfg.stop = Some(stop.clone());
                engines[seat] = Some(Engine::new(cfg));
            }
        }
        Ok(GameSession {
            config,
            state,
            engines,
            turns: Vec::new(),
            stop,
            created_unix: None,
        })
    }

    /// Records a creation time in the transcript header.
    pub fn with_timestamp(mut self, unix_seconds: u64) -> Self {
        self.created_unix = Some(unix_seconds);
        self
    }

    pub fn config(&self) -> &SessionConfig {
        &self.config
    }

    pub fn state(&self) -> &AnyGame {
        &self.state
    }

    pub fn turns(&self) -> &[TurnRecord] {
        &self.turns
    }

    pub fn outcome(&self) -> Option<GameOutcome> {
        self.state.outcome()
    }

    pub fn is_over(&self) -> bool {
        self.state.is_terminal()
    }

    pub fn controller(&self, player: Player) -> &Controller {
        &self.config.controllers[player.index()]
    }

    /// Flag that cancels the running search of this session.
    pub fn stop_handle(&self) -> Arc<AtomicBool> {
        self.stop.clone()
    }

    /// Applies a human move given in notation.
    pub fn submit_move(&mut self, notation: &str) -> Result<&TurnRecord, SessionError> {
        if self.is_over() {
            return Err(SessionError::GameOver);
        }
        let mover = self.state.to_move();
        if self.engines[mover.index()].is_some() {
            return Err(SessionError::NotYourTurn(mover));
        }
        let mv = self.state.parse_move(notation)?;
        Ok(self.commit(mv.id, None, None))
    }

    /// Lets the engine to move search, explain and play.
    pub fn engine_move(&mut self) -> Result<&TurnRecord, SessionError> {
        if self.is_over() {
            return Err(SessionError::GameOver);
        }
        let mover = self.state.to_move();
        let engine = self.engines[mover.index()]
            .as_mut()
            .ok_or(SessionError::NotEngineTurn(mover))?;
        self.stop.store(false, Ordering::Relaxed);
        let result = engine.think(&self.state)?;
        let report = explain(&result.snapshot, &self.config.thresholds, self.config.verbosity)?;
        Ok(self.commit(result.selected.id, Some(result.snapshot), Some(report)))
    }

    /// Explains the current position, or the one after `candidate`, without
    /// changing the session.
    pub fn analyze(&self, candidate: Option<&str>, iterations: Option<u64>) -> Result<ExplanationReport, SessionError> {
        let position = match candidate {
            Some(n) => self.state.apply_notation(n)?,
            None => self.state.clone(),
        };
        if position.is_terminal() {
            return Err(SessionError::GameOver);
        }
        let mover = position.to_move();
        let budget = iterations.or(self.config.analysis_iterations);
        self.stop.store(false, Ordering::Relaxed);
        let result = match (&self.engines[mover.index()], &self.engines[mover.opponent().index()]) {
            (Some(e), _) => e.analyze(&position, budget)?,
            (None, Some(e)) => Engine::new(e.config().clone()).analyze(&position, budget)?,
            (None, None) => {
                let mut cfg = SearchConfig::default();
                cfg.enhancements.solver = true;
                cfg.stop = Some(self.stop.clone());
                Engine::new(cfg).analyze(&position, budget)?
            }
        };
        Ok(explain(
            &result.snapshot,
            &self.config.thresholds,
            self.config.verbosity,
        )?)
    }

    fn commit(&mut self, mv: u32, snapshot: Option<TurnSnapshot>, report: Option<ExplanationReport>) -> &TurnRecord {
        let mover = self.state.to_move();
        let notation = self.state.notation(mv);
        self.state.play(mv);
        for engine in self.engines.iter_mut().flatten() {
            engine.observe(mv);
        }
        self.turns.push(TurnRecord {
            ply: self.turns.len() as u32 + 1,
            mover,
            notation,
            state: self.state.render(),
            snapshot,
            report,
        });
        self.turns.last().expect("just pushed")
    }

    pub fn transcript(&self) -> Transcript {
        Transcript {
            version: Transcript::VERSION,
            header: TranscriptHeader {
                game: self.config.game,
                size: self.config.size,
                controllers: self.config.controllers.clone(),
                created_unix: self.created_unix,
            },
            turns: self.turns.clone(),
            outcome: self.outcome(),
        }
    }
}
