//! Annotated game records, saved as one versioned JSON document.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use xmcts_core::explain::{ExplanationReport, TurnSnapshot};
use xmcts_core::game::{initial_state, AnyGame, BoardSize, GameError, GameId, GameOutcome, GameState, Player};

use crate::session::Controller;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranscriptHeader {
    pub game: GameId,
    pub size: BoardSize,
    pub controllers: [Controller; 2],
    /// Creation time in Unix seconds; absent for reproducible self-play.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub created_unix: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TurnRecord {
    pub ply: u32,
    pub mover: Player,
    pub notation: String,
    /// Rendered position after the move.
    pub state: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshot: Option<TurnSnapshot>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ExplanationReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    pub version: u32,
    pub header: TranscriptHeader,
    pub turns: Vec<TurnRecord>,
    pub outcome: Option<GameOutcome>,
}

#[derive(Debug, Error)]
pub enum TranscriptError {
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed transcript {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("unsupported transcript version {0} (expected {expected})", expected = Transcript::VERSION)]
    Version(u32),
    #[error("turn {ply}: {source}")]
    Replay { ply: u32, source: GameError },
    #[error("turn {ply}: recorded {field} differs from replay")]
    Mismatch { ply: u32, field: &'static str },
    #[error("recorded outcome differs from replay")]
    Outcome,
}

impl Transcript {
    pub const VERSION: u32 = 1;

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcripts always serialize")
    }

    pub fn save(&self, path: &Path) -> Result<(), TranscriptError> {
        fs::write(path, self.to_json() + "\n").map_err(|source| TranscriptError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// Reads and schema-checks a transcript; see [`Transcript::replay`] for
    /// the move-level check.
    pub fn load(path: &Path) -> Result<Transcript, TranscriptError> {
        let text = fs::read_to_string(path).map_err(|source| TranscriptError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Transcript::from_json(&text).map_err(|e| match e {
            TranscriptError::Parse { source, .. } => TranscriptError::Parse {
                path: path.to_path_buf(),
                source,
            },
            other => other,
        })
    }

    pub fn from_json(text: &str) -> Result<Transcript, TranscriptError> {
        let t: Transcript = serde_json::from_str(text).map_err(|source| TranscriptError::Parse {
            path: PathBuf::from("<memory>"),
            source,
        })?;
        if t.version != Transcript::VERSION {
            return Err(TranscriptError::Version(t.version));
        }
        Ok(t)
    }

    /// Replays every move from the opening position, checking the recorded
    /// movers, states and outcome. Returns the positions after each move.
    pub fn replay(&self) -> Result<Vec<AnyGame>, TranscriptError> {
        let mut state = initial_state(self.header.game, Some(self.header.size))
            .map_err(|source| TranscriptError::Replay { ply: 0, source })?;
        let mut states = Vec::with_capacity(self.turns.len());
        for turn in &self.turns {
            let ply = turn.ply;
            if turn.mover != state.to_move() {
                return Err(TranscriptError::Mismatch { ply, field: "mover" });
            }
            state = state
                .apply_notation(&turn.notation)
                .map_err(|source| TranscriptError::Replay { ply, source })?;
            if state.render() != turn.state {
                return Err(TranscriptError::Mismatch { ply, field: "state" });
            }
            states.push(state.clone());
        }
        if state.outcome() != self.outcome {
            return Err(TranscriptError::Outcome);
        }
        Ok(states)
    }
}
