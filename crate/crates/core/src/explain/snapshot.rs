use serde::{Deserialize, Serialize};

use crate::enhancements::{EnhancementFlags, PnStats};
use crate::game::{GameId, Player};

/// Why the final move was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rationale {
    /// The move realizes the proven value of the root.
    Proven,
    /// Most visited child.
    Robust,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmafSummary {
    pub visits: u64,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NGramSummary {
    pub n: usize,
    pub visits: u64,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolvedInfo {
    /// +1, 0 or -1 for the player choosing the move.
    pub value: f64,
    /// Plies from the root to the end of the game, this move included.
    pub distance: u32,
}

/// Statistics of one root move, from the perspective of the player to move.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoveStats {
    pub notation: String,
    pub visits: u64,
    pub score: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amaf: Option<AmafSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ngrams: Vec<NGramSummary>,
    pub pess: f64,
    pub opt: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solved: Option<SolvedInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pn: Option<PnStats>,
}

impl MoveStats {
    /// An unproven move with open bounds.
    pub fn new(notation: impl Into<String>, visits: u64, score: f64) -> Self {
        MoveStats {
            notation: notation.into(),
            visits,
            score,
            amaf: None,
            ngrams: Vec::new(),
            pess: -1.0,
            opt: 1.0,
            solved: None,
            pn: None,
        }
    }

    pub fn with_solved(mut self, value: f64, distance: u32) -> Self {
        self.pess = value;
        self.opt = value;
        self.solved = Some(SolvedInfo { value, distance });
        self
    }

    pub fn with_amaf(mut self, visits: u64, score: f64) -> Self {
        self.amaf = Some(AmafSummary { visits, score });
        self
    }

    pub fn with_ngram(mut self, n: usize, visits: u64, score: f64) -> Self {
        self.ngrams.push(NGramSummary { n, visits, score });
        self
    }

    pub fn ngram(&self, n: usize) -> Option<&NGramSummary> {
        self.ngrams.iter().find(|g| g.n == n)
    }

    pub fn solved_value(&self) -> Option<f64> {
        self.solved.map(|s| s.value)
    }
}

/// Frozen record of one engine turn: everything the explainer may use.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TurnSnapshot {
    pub game: GameId,
    pub mover: Player,
    pub iterations: u64,
    pub previous_turn_score: Option<f64>,
    pub move_stats: Vec<MoveStats>,
    pub selected_index: usize,
    pub rationale: Rationale,
    pub principal_variation: Vec<String>,
    pub enhancements: EnhancementFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_pn: Option<PnStats>,
}

impl TurnSnapshot {
    pub fn selected(&self) -> &MoveStats {
        &self.move_stats[self.selected_index]
    }

    /// Alternatives to the selected move, in snapshot order.
    pub fn alternatives(&self) -> impl Iterator<Item = &MoveStats> {
        self.move_stats
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.selected_index)
            .map(|(_, m)| m)
    }
}
