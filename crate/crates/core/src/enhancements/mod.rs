//! Knowledge-free MCTS enhancements and the statistics they expose.
//!
//! - **Solver** ([`ScoreBounds`]): pessimistic/optimistic bounds propagated
//!   from terminal states, proving wins, losses and draws.
//! - **MAST** ([`MastTable`]): per-move reward averages driving a Gibbs
//!   playout policy.
//! - **NST** ([`NGramTable`]): averages of 1- to 3-move sequences driving an
//!   ε-greedy playout policy.
//! - **GRAVE** ([`AmafStats`], [`grave_value`]): AMAF statistics blended
//!   into the selection value.
//! - **Proof numbers** ([`PnStats`]): an estimate of the work left to prove
//!   or refute a root win, reported but never used to select.

mod amaf;
mod bounds;
mod mast;
mod nst;
mod pn;
mod stat;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use amaf::{grave_beta, grave_value, AmafStats};
pub use bounds::{Score, ScoreBounds};
pub use mast::{mast_policy, MastTable, UNSEEN_MEAN};
pub use nst::{nst_policy, NGramTable, MAX_GRAM};
pub use pn::{PnStats, ProofNumber};
pub use stat::MoveStat;

use crate::game::{GameOutcome, MoveId, Player};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default)]
pub struct EnhancementFlags {
    pub solver: bool,
    pub mast: bool,
    pub nst: bool,
    pub grave: bool,
    pub pn: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown enhancement '{0}' (expected solver, mast, nst, grave or pn)")]
pub struct UnknownEnhancement(pub String);

impl EnhancementFlags {
    pub const NAMES: [&'static str; 5] = ["solver", "mast", "nst", "grave", "pn"];

    pub fn all() -> Self {
        EnhancementFlags {
            solver: true,
            mast: true,
            nst: true,
            grave: true,
            pn: true,
        }
    }

    /// Score bounds are maintained for the solver and for proof numbers.
    pub fn tracks_bounds(&self) -> bool {
        self.solver || self.pn
    }

    fn get(&self, name: &str) -> bool {
        match name {
            "solver" => self.solver,
            "mast" => self.mast,
            "nst" => self.nst,
            "grave" => self.grave,
            _ => self.pn,
        }
    }
}

impl fmt::Display for EnhancementFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let on: Vec<&str> = Self::NAMES.into_iter().filter(|n| self.get(n)).collect();
        if on.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&on.join(","))
        }
    }
}

impl FromStr for EnhancementFlags {
    type Err = UnknownEnhancement;

    /// Parses a comma list such as `"solver,mast"`; `""` and `"none"` enable nothing.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut flags = EnhancementFlags::default();
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty() && *n != "none") {
            match name {
                "solver" => flags.solver = true,
                "mast" => flags.mast = true,
                "nst" => flags.nst = true,
                "grave" => flags.grave = true,
                "pn" => flags.pn = true,
                other => return Err(UnknownEnhancement(other.to_string())),
            }
        }
        Ok(flags)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EnhancementParams {
    /// Gibbs temperature of the MAST playout policy.
    pub mast_temperature: f64,
    /// Longest n-gram NST records (1..=3).
    pub nst_max_length: usize,
    /// Samples an n-gram (n ≥ 2) needs before the NST policy trusts it.
    pub nst_threshold: u64,
    pub nst_epsilon: f64,
    /// Longest n-gram reported per move in snapshots.
    pub nst_report_length: usize,
    /// Visits a node needs to serve as GRAVE reference.
    pub grave_ref_visits: u64,
    pub grave_bias: f64,
}

impl Default for EnhancementParams {
    fn default() -> Self {
        EnhancementParams {
            mast_temperature: 1.0,
            nst_max_length: 3,
            nst_threshold: 7,
            nst_epsilon: 0.1,
            nst_report_length: 2,
            grave_ref_visits: 100,
            grave_bias: 1e-6,
        }
    }
}

/// Tables shared across all iterations of a search (and across turns).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EnhancementTables {
    pub mast: MastTable,
    pub nst: NGramTable,
}

impl EnhancementTables {
    pub fn update(
        &mut self,
        flags: &EnhancementFlags,
        params: &EnhancementParams,
        context: &[MoveId],
        trace: &[(Player, MoveId)],
        outcome: &GameOutcome,
    ) {
        if flags.mast {
            self.mast.update(trace, outcome);
        }
        if flags.nst {
            self.nst.update(context, trace, outcome, params.nst_max_length);
        }
    }
}
