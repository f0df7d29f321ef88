use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enhancements::{EnhancementFlags, EnhancementParams, MAX_GRAM};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    /// Iteration budget per search.
    pub iterations: Option<u64>,
    /// Wall-time budget per search; whichever budget runs out first stops it.
    pub time_ms: Option<u64>,
    /// UCT exploration constant on the [-1, 1] reward scale.
    pub exploration: f64,
    pub seed: u64,
    pub enhancements: EnhancementFlags,
    pub params: EnhancementParams,
    pub tree_reuse: bool,
    /// Length cap of unproven principal variations.
    pub pv_max_plies: usize,
    /// Checked between iterations; setting it ends the search early.
    #[serde(skip)]
    pub stop: Option<Arc<AtomicBool>>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            iterations: Some(1000),
            time_ms: None,
            exploration: 1.414,
            seed: 0,
            enhancements: EnhancementFlags::default(),
            params: EnhancementParams::default(),
            tree_reuse: true,
            pv_max_plies: 4,
            stop: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("cannot search from a terminal position")]
    TerminalState,
    #[error("root has no visited children")]
    NoVisitedChildren,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

/// Equality of every setting; the stop flag is a runtime handle and ignored.
impl PartialEq for SearchConfig {
    fn eq(&self, other: &Self) -> bool {
        self.iterations == other.iterations
            && self.time_ms == other.time_ms
            && self.exploration == other.exploration
            && self.seed == other.seed
            && self.enhancements == other.enhancements
            && self.params == other.params
            && self.tree_reuse == other.tree_reuse
            && self.pv_max_plies == other.pv_max_plies
    }
}

impl SearchConfig {
    pub fn with_iterations(iterations: u64) -> Self {
        SearchConfig {
            iterations: Some(iterations),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: &str| Err(SearchError::InvalidConfig(msg.to_string()));
        let p = &self.params;
        if self.iterations.is_none() && self.time_ms.is_none() {
            return bad("set an iteration or time budget");
        }
        if self.iterations == Some(0) || self.time_ms == Some(0) {
            return bad("budgets must be positive");
        }
        if !(self.exploration.is_finite() && self.exploration > 0.0) {
            return bad("exploration constant must be positive");
        }
        if !(p.mast_temperature.is_finite() && p.mast_temperature > 0.0) {
            return bad("MAST temperature must be positive");
        }
        if !(0.0..=1.0).contains(&p.nst_epsilon) {
            return bad("NST epsilon must lie in [0, 1]");
        }
        if !(1..=MAX_GRAM).contains(&p.nst_max_length) || p.nst_report_length > p.nst_max_length {
            return bad("NST gram lengths must satisfy 1 <= report <= max <= 3");
        }
        if !(p.grave_bias.is_finite() && p.grave_bias >= 0.0) {
            return bad("GRAVE bias must be non-negative");
        }
        Ok(())
    }
}
