//! Turning a search snapshot into facts, prose and a raw statistics dump.
//!
//! The pipeline is snapshot → [`ExplanationFact`]s → text. Facts are typed
//! and carry every number they mention, so tests can check them without
//! parsing sentences.

mod facts;
mod format;
mod render;
mod snapshot;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use facts::{
    bucketize, effective_probability, forced_fact, margin_fact, metric_commentary, pn_imbalance, position_assessment,
    previous_turn_delta, proven_result_fact, select_facts, worse_alternatives, Bucket, Category, ExplanationFact,
    Metric, MetricClaim, ProvenOutcome, WhyNotMetric,
};
pub use format::{format_fixed, format_percent, to_probability, ScoreOutOfRange};
pub use render::{prose_lines, render_fact, render_raw_dump};
pub use snapshot::{AmafSummary, MoveStats, NGramSummary, Rationale, SolvedInfo, TurnSnapshot};

/// Probability cut-offs and significance margins, all on the [0, 1] scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ThresholdConfig {
    pub decisive_low: f64,
    pub slight_low: f64,
    pub slight_high: f64,
    pub decisive_high: f64,
    pub significance: f64,
    pub pn_ratio: f64,
    /// Prose lines kept at verbosity 1.
    pub brief_lines: usize,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        ThresholdConfig {
            decisive_low: 0.25,
            slight_low: 0.45,
            slight_high: 0.55,
            decisive_high: 0.75,
            significance: 0.10,
            pn_ratio: 3.0,
            brief_lines: 4,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExplainError {
    #[error("thresholds must satisfy 0 <= decisive_low <= slight_low <= slight_high <= decisive_high <= 1")]
    UnorderedThresholds,
    #[error("significance must lie in (0, 1], got {0}")]
    Significance(f64),
    #[error("selected index {index} out of range for {len} moves")]
    SelectedOutOfRange { index: usize, len: usize },
    #[error(transparent)]
    Score(#[from] ScoreOutOfRange),
}

impl ThresholdConfig {
    pub fn validate(&self) -> Result<(), ExplainError> {
        let t = [
            0.0,
            self.decisive_low,
            self.slight_low,
            self.slight_high,
            self.decisive_high,
            1.0,
        ];
        if t.windows(2).any(|w| w[0].partial_cmp(&w[1]).is_none_or(|o| o.is_gt())) {
            return Err(ExplainError::UnorderedThresholds);
        }
        if !(self.significance > 0.0 && self.significance <= 1.0) {
            return Err(ExplainError::Significance(self.significance));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplanationReport {
    pub facts: Vec<ExplanationFact>,
    pub raw_dump: String,
    pub prose: String,
    pub verbosity: u8,
}

/// Explains one turn. Verbosity 0 yields no prose, 1 a short summary and 2
/// (or more) everything.
pub fn explain(
    snapshot: &TurnSnapshot,
    cfg: &ThresholdConfig,
    verbosity: u8,
) -> Result<ExplanationReport, ExplainError> {
    cfg.validate()?;
    let len = snapshot.move_stats.len();
    if snapshot.selected_index >= len {
        return Err(ExplainError::SelectedOutOfRange {
            index: snapshot.selected_index,
            len,
        });
    }
    for m in &snapshot.move_stats {
        to_probability(m.score)?;
    }
    let facts = select_facts(snapshot, cfg);
    let mut lines = prose_lines(&facts);
    match verbosity {
        0 => lines.clear(),
        1 => lines.truncate(cfg.brief_lines),
        _ => {}
    }
    Ok(ExplanationReport {
        raw_dump: render_raw_dump(snapshot),
        prose: lines.join("\n"),
        facts,
        verbosity,
    })
}
