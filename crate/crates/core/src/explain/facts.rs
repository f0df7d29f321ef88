use serde::{Deserialize, Serialize};

use super::format::probability;
use super::{MoveStats, ThresholdConfig, TurnSnapshot};

/// Slack for comparisons against thresholds, absorbing binary rounding.
const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    DecisiveAdvantage,
    SlightAdvantage,
    Balanced,
    SlightDisadvantage,
    DecisiveDisadvantage,
}

impl Category {
    pub const ALL: [Category; 5] = [
        Category::DecisiveAdvantage,
        Category::SlightAdvantage,
        Category::Balanced,
        Category::SlightDisadvantage,
        Category::DecisiveDisadvantage,
    ];

    pub fn of(p: f64, cfg: &ThresholdConfig) -> Category {
        if p >= cfg.decisive_high {
            Category::DecisiveAdvantage
        } else if p >= cfg.slight_high {
            Category::SlightAdvantage
        } else if p >= cfg.slight_low {
            Category::Balanced
        } else if p >= cfg.decisive_low {
            Category::SlightDisadvantage
        } else {
            Category::DecisiveDisadvantage
        }
    }

    fn of_move(m: &MoveStats, cfg: &ThresholdConfig) -> Category {
        match m.solved_value() {
            Some(v) if v > 0.0 => Category::DecisiveAdvantage,
            Some(v) if v < 0.0 => Category::DecisiveDisadvantage,
            Some(_) => Category::Balanced,
            None => Category::of(probability(m.score), cfg),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bucket {
    pub category: Category,
    pub count: usize,
    pub min_probability: f64,
    pub max_probability: f64,
    /// Some member is solved.
    pub proven: bool,
    pub contains_selected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProvenOutcome {
    Win,
    Loss,
    Draw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Move averages (1-grams).
    Mast,
    /// n-gram averages for the given n ≥ 2.
    Nst(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricClaim {
    /// `count` moves beat the selected one by at least `min_excess`.
    Better { count: usize, min_excess: f64 },
    /// The selected move beats every alternative by the significance margin.
    Dominant { probability: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WhyNotMetric {
    Amaf,
    VisitCount,
}

/// One typed statement about the turn. Every number is a pure function of
/// the snapshot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExplanationFact {
    BucketSummary {
        total: usize,
        buckets: Vec<Bucket>,
    },
    SelectedMove {
        notation: String,
    },
    ProvenResult {
        outcome: ProvenOutcome,
        notation: String,
        turns: u32,
        principal_variation: Vec<String>,
    },
    PositionAssessment {
        category: Category,
        probability: f64,
        general: bool,
        worst_probability: f64,
    },
    PreviousTurnDelta {
        delta: f64,
    },
    WorseAlternatives {
        count: usize,
        proven_defeats: usize,
        likely_defeats: usize,
    },
    Margin {
        notation: String,
        delta: f64,
        next_best: String,
        significant: bool,
    },
    WhyNot {
        notation: String,
        probability: f64,
        better_count: usize,
        best: String,
        advantage: f64,
        metric: WhyNotMetric,
        metric_delta: Option<f64>,
    },
    MetricCommentary {
        metric: Metric,
        claim: MetricClaim,
    },
    PnImbalance {
        ratio: f64,
    },
    Forced,
}

/// Win probability used for comparisons: the proven value of solved moves
/// (win 1, draw 0.5, loss 0), otherwise the mapped mean score.
pub fn effective_probability(m: &MoveStats) -> f64 {
    match m.solved_value() {
        Some(v) => probability(v),
        None => probability(m.score),
    }
}

/// Non-empty buckets in fixed order (decisive advantage first).
pub fn bucketize(stats: &[MoveStats], selected_index: usize, cfg: &ThresholdConfig) -> Vec<Bucket> {
    Category::ALL
        .into_iter()
        .filter_map(|category| {
            let members: Vec<(usize, &MoveStats)> = stats
                .iter()
                .enumerate()
                .filter(|(_, m)| Category::of_move(m, cfg) == category)
                .collect();
            if members.is_empty() {
                return None;
            }
            let ps = members.iter().map(|(_, m)| effective_probability(m));
            Some(Bucket {
                category,
                count: members.len(),
                min_probability: ps.clone().fold(f64::INFINITY, f64::min),
                max_probability: ps.fold(f64::NEG_INFINITY, f64::max),
                proven: members.iter().any(|(_, m)| m.solved.is_some()),
                contains_selected: members.iter().any(|(i, _)| *i == selected_index),
            })
        })
        .collect()
}

pub fn proven_result_fact(snapshot: &TurnSnapshot) -> Option<ExplanationFact> {
    let sel = snapshot.selected();
    let solved = sel.solved?;
    let outcome = if solved.value > 0.0 {
        ProvenOutcome::Win
    } else if solved.value < 0.0 {
        ProvenOutcome::Loss
    } else {
        ProvenOutcome::Draw
    };
    Some(ExplanationFact::ProvenResult {
        outcome,
        notation: sel.notation.clone(),
        turns: solved.distance.div_ceil(2),
        principal_variation: snapshot.principal_variation.clone(),
    })
}

pub fn position_assessment(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> ExplanationFact {
    let p = effective_probability(snapshot.selected());
    let worst = snapshot
        .move_stats
        .iter()
        .map(effective_probability)
        .fold(f64::INFINITY, f64::min);
    ExplanationFact::PositionAssessment {
        category: Category::of(p, cfg),
        probability: p,
        general: worst >= cfg.slight_high,
        worst_probability: worst,
    }
}

pub fn previous_turn_delta(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Option<ExplanationFact> {
    let prev = snapshot.previous_turn_score?;
    let delta = probability(snapshot.selected().score) - probability(prev);
    (delta.abs() >= cfg.significance - EPS).then_some(ExplanationFact::PreviousTurnDelta { delta })
}

pub fn worse_alternatives(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Option<ExplanationFact> {
    let cutoff = effective_probability(snapshot.selected()) - cfg.significance + EPS;
    let worse: Vec<&MoveStats> = snapshot
        .alternatives()
        .filter(|m| effective_probability(m) <= cutoff)
        .collect();
    if worse.is_empty() {
        return None;
    }
    let proven_defeats = worse
        .iter()
        .filter(|m| m.solved_value().is_some_and(|v| v < 0.0))
        .count();
    let likely_defeats = worse
        .iter()
        .filter(|m| m.solved.is_none() && Category::of(probability(m.score), cfg) == Category::DecisiveDisadvantage)
        .count();
    Some(ExplanationFact::WorseAlternatives {
        count: worse.len(),
        proven_defeats,
        likely_defeats,
    })
}

/// First alternative with the highest effective probability.
fn best_alternative(snapshot: &TurnSnapshot) -> Option<&MoveStats> {
    snapshot
        .alternatives()
        .fold(None, |best: Option<&MoveStats>, m| match best {
            Some(b) if effective_probability(b) >= effective_probability(m) => Some(b),
            _ => Some(m),
        })
}

pub fn margin_fact(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Option<ExplanationFact> {
    let sel = snapshot.selected();
    let best = best_alternative(snapshot)?;
    let p_sel = effective_probability(sel);
    let p_best = effective_probability(best);
    if p_sel >= p_best {
        let delta = p_sel - p_best;
        return Some(ExplanationFact::Margin {
            notation: sel.notation.clone(),
            delta,
            next_best: best.notation.clone(),
            significant: delta >= cfg.significance - EPS,
        });
    }
    let better_count = snapshot
        .alternatives()
        .filter(|m| effective_probability(m) > p_sel)
        .count();
    let amaf_gap = match (sel.amaf, best.amaf) {
        (Some(a), Some(b)) if snapshot.enhancements.grave && b.score < a.score => {
            Some(probability(a.score) - probability(b.score))
        }
        _ => None,
    };
    Some(ExplanationFact::WhyNot {
        notation: sel.notation.clone(),
        probability: p_sel,
        better_count,
        best: best.notation.clone(),
        advantage: p_best - p_sel,
        metric: if amaf_gap.is_some() {
            WhyNotMetric::Amaf
        } else {
            WhyNotMetric::VisitCount
        },
        metric_delta: amaf_gap,
    })
}

pub fn metric_commentary(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Vec<ExplanationFact> {
    let flags = snapshot.enhancements;
    let mut metrics = Vec::new();
    if flags.mast {
        metrics.push((Metric::Mast, 1));
    }
    if flags.nst {
        let longest = snapshot.selected().ngrams.iter().map(|g| g.n).max().unwrap_or(0);
        metrics.extend((2..=longest).map(|n| (Metric::Nst(n), n)));
    }
    let metric_p = |m: &MoveStats, n: usize| m.ngram(n).filter(|g| g.visits > 0).map(|g| probability(g.score));
    metrics
        .into_iter()
        .filter_map(|(metric, n)| {
            let own = metric_p(snapshot.selected(), n)?;
            let others: Vec<f64> = snapshot.alternatives().filter_map(|m| metric_p(m, n)).collect();
            if others.is_empty() {
                return None;
            }
            let excesses: Vec<f64> = others
                .iter()
                .map(|p| p - own)
                .filter(|e| *e >= cfg.significance - EPS)
                .collect();
            let claim = if !excesses.is_empty() {
                MetricClaim::Better {
                    count: excesses.len(),
                    min_excess: excesses.iter().copied().fold(f64::INFINITY, f64::min),
                }
            } else if others.iter().all(|p| own - p >= cfg.significance - EPS) {
                MetricClaim::Dominant { probability: own }
            } else {
                return None;
            };
            Some(ExplanationFact::MetricCommentary { metric, claim })
        })
        .collect()
}

pub fn pn_imbalance(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Option<ExplanationFact> {
    if !snapshot.enhancements.pn {
        return None;
    }
    let ratio = snapshot.root_pn?.ratio()?;
    (ratio >= cfg.pn_ratio || ratio <= 1.0 / cfg.pn_ratio).then_some(ExplanationFact::PnImbalance { ratio })
}

pub fn forced_fact(snapshot: &TurnSnapshot) -> Option<ExplanationFact> {
    let lost = |m: &MoveStats| m.solved_value().is_some_and(|v| v < 0.0);
    let forced = snapshot.enhancements.solver
        && snapshot.move_stats.len() > 1
        && !lost(snapshot.selected())
        && snapshot.alternatives().all(lost);
    forced.then_some(ExplanationFact::Forced)
}

/// Selects and orders the facts worth telling.
///
/// A proven result replaces the position assessment and makes the
/// previous-turn delta, margin and proof-number remarks redundant. Worse
/// alternatives are only mentioned when some of them are (likely) defeats.
pub fn select_facts(snapshot: &TurnSnapshot, cfg: &ThresholdConfig) -> Vec<ExplanationFact> {
    let mut facts = vec![ExplanationFact::BucketSummary {
        total: snapshot.move_stats.len(),
        buckets: bucketize(&snapshot.move_stats, snapshot.selected_index, cfg),
    }];
    let proven = proven_result_fact(snapshot);
    let proven_shown = proven.is_some();
    if snapshot.move_stats.len() == 1 {
        facts.push(proven.unwrap_or_else(|| ExplanationFact::SelectedMove {
            notation: snapshot.selected().notation.clone(),
        }));
        return facts;
    }
    match proven {
        Some(p) => facts.push(p),
        None => {
            let assessment = position_assessment(snapshot, cfg);
            if !matches!(assessment, ExplanationFact::PositionAssessment { general: true, .. }) {
                facts.push(ExplanationFact::SelectedMove {
                    notation: snapshot.selected().notation.clone(),
                });
            }
            facts.push(assessment);
            facts.extend(previous_turn_delta(snapshot, cfg));
        }
    }
    facts.extend(worse_alternatives(snapshot, cfg).filter(|w| {
        matches!(w, ExplanationFact::WorseAlternatives { proven_defeats, likely_defeats, .. }
            if proven_defeats + likely_defeats > 0)
    }));
    if !proven_shown {
        facts.extend(margin_fact(snapshot, cfg));
    }
    facts.extend(metric_commentary(snapshot, cfg));
    if !proven_shown {
        facts.extend(pn_imbalance(snapshot, cfg));
    }
    facts.extend(forced_fact(snapshot));
    facts
}
