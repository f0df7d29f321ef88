use std::fmt::Write;

use super::facts::{Bucket, Category, ExplanationFact, Metric, MetricClaim, ProvenOutcome, WhyNotMetric};
use super::format::{format_fixed, format_percent};
use super::{MoveStats, TurnSnapshot};

/// Developer-facing dump of the raw statistics behind a turn.
pub fn render_raw_dump(snapshot: &TurnSnapshot) -> String {
    let mut out = format!("Performed {} iterations.", snapshot.iterations);
    if let Some(prev) = snapshot.previous_turn_score {
        let _ = write!(out, " Previous turn score: {}.", format_fixed(prev, 4));
    }
    out.push_str("\nSelected node:\n");
    out.push_str(&stats_line(snapshot.selected()));
    out.push_str("\nOther nodes:\n");
    for m in snapshot.alternatives() {
        out.push_str(&stats_line(m));
        out.push('\n');
    }
    out
}

fn stats_line(m: &MoveStats) -> String {
    let mut line = format!(
        "move: {}, visits: {}, score: {}",
        m.notation,
        m.visits,
        format_fixed(m.score, 4)
    );
    if let Some(a) = m.amaf {
        let _ = write!(
            line,
            ", AMAF visits: {}, AMAF score: {}",
            a.visits,
            format_fixed(a.score, 4)
        );
    }
    for g in &m.ngrams {
        let _ = write!(
            line,
            ", {n}-gram visits: {}, {n}-gram score: {}",
            g.visits,
            format_fixed(g.score, 6),
            n = g.n
        );
    }
    match m.solved {
        Some(s) => {
            let word = if s.value > 0.0 {
                "win"
            } else if s.value < 0.0 {
                "loss"
            } else {
                "draw"
            };
            let _ = write!(line, ", solved node with score {} ({word})", format_fixed(s.value, 4));
        }
        None => {
            let _ = write!(
                line,
                ", pess: {}, opt: {}",
                format_fixed(m.pess, 4),
                format_fixed(m.opt, 4)
            );
        }
    }
    if let Some(pn) = m.pn {
        let _ = write!(line, ", pn: {}, dn: {}", pn.pn, pn.dn);
    }
    line
}

fn pct(p: f64) -> String {
    format!("{}%", format_percent(p))
}

fn plural(n: usize, one: &str, many: &str) -> String {
    if n == 1 {
        format!("1 {one}")
    } else {
        format!("{n} {many}")
    }
}

fn bucket_part(b: &Bucket) -> String {
    let n = b.count;
    match b.category {
        Category::DecisiveAdvantage => {
            let ann = if b.proven {
                "proven win".to_string()
            } else if b.contains_selected {
                format!("above {}", pct(b.min_probability))
            } else {
                "highly likely win".to_string()
            };
            format!("{n} with decisive advantage ({ann})")
        }
        Category::SlightAdvantage => format!("{n} with slight advantage (above {})", pct(b.min_probability)),
        Category::Balanced => format!("{n} balanced (~50%)"),
        Category::SlightDisadvantage => {
            format!("{n} with slight disadvantage (below {})", pct(b.max_probability))
        }
        Category::DecisiveDisadvantage => {
            let ann = if b.proven {
                "proven loss".to_string()
            } else if b.contains_selected {
                format!("below {}", pct(b.max_probability))
            } else {
                "highly likely loss".to_string()
            };
            format!("{n} with decisive disadvantage ({ann})")
        }
    }
}

fn category_words(c: Category) -> &'static str {
    match c {
        Category::DecisiveAdvantage => "highly advantageous",
        Category::SlightAdvantage => "slightly advantageous",
        Category::Balanced => "balanced",
        Category::SlightDisadvantage => "slightly disadvantageous",
        Category::DecisiveDisadvantage => "highly disadvantageous",
    }
}

fn metric_name(m: Metric) -> String {
    match m {
        Metric::Mast => "MAST".to_string(),
        Metric::Nst(n) => format!("NST({n})"),
    }
}

/// The sentence(s) for one fact.
pub fn render_fact(fact: &ExplanationFact) -> String {
    match fact {
        ExplanationFact::BucketSummary { total, buckets } => {
            let opening = if *total == 1 {
                "There is 1 move available: ".to_string()
            } else {
                format!("There are {total} moves available: ")
            };
            let parts: Vec<String> = buckets.iter().map(bucket_part).collect();
            format!("{opening}{}.", parts.join(", "))
        }
        ExplanationFact::SelectedMove { notation } => format!("Selected move: {notation}."),
        ExplanationFact::ProvenResult {
            outcome,
            notation,
            turns,
            principal_variation,
        } => {
            let turns = if *turns == 1 {
                "1 turn".to_string()
            } else {
                format!("{turns} turns")
            };
            let mut s = match outcome {
                ProvenOutcome::Win => format!("Selected move, {notation}, leads to a proven win in {turns}."),
                ProvenOutcome::Loss => format!("Selected move, {notation}, leads to a proven loss in {turns}."),
                ProvenOutcome::Draw => format!("Selected move, {notation}, leads to a proven draw."),
            };
            if !principal_variation.is_empty() {
                let _ = write!(
                    s,
                    " After we play this move, the most probable sequence of following moves will be: {}.",
                    principal_variation.join(", ")
                );
            }
            s
        }
        ExplanationFact::PositionAssessment {
            category,
            probability,
            general,
            worst_probability,
        } => {
            if *general {
                format!(
                    "Our position is generally advantageous (the estimated win probability for the worst of available moves is {}).",
                    pct(*worst_probability)
                )
            } else {
                format!(
                    "Our position is {} (estimated win probability: {}).",
                    category_words(*category),
                    pct(*probability)
                )
            }
        }
        ExplanationFact::PreviousTurnDelta { delta } => {
            let (verb, dir) = if *delta >= 0.0 {
                ("improved", "increased")
            } else {
                ("worsened", "decreased")
            };
            format!(
                "The overall estimation of our position {verb} over the previous turn ({} {dir} win probability).",
                pct(delta.abs())
            )
        }
        ExplanationFact::WorseAlternatives {
            count,
            proven_defeats,
            likely_defeats,
        } => {
            let mut s = if *count == 1 {
                "1 of alternative moves is significantly worse.".to_string()
            } else {
                format!("{count} of alternative moves are significantly worse.")
            };
            match *proven_defeats {
                0 => {}
                1 => s.push_str(" 1 of them is a proven defeat."),
                k => {
                    let _ = write!(s, " {k} of them are proven defeats.");
                }
            }
            match *likely_defeats {
                0 => {}
                1 => s.push_str(" 1 of them is highly likely a defeat."),
                k => {
                    let _ = write!(s, " {k} of them are highly likely a defeat.");
                }
            }
            s
        }
        ExplanationFact::Margin {
            notation,
            delta,
            next_best,
            significant,
        } => {
            let tail = format!(
                "({} increased win probability over the next best option, {next_best}).",
                pct(*delta)
            );
            if *significant {
                format!("The selected move, {notation}, is significantly better than all other options {tail}")
            } else {
                format!("The selected move is slightly better than all other options {tail}")
            }
        }
        ExplanationFact::WhyNot {
            notation,
            probability,
            better_count,
            best,
            advantage,
            metric,
            metric_delta,
        } => {
            let mut s = format!(
                "The selected best move, {notation}, has estimated win probability of {}, but it was not chosen based on that metric. ",
                pct(*probability)
            );
            let one = *better_count == 1;
            if one {
                let _ = write!(
                    s,
                    "There is one move ({best}) with higher win probability, which is better by {}). ",
                    pct(*advantage)
                );
            } else {
                let _ = write!(
                    s,
                    "There are {better_count} moves with higher win probability (best of them, {best}, is better by {}). ",
                    pct(*advantage)
                );
            }
            let subject = if one { "this move has" } else { "these moves have" };
            match (metric, metric_delta) {
                (WhyNotMetric::Amaf, Some(d)) => {
                    let detail = if one {
                        format!("slightly worse AMAF score ({} worse)", pct(*d))
                    } else {
                        format!("slightly worse AMAF scores ({} worse for {best})", pct(*d))
                    };
                    let _ = write!(s, "However, {subject} {detail}, which influenced the result.");
                }
                _ => {
                    let _ = write!(s, "However, {subject} worse visit count, which influenced the result.");
                }
            }
            s
        }
        ExplanationFact::MetricCommentary { metric, claim } => match claim {
            MetricClaim::Better { count, min_excess } => format!(
                "{} significantly better (at least {} better) than the selected one according to the {} metric.",
                plural(*count, "move is", "moves are"),
                pct(*min_excess),
                metric_name(*metric)
            ),
            MetricClaim::Dominant { probability } => format!(
                "One move (the selected one) is significantly better (at least {}) than the rest according to the {} metric.",
                pct(*probability),
                metric_name(*metric)
            ),
        },
        ExplanationFact::PnImbalance { ratio } => {
            let (k, word) = if *ratio >= 1.0 { (*ratio, "easier") } else { (1.0 / ratio, "harder") };
            format!("Proving a win currently looks {k:.1}× {word} than refuting it.")
        }
        ExplanationFact::Forced => {
            "This move is forced: all alternative moves lead to a proven defeat.".to_string()
        }
    }
}

/// One line per fact; consecutive metric remarks share a line.
pub fn prose_lines(facts: &[ExplanationFact]) -> Vec<String> {
    let mut lines: Vec<String> = Vec::new();
    let mut metric_run = false;
    for fact in facts {
        let text = render_fact(fact);
        let is_metric = matches!(fact, ExplanationFact::MetricCommentary { .. });
        match lines.last_mut() {
            Some(last) if is_metric && metric_run => {
                last.push(' ');
                last.push_str(&text);
            }
            _ => lines.push(text),
        }
        metric_run = is_metric;
    }
    lines
}
