//! Prose and dump rendering checked against reference explanations.

mod support;

use support::goldens::*;
use xmcts_core::enhancements::{PnStats, ProofNumber};
use xmcts_core::explain::{explain, ExplanationFact, MetricClaim, MoveStats, Rationale, ThresholdConfig, WhyNotMetric};
use xmcts_core::game::GameId;

#[test]
fn probabilities_match_reference_percentages() {
    for (label, got, want) in probability_goldens() {
        assert_eq!(got, want, "{label}");
    }
}

#[test]
fn rendered_prose_matches_reference() {
    for g in &RENDER_GOLDENS {
        assert_eq!(prose(&(g.snapshot)()), g.prose, "{}", g.name);
    }
}

#[test]
fn proven_win_facts() {
    let s = breakthrough_proven_win();
    assert_eq!(s.move_stats.len(), 23);
    let facts = explain(&s, &ThresholdConfig::default(), 2).unwrap().facts;
    assert!(facts
        .iter()
        .any(|f| matches!(f, ExplanationFact::ProvenResult { turns: 2, .. })));
    assert!(!facts.iter().any(|f| matches!(f, ExplanationFact::Margin { .. })));
}

#[test]
fn verbosity_limits_prose() {
    let s = minishogi_like();
    let cfg = ThresholdConfig::default();
    assert_eq!(explain(&s, &cfg, 0).unwrap().prose, "");
    let brief = explain(&s, &cfg, 1).unwrap().prose;
    assert_eq!(brief.lines().count(), 4);
    assert!(brief.ends_with("(11.49% increased win probability)."));
}

#[test]
fn raw_dump_lines() {
    let s = minishogi_like();
    let dump = explain(&s, &ThresholdConfig::default(), 2).unwrap().raw_dump;
    let lines: Vec<&str> = dump.lines().collect();
    assert_eq!(lines[0], "Performed 205 iterations. Previous turn score: 0.1250.");
    assert_eq!(lines[1], "Selected node:");
    assert_eq!(
        lines[2],
        "move: D2-C3, visits: 31, score: 0.3548, pess: -1.0000, opt: 1.0000"
    );
    assert_eq!(lines[3], "Other nodes:");
    assert_eq!(
        lines[4],
        "move: D1-E2, visits: 11, score: -0.0909, pess: -1.0000, opt: 1.0000"
    );
    assert_eq!(
        lines[5],
        "move: D2-C1, visits: 14, score: 0.0000, pess: -1.0000, opt: 1.0000"
    );
    assert_eq!(
        lines[9],
        "move: D2-E3, visits: 8, score: -0.2500, pess: -1.0000, opt: 1.0000"
    );
    assert_eq!(lines.len(), 4 + 13);
}

#[test]
fn general_advantage_and_metric_remarks() {
    let s = breakthrough_mast_nst();
    let facts = explain(&s, &ThresholdConfig::default(), 2).unwrap().facts;
    assert!(facts.iter().any(|f| matches!(
        f,
        ExplanationFact::MetricCommentary {
            claim: MetricClaim::Better { count: 3, .. },
            ..
        }
    )));
}

#[test]
fn ngram_dump_uses_six_decimals() {
    let dump = explain(&breakthrough_mast_nst(), &ThresholdConfig::default(), 0)
        .unwrap()
        .raw_dump;
    assert_eq!(
        dump.lines().nth(2).unwrap(),
        "move: E4-D5, visits: 5146, score: 0.7482, 1-gram visits: 30580, 1-gram score: 0.275278, 2-gram visits: 5411, 2-gram score: 0.719830, pess: -1.0000, opt: 1.0000"
    );
}

#[test]
fn why_not_by_amaf_when_grave_is_on() {
    let mut s = uttt_like();
    s.enhancements = flags("solver,grave");
    s.move_stats[0] = s.move_stats[0].clone().with_amaf(1923, 0.1014);
    s.move_stats[3] = s.move_stats[3].clone().with_amaf(1204, 0.0426);
    let report = explain(&s, &ThresholdConfig::default(), 2).unwrap();
    assert!(report.facts.iter().any(|f| matches!(
        f,
        ExplanationFact::WhyNot {
            metric: WhyNotMetric::Amaf,
            better_count: 1,
            ..
        }
    )));
    assert!(report
        .prose
        .ends_with("However, this move has slightly worse AMAF score (2.94% worse), which influenced the result."));
}

#[test]
fn proven_win_with_proven_defeat_among_alternatives() {
    let s = connect_four_like();
    let dump = explain(&s, &ThresholdConfig::default(), 2).unwrap().raw_dump;
    let lines: Vec<&str> = dump.lines().collect();
    assert_eq!(lines[0], "Performed 0 iterations. Previous turn score: 0.3352.");
    assert_eq!(
        lines[2],
        "move: E1/2+Disc1, visits: 64, score: 0.5938, solved node with score 1.0000 (win)"
    );
    assert_eq!(
        lines[5],
        "move: C1/1+Disc1, visits: 5, score: 0.2000, solved node with score -1.0000 (loss)"
    );
}

#[test]
fn single_move_is_only_summarised() {
    let mut s = snapshot(GameId::TicTacToe, vec![mv("B2", 10, 0.0)], None, "none");
    s.rationale = Rationale::Robust;
    assert_eq!(
        prose(&s),
        "There is 1 move available: 1 balanced (~50%).\nSelected move: B2."
    );
    assert_eq!(explain(&s, &ThresholdConfig::default(), 2).unwrap().raw_dump, "Performed 10 iterations.\nSelected node:\nmove: B2, visits: 10, score: 0.0000, pess: -1.0000, opt: 1.0000\nOther nodes:\n");
}

#[test]
fn forced_move_and_pn_imbalance() {
    let moves = vec![
        mv("A1", 40, 0.1),
        MoveStats::new("A2", 4, -1.0).with_solved(-1.0, 1),
        MoveStats::new("A3", 4, -1.0).with_solved(-1.0, 1),
    ];
    let mut s = snapshot(GameId::TicTacToe, moves, None, "solver,pn");
    s.root_pn = Some(PnStats {
        pn: ProofNumber(2),
        dn: ProofNumber(8),
    });
    let text = prose(&s);
    assert!(text.contains("Proving a win currently looks 4.0× easier than refuting it."));
    assert!(text.ends_with("This move is forced: all alternative moves lead to a proven defeat."));
    assert!(text.contains("2 of alternative moves are significantly worse. 2 of them are proven defeats."));
}

#[test]
fn report_round_trips_through_json() {
    let report = explain(&breakthrough_mast_nst(), &ThresholdConfig::default(), 2).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    let back: xmcts_core::explain::ExplanationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}

#[test]
fn invalid_inputs_are_rejected() {
    let mut s = minishogi_like();
    s.selected_index = 99;
    assert!(explain(&s, &ThresholdConfig::default(), 2).is_err());
    let mut s = minishogi_like();
    s.move_stats[1].score = 1.5;
    assert!(explain(&s, &ThresholdConfig::default(), 2).is_err());
    let cfg = ThresholdConfig {
        slight_low: 0.8,
        ..ThresholdConfig::default()
    };
    assert!(explain(&minishogi_like(), &cfg, 2).is_err());
}
