//! Reference turns rebuilt from printed statistics, with the prose each one
//! must render to, and the reference probability conversions.
//!
//! Unprinted alternatives are filled in with values consistent with the
//! reference bucket counts. Scores are rebuilt as `wins / visits` so the
//! four-decimal print matches.

use xmcts_core::enhancements::EnhancementFlags;
use xmcts_core::explain::{
    explain, format_percent, to_probability, MoveStats, Rationale, ThresholdConfig, TurnSnapshot,
};
use xmcts_core::game::{GameId, Player};

pub fn ratio(score: f64, visits: u64) -> f64 {
    (score * visits as f64).round() / visits as f64
}

pub fn mv(notation: &str, visits: u64, score: f64) -> MoveStats {
    MoveStats::new(notation, visits, ratio(score, visits))
}

pub fn flags(list: &str) -> EnhancementFlags {
    list.parse().unwrap()
}

pub fn snapshot(game: GameId, moves: Vec<MoveStats>, previous: Option<f64>, enh: &str) -> TurnSnapshot {
    TurnSnapshot {
        game,
        mover: Player::FIRST,
        iterations: moves.iter().map(|m| m.visits).sum(),
        previous_turn_score: previous,
        move_stats: moves,
        selected_index: 0,
        rationale: Rationale::Robust,
        principal_variation: Vec::new(),
        enhancements: flags(enh),
        root_pn: None,
    }
}

pub fn prose(s: &TurnSnapshot) -> String {
    explain(s, &ThresholdConfig::default(), 2).unwrap().prose
}

pub fn breakthrough_proven_win() -> TurnSnapshot {
    let mut moves = vec![
        mv("H6-H7", 204, 0.4608).with_solved(1.0, 3),
        mv("B2-C3", 17, -5.0 / 17.0),
        mv("D6-C7", 155, 0.3935),
        mv("A2-A3", 9, 1.0 / 9.0),
        mv("C2-C3", 20, -0.4),
    ];
    for i in 0..13 {
        moves.push(mv(&format!("F{}-F{}", i + 1, i + 2), 30, 0.2 + 0.01 * i as f64));
    }
    for i in 0..5 {
        moves.push(mv(&format!("G{}-G{}", i + 1, i + 2), 30, 0.0));
    }
    let mut s = snapshot(GameId::Breakthrough, moves, None, "solver");
    s.rationale = Rationale::Proven;
    s.principal_variation = vec!["E3-E2".into(), "H7-G8".into()];
    s
}

pub fn minishogi_like() -> TurnSnapshot {
    let moves = vec![
        mv("D2-C3", 31, 0.3548),
        mv("D1-E2", 11, -0.0909),
        mv("D2-C1", 14, 0.0),
        mv("B1-B2", 28, 0.2857),
        mv("E1-E3", 7, -0.4286),
        mv("B1-C2", 17, 0.0588),
        mv("D2-E3", 8, -0.25),
        mv("A1-A2", 10, 0.2),
        mv("A1-B2", 9, 1.0 / 9.0),
        mv("C1-C2", 20, 0.05),
        mv("C1-D2", 20, -0.05),
        mv("E2-E3", 10, 0.0),
        mv("E2-D3", 10, -0.3),
        mv("B2-B3", 10, -0.6),
    ];
    snapshot(GameId::Breakthrough, moves, Some(0.1250), "solver")
}

pub fn breakthrough_mast_nst() -> TurnSnapshot {
    let mut moves = vec![
        mv("E4-D5", 5146, 0.7482)
            .with_ngram(1, 30580, 0.275278)
            .with_ngram(2, 5411, 0.719830),
        mv("C6-B7", 197, 0.4822)
            .with_ngram(1, 13656, 0.499414)
            .with_ngram(2, 317, 0.476341),
        mv("A2-A3", 22, 3.0 / 22.0)
            .with_ngram(1, 900, 0.1)
            .with_ngram(2, 40, 0.2),
    ];
    let mast = [0.52, 0.55];
    for i in 0..22 {
        let one = mast.get(i).copied().unwrap_or(0.2);
        moves.push(
            mv(&format!("B{}-B{}", i + 1, i + 2), 40, 0.15 + 0.01 * i as f64)
                .with_ngram(1, 1000, one)
                .with_ngram(2, 50, 0.3),
        );
    }
    snapshot(GameId::Breakthrough, moves, Some(0.5612), "solver,mast,nst")
}

pub fn uttt_like() -> TurnSnapshot {
    let moves = vec![
        MoveStats::new("I5+Disc1", 4922, 398.0 / 4922.0),
        MoveStats::new("H5+Disc1", 1122, 11.0 / 1122.0),
        MoveStats::new("G4+Disc1", 2749, 162.0 / 2749.0),
        MoveStats::new("G5+Disc1", 5000, 406.0 / 5000.0),
        mv("G6+Disc1", 900, 0.05),
        mv("H4+Disc1", 900, 0.03),
        mv("H6+Disc1", 900, 0.0),
        mv("I4+Disc1", 900, -0.02),
        mv("I6+Disc1", 900, 0.07),
    ];
    snapshot(GameId::UltimateTtt, moves, Some(0.0795), "solver")
}

pub fn connect_four_like() -> TurnSnapshot {
    let moves = vec![
        MoveStats::new("E1/2+Disc1", 64, 38.0 / 64.0).with_solved(1.0, 3),
        mv("A1/3+Disc1", 10, 0.0),
        MoveStats::new("C1/1+Disc1", 5, 0.2).with_solved(-1.0, 2),
        mv("B1/2+Disc1", 10, 0.4),
        mv("D1/3+Disc1", 9, -1.0 / 3.0),
    ];
    let mut s = snapshot(GameId::ConnectFour, moves, Some(0.3352), "solver");
    s.iterations = 0;
    s.rationale = Rationale::Proven;
    s.principal_variation = vec!["A1/3+Disc2".into(), "E1/3+Disc1".into()];
    s
}

pub struct RenderGolden {
    pub name: &'static str,
    pub snapshot: fn() -> TurnSnapshot,
    pub prose: &'static str,
}

pub const RENDER_GOLDENS: [RenderGolden; 5] = [
    RenderGolden {
        name: "breakthrough proven win",
        snapshot: breakthrough_proven_win,
        prose: "There are 23 moves available: 1 with decisive advantage (proven win), 15 with slight advantage (above 55.56%), 5 balanced (~50%), 2 with slight disadvantage (below 35.29%).\n\
                Selected move, H6-H7, leads to a proven win in 2 turns. After we play this move, the most probable sequence of following moves will be: E3-E2, H7-G8.",
    },
    RenderGolden {
        name: "slight advantage with delta and margin",
        snapshot: minishogi_like,
        prose: "There are 14 moves available: 4 with slight advantage (above 55.56%), 6 balanced (~50%), 3 with slight disadvantage (below 37.50%), 1 with decisive disadvantage (highly likely loss).\n\
                Selected move: D2-C3.\n\
                Our position is slightly advantageous (estimated win probability: 67.74%).\n\
                The overall estimation of our position improved over the previous turn (11.49% increased win probability).\n\
                11 of alternative moves are significantly worse. 1 of them is highly likely a defeat.\n\
                The selected move is slightly better than all other options (3.46% increased win probability over the next best option, B1-B2).",
    },
    RenderGolden {
        name: "general advantage with MAST and NST remarks",
        snapshot: breakthrough_mast_nst,
        prose: "There are 25 moves available: 1 with decisive advantage (above 87.41%), 24 with slight advantage (above 56.82%).\n\
                Our position is generally advantageous (the estimated win probability for the worst of available moves is 56.82%).\n\
                The selected move, E4-D5, is significantly better than all other options (13.30% increased win probability over the next best option, C6-B7).\n\
                3 moves are significantly better (at least 11.21% better) than the selected one according to the MAST metric. One move (the selected one) is significantly better (at least 85.99%) than the rest according to the NST(2) metric.",
    },
    RenderGolden {
        name: "better-scoring move passed over by visit count",
        snapshot: uttt_like,
        prose: "There are 9 moves available: 9 balanced (~50%).\n\
                Selected move: I5+Disc1.\n\
                Our position is balanced (estimated win probability: 54.04%).\n\
                The selected best move, I5+Disc1, has estimated win probability of 54.04%, but it was not chosen based on that metric. There is one move (G5+Disc1) with higher win probability, which is better by 0.02%). However, this move has worse visit count, which influenced the result.",
    },
    RenderGolden {
        name: "proven win beside a proven defeat",
        snapshot: connect_four_like,
        prose: "There are 5 moves available: 1 with decisive advantage (proven win), 1 with slight advantage (above 70.00%), 1 balanced (~50%), 1 with slight disadvantage (below 33.33%), 1 with decisive disadvantage (proven loss).\n\
                Selected move, E1/2+Disc1, leads to a proven win in 2 turns. After we play this move, the most probable sequence of following moves will be: A1/3+Disc2, E1/3+Disc1.\n\
                4 of alternative moves are significantly worse. 1 of them is a proven defeat.",
    },
];

/// `(label, rendered, expected)` for the reference score-to-percentage
/// conversions: single scores, differences of two scores and deltas.
pub fn probability_goldens() -> Vec<(String, String, &'static str)> {
    let p = |s: f64| to_probability(s).unwrap();
    let single = [
        (0.0981, "54.91"),
        (0.3548, "67.74"),
        (0.7482, "87.41"),
        (0.2857, "64.29"),
        (0.719830, "85.99"),
    ];
    let pairs = [
        ((0.3548, 0.2857), "3.46"),
        ((0.7482, 0.4822), "13.30"),
        ((0.3548, 0.1250), "11.49"),
        ((0.499414, 0.275278), "11.21"),
    ];
    let mut out = Vec::new();
    for (s, want) in single {
        out.push((format!("{s}"), format_percent(p(s)), want));
    }
    for ((a, b), want) in pairs {
        out.push((format!("{a} - {b}"), format_percent(p(a) - p(b)), want));
    }
    out
}
