//! Invariants of the enhancement statistics as plain check functions, so
//! they can run under `proptest!` and under an explicit `TestRunner`.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use xmcts_core::enhancements::{
    grave_beta, grave_value, mast_policy, nst_policy, AmafStats, EnhancementFlags, EnhancementParams,
    EnhancementTables, MastTable, MoveStat, NGramTable, PnStats, ProofNumber, Score, ScoreBounds,
};
use xmcts_core::game::{GameOutcome, GameState, MoveId, Player, TicTacToe};
use xmcts_core::mcts::{backpropagate, playout, SearchConfig, SearchTree, ROOT};

type Trace = Vec<(Player, MoveId)>;
type CheckResult = Result<(), TestCaseError>;

pub fn outcome() -> impl Strategy<Value = GameOutcome> {
    prop_oneof![
        Just(GameOutcome::win(Player::FIRST)),
        Just(GameOutcome::win(Player::SECOND)),
        Just(GameOutcome::draw()),
    ]
}

/// Alternating-player trace over a small move alphabet.
pub fn trace() -> impl Strategy<Value = Trace> {
    (any::<bool>(), prop::collection::vec(0u32..12, 0..40)).prop_map(|(second, moves)| {
        let mut p = if second { Player::SECOND } else { Player::FIRST };
        moves
            .into_iter()
            .map(|m| {
                let e = (p, m);
                p = p.opponent();
                e
            })
            .collect()
    })
}

pub fn games() -> impl Strategy<Value = Vec<(Trace, GameOutcome)>> {
    prop::collection::vec((trace(), outcome()), 1..6)
}

pub fn nst_input() -> impl Strategy<Value = (Vec<MoveId>, Trace, GameOutcome, usize)> {
    (prop::collection::vec(0u32..12, 0..3), trace(), outcome(), 1usize..=3)
}

pub fn beta_input() -> impl Strategy<Value = (u64, u64, f64)> {
    (0u64..10_000, 0u64..10_000, 0.0f64..0.01)
}

pub fn pn_input() -> impl Strategy<Value = (Vec<(u64, u64)>, usize, bool)> {
    (
        prop::collection::vec((0u64..50, 0u64..50), 0..6),
        0usize..4,
        any::<bool>(),
    )
        .prop_filter("a node has a child or an untried move", |(k, u, _)| {
            !k.is_empty() || *u > 0
        })
}

pub fn bounds_input() -> impl Strategy<Value = (Vec<(u8, u32)>, bool)> {
    (prop::collection::vec((0u8..5, 0u32..20), 1..8), any::<bool>())
}

pub fn amaf_input() -> impl Strategy<Value = (u64, usize)> {
    (any::<u64>(), 1usize..4)
}

fn mean_in_range(s: &MoveStat) -> bool {
    s.mean().is_none_or(|m| (-1.0..=1.0).contains(&m))
}

pub fn mast_equals_unigram_nst(games: &[(Trace, GameOutcome)]) -> CheckResult {
    let mut mast = MastTable::default();
    let mut nst = NGramTable::default();
    for (trace, outcome) in games {
        mast.update(trace, outcome);
        nst.update(&[], trace, outcome, 1);
    }
    for p in [Player::FIRST, Player::SECOND] {
        for m in 0..12 {
            prop_assert_eq!(mast.get(p, m), nst.get(p, &[m]));
        }
    }
    let total: u64 = games.iter().map(|(t, _)| t.len() as u64).sum();
    prop_assert_eq!(mast.entries().map(|(_, _, s)| s.count).sum::<u64>(), total);
    prop_assert!(mast.entries().all(|(_, _, s)| mean_in_range(&s)));
    Ok(())
}

pub fn nst_credits_every_gram_once(
    context: &[MoveId],
    trace: &[(Player, MoveId)],
    outcome: &GameOutcome,
    max_len: usize,
) -> CheckResult {
    let mut nst = NGramTable::default();
    nst.update(context, trace, outcome, max_len);
    let expected: usize = (0..trace.len()).map(|i| max_len.min(context.len() + i + 1)).sum();
    prop_assert_eq!(nst.values().map(|s| s.count as usize).sum::<usize>(), expected);
    prop_assert!(nst.values().all(mean_in_range));
    for &(p, m) in trace {
        let score = nst.score(p, context, m, 0, max_len);
        prop_assert!((-1.0..=1.0).contains(&score));
    }
    Ok(())
}

pub fn grave_beta_boundaries(amaf: u64, visits: u64, bias: f64) -> CheckResult {
    let b = grave_beta(amaf, visits, bias);
    prop_assert!((0.0..=1.0).contains(&b));
    if amaf == 0 {
        prop_assert_eq!(b, 0.0);
    } else if visits == 0 {
        prop_assert_eq!(b, 1.0);
    } else {
        prop_assert!(grave_beta(amaf, visits + 1, bias) <= b);
    }
    let stat = MoveStat {
        count: amaf,
        sum: 0.3 * amaf as f64,
    };
    let v = grave_value(-0.2, visits, stat, bias);
    prop_assert!((-0.2 - 1e-12..=0.3 + 1e-12).contains(&v));
    Ok(())
}

pub fn pn_and_or_duality(kids: &[(u64, u64)], untried: usize, is_or: bool) -> CheckResult {
    let to_pn = |(p, d): (u64, u64)| PnStats {
        pn: if p == 0 { ProofNumber::INFINITE } else { ProofNumber(p) },
        dn: ProofNumber(d),
    };
    let swap = |s: PnStats| PnStats { pn: s.dn, dn: s.pn };
    let children: Vec<PnStats> = kids.iter().copied().map(to_pn).collect();
    let direct = PnStats::combine(is_or, children.iter().copied(), untried);
    let dual = swap(PnStats::combine(!is_or, children.iter().copied().map(swap), untried));
    prop_assert_eq!(direct, dual);
    if direct.pn == ProofNumber::ZERO {
        prop_assert!(direct.dn.is_infinite());
    }
    Ok(())
}

pub fn bounds_from_children_are_consistent(kids: &[(u8, u32)], untried: bool) -> CheckResult {
    let score = |(k, d): (u8, u32)| match k {
        0 => Some(Score::win_in(d)),
        1 => Some(Score::loss_in(d)),
        2 => Some(Score::DRAW),
        _ => None,
    };
    let children: Vec<ScoreBounds> = kids
        .iter()
        .map(|&k| score(k).map_or(ScoreBounds::OPEN, ScoreBounds::exact))
        .collect();
    let b = ScoreBounds::from_children(children.iter().copied(), untried);
    prop_assert!(b.pess <= b.opt);
    let seen: Vec<ScoreBounds> = children.iter().map(|c| c.for_parent()).collect();
    let best_known = seen.iter().filter(|c| c.is_solved()).map(|c| c.pess).max();
    if let Some(v) = best_known {
        prop_assert!(b.pess >= v);
    }
    if !untried && children.iter().all(ScoreBounds::is_solved) {
        prop_assert_eq!(b.solved(), seen.iter().map(|c| c.pess).max());
    }
    if untried {
        prop_assert_eq!(b.opt, Score::win_in(1));
    }
    Ok(())
}

/// One backpropagated iteration on a hand-built path; each node's AMAF
/// table must equal a direct count over the suffix of the trace below it.
pub fn amaf_matches_hand_count(seed: u64, depth: usize) -> CheckResult {
    let mut tree = SearchTree::new(TicTacToe::new());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut path = vec![ROOT];
    let mut trace = Vec::new();
    let mut state = TicTacToe::new();
    for _ in 0..depth {
        let id = *path.last().unwrap();
        let child = tree.expand(id).unwrap();
        let mv = tree.node(child).mv.unwrap();
        trace.push((state.to_move(), mv));
        state.play(mv);
        path.push(child);
    }
    let cfg = SearchConfig {
        enhancements: EnhancementFlags {
            grave: true,
            ..EnhancementFlags::default()
        },
        ..SearchConfig::default()
    };
    let mut tables = EnhancementTables::default();
    let (outcome, rest) = playout(&state, &cfg, &tables, &mut rng);
    trace.extend(rest);
    backpropagate(&mut tree, &path, &outcome, &trace, &mut tables, &cfg);
    for (d, &id) in path.iter().enumerate() {
        let mut expected = AmafStats::default();
        let mut seen = Vec::new();
        for &(p, m) in &trace[d..] {
            if !seen.contains(&(p, m)) {
                seen.push((p, m));
                expected.record(p, m, outcome.utility(p));
            }
        }
        for p in [Player::FIRST, Player::SECOND] {
            for m in 0..9 {
                prop_assert_eq!(tree.node(id).amaf.get(p, m), expected.get(p, m));
            }
        }
    }
    Ok(())
}

/// Chi-square goodness of fit of MAST sampling against the Gibbs weights;
/// returns the p-value.
pub fn mast_gibbs_p_value() -> f64 {
    let mut table = MastTable::default();
    let p = Player::FIRST;
    let win = GameOutcome::win(p);
    let loss = GameOutcome::win(p.opponent());
    table.update(&[(p, 0), (p, 1), (p, 1)], &win);
    table.update(&[(p, 1), (p, 2)], &loss);
    let moves = [0, 1, 2, 3];
    let temperature = 0.7;
    let means = [1.0, 1.0 / 3.0, -1.0, 1.0];
    let weights: Vec<f64> = means.iter().map(|m: &f64| (m / temperature).exp()).collect();
    let z: f64 = weights.iter().sum();
    let n = 40_000;
    let mut counts = [0u32; 4];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..n {
        let m = mast_policy(&table, p, &moves, temperature, &mut rng);
        counts[m as usize] += 1;
    }
    let chi2: f64 = counts
        .iter()
        .zip(&weights)
        .map(|(&c, w)| {
            let e = n as f64 * w / z;
            (c as f64 - e).powi(2) / e
        })
        .sum();
    1.0 - ChiSquared::new(3.0).unwrap().cdf(chi2)
}

/// With ε = 0 NST never picks a move whose only record is a loss.
pub fn nst_greedy_avoids_losses() -> bool {
    let p = Player::FIRST;
    let mut nst = NGramTable::default();
    nst.update(&[], &[(p, 3)], &GameOutcome::win(p), 2);
    nst.update(&[], &[(p, 4)], &GameOutcome::win(p.opponent()), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let params = EnhancementParams::default();
    // Unseen moves score 1, like a won move.
    (0..50).all(|_| nst_policy(&nst, p, &[], &[3, 4, 5], params.nst_threshold, 0.0, 2, &mut rng) != 4)
}

/// Runs every property suite for `cases` cases on a fixed seed; returns
/// the suite names with the number of cases each ran.
pub fn run_all(cases: u32) -> Result<Vec<(&'static str, u32)>, String> {
    fn suite<S: Strategy>(
        name: &'static str,
        cases: u32,
        strategy: S,
        check: impl Fn(S::Value) -> CheckResult,
    ) -> Result<(&'static str, u32), String> {
        let config = Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        };
        let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
        let mut runner = TestRunner::new_with_rng(config, rng);
        runner.run(&strategy, check).map_err(|e| format!("{name}: {e}"))?;
        Ok((name, cases))
    }
    Ok(vec![
        suite("mast_equals_unigram_nst", cases, games(), |g| {
            mast_equals_unigram_nst(&g)
        })?,
        suite("nst_credits_every_gram_once", cases, nst_input(), |(c, t, o, n)| {
            nst_credits_every_gram_once(&c, &t, &o, n)
        })?,
        suite("grave_beta_boundaries", cases, beta_input(), |(a, v, b)| {
            grave_beta_boundaries(a, v, b)
        })?,
        suite("pn_and_or_duality", cases, pn_input(), |(k, u, o)| {
            pn_and_or_duality(&k, u, o)
        })?,
        suite("bounds_from_children", cases, bounds_input(), |(k, u)| {
            bounds_from_children_are_consistent(&k, u)
        })?,
        suite("amaf_matches_hand_count", cases, amaf_input(), |(s, d)| {
            amaf_matches_hand_count(s, d)
        })?,
    ])
}
