//! Random small positions and the solver-versus-negamax comparison.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xmcts_core::enhancements::{EnhancementFlags, EnhancementTables};
use xmcts_core::game::{
    initial_state, AnyGame, BoardSize, Breakthrough, GameId, GameState, Oracle, OracleLimits, Player,
};
use xmcts_core::mcts::{search, SearchConfig};

pub fn random_walk(mut s: AnyGame, plies: usize, rng: &mut ChaCha8Rng) -> Option<AnyGame> {
    for _ in 0..plies {
        let moves = s.legal_moves();
        s.play(moves.choose(rng)?.id);
    }
    (!s.is_terminal()).then_some(s)
}

/// 6×6 Breakthrough with 1 to 4 pawns a side placed off their goal rows.
pub fn random_breakthrough(rng: &mut ChaCha8Rng) -> Option<AnyGame> {
    let mut cells = ['.'; 36];
    let pawns = rng.random_range(1..=4);
    for (piece, rows) in [('W', 0..5), ('B', 1..6)] {
        for _ in 0..pawns {
            let at = rng.random_range(rows.clone()) * 6 + rng.random_range(0..6);
            cells[at] = piece;
        }
    }
    let rows: String = cells
        .chunks(6)
        .rev()
        .map(|r| r.iter().collect::<String>() + "\n")
        .collect();
    let to_move = if rng.random() { Player::FIRST } else { Player::SECOND };
    Breakthrough::from_rows(&rows, to_move).map(AnyGame::Breakthrough)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SoundnessTally {
    pub positions: usize,
    pub compared: usize,
    pub disagreements: usize,
}

/// Searches `s` with the solver and compares every solved node with
/// negamax: the value always, the distance for proven wins and losses.
pub fn check_position(s: &AnyGame, seed: u64, oracle: &mut Oracle<AnyGame>, tally: &mut SoundnessTally) {
    let mut cfg = SearchConfig::with_iterations(4000);
    cfg.seed = seed;
    cfg.enhancements = EnhancementFlags {
        solver: true,
        ..EnhancementFlags::default()
    };
    let out = search(s, &cfg, &mut EnhancementTables::default(), None).unwrap();
    let tree = &out.tree;
    for (id, node) in tree.nodes() {
        let Some(score) = node.bounds.solved() else { continue };
        let Some(truth) = oracle.solve(&tree.state_of(id)) else {
            continue;
        };
        let value = if score.is_win() {
            1
        } else if score.is_loss() {
            -1
        } else {
            0
        };
        let distance_ok = score.distance().is_none_or(|d| d == truth.distance);
        if value != truth.value || !distance_ok {
            tally.disagreements += 1;
        }
        tally.compared += 1;
    }
    tally.positions += 1;
}

/// Samples `count` oracle-solvable positions (Tic-Tac-Toe, 4×4 Connect
/// Four, sparse 6×6 Breakthrough in rotation) and checks each one.
pub fn solver_soundness(count: usize, seed: u64) -> SoundnessTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut oracle = Oracle::new(OracleLimits {
        max_depth: None,
        max_nodes: 300_000,
    });
    let mut tally = SoundnessTally::default();
    let c4 = initial_state(GameId::ConnectFour, Some(BoardSize::new(4, 4))).unwrap();
    let ttt = initial_state(GameId::TicTacToe, None).unwrap();
    while tally.positions < count {
        let s = match tally.positions % 3 {
            0 => random_walk(ttt.clone(), rng.random_range(0..7), &mut rng),
            1 => random_walk(c4.clone(), rng.random_range(4..12), &mut rng),
            _ => random_breakthrough(&mut rng),
        };
        let Some(s) = s.filter(|s| !s.is_terminal()) else {
            continue;
        };
        // Positions too large for the oracle are skipped; everything below a
        // solved root is then answered from its memo.
        if oracle.solve(&s).is_none() {
            continue;
        }
        check_position(&s, tally.positions as u64, &mut oracle, &mut tally);
    }
    tally
}
