//! N-gram Selection Technique: reward averages for sequences of up to three
//! consecutive moves, keyed by the player making the last move of the gram.
//! Grams cross player turns, so a 2-gram is "reply `b` to move `a`".

use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::Rng;

use super::mast::UNSEEN_MEAN;
use super::MoveStat;
use crate::game::{GameOutcome, MoveId, Player};

pub const MAX_GRAM: usize = 3;
const MOVE_BITS: u32 = 20;

fn key(player: Player, gram: &[MoveId]) -> u64 {
    debug_assert!(!gram.is_empty() && gram.len() <= MAX_GRAM);
    let mut k = player.index() as u64;
    for &m in gram {
        debug_assert!((m as u64) < (1 << MOVE_BITS) - 1);
        k = (k << MOVE_BITS) | (m as u64 + 1);
    }
    k
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct NGramTable {
    grams: HashMap<u64, MoveStat>,
}

impl NGramTable {
    pub fn get(&self, player: Player, gram: &[MoveId]) -> MoveStat {
        self.grams.get(&key(player, gram)).copied().unwrap_or_default()
    }

    /// Updates every gram of length `1..=max_len` ending at a move of
    /// `trace`. `context` holds moves played before the trace; they complete
    /// grams but are not credited themselves.
    pub fn update(&mut self, context: &[MoveId], trace: &[(Player, MoveId)], outcome: &GameOutcome, max_len: usize) {
        let max_len = max_len.clamp(1, MAX_GRAM);
        let moves: Vec<MoveId> = context.iter().copied().chain(trace.iter().map(|&(_, m)| m)).collect();
        for (i, &(player, _)) in trace.iter().enumerate() {
            let end = context.len() + i + 1;
            let reward = outcome.utility(player);
            for n in 1..=max_len.min(end) {
                self.grams
                    .entry(key(player, &moves[end - n..end]))
                    .or_default()
                    .add(reward);
            }
        }
    }

    /// Policy score of `mv` after `history` (most recent move last): the
    /// average of the 1-gram mean and every longer gram mean backed by at
    /// least `threshold` samples.
    pub fn score(&self, player: Player, history: &[MoveId], mv: MoveId, threshold: u64, max_len: usize) -> f64 {
        let mut gram = [0; MAX_GRAM];
        let mut total = self.get(player, &[mv]).mean_or(UNSEEN_MEAN);
        let mut terms = 1.0;
        for n in 2..=max_len.min(MAX_GRAM).min(history.len() + 1) {
            gram[..n - 1].copy_from_slice(&history[history.len() + 1 - n..]);
            gram[n - 1] = mv;
            let stat = self.get(player, &gram[..n]);
            if stat.count >= threshold.max(1) {
                total += stat.sum / stat.count as f64;
                terms += 1.0;
            }
        }
        total / terms
    }

    pub fn len(&self) -> usize {
        self.grams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grams.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = &MoveStat> {
        self.grams.values()
    }
}

/// ε-greedy NST move choice; ties in the greedy step are broken at random.
#[allow(clippy::too_many_arguments)]
pub fn nst_policy<R: Rng + ?Sized>(
    table: &NGramTable,
    player: Player,
    history: &[MoveId],
    moves: &[MoveId],
    threshold: u64,
    epsilon: f64,
    max_len: usize,
    rng: &mut R,
) -> MoveId {
    if rng.random::<f64>() < epsilon {
        return *moves.choose(rng).expect("non-empty move list");
    }
    let mut best = Vec::with_capacity(4);
    let mut best_score = f64::NEG_INFINITY;
    for &m in moves {
        let s = table.score(player, history, m, threshold, max_len);
        if s > best_score {
            best_score = s;
            best.clear();
        }
        if s == best_score {
            best.push(m);
        }
    }
    *best.choose(rng).expect("non-empty move list")
}
