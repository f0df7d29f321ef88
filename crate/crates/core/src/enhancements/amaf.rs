//! All-Moves-As-First statistics and the GRAVE selection blend.

use std::collections::HashMap;

use super::MoveStat;
use crate::game::{GameOutcome, MoveId, Player};

/// Per-node AMAF table keyed by (acting player, move). Rewards are the
/// acting player's utility.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AmafStats {
    stats: HashMap<(Player, MoveId), MoveStat>,
}

impl AmafStats {
    pub fn get(&self, player: Player, mv: MoveId) -> MoveStat {
        self.stats.get(&(player, mv)).copied().unwrap_or_default()
    }

    pub fn record(&mut self, player: Player, mv: MoveId, reward: f64) {
        self.stats.entry((player, mv)).or_default().add(reward);
    }

    /// Credits the first occurrence of each (player, move) in `suffix`.
    pub fn update(&mut self, suffix: &[(Player, MoveId)], outcome: &GameOutcome) {
        for (i, &(player, mv)) in suffix.iter().enumerate() {
            if !suffix[..i].contains(&(player, mv)) {
                self.record(player, mv, outcome.utility(player));
            }
        }
    }

    pub fn values(&self) -> impl Iterator<Item = &MoveStat> {
        self.stats.values()
    }

    pub fn len(&self) -> usize {
        self.stats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stats.is_empty()
    }
}

/// GRAVE weight `ñ / (ñ + n + k·ñ·n)` of the AMAF mean.
pub fn grave_beta(amaf_visits: u64, visits: u64, bias: f64) -> f64 {
    if amaf_visits == 0 {
        return 0.0;
    }
    let (a, n) = (amaf_visits as f64, visits as f64);
    a / (a + n + bias * a * n)
}

/// Exploitation term blending a child's mean with the reference AMAF mean.
pub fn grave_value(child_mean: f64, visits: u64, amaf: MoveStat, bias: f64) -> f64 {
    let beta = grave_beta(amaf.count, visits, bias);
    if beta == 0.0 {
        return child_mean;
    }
    let amaf_mean = amaf.sum / amaf.count as f64;
    (1.0 - beta) * child_mean + beta * amaf_mean
}
