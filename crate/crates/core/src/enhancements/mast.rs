//! Move-Average Sampling Technique: one running reward average per
//! (player, move), independent of the position the move was played in.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use super::MoveStat;
use crate::game::{GameOutcome, MoveId, Player};

/// Mean assumed for moves that have never been simulated.
pub const UNSEEN_MEAN: f64 = 1.0;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MastTable {
    stats: [Vec<MoveStat>; 2],
}

impl MastTable {
    pub fn get(&self, player: Player, mv: MoveId) -> MoveStat {
        self.stats[player.index()].get(mv as usize).copied().unwrap_or_default()
    }

    /// Credits every move of `trace` with its actor's utility.
    pub fn update(&mut self, trace: &[(Player, MoveId)], outcome: &GameOutcome) {
        for &(player, mv) in trace {
            let row = &mut self.stats[player.index()];
            if row.len() <= mv as usize {
                row.resize(mv as usize + 1, MoveStat::default());
            }
            row[mv as usize].add(outcome.utility(player));
        }
    }

    /// All entries with at least one sample.
    pub fn entries(&self) -> impl Iterator<Item = (Player, MoveId, MoveStat)> + '_ {
        self.stats.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, s)| s.count > 0)
                .map(move |(m, s)| (Player::new(p).unwrap(), m as MoveId, *s))
        })
    }

    pub fn is_empty(&self) -> bool {
        self.entries().next().is_none()
    }
}

/// Gibbs sampling over `moves`: weight of `a` is `exp(mean(a) / temperature)`.
pub fn mast_policy<R: Rng + ?Sized>(
    table: &MastTable,
    player: Player,
    moves: &[MoveId],
    temperature: f64,
    rng: &mut R,
) -> MoveId {
    let weights: Vec<f64> = moves
        .iter()
        .map(|&m| (table.get(player, m).mean_or(UNSEEN_MEAN) / temperature).exp())
        .collect();
    let dist = WeightedIndex::new(&weights).expect("finite positive weights");
    moves[dist.sample(rng)]
}
