//! Exhaustive negamax for small positions, used to check solver claims.
//!
//! Values are from the perspective of the player to move. Among optimal
//! lines, wins prefer the shortest distance and losses the longest. Draw
//! distances follow the longest drawing line; they are informative only.

use std::collections::HashMap;

use super::{GameState, MoveId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResult {
    /// -1, 0 or +1 for the player to move.
    pub value: i8,
    /// Plies until the game ends under optimal play.
    pub distance: u32,
}

impl OracleResult {
    /// Value of this result as seen from the parent, one ply further away.
    fn from_child(child: OracleResult) -> Self {
        OracleResult {
            value: -child.value,
            distance: child.distance + 1,
        }
    }

    /// True if `self` is strictly preferable to `other` for the mover.
    fn better_than(&self, other: &OracleResult) -> bool {
        match self.value.cmp(&other.value) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => match self.value {
                1 => self.distance < other.distance,
                _ => self.distance > other.distance,
            },
        }
    }
}

/// Bounds on the enumeration; hitting either yields `None` ("unknown").
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    pub max_depth: Option<u32>,
    pub max_nodes: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_depth: None,
            max_nodes: 5_000_000,
        }
    }
}

/// Memoised oracle; reuse one instance across many queries on related states.
pub struct Oracle<S: GameState> {
    memo: HashMap<S, OracleResult>,
    limits: OracleLimits,
    nodes: u64,
}

impl<S: GameState> Oracle<S> {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle {
            memo: HashMap::new(),
            limits,
            nodes: 0,
        }
    }

    /// Exact value of `state`, or `None` if the limits were exceeded.
    pub fn solve(&mut self, state: &S) -> Option<OracleResult> {
        self.nodes = 0;
        self.search(state, 0)
    }

    fn search(&mut self, state: &S, depth: u32) -> Option<OracleResult> {
        if let Some(outcome) = state.outcome() {
            let u = outcome.utility(state.to_move());
            return Some(OracleResult {
                value: if u > 0.0 {
                    1
                } else if u < 0.0 {
                    -1
                } else {
                    0
                },
                distance: 0,
            });
        }
        let key = state.transposition_key();
        if let Some(hit) = self.memo.get(&key) {
            return Some(*hit);
        }
        if self.limits.max_depth.is_some_and(|d| depth >= d) {
            return None;
        }
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return None;
        }
        let mut moves: Vec<MoveId> = Vec::new();
        state.legal_move_ids(&mut moves);
        let mut best: Option<OracleResult> = None;
        for mv in moves {
            let mut child = state.clone();
            child.play(mv);
            let r = OracleResult::from_child(self.search(&child, depth + 1)?);
            if best.is_none_or(|b| r.better_than(&b)) {
                best = Some(r);
            }
        }
        let best = best.expect("non-terminal state without legal moves");
        self.memo.insert(key, best);
        Some(best)
    }
}

/// One-shot oracle query.
pub fn negamax_oracle<S: GameState>(state: &S, limits: OracleLimits) -> Option<OracleResult> {
    Oracle::new(limits).solve(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{initial_state, GameId, TicTacToe};

    #[test]
    fn tictactoe_is_a_draw() {
        let r = negamax_oracle(&TicTacToe::new(), OracleLimits::default()).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.distance, 9);
    }

    #[test]
    fn terminal_state_matches_outcome() {
        let s = TicTacToe::from_rows("XXX OO. ...").unwrap();
        let r = negamax_oracle(&s, OracleLimits::default()).unwrap();
        // O to move has lost.
        assert_eq!(r, OracleResult { value: -1, distance: 0 });
    }

    #[test]
    fn one_move_from_a_line() {
        let s = TicTacToe::from_rows("XX. OO. ...").unwrap();
        let r = negamax_oracle(&s, OracleLimits::default()).unwrap();
        assert_eq!(r, OracleResult { value: 1, distance: 1 });
    }

    #[test]
    fn depth_limit_reports_unknown() {
        let limits = OracleLimits {
            max_depth: Some(3),
            max_nodes: u64::MAX,
        };
        assert_eq!(negamax_oracle(&TicTacToe::new(), limits), None);
        let tiny = OracleLimits {
            max_depth: None,
            max_nodes: 10,
        };
        assert_eq!(negamax_oracle(&TicTacToe::new(), tiny), None);
    }

    #[test]
    fn small_connect_four_is_solvable() {
        let s = initial_state(GameId::ConnectFour, Some(crate::game::BoardSize::new(4, 4))).unwrap();
        let r = negamax_oracle(&s, OracleLimits::default()).unwrap();
        // 4x4 Connect Four is a draw with perfect play.
        assert_eq!(r.value, 0);
    }
}
