//! Score bounds for the MCTS solver.
//!
//! Values live on a lattice that encodes both outcome and distance:
//! a win in `d` plies is `MATE - d`, a loss in `d` plies is `-(MATE - d)`,
//! and every draw is `0`. Faster wins and slower losses rank higher, so a
//! node is solved exactly when its pessimistic and optimistic bounds meet,
//! and the distance of a proven result falls out of the lattice value.

use serde::{Deserialize, Serialize};

use crate::game::{GameOutcome, Player};

const MATE: i32 = 1_000_000;

/// A game-theoretic value from the perspective of the player to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Score(i32);

impl Score {
    pub const DRAW: Score = Score(0);

    pub const fn win_in(plies: u32) -> Score {
        Score(MATE - plies as i32)
    }

    pub const fn loss_in(plies: u32) -> Score {
        Score(-(MATE - plies as i32))
    }

    /// Value of a terminal state for `mover`.
    pub fn terminal(outcome: &GameOutcome, mover: Player) -> Score {
        let u = outcome.utility(mover);
        if u > 0.0 {
            Score::win_in(0)
        } else if u < 0.0 {
            Score::loss_in(0)
        } else {
            Score::DRAW
        }
    }

    /// The same value seen from the parent node, one ply further away.
    pub fn for_parent(self) -> Score {
        match self.0 {
            0 => Score::DRAW,
            s if s > 0 => Score(-s + 1),
            s => Score(-s - 1),
        }
    }

    pub fn is_win(self) -> bool {
        self.0 > 0
    }

    pub fn is_loss(self) -> bool {
        self.0 < 0
    }

    /// Outcome on the reward scale: +1, 0 or -1.
    pub fn value(self) -> f64 {
        self.0.signum() as f64
    }

    /// Plies to the end of the game; `None` for draws.
    pub fn distance(self) -> Option<u32> {
        (self.0 != 0).then(|| (MATE - self.0.abs()) as u32)
    }
}

/// Pessimistic and optimistic bounds of a node, from its mover's perspective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScoreBounds {
    pub pess: Score,
    pub opt: Score,
}

impl ScoreBounds {
    /// Bounds of a non-terminal node nothing is known about yet.
    pub const OPEN: ScoreBounds = ScoreBounds {
        pess: Score::loss_in(1),
        opt: Score::win_in(1),
    };

    pub fn exact(score: Score) -> Self {
        ScoreBounds {
            pess: score,
            opt: score,
        }
    }

    pub fn is_solved(&self) -> bool {
        self.pess == self.opt
    }

    /// The solved value, if any.
    pub fn solved(&self) -> Option<Score> {
        self.is_solved().then_some(self.pess)
    }

    /// These bounds as seen by the parent's mover.
    pub fn for_parent(self) -> Self {
        ScoreBounds {
            pess: self.opt.for_parent(),
            opt: self.pess.for_parent(),
        }
    }

    /// Bounds of a node from its materialized children (each in its own
    /// perspective). While legal moves remain unexpanded, an unexpanded
    /// child could still be an immediate win, so `opt` stays at a win in 1.
    pub fn from_children(children: impl IntoIterator<Item = ScoreBounds>, has_untried: bool) -> Self {
        let mut pess = Score::loss_in(1);
        let mut opt = if has_untried {
            Score::win_in(1)
        } else {
            Score::loss_in(0)
        };
        for child in children {
            let seen = child.for_parent();
            pess = pess.max(seen.pess);
            opt = opt.max(seen.opt);
        }
        ScoreBounds { pess, opt }
    }

    /// `(pess, opt)` on the reward scale.
    pub fn values(&self) -> (f64, f64) {
        (self.pess.value(), self.opt.value())
    }
}
