//! Forward models for two-player, zero-sum board games.
//!
//! Every game implements [`GameState`]: an immutable-by-contract value that
//! knows whose turn it is, which moves are legal, how to advance, and what the
//! terminal utilities are. Search code only ever talks to this trait, so the
//! engine stays knowledge-free.
//!
//! Concrete games live in submodules; [`AnyGame`] wraps them behind one type
//! for the service layer and transcripts.

mod any;
mod breakthrough;
mod connect_four;
mod gomoku;
mod grid;
pub mod oracle;
mod tictactoe;
mod uttt;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use any::{initial_state, AnyGame};
pub use breakthrough::Breakthrough;
pub use connect_four::ConnectFour;
pub use gomoku::Gomoku;
pub use oracle::{negamax_oracle, Oracle, OracleLimits, OracleResult};
pub use tictactoe::TicTacToe;
pub use uttt::UltimateTicTacToe;

/// Identifier of a move, unique within the legal-move set of a state and
/// stable across states of the same game (same id, same action).
pub type MoveId = u32;

/// One of the two seats. Player 0 always moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Player(u8);

impl Player {
    pub const FIRST: Player = Player(0);
    pub const SECOND: Player = Player(1);

    pub fn new(index: usize) -> Option<Player> {
        (index < 2).then_some(Player(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn opponent(self) -> Player {
        Player(1 - self.0)
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

/// A legal move together with its human-readable notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveRecord {
    pub id: MoveId,
    pub notation: String,
}

/// Terminal utilities, one per player, each in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GameOutcome {
    pub utilities: [f64; 2],
}

impl GameOutcome {
    pub fn win(winner: Player) -> Self {
        let mut utilities = [-1.0; 2];
        utilities[winner.index()] = 1.0;
        GameOutcome { utilities }
    }

    pub fn draw() -> Self {
        GameOutcome { utilities: [0.0; 2] }
    }

    pub fn utility(&self, player: Player) -> f64 {
        self.utilities[player.index()]
    }

    pub fn winner(&self) -> Option<Player> {
        if self.utilities[0] > self.utilities[1] {
            Some(Player::FIRST)
        } else if self.utilities[1] > self.utilities[0] {
            Some(Player::SECOND)
        } else {
            None
        }
    }

    /// Multiplies every utility by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        GameOutcome {
            utilities: [self.utilities[0] * factor, self.utilities[1] * factor],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("unknown game '{0}'")]
    UnknownGame(String),
    #[error("unsupported board size {width}x{height} for {game}")]
    UnsupportedSize { game: GameId, width: usize, height: usize },
    #[error("malformed board size '{0}' (expected WxH)")]
    MalformedSize(String),
    #[error("illegal move '{notation}'")]
    IllegalMove { notation: String },
    #[error("unknown move '{notation}'; legal moves: {legal}")]
    UnknownNotation { notation: String, legal: String },
    #[error("game already over")]
    GameOver,
}

/// Forward model of an alternating two-player game.
///
/// Implementors are cheap to clone. `play` mutates in place and is meant for
/// hot loops (playouts); `apply` is the checked, value-returning form.
pub trait GameState: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync {
    fn game_id(&self) -> GameId;

    fn to_move(&self) -> Player;

    /// Plies played since the opening position.
    fn move_counter(&self) -> u32;

    /// Appends the ids of all legal moves to `out` (cleared first), in no
    /// particular order. Empty iff the state is terminal.
    fn legal_move_ids(&self, out: &mut Vec<MoveId>);

    /// Plays a move known to be legal.
    fn play(&mut self, mv: MoveId);

    fn outcome(&self) -> Option<GameOutcome>;

    /// Notation of a legal move in this state.
    fn notation(&self, mv: MoveId) -> String;

    /// Sort key consistent with the lexicographic order of notations among
    /// the legal moves of this state.
    fn order_key(&self, mv: MoveId) -> u64;

    /// Exclusive upper bound on move ids for this game and board size.
    fn move_id_space(&self) -> usize;

    fn cell_count(&self) -> usize;

    /// Up to the two most recent moves, oldest first.
    fn recent_moves(&self) -> [Option<MoveId>; 2];

    /// Compact text grid, one row per line (top row first), `.` for empty.
    fn render(&self) -> String;

    /// Copy with history-only fields cleared; states with equal keys have the
    /// same legal moves and game-theoretic value.
    fn transposition_key(&self) -> Self {
        self.clone()
    }

    fn is_terminal(&self) -> bool {
        self.outcome().is_some()
    }

    /// Legal move ids sorted by notation.
    fn ordered_move_ids(&self) -> Vec<MoveId> {
        let mut ids = Vec::new();
        self.legal_move_ids(&mut ids);
        ids.sort_by_key(|&id| self.order_key(id));
        ids
    }

    fn legal_moves(&self) -> Vec<MoveRecord> {
        self.ordered_move_ids()
            .into_iter()
            .map(|id| MoveRecord {
                id,
                notation: self.notation(id),
            })
            .collect()
    }

    fn is_legal(&self, mv: MoveId) -> bool {
        let mut ids = Vec::new();
        self.legal_move_ids(&mut ids);
        ids.contains(&mv)
    }

    fn apply(&self, mv: MoveId) -> Result<Self, GameError> {
        if !self.is_legal(mv) {
            return Err(GameError::IllegalMove {
                notation: format!("#{mv}"),
            });
        }
        let mut next = self.clone();
        next.play(mv);
        Ok(next)
    }

    /// Finds a legal move by its notation.
    fn parse_move(&self, notation: &str) -> Result<MoveRecord, GameError> {
        if self.is_terminal() {
            return Err(GameError::GameOver);
        }
        let legal = self.legal_moves();
        match legal.iter().find(|m| m.notation == notation) {
            Some(m) => Ok(m.clone()),
            None => Err(GameError::UnknownNotation {
                notation: notation.to_string(),
                legal: legal.iter().map(|m| m.notation.as_str()).collect::<Vec<_>>().join(", "),
            }),
        }
    }

    fn apply_notation(&self, notation: &str) -> Result<Self, GameError> {
        let mv = self.parse_move(notation)?;
        let mut next = self.clone();
        next.play(mv.id);
        Ok(next)
    }

    /// Ply cap for playouts; reaching it scores the playout as a draw.
    fn playout_ply_cap(&self) -> usize {
        10 * self.cell_count()
    }
}

/// The games shipped with the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameId {
    TicTacToe,
    ConnectFour,
    Breakthrough,
    Gomoku,
    UltimateTtt,
}

impl GameId {
    pub const ALL: [GameId; 5] = [
        GameId::TicTacToe,
        GameId::ConnectFour,
        GameId::Breakthrough,
        GameId::Gomoku,
        GameId::UltimateTtt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GameId::TicTacToe => "tictactoe",
            GameId::ConnectFour => "connect_four",
            GameId::Breakthrough => "breakthrough",
            GameId::Gomoku => "gomoku",
            GameId::UltimateTtt => "ultimate_ttt",
        }
    }

    pub fn default_size(self) -> BoardSize {
        match self {
            GameId::TicTacToe => BoardSize::new(3, 3),
            GameId::ConnectFour => BoardSize::new(7, 6),
            GameId::Breakthrough => BoardSize::new(8, 8),
            GameId::Gomoku => BoardSize::new(15, 15),
            GameId::UltimateTtt => BoardSize::new(9, 9),
        }
    }

    pub fn supported_sizes(self) -> &'static [BoardSize] {
        const TTT: [BoardSize; 1] = [BoardSize::new(3, 3)];
        const C4: [BoardSize; 3] = [BoardSize::new(7, 6), BoardSize::new(4, 4), BoardSize::new(5, 4)];
        const BT: [BoardSize; 2] = [BoardSize::new(6, 6), BoardSize::new(8, 8)];
        const GOMOKU: [BoardSize; 2] = [BoardSize::new(9, 9), BoardSize::new(15, 15)];
        const UTTT: [BoardSize; 1] = [BoardSize::new(9, 9)];
        match self {
            GameId::TicTacToe => &TTT,
            GameId::ConnectFour => &C4,
            GameId::Breakthrough => &BT,
            GameId::Gomoku => &GOMOKU,
            GameId::UltimateTtt => &UTTT,
        }
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GameId {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GameId::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| GameError::UnknownGame(s.to_string()))
    }
}

/// Board dimensions as columns × rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoardSize {
    pub width: usize,
    pub height: usize,
}

impl BoardSize {
    pub const fn new(width: usize, height: usize) -> Self {
        BoardSize { width, height }
    }
}

impl fmt::Display for BoardSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

impl FromStr for BoardSize {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GameError::MalformedSize(s.to_string());
        let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        Ok(BoardSize::new(
            w.trim().parse().map_err(|_| bad())?,
            h.trim().parse().map_err(|_| bad())?,
        ))
    }
}
