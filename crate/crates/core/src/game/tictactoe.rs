use super::grid::{self, EMPTY};
use super::{GameId, GameOutcome, GameState, MoveId, Player};

pub(crate) const ONGOING: u8 = 0;
pub(crate) const DRAWN: u8 = 3;

pub(crate) fn status_outcome(status: u8) -> Option<GameOutcome> {
    match status {
        ONGOING => None,
        1 | 2 => Some(GameOutcome::win(Player::new((status - 1) as usize).unwrap())),
        _ => Some(GameOutcome::draw()),
    }
}

/// k-in-a-row placement board shared by Tic-Tac-Toe and Gomoku.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct PlacementBoard {
    pub(crate) width: usize,
    pub(crate) height: usize,
    pub(crate) k: usize,
    pub(crate) cells: Vec<u8>,
    pub(crate) to_move: Player,
    pub(crate) plies: u32,
    pub(crate) status: u8,
    pub(crate) recent: [Option<MoveId>; 2],
}

impl PlacementBoard {
    pub(crate) fn new(width: usize, height: usize, k: usize) -> Self {
        PlacementBoard {
            width,
            height,
            k,
            cells: vec![EMPTY; width * height],
            to_move: Player::FIRST,
            plies: 0,
            status: ONGOING,
            recent: [None, None],
        }
    }

    pub(crate) fn legal_move_ids(&self, out: &mut Vec<MoveId>) {
        out.clear();
        if self.status != ONGOING {
            return;
        }
        out.extend(
            self.cells
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == EMPTY)
                .map(|(i, _)| i as MoveId),
        );
    }

    pub(crate) fn play(&mut self, mv: MoveId) {
        let at = mv as usize;
        debug_assert_eq!(self.cells[at], EMPTY);
        let stone = self.to_move.index() as u8 + 1;
        self.cells[at] = stone;
        self.plies += 1;
        self.recent = [self.recent[1], Some(mv)];
        if grid::completes_line(&self.cells, self.width, self.height, at, self.k) {
            self.status = stone;
        } else if self.plies as usize == self.cells.len() {
            self.status = DRAWN;
        }
        self.to_move = self.to_move.opponent();
    }

    pub(crate) fn notation(&self, mv: MoveId, piece: &str) -> String {
        let at = mv as usize;
        format!(
            "{}+{}{}",
            grid::cell_name(at % self.width, at / self.width),
            piece,
            self.to_move
        )
    }

    pub(crate) fn order_key(&self, mv: MoveId) -> u64 {
        let at = mv as usize;
        grid::placement_key(at % self.width, at / self.width)
    }
}

/// Tic-Tac-Toe on 3×3. Player 0 (`X`) moves first.
///
/// Notation `"<cell>+Disc<n>"`, e.g. `"B2+Disc1"`. Rendering uses `X`/`O`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TicTacToe {
    board: PlacementBoard,
}

impl TicTacToe {
    pub fn new() -> Self {
        TicTacToe {
            board: PlacementBoard::new(3, 3, 3),
        }
    }

    /// Builds a position from nine characters (`X`, `O`, `.`), top row first.
    /// The player to move is inferred from the stone counts.
    pub fn from_rows(rows: &str) -> Option<Self> {
        let chars: Vec<char> = rows.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.len() != 9 {
            return None;
        }
        let mut state = TicTacToe::new();
        let mut xs = Vec::new();
        let mut os = Vec::new();
        for (i, ch) in chars.iter().enumerate() {
            let (row, col) = (2 - i / 3, i % 3);
            let cell = (row * 3 + col) as MoveId;
            match ch {
                'X' | 'x' => xs.push(cell),
                'O' | 'o' => os.push(cell),
                '.' => {}
                _ => return None,
            }
        }
        if xs.len() != os.len() && xs.len() != os.len() + 1 {
            return None;
        }
        let board = &mut state.board;
        for &c in &xs {
            board.cells[c as usize] = 1;
        }
        for &c in &os {
            board.cells[c as usize] = 2;
        }
        board.plies = (xs.len() + os.len()) as u32;
        if xs.len() > os.len() {
            board.to_move = Player::SECOND;
        }
        let winners: Vec<u8> = (0..9)
            .filter(|&at| grid::completes_line(&board.cells, 3, 3, at, 3))
            .map(|at| board.cells[at])
            .collect();
        if winners.iter().any(|&w| w != winners[0]) {
            return None;
        }
        board.status = match winners.first() {
            Some(&w) => w,
            None if board.plies == 9 => DRAWN,
            None => ONGOING,
        };
        Some(state)
    }
}

impl Default for TicTacToe {
    fn default() -> Self {
        Self::new()
    }
}

impl GameState for TicTacToe {
    fn game_id(&self) -> GameId {
        GameId::TicTacToe
    }

    fn to_move(&self) -> Player {
        self.board.to_move
    }

    fn move_counter(&self) -> u32 {
        self.board.plies
    }

    fn legal_move_ids(&self, out: &mut Vec<MoveId>) {
        self.board.legal_move_ids(out)
    }

    fn play(&mut self, mv: MoveId) {
        self.board.play(mv)
    }

    fn outcome(&self) -> Option<GameOutcome> {
        status_outcome(self.board.status)
    }

    fn notation(&self, mv: MoveId) -> String {
        self.board.notation(mv, "Disc")
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        self.board.order_key(mv)
    }

    fn move_id_space(&self) -> usize {
        9
    }

    fn cell_count(&self) -> usize {
        9
    }

    fn recent_moves(&self) -> [Option<MoveId>; 2] {
        self.board.recent
    }

    fn transposition_key(&self) -> Self {
        let mut key = self.clone();
        key.board.recent = [None, None];
        key
    }

    fn render(&self) -> String {
        grid::render_grid(&self.board.cells, 3, 3, ['X', 'O'])
    }
}
