use super::grid::{self, EMPTY};
use super::tictactoe::{status_outcome, DRAWN, ONGOING};
use super::{GameId, GameOutcome, GameState, MoveId, Player};

const CLOSED_DRAW: u8 = 3;

/// Ultimate Tic-Tac-Toe on the 9×9 cell grid.
///
/// The cell played inside a small board selects the small board the opponent
/// must play in next; if that board is already won or full, any open board is
/// allowed. Three won small boards in a line win the game; if no open board
/// remains without such a line, the game is drawn. Player 0 is white.
/// Notation `"<cell>+Disc<n>"`, e.g. `"I5+Disc1"`. Rendering uses `X`/`O`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UltimateTicTacToe {
    cells: [u8; 81],
    macro_owner: [u8; 9],
    filled: [u8; 9],
    forced: Option<u8>,
    to_move: Player,
    plies: u32,
    status: u8,
    recent: [Option<MoveId>; 2],
}

fn board_of(cell: usize) -> usize {
    let (col, row) = (cell % 9, cell / 9);
    (row / 3) * 3 + col / 3
}

fn slot_in_board(cell: usize) -> usize {
    let (col, row) = (cell % 9, cell / 9);
    (row % 3) * 3 + col % 3
}

fn board_cells(board: usize) -> impl Iterator<Item = usize> {
    let (br, bc) = (board / 3, board % 3);
    (0..9).map(move |slot| (br * 3 + slot / 3) * 9 + bc * 3 + slot % 3)
}

impl UltimateTicTacToe {
    pub(crate) fn new() -> Self {
        UltimateTicTacToe {
            cells: [EMPTY; 81],
            macro_owner: [EMPTY; 9],
            filled: [0; 9],
            forced: None,
            to_move: Player::FIRST,
            plies: 0,
            status: ONGOING,
            recent: [None, None],
        }
    }

    fn board_open(&self, board: usize) -> bool {
        self.macro_owner[board] == EMPTY
    }

    /// Winner of each small board (0 open, 1/2 won, 3 full without a line).
    pub fn macro_board(&self) -> [u8; 9] {
        self.macro_owner
    }
}

impl GameState for UltimateTicTacToe {
    fn game_id(&self) -> GameId {
        GameId::UltimateTtt
    }

    fn to_move(&self) -> Player {
        self.to_move
    }

    fn move_counter(&self) -> u32 {
        self.plies
    }

    fn legal_move_ids(&self, out: &mut Vec<MoveId>) {
        out.clear();
        if self.status != ONGOING {
            return;
        }
        let boards: Vec<usize> = match self.forced {
            Some(b) if self.board_open(b as usize) => vec![b as usize],
            _ => (0..9).filter(|&b| self.board_open(b)).collect(),
        };
        for b in boards {
            out.extend(board_cells(b).filter(|&c| self.cells[c] == EMPTY).map(|c| c as MoveId));
        }
    }

    fn play(&mut self, mv: MoveId) {
        let at = mv as usize;
        debug_assert_eq!(self.cells[at], EMPTY);
        let stone = self.to_move.index() as u8 + 1;
        self.cells[at] = stone;
        let board = board_of(at);
        self.filled[board] += 1;
        let mut small = [EMPTY; 9];
        for (slot, cell) in board_cells(board).enumerate() {
            small[slot] = self.cells[cell];
        }
        if grid::three_in_row(&small).is_some() {
            self.macro_owner[board] = stone;
        } else if self.filled[board] == 9 {
            self.macro_owner[board] = CLOSED_DRAW;
        }
        self.forced = Some(slot_in_board(at) as u8);
        self.plies += 1;
        self.recent = [self.recent[1], Some(mv)];

        let mut lines = self.macro_owner;
        for o in lines.iter_mut() {
            if *o == CLOSED_DRAW {
                *o = EMPTY;
            }
        }
        if let Some(w) = grid::three_in_row(&lines) {
            self.status = w;
        } else if self.macro_owner.iter().all(|&o| o != EMPTY) {
            self.status = DRAWN;
        }
        self.to_move = self.to_move.opponent();
    }

    fn outcome(&self) -> Option<GameOutcome> {
        status_outcome(self.status)
    }

    fn notation(&self, mv: MoveId) -> String {
        let at = mv as usize;
        format!("{}+Disc{}", grid::cell_name(at % 9, at / 9), self.to_move)
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        let at = mv as usize;
        grid::placement_key(at % 9, at / 9)
    }

    fn move_id_space(&self) -> usize {
        81
    }

    fn cell_count(&self) -> usize {
        81
    }

    fn recent_moves(&self) -> [Option<MoveId>; 2] {
        self.recent
    }

    fn transposition_key(&self) -> Self {
        let mut key = self.clone();
        key.recent = [None, None];
        key
    }

    fn render(&self) -> String {
        grid::render_grid(&self.cells, 9, 9, ['X', 'O'])
    }
}
