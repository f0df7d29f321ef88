use super::grid::{self, EMPTY};
use super::tictactoe::{status_outcome, ONGOING};
use super::{GameId, GameOutcome, GameState, MoveId, Player};

const WHITE: u8 = 1;
const BLACK: u8 = 2;

/// Breakthrough: pawns step one row forward, straight onto an empty cell or
/// diagonally onto an empty or enemy-occupied cell (capturing). Reaching the
/// far row or capturing every enemy pawn wins.
///
/// Player 0 is white, starts on the two bottom rows and moves up. Move ids are
/// `from * 3 + direction` where direction 0/1/2 is left-diagonal, straight,
/// right-diagonal (board columns, not relative to the mover). Notation is
/// `"<from>-<to>"`, e.g. `"H6-H7"`. Rendering uses `W`/`B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Breakthrough {
    width: usize,
    height: usize,
    cells: Vec<u8>,
    counts: [u8; 2],
    to_move: Player,
    plies: u32,
    status: u8,
    recent: [Option<MoveId>; 2],
}

impl Breakthrough {
    pub(crate) fn new(width: usize, height: usize) -> Self {
        let mut cells = vec![EMPTY; width * height];
        for col in 0..width {
            for row in 0..2 {
                cells[row * width + col] = WHITE;
                cells[(height - 1 - row) * width + col] = BLACK;
            }
        }
        let pawns = (2 * width) as u8;
        Breakthrough {
            width,
            height,
            cells,
            counts: [pawns, pawns],
            to_move: Player::FIRST,
            plies: 0,
            status: ONGOING,
            recent: [None, None],
        }
    }

    /// Builds an arbitrary position from rows of `W`, `B` and `.` (top row
    /// first). Returns `None` for malformed input or if either side has no
    /// pawns or already stands on its goal row.
    pub fn from_rows(rows: &str, to_move: Player) -> Option<Self> {
        let lines: Vec<&str> = rows.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let height = lines.len();
        let width = lines.first()?.len();
        if height < 3 || width < 2 || lines.iter().any(|l| l.len() != width) {
            return None;
        }
        let mut cells = vec![EMPTY; width * height];
        let mut counts = [0u8; 2];
        for (i, line) in lines.iter().enumerate() {
            let row = height - 1 - i;
            for (col, ch) in line.chars().enumerate() {
                let piece = match ch {
                    'W' => WHITE,
                    'B' => BLACK,
                    '.' => EMPTY,
                    _ => return None,
                };
                if piece == WHITE && row == height - 1 || piece == BLACK && row == 0 {
                    return None;
                }
                if piece != EMPTY {
                    counts[(piece - 1) as usize] += 1;
                }
                cells[row * width + col] = piece;
            }
        }
        if counts.contains(&0) {
            return None;
        }
        Some(Breakthrough {
            width,
            height,
            cells,
            counts,
            to_move,
            plies: 0,
            status: ONGOING,
            recent: [None, None],
        })
    }

    pub fn pawn_count(&self) -> usize {
        (self.counts[0] + self.counts[1]) as usize
    }

    fn target(&self, from: usize, dir: usize, mover: Player) -> Option<usize> {
        let col = (from % self.width) as isize + dir as isize - 1;
        let row = (from / self.width) as isize + if mover == Player::FIRST { 1 } else { -1 };
        if col < 0 || col >= self.width as isize || row < 0 || row >= self.height as isize {
            return None;
        }
        Some(row as usize * self.width + col as usize)
    }
}

impl GameState for Breakthrough {
    fn game_id(&self) -> GameId {
        GameId::Breakthrough
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
        let own = self.to_move.index() as u8 + 1;
        for (from, &piece) in self.cells.iter().enumerate() {
            if piece != own {
                continue;
            }
            for dir in 0..3 {
                let Some(to) = self.target(from, dir, self.to_move) else {
                    continue;
                };
                let dest = self.cells[to];
                let ok = if dir == 1 { dest == EMPTY } else { dest != own };
                if ok {
                    out.push((from * 3 + dir) as MoveId);
                }
            }
        }
    }

    fn play(&mut self, mv: MoveId) {
        let (from, dir) = (mv as usize / 3, mv as usize % 3);
        let to = self.target(from, dir, self.to_move).expect("move leaves the board");
        let own = self.to_move.index() as u8 + 1;
        debug_assert_eq!(self.cells[from], own);
        let captured = self.cells[to];
        if captured != EMPTY {
            self.counts[(captured - 1) as usize] -= 1;
        }
        self.cells[from] = EMPTY;
        self.cells[to] = own;
        self.plies += 1;
        self.recent = [self.recent[1], Some(mv)];
        let goal_row = if own == WHITE { self.height - 1 } else { 0 };
        if to / self.width == goal_row || self.counts[self.to_move.opponent().index()] == 0 {
            self.status = own;
        }
        self.to_move = self.to_move.opponent();
    }

    fn outcome(&self) -> Option<GameOutcome> {
        status_outcome(self.status)
    }

    fn notation(&self, mv: MoveId) -> String {
        let (from, dir) = (mv as usize / 3, mv as usize % 3);
        let to = self.target(from, dir, self.to_move).unwrap_or(from);
        format!(
            "{}-{}",
            grid::cell_name(from % self.width, from / self.width),
            grid::cell_name(to % self.width, to / self.width)
        )
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        let (from, dir) = (mv as usize / 3, mv as usize % 3);
        let to = self.target(from, dir, self.to_move).unwrap_or(from);
        let (fc, fr, tc, tr) = (from % self.width, from / self.width, to % self.width, to / self.width);
        ((fc as u64) << 24) | ((fr as u64) << 16) | ((tc as u64) << 8) | tr as u64
    }

    fn move_id_space(&self) -> usize {
        self.cells.len() * 3
    }

    fn cell_count(&self) -> usize {
        self.cells.len()
    }

    fn recent_moves(&self) -> [Option<MoveId>; 2] {
        self.recent
    }

    fn transposition_key(&self) -> Self {
        let mut key = self.clone();
        key.recent = [None, None];
        key.plies = 0;
        key
    }

    fn render(&self) -> String {
        grid::render_grid(&self.cells, self.width, self.height, ['W', 'B'])
    }
}
