use super::grid::{self, EMPTY};
use super::tictactoe::{status_outcome, DRAWN, ONGOING};
use super::{GameId, GameOutcome, GameState, MoveId, Player};

/// Connect Four with gravity; four in a row wins.
///
/// Player 0 is yellow. A move's id is the cell the disc lands on, so the
/// notation `"<col>1/<row>+Disc<n>"` (e.g. `"E1/2+Disc1"`) names both the
/// column dropped into and the resulting row. Rendering uses `Y`/`R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectFour {
    width: usize,
    height: usize,
    cells: Vec<u8>,
    heights: Vec<u8>,
    to_move: Player,
    plies: u32,
    status: u8,
    recent: [Option<MoveId>; 2],
}

impl ConnectFour {
    pub(crate) fn new(width: usize, height: usize) -> Self {
        ConnectFour {
            width,
            height,
            cells: vec![EMPTY; width * height],
            heights: vec![0; width],
            to_move: Player::FIRST,
            plies: 0,
            status: ONGOING,
            recent: [None, None],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Id of the move dropping into `col`, if that column has room.
    pub fn drop_move(&self, col: usize) -> Option<MoveId> {
        let h = *self.heights.get(col)? as usize;
        (h < self.height && self.status == ONGOING).then(|| (h * self.width + col) as MoveId)
    }
}

impl GameState for ConnectFour {
    fn game_id(&self) -> GameId {
        GameId::ConnectFour
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
        for col in 0..self.width {
            let h = self.heights[col] as usize;
            if h < self.height {
                out.push((h * self.width + col) as MoveId);
            }
        }
    }

    fn play(&mut self, mv: MoveId) {
        let at = mv as usize;
        let col = at % self.width;
        debug_assert_eq!(self.heights[col] as usize, at / self.width);
        let stone = self.to_move.index() as u8 + 1;
        self.cells[at] = stone;
        self.heights[col] += 1;
        self.plies += 1;
        self.recent = [self.recent[1], Some(mv)];
        if grid::completes_line(&self.cells, self.width, self.height, at, 4) {
            self.status = stone;
        } else if self.plies as usize == self.cells.len() {
            self.status = DRAWN;
        }
        self.to_move = self.to_move.opponent();
    }

    fn outcome(&self) -> Option<GameOutcome> {
        status_outcome(self.status)
    }

    fn notation(&self, mv: MoveId) -> String {
        let at = mv as usize;
        format!(
            "{}1/{}+Disc{}",
            grid::column_letter(at % self.width),
            at / self.width + 1,
            self.to_move
        )
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        let at = mv as usize;
        ((at % self.width) as u64) << 8 | (at / self.width) as u64
    }

    fn move_id_space(&self) -> usize {
        self.cells.len()
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
        key
    }

    fn render(&self) -> String {
        grid::render_grid(&self.cells, self.width, self.height, ['Y', 'R'])
    }
}
