use super::grid;
use super::tictactoe::{status_outcome, PlacementBoard};
use super::{GameId, GameOutcome, GameState, MoveId, Player};

/// Free-style Gomoku: five or more in a row wins; a full board is a draw.
///
/// Player 0 is black. Notation `"<cell>+Marker<n>"`, e.g. `"K12+Marker1"`.
/// Rendering uses `B`/`W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gomoku {
    board: PlacementBoard,
}

impl Gomoku {
    pub(crate) fn new(size: usize) -> Self {
        Gomoku {
            board: PlacementBoard::new(size, size, 5),
        }
    }

    pub fn size(&self) -> usize {
        self.board.width
    }
}

impl GameState for Gomoku {
    fn game_id(&self) -> GameId {
        GameId::Gomoku
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
        self.board.notation(mv, "Marker")
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        self.board.order_key(mv)
    }

    fn move_id_space(&self) -> usize {
        self.board.cells.len()
    }

    fn cell_count(&self) -> usize {
        self.board.cells.len()
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
        grid::render_grid(&self.board.cells, self.board.width, self.board.height, ['B', 'W'])
    }
}
