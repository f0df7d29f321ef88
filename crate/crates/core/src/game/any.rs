use super::{
    BoardSize, Breakthrough, ConnectFour, GameError, GameId, GameOutcome, GameState, Gomoku, MoveId, Player, TicTacToe,
    UltimateTicTacToe,
};

/// Any game of the suite, dispatched at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyGame {
    TicTacToe(TicTacToe),
    ConnectFour(ConnectFour),
    Breakthrough(Breakthrough),
    Gomoku(Gomoku),
    UltimateTtt(UltimateTicTacToe),
}

/// Opening position of `game` on `size` (the game's default when `None`).
pub fn initial_state(game: GameId, size: Option<BoardSize>) -> Result<AnyGame, GameError> {
    let size = size.unwrap_or_else(|| game.default_size());
    if !game.supported_sizes().contains(&size) {
        return Err(GameError::UnsupportedSize {
            game,
            width: size.width,
            height: size.height,
        });
    }
    Ok(match game {
        GameId::TicTacToe => AnyGame::TicTacToe(TicTacToe::new()),
        GameId::ConnectFour => AnyGame::ConnectFour(ConnectFour::new(size.width, size.height)),
        GameId::Breakthrough => AnyGame::Breakthrough(Breakthrough::new(size.width, size.height)),
        GameId::Gomoku => AnyGame::Gomoku(Gomoku::new(size.width)),
        GameId::UltimateTtt => AnyGame::UltimateTtt(UltimateTicTacToe::new()),
    })
}

macro_rules! dispatch {
    ($self:expr, $g:ident => $body:expr) => {
        match $self {
            AnyGame::TicTacToe($g) => $body,
            AnyGame::ConnectFour($g) => $body,
            AnyGame::Breakthrough($g) => $body,
            AnyGame::Gomoku($g) => $body,
            AnyGame::UltimateTtt($g) => $body,
        }
    };
}

impl GameState for AnyGame {
    fn game_id(&self) -> GameId {
        dispatch!(self, g => g.game_id())
    }

    fn to_move(&self) -> Player {
        dispatch!(self, g => g.to_move())
    }

    fn move_counter(&self) -> u32 {
        dispatch!(self, g => g.move_counter())
    }

    fn legal_move_ids(&self, out: &mut Vec<MoveId>) {
        dispatch!(self, g => g.legal_move_ids(out))
    }

    fn play(&mut self, mv: MoveId) {
        dispatch!(self, g => g.play(mv))
    }

    fn outcome(&self) -> Option<GameOutcome> {
        dispatch!(self, g => g.outcome())
    }

    fn notation(&self, mv: MoveId) -> String {
        dispatch!(self, g => g.notation(mv))
    }

    fn order_key(&self, mv: MoveId) -> u64 {
        dispatch!(self, g => g.order_key(mv))
    }

    fn move_id_space(&self) -> usize {
        dispatch!(self, g => g.move_id_space())
    }

    fn cell_count(&self) -> usize {
        dispatch!(self, g => g.cell_count())
    }

    fn recent_moves(&self) -> [Option<MoveId>; 2] {
        dispatch!(self, g => g.recent_moves())
    }

    fn transposition_key(&self) -> Self {
        match self {
            AnyGame::TicTacToe(g) => AnyGame::TicTacToe(g.transposition_key()),
            AnyGame::ConnectFour(g) => AnyGame::ConnectFour(g.transposition_key()),
            AnyGame::Breakthrough(g) => AnyGame::Breakthrough(g.transposition_key()),
            AnyGame::Gomoku(g) => AnyGame::Gomoku(g.transposition_key()),
            AnyGame::UltimateTtt(g) => AnyGame::UltimateTtt(g.transposition_key()),
        }
    }

    fn render(&self) -> String {
        dispatch!(self, g => g.render())
    }
}
