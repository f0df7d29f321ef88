use xmcts::session::{Controller, GameSession, SessionConfig, SessionError};
use xmcts_core::game::{GameId, GameState, Player};
use xmcts_core::mcts::SearchConfig;

fn engine(iterations: u64) -> Controller {
    let mut config = SearchConfig::with_iterations(iterations);
    config.enhancements.solver = true;
    Controller::Engine { config }
}

#[test]
fn human_and_engine_alternate() {
    let cfg = SessionConfig::new(GameId::TicTacToe, None, [Controller::Human, engine(300)]);
    let mut s = GameSession::new(cfg).unwrap();
    assert!(matches!(s.engine_move(), Err(SessionError::NotEngineTurn(p)) if p == Player::FIRST));
    let first = s.state().legal_moves()[4].notation.clone();
    s.submit_move(&first).unwrap();
    let reply = s.state().legal_moves()[0].notation.clone();
    assert!(matches!(s.submit_move(&reply), Err(SessionError::NotYourTurn(p)) if p == Player::SECOND));
    let turn = s.engine_move().unwrap().clone();
    assert_eq!(turn.ply, 2);
    assert_eq!(turn.mover, Player::SECOND);
    let report = turn.report.expect("engine turns are explained");
    assert!(report.raw_dump.starts_with("Performed 300 iterations."));
    assert!(!report.prose.is_empty());
    assert_eq!(s.turns().len(), 2);
    assert_eq!(s.turns()[0].report, None);
}

#[test]
fn illegal_move_leaves_session_unchanged() {
    let cfg = SessionConfig::new(GameId::ConnectFour, None, [Controller::Human, Controller::Human]);
    let mut s = GameSession::new(cfg).unwrap();
    let err = s.submit_move("Z9").unwrap_err();
    assert_eq!(err.code(), "illegal_move");
    assert!(s.turns().is_empty());
    assert_eq!(s.state().move_counter(), 0);
}

#[test]
fn engines_finish_and_refuse_further_moves() {
    let cfg = SessionConfig::new(GameId::TicTacToe, None, [engine(2000), engine(2000)]);
    let mut s = GameSession::new(cfg).unwrap();
    while !s.is_over() {
        s.engine_move().unwrap();
    }
    // Perfect play in tic-tac-toe draws.
    assert_eq!(s.outcome().unwrap().winner(), None);
    assert!(matches!(s.engine_move(), Err(SessionError::GameOver)));
    let t = s.transcript();
    assert_eq!(t.turns.len(), 9);
    assert_eq!(t.replay().unwrap().len(), 9);
}

#[test]
fn analysis_does_not_change_the_session() {
    let mut cfg = SessionConfig::new(GameId::ConnectFour, None, [Controller::Human, Controller::Human]);
    cfg.analysis_iterations = Some(150);
    let s = GameSession::new(cfg).unwrap();
    let report = s.analyze(None, None).unwrap();
    assert!(report.raw_dump.starts_with("Performed 150 iterations."));
    let after = s.state().legal_moves()[3].notation.clone();
    let report = s.analyze(Some(&after), Some(80)).unwrap();
    assert!(report.raw_dump.starts_with("Performed 80 iterations."));
    assert!(s.turns().is_empty());
    assert!(s.analyze(Some("nonsense"), None).is_err());
}

#[test]
fn invalid_engine_config_is_rejected() {
    let config = SearchConfig {
        iterations: None,
        ..SearchConfig::default()
    };
    let cfg = SessionConfig::new(
        GameId::TicTacToe,
        None,
        [Controller::Engine { config }, Controller::Human],
    );
    assert!(matches!(GameSession::new(cfg), Err(SessionError::Search(_))));
}
