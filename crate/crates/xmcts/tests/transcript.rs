use xmcts::selfplay::{self, SelfPlaySpec};
use xmcts::transcript::{Transcript, TranscriptError};
use xmcts_core::game::{BoardSize, GameId};
use xmcts_core::mcts::SearchConfig;

fn sample() -> Transcript {
    let mut config = SearchConfig::with_iterations(200);
    config.enhancements.solver = true;
    config.enhancements.mast = true;
    let spec = SelfPlaySpec {
        game: GameId::ConnectFour,
        size: Some(BoardSize::new(5, 4)),
        configs: [config.clone(), config],
        games: 1,
        seed: 3,
        alternate: false,
        verbosity: 2,
    };
    selfplay::play_game(&spec, 0).unwrap().transcript
}

#[test]
fn file_round_trip_is_lossless() {
    let t = sample();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("game.json");
    t.save(&path).unwrap();
    let back = Transcript::load(&path).unwrap();
    assert_eq!(back, t);
    assert_eq!(back.to_json(), t.to_json());
    back.replay().unwrap();
}

#[test]
fn truncated_file_names_the_missing_field() {
    let mut value: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
    value.as_object_mut().unwrap().remove("turns");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, value.to_string()).unwrap();
    let err = Transcript::load(&path).unwrap_err();
    assert!(matches!(err, TranscriptError::Parse { .. }));
    let msg = err.to_string();
    assert!(msg.contains("missing field `turns`"), "{msg}");
    assert!(msg.contains("broken.json"), "{msg}");

    let json = sample().to_json();
    let cut = Transcript::from_json(&json[..json.len() / 2]).unwrap_err();
    assert!(matches!(cut, TranscriptError::Parse { .. }));
}

#[test]
fn unknown_version_is_rejected() {
    let mut t = sample();
    t.version = 99;
    let err = Transcript::from_json(&t.to_json()).unwrap_err();
    assert!(matches!(err, TranscriptError::Version(99)));
}

#[test]
fn tampered_records_fail_replay() {
    let mut t = sample();
    t.turns[1].state = "x".into();
    assert!(matches!(
        t.replay(),
        Err(TranscriptError::Mismatch { ply: 2, field: "state" })
    ));

    let mut t = sample();
    t.turns[2].notation = "nowhere".into();
    assert!(matches!(t.replay(), Err(TranscriptError::Replay { ply: 3, .. })));

    let mut t = sample();
    t.turns.pop();
    assert!(t.replay().is_err());
}

#[test]
fn missing_file_is_an_io_error() {
    let err = Transcript::load(std::path::Path::new("/nonexistent/game.json")).unwrap_err();
    assert!(matches!(err, TranscriptError::Io { .. }));
}
