//! JSON-over-HTTP front end for game sessions.
//!
//! Requests for one session are serialized by a per-session lock; searches
//! run on the blocking pool. `POST /sessions/{id}/stop` bypasses the lock so
//! it can cancel a running search.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use xmcts_core::explain::ExplanationReport;
use xmcts_core::game::{BoardSize, GameError, GameId, GameOutcome, GameState, Player};
use xmcts_core::mcts::SearchConfig;

use crate::session::{Controller, GameSession, SessionConfig, SessionError};

#[derive(Debug, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    status: StatusCode,
    pub code: String,
    pub message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            code: code.to_string(),
            message: message.into(),
        }
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = match &e {
            SessionError::NotYourTurn(_) | SessionError::NotEngineTurn(_) | SessionError::GameOver => {
                StatusCode::CONFLICT
            }
            SessionError::Game(GameError::GameOver) => StatusCode::CONFLICT,
            SessionError::Search(xmcts_core::mcts::SearchError::InvalidConfig(_)) | SessionError::Game(_) => {
                StatusCode::BAD_REQUEST
            }
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

struct Slot {
    session: Arc<tokio::sync::Mutex<GameSession>>,
    stop: Arc<AtomicBool>,
}

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<Mutex<HashMap<String, Slot>>>,
}

impl AppState {
    fn slot(&self, id: &str) -> Result<(Arc<tokio::sync::Mutex<GameSession>>, Arc<AtomicBool>), ApiError> {
        let map = self.sessions.lock().expect("session map lock");
        let slot = map
            .get(id)
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "not_found", format!("no session '{id}'")))?;
        Ok((slot.session.clone(), slot.stop.clone()))
    }
}

/// Parses a JSON body, treating an empty body as `{}`.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    let text = if body.iter().all(u8::is_ascii_whitespace) {
        &b"{}"[..]
    } else {
        &body[..]
    };
    serde_json::from_slice(text).map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "bad_request", e.to_string()))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateSession {
    pub game: String,
    /// `"WxH"`; the game's default when absent.
    #[serde(default)]
    pub size: Option<String>,
    #[serde(default)]
    pub controllers: Option<[Controller; 2]>,
    #[serde(default)]
    pub verbosity: Option<u8>,
    #[serde(default)]
    pub analysis_iterations: Option<u64>,
}

impl CreateSession {
    fn into_config(self) -> Result<SessionConfig, SessionError> {
        let game: GameId = self.game.parse()?;
        let size = self.size.map(|s| s.parse::<BoardSize>()).transpose()?;
        let controllers = self.controllers.unwrap_or_else(|| {
            let mut cfg = SearchConfig::default();
            cfg.enhancements.solver = true;
            [Controller::Human, Controller::Engine { config: cfg }]
        });
        let mut config = SessionConfig::new(game, size, controllers);
        if let Some(v) = self.verbosity {
            config.verbosity = v;
        }
        config.analysis_iterations = self.analysis_iterations;
        Ok(config)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub game: GameId,
    pub size: BoardSize,
    pub to_move: Player,
    pub state: String,
    pub legal_moves: Vec<String>,
    pub history: Vec<String>,
    pub controllers: [Controller; 2],
    pub outcome: Option<GameOutcome>,
}

impl SessionView {
    fn of(id: &str, s: &GameSession) -> Self {
        SessionView {
            id: id.to_string(),
            game: s.config().game,
            size: s.config().size,
            to_move: s.state().to_move(),
            state: s.state().render(),
            legal_moves: s.state().legal_moves().into_iter().map(|m| m.notation).collect(),
            history: s.turns().iter().map(|t| t.notation.clone()).collect(),
            controllers: s.config().controllers.clone(),
            outcome: s.outcome(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    #[serde(rename = "move")]
    notation: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EngineMoveResponse {
    #[serde(rename = "move")]
    pub notation: String,
    pub report: ExplanationReport,
    pub session: SessionView,
}

#[derive(Debug, Default, Deserialize)]
struct AnalyzeRequest {
    #[serde(default)]
    candidate: Option<String>,
    #[serde(default)]
    iterations: Option<u64>,
}

async fn create_session(State(app): State<AppState>, body: Bytes) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let req: CreateSession = parse_body(&body)?;
    let session = GameSession::new(req.into_config()?)?;
    let id = uuid::Uuid::new_v4().simple().to_string();
    let view = SessionView::of(&id, &session);
    let stop = session.stop_handle();
    app.sessions.lock().expect("session map lock").insert(
        id,
        Slot {
            session: Arc::new(tokio::sync::Mutex::new(session)),
            stop,
        },
    );
    Ok((StatusCode::CREATED, Json(view)))
}

async fn get_session(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<SessionView> {
    let (session, _) = app.slot(&id)?;
    let s = session.lock().await;
    Ok(Json(SessionView::of(&id, &s)))
}

async fn submit_move(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult<SessionView> {
    let req: MoveRequest = parse_body(&body)?;
    let (session, _) = app.slot(&id)?;
    let mut s = session.lock().await;
    s.submit_move(&req.notation)?;
    Ok(Json(SessionView::of(&id, &s)))
}

fn join_error(e: tokio::task::JoinError) -> ApiError {
    ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string())
}

async fn engine_move(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<EngineMoveResponse> {
    let (session, _) = app.slot(&id)?;
    let mut s = session.lock_owned().await;
    let res = tokio::task::spawn_blocking(move || {
        let turn = s.engine_move()?.clone();
        Ok::<_, SessionError>(EngineMoveResponse {
            notation: turn.notation,
            report: turn.report.expect("engine turns carry a report"),
            session: SessionView::of(&id, &s),
        })
    })
    .await
    .map_err(join_error)??;
    Ok(Json(res))
}

async fn analyze(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult<ExplanationReport> {
    let req: AnalyzeRequest = parse_body(&body)?;
    let (session, _) = app.slot(&id)?;
    let s = session.lock_owned().await;
    let report = tokio::task::spawn_blocking(move || s.analyze(req.candidate.as_deref(), req.iterations))
        .await
        .map_err(join_error)??;
    Ok(Json(report))
}

async fn stop(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<serde_json::Value> {
    let (_, flag) = app.slot(&id)?;
    flag.store(true, Ordering::Relaxed);
    Ok(Json(serde_json::json!({ "stopped": true })))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/moves", post(submit_move))
        .route("/sessions/{id}/engine-move", post(engine_move))
        .route("/sessions/{id}/analyze", post(analyze))
        .route("/sessions/{id}/stop", post(stop))
        .with_state(state)
}

/// Serves until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(AppState::default())).await
}
