//! Stateless HTTP front end.
//!
//! - `GET /api/health` -> `200 ok`
//! - `GET /api/placements?x0=&r=&width=&height=&mode=&count=` -> placement JSON,
//!   or `400 {"error": ...}` when a parameter is missing or invalid.

use axum::extract::rejection::QueryRejection;
use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use logiseed::decimal::parse_decimal;
use logiseed::logistic::{ChaoticSeed, OsNoise};
use logiseed::placement::{GridSpec, Mode};
use logiseed::{Error, DEFAULT_BURN_IN};
use serde::{Deserialize, Serialize};

use crate::commands::{render_place, PlaceRequest};
use crate::CliError;

#[derive(Debug, Clone, Copy)]
struct AppState {
    max_cells: usize,
}

/// Raw query string of `/api/placements`; every field arrives as text.
#[derive(Debug, Default, Deserialize)]
pub struct PlacementQuery {
    pub x0: Option<String>,
    pub r: Option<String>,
    pub width: Option<String>,
    pub height: Option<String>,
    pub mode: Option<String>,
    pub count: Option<String>,
    pub burn_in: Option<String>,
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: String,
}

fn required<'a>(name: &str, value: &'a Option<String>) -> Result<&'a str, String> {
    value
        .as_deref()
        .ok_or_else(|| format!("missing query parameter {name}"))
}

fn parse_count(name: &str, text: &str) -> Result<usize, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("{name} must be a non-negative integer, got {text:?}"))
}

impl PlacementQuery {
    /// Validates parameters in a fixed order: x0, r, width, height, mode, count.
    pub fn validate(&self, max_cells: usize) -> Result<PlaceRequest, String> {
        let x0 = parse_decimal("x0", required("x0", &self.x0)?).map_err(|e| e.to_string())?;
        if !(x0 > 0.0 && x0 < 1.0) {
            return Err(Error::X0OutOfRange(x0).to_string());
        }
        let r = parse_decimal("r", required("r", &self.r)?).map_err(|e| e.to_string())?;
        let seed = ChaoticSeed::new(x0, r).map_err(|e| e.to_string())?;
        let width = parse_count("width", required("width", &self.width)?)?;
        let height = parse_count("height", required("height", &self.height)?)?;
        let grid = GridSpec::with_max_cells(width, height, max_cells).map_err(|e| e.to_string())?;
        let mode = match &self.mode {
            Some(m) => m.parse::<Mode>()?,
            None => Mode::Competition,
        };
        let count = self
            .count
            .as_deref()
            .map(|c| parse_count("count", c))
            .transpose()?;
        let burn_in = match &self.burn_in {
            Some(b) => parse_count("burn_in", b)?,
            None => DEFAULT_BURN_IN,
        };
        Ok(PlaceRequest {
            seed,
            grid,
            mode,
            count,
            burn_in,
        })
    }
}

fn bad_request(message: String) -> Response {
    (StatusCode::BAD_REQUEST, Json(ErrorBody { error: message })).into_response()
}

async fn health() -> &'static str {
    "ok"
}

async fn placements_handler(
    State(state): State<AppState>,
    query: Result<Query<PlacementQuery>, QueryRejection>,
) -> Response {
    let query = match query {
        Ok(Query(q)) => q,
        Err(e) => return bad_request(e.body_text()),
    };
    let req = match query.validate(state.max_cells) {
        Ok(req) => req,
        Err(msg) => return bad_request(msg),
    };
    match render_place(&req, &mut OsNoise) {
        Ok(body) => ([(header::CONTENT_TYPE, "application/json")], body).into_response(),
        Err(e) => bad_request(e.to_string()),
    }
}

pub fn app(max_cells: usize) -> Router {
    Router::new()
        .route("/api/health", get(health))
        .route("/api/placements", get(placements_handler))
        .with_state(AppState { max_cells })
}

/// Binds `host:port`; failure maps to [`CliError::Startup`].
pub async fn bind(host: &str, port: u16) -> Result<tokio::net::TcpListener, CliError> {
    tokio::net::TcpListener::bind((host, port))
        .await
        .map_err(|e| CliError::Startup(format!("cannot listen on {host}:{port}: {e}")))
}

pub fn run_serve(host: &str, port: u16, max_cells: usize) -> Result<(), CliError> {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()?;
    runtime.block_on(async {
        let listener = bind(host, port).await?;
        eprintln!("listening on http://{}", listener.local_addr()?);
        axum::serve(listener, app(max_cells)).await?;
        Ok(())
    })
}
