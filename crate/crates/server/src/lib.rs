//! Stateless JSON API over `cfw-core`.
//!
//! Every response body is `{"ok": true, "result": ...}` or
//! `{"ok": false, "error": code, "detail": ...}`. Malformed bodies get 400,
//! domain failures 422.

pub mod error;
pub mod wire;

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderValue, Method};
use axum::routing::{get, post};
use axum::{Json, Router};
use cfw_core::arquiver::cluster_variable_of;
use cfw_core::exchange;
use cfw_core::frieze::{Frieze, SymbolicFrieze};
use serde_json::{json, Value};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

pub use error::ApiError;

pub const DEFAULT_PORT: u16 = 8780;
pub const DEFAULT_BUDGET_MAX: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServerConfig {
    /// `None` allows any origin.
    pub allow_origin: Option<String>,
    /// Upper bound on exchange-graph budgets.
    pub budget_max: usize,
}

impl Default for ServerConfig {
    fn default() -> Self {
        ServerConfig {
            allow_origin: None,
            budget_max: DEFAULT_BUDGET_MAX,
        }
    }
}

impl ServerConfig {
    /// Reads `CF_ALLOW_ORIGIN` and `CF_BUDGET_MAX`.
    pub fn from_env() -> Result<Self, String> {
        let mut cfg = ServerConfig::default();
        if let Ok(origin) = std::env::var("CF_ALLOW_ORIGIN") {
            if !origin.is_empty() {
                cfg.allow_origin = Some(origin);
            }
        }
        if let Ok(max) = std::env::var("CF_BUDGET_MAX") {
            cfg.budget_max = max
                .parse()
                .map_err(|_| format!("CF_BUDGET_MAX must be a positive integer, got {max:?}"))?;
        }
        Ok(cfg)
    }
}

type ApiResult = Result<Json<Value>, ApiError>;

fn ok(result: Value) -> ApiResult {
    Ok(Json(json!({ "ok": true, "result": result })))
}

fn parse(body: &Bytes) -> Result<Value, ApiError> {
    serde_json::from_slice(body).map_err(ApiError::malformed)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

async fn health() -> Json<Value> {
    Json(json!({ "ok": true }))
}

async fn quiver_mutate(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let q = wire::quiver(wire::field(&v, "quiver")?)?;
    let k = wire::vertex(&v, "k")?;
    ok(json!({ "quiver": to_value(&q.mutate(k)?) }))
}

async fn seed_mutate(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let s = wire::seed(wire::field(&v, "seed")?)?;
    let k = wire::vertex(&v, "k")?;
    ok(json!({ "seed": to_value(&s.mutate(k)?) }))
}

async fn exchange_enumerate(State(cfg): State<Arc<ServerConfig>>, body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let q = wire::quiver(wire::field(&v, "quiver")?)?;
    let requested = match v.get("budget") {
        None | Some(Value::Null) => cfg.budget_max,
        Some(b) => b
            .as_u64()
            .ok_or_else(|| ApiError::malformed("budget must be a nonnegative integer"))? as usize,
    };
    let budget = requested.min(cfg.budget_max);
    let graph = tokio::task::spawn_blocking(move || exchange::enumerate(&q, budget))
        .await
        .map_err(|e| ApiError::malformed(e.to_string()))??;
    ok(json!({ "graph": to_value(&graph) }))
}

async fn polygon_flip(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let t = wire::triangulation(wire::field(&v, "triangulation")?)?;
    let d = wire::diagonal(wire::field(&v, "diagonal")?)?;
    ok(json!({ "triangulation": to_value(&t.flip(d)?) }))
}

async fn frieze_from_triangulation(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let t = wire::triangulation(wire::field(&v, "triangulation")?)?;
    ok(json!({ "frieze": to_value(&Frieze::from_triangulation(&t)?) }))
}

async fn frieze_symbolic(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let bolt = wire::bolt(wire::field(&v, "bolt")?)?;
    let s = SymbolicFrieze::from_bolt(&bolt)?;
    ok(json!({ "cells": wire::symbolic_cells(&s) }))
}

async fn category_phi(body: Bytes) -> ApiResult {
    let v = parse(&body)?;
    let bolt = wire::bolt(wire::field(&v, "bolt")?)?;
    let d = wire::diagonal(wire::field(&v, "diagonal")?)?;
    ok(json!({ "poly": to_value(&cluster_variable_of(d, &bolt)?) }))
}

fn cors(cfg: &ServerConfig) -> Result<CorsLayer, String> {
    let origin = match &cfg.allow_origin {
        None => AllowOrigin::from(Any),
        Some(o) => AllowOrigin::exact(
            HeaderValue::from_str(o).map_err(|_| format!("invalid origin {o:?}"))?,
        ),
    };
    Ok(CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]))
}

pub fn router(cfg: ServerConfig) -> Result<Router, String> {
    let layer = cors(&cfg)?;
    Ok(Router::new()
        .route("/api/health", get(health))
        .route("/api/quiver/mutate", post(quiver_mutate))
        .route("/api/seed/mutate", post(seed_mutate))
        .route("/api/exchange/enumerate", post(exchange_enumerate))
        .route("/api/polygon/flip", post(polygon_flip))
        .route("/api/frieze/from-triangulation", post(frieze_from_triangulation))
        .route("/api/frieze/symbolic", post(frieze_symbolic))
        .route("/api/category/phi", post(category_phi))
        .with_state(Arc::new(cfg))
        .layer(layer))
}

/// Serves on an already bound listener until the task is dropped.
pub async fn serve_listener(listener: tokio::net::TcpListener, cfg: ServerConfig) -> std::io::Result<()> {
    let app = router(cfg).map_err(std::io::Error::other)?;
    axum::serve(listener, app).await
}

/// Binds `0.0.0.0:port` and serves.
pub async fn serve(port: u16, cfg: ServerConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(SocketAddr::from(([0, 0, 0, 0], port))).await?;
    serve_listener(listener, cfg).await
}
