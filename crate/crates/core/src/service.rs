//! Stateless JSON-over-HTTP facade.
//!
//! Every POST body has the shape `{"quiver": <quiver document>, "params":
//! {...}}`. Successful responses are `{"ok": true, "result": ...}`; failures
//! use HTTP status codes 400 (schema) or 422 (domain) with
//! `{"ok": false, "error": {"code", "message"}}`.
//!
//! | route                 | params                              |
//! |-----------------------|-------------------------------------|
//! | `GET /api/health`     |                                     |
//! | `POST /api/validate`  |                                     |
//! | `POST /api/mutate`    | `vertex`                            |
//! | `POST /api/mutate_seq`| `vertices`                          |
//! | `POST /api/gabriel`   |                                     |
//! | `POST /api/canonical` |                                     |
//! | `POST /api/classify`  | `max`                               |
//! | `POST /api/enumerate` | `max`, `page_size`, `token`, `budget_ms` |

use std::net::SocketAddr;
use std::path::PathBuf;
use std::time::Duration;

use axum::body::Bytes;
use axum::http::{header, Method, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::any;
use axum::Router;
use serde::Deserialize;
use serde_json::{json, Value};
use tower_http::cors::CorsLayer;
use tower_http::services::ServeDir;

use crate::canon::{canonical_form, canonicalize};
use crate::document::{gabriel_document, ParseError, QuiverDocument};
use crate::dynkin::{predict_finiteness, FinitenessVerdict};
use crate::enumerate::{enumerate, EnumerationConfig, DEFAULT_MAX_QUIVERS};
use crate::error::QuiverError;
use crate::mutation::{mutate, mutate_seq};
use crate::quiver::{gabriel, validate, ColouredQuiver, Violation};

pub const DEFAULT_PORT: u16 = 8793;
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(10);
pub const DEFAULT_PAGE_SIZE: usize = 100;

const POST_ROUTES: [&str; 7] = [
    "/api/validate",
    "/api/mutate",
    "/api/mutate_seq",
    "/api/gabriel",
    "/api/canonical",
    "/api/classify",
    "/api/enumerate",
];

#[derive(Clone, Debug, PartialEq)]
pub struct ApiResponse {
    pub status: u16,
    pub body: Value,
}

impl ApiResponse {
    fn ok(result: Value) -> Self {
        ApiResponse { status: 200, body: json!({ "ok": true, "result": result }) }
    }

    fn error(status: u16, code: &str, message: impl Into<String>) -> Self {
        ApiResponse { status, body: json!({ "ok": false, "error": { "code": code, "message": message.into() } }) }
    }

    // A quiver result, with its canonical key beside it for client-side
    // bookkeeping.
    fn quiver(q: &ColouredQuiver) -> Self {
        let mut resp = ApiResponse::ok(document_json(q));
        resp.body["canonical"] = json!(canonical_form(q).to_hex());
        resp
    }

    pub fn is_ok(&self) -> bool {
        self.status == 200
    }

    pub fn result(&self) -> Option<&Value> {
        self.body.get("result")
    }

    pub fn error_code(&self) -> Option<&str> {
        self.body.pointer("/error/code").and_then(Value::as_str)
    }
}

#[derive(Deserialize)]
struct Request {
    quiver: QuiverDocument,
    #[serde(default)]
    params: Params,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Params {
    vertex: Option<usize>,
    vertices: Option<Vec<usize>>,
    max: Option<usize>,
    page_size: Option<usize>,
    token: Option<String>,
    budget_ms: Option<u64>,
}

fn schema(msg: impl Into<String>) -> ApiResponse {
    ApiResponse::error(400, "schema", msg)
}

fn quiver_error(e: &QuiverError) -> ApiResponse {
    let code = match e {
        QuiverError::VertexOutOfRange { .. } => "vertex_out_of_range",
        QuiverError::Invalid(_) => "invalid_quiver",
        QuiverError::Sequence { source, .. } => return quiver_error(source).with_message(e.to_string()),
        _ => "mutation_failed",
    };
    ApiResponse::error(422, code, e.to_string())
}

impl ApiResponse {
    fn with_message(mut self, message: String) -> Self {
        if let Some(m) = self.body.pointer_mut("/error/message") {
            *m = Value::String(message);
        }
        self
    }
}

fn parse_error(e: ParseError) -> ApiResponse {
    match e {
        ParseError::Json(e) => ApiResponse::error(400, "bad_json", e.to_string()),
        ParseError::Schema { .. } => schema(e.to_string()),
        ParseError::Invalid(_) => ApiResponse::error(422, "invalid_quiver", e.to_string()),
    }
}

fn violations_json(v: &[Violation]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| {
                json!({
                    "property": x.property.number(),
                    "source": x.source,
                    "target": x.target,
                    "colour": x.colour,
                    "message": x.to_string(),
                })
            })
            .collect(),
    )
}

pub fn document_json(q: &ColouredQuiver) -> Value {
    serde_json::to_value(QuiverDocument::from_quiver(q)).expect("document serializes")
}

pub fn verdict_json(v: &FinitenessVerdict) -> Value {
    json!({
        "tag": v.tag,
        "reason": v.reason,
        "components": v.components.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "witness": v.witness.as_ref().map(document_json),
    })
}

/// Routes a single request. Pure apart from the enumeration time budget.
pub fn handle(method: &str, path: &str, body: &[u8]) -> ApiResponse {
    let route = path.split('?').next().unwrap_or(path);
    match (method, route) {
        ("GET", "/api/health") => return ApiResponse::ok(json!("ok")),
        (_, "/api/health") => return ApiResponse::error(405, "method_not_allowed", "use GET"),
        ("POST", r) if POST_ROUTES.contains(&r) => {}
        (_, r) if POST_ROUTES.contains(&r) => return ApiResponse::error(405, "method_not_allowed", "use POST"),
        _ => return ApiResponse::error(404, "not_found", format!("no route {route}")),
    }

    let req: Request = match serde_json::from_slice(body) {
        Ok(r) => r,
        Err(e) if e.is_data() => return schema(e.to_string()),
        Err(e) => return ApiResponse::error(400, "bad_json", e.to_string()),
    };
    let q = match req.quiver.to_quiver() {
        Ok(q) => q,
        Err(e) => return parse_error(e),
    };
    if route == "/api/validate" {
        let v = validate(&q);
        return ApiResponse::ok(json!({ "valid": v.is_empty(), "violations": violations_json(&v) }));
    }
    let violations = validate(&q);
    if !violations.is_empty() {
        return parse_error(ParseError::Invalid(violations));
    }
    let p = req.params;
    let cfg = |p: &Params| {
        let max = p.max.unwrap_or(DEFAULT_MAX_QUIVERS);
        if max == 0 {
            return Err(schema("params.max must be at least 1"));
        }
        let budget = p.budget_ms.map(Duration::from_millis).unwrap_or(DEFAULT_BUDGET);
        Ok(EnumerationConfig::with_max(max).time_budget(budget))
    };

    match route {
        "/api/mutate" => {
            let Some(j) = p.vertex else {
                return schema("params.vertex is required");
            };
            match mutate(&q, j) {
                Ok(out) => ApiResponse::quiver(&out),
                Err(e) => quiver_error(&e),
            }
        }
        "/api/mutate_seq" => {
            let Some(js) = p.vertices else {
                return schema("params.vertices is required");
            };
            match mutate_seq(&q, &js) {
                Ok(out) => ApiResponse::quiver(&out),
                Err(e) => quiver_error(&e),
            }
        }
        "/api/gabriel" => ApiResponse::ok(serde_json::to_value(gabriel_document(&gabriel(&q))).expect("serializes")),
        "/api/canonical" => {
            let (form, perm) = canonicalize(&q);
            ApiResponse::ok(json!({ "canonical": form.to_hex(), "permutation": perm.image() }))
        }
        "/api/classify" => {
            let cfg = match cfg(&p) {
                Ok(c) => c,
                Err(r) => return r,
            };
            match predict_finiteness(&q, &cfg) {
                Ok(v) => ApiResponse::ok(verdict_json(&v)),
                Err(e) => quiver_error(&e),
            }
        }
        "/api/enumerate" => {
            let cfg = match cfg(&p) {
                Ok(c) => c,
                Err(r) => return r,
            };
            let page_size = p.page_size.unwrap_or(DEFAULT_PAGE_SIZE).max(1);
            let offset = match p.token.as_deref().map(str::parse::<usize>) {
                None => 0,
                Some(Ok(o)) => o,
                Some(Err(_)) => return schema("params.token is not a continuation token"),
            };
            let res = match enumerate(&q, &cfg) {
                Ok(r) => r,
                Err(e) => return quiver_error(&e),
            };
            let sorted = res.sorted();
            let page: Vec<Value> = sorted
                .iter()
                .skip(offset)
                .take(page_size)
                .map(|r| json!({ "canonical": r.form.to_hex(), "quiver": document_json(&r.quiver) }))
                .collect();
            let next = offset + page.len();
            ApiResponse::ok(json!({
                "status": res.status,
                "size": res.size(),
                "depth_reached": res.depth_reached,
                "representatives": page,
                "next_token": (next < sorted.len()).then(|| next.to_string()),
            }))
        }
        _ => unreachable!("route checked above"),
    }
}

async fn dispatch(method: Method, uri: Uri, body: Bytes) -> Response {
    let path = uri.path().to_string();
    let resp = tokio::task::spawn_blocking(move || handle(method.as_str(), &path, &body))
        .await
        .unwrap_or_else(|e| ApiResponse::error(500, "internal", e.to_string()));
    let status = StatusCode::from_u16(resp.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    (status, [(header::CONTENT_TYPE, "application/json")], resp.body.to_string()).into_response()
}

/// The API under `/api`, plus static UI assets from `assets` when given.
pub fn router(assets: Option<PathBuf>) -> Router {
    let app = match assets {
        Some(dir) => Router::new().route("/api/{*rest}", any(dispatch)).fallback_service(ServeDir::new(dir)),
        None => Router::new().fallback(dispatch),
    };
    app.layer(CorsLayer::permissive())
}

pub async fn serve(addr: SocketAddr, assets: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(assets)).await
}
