//! HTTP API over the assessment model.
//!
//! | Method | Path          | Body                                   |
//! |--------|---------------|----------------------------------------|
//! | GET    | `/api/schema` | questionnaire document                 |
//! | POST   | `/api/assess` | report with cascade trace and what-ifs |
//!
//! The model is built once and shared read-only, so every request is an
//! independent pure evaluation. Nothing a client sends is kept.

use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderValue, Method, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use splpat_core::model::Issue;
use splpat_core::report::{
    parse_assess_request, render_schema, AssessResponse, DocumentError, ReportDocument,
    ReportFormat,
};
use splpat_core::{AssessmentError, Assessor};
use tower_http::cors::{Any, CorsLayer};
use tower_http::services::ServeDir;
use tower_http::trace::{DefaultMakeSpan, DefaultOnResponse, TraceLayer};

/// Error payload of every non-2xx response.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    /// `syntax`, `structure`, `validation`, `not_found` or `method_not_allowed`.
    pub error: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<Issue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl ErrorBody {
    fn new(error: &str, message: impl Into<String>) -> Self {
        Self {
            error: error.into(),
            message: message.into(),
            issues: Vec::new(),
            line: None,
            column: None,
        }
    }

    fn respond(self, status: StatusCode) -> Response {
        (status, Json(self)).into_response()
    }
}

impl From<DocumentError> for ErrorBody {
    fn from(err: DocumentError) -> Self {
        let message = err.to_string();
        match err {
            DocumentError::Syntax { line, column, .. } => Self {
                line: Some(line),
                column: Some(column),
                ..Self::new("syntax", message)
            },
            DocumentError::Structure { line, column, .. } => Self {
                line: Some(line),
                column: Some(column),
                ..Self::new("structure", message)
            },
            DocumentError::Validation(v) => Self {
                issues: v.issues,
                ..Self::new("validation", message)
            },
        }
    }
}

#[derive(Clone)]
struct AppState {
    assessor: Arc<Assessor>,
    /// The schema never changes, so it is rendered once.
    schema: Arc<str>,
}

/// API routes without static file serving.
pub fn router() -> Router {
    build(None)
}

/// API routes, with `ui_dir` served under `/` when given.
pub fn router_with_ui(ui_dir: Option<PathBuf>) -> Router {
    build(ui_dir)
}

fn build(ui_dir: Option<PathBuf>) -> Router {
    let assessor = Assessor::default();
    let schema = render_schema(&assessor.model().schema, ReportFormat::Machine).into();
    let state = AppState {
        assessor: Arc::new(assessor),
        schema,
    };

    let api = Router::new()
        .route("/api/schema", get(schema_handler))
        .route("/api/assess", post(assess_handler))
        .method_not_allowed_fallback(method_not_allowed)
        .with_state(state);
    let app = match ui_dir {
        Some(dir) => api
            .fallback_service(ServeDir::new(dir).not_found_service(axum::routing::any(not_found))),
        None => api.fallback(not_found),
    };

    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    let trace = TraceLayer::new_for_http()
        .make_span_with(DefaultMakeSpan::new().level(tracing::Level::INFO))
        .on_response(DefaultOnResponse::new().level(tracing::Level::INFO));
    app.layer(cors).layer(trace)
}

async fn schema_handler(State(state): State<AppState>) -> Response {
    (
        [
            (
                header::CONTENT_TYPE,
                HeaderValue::from_static("application/json"),
            ),
            (
                header::CACHE_CONTROL,
                HeaderValue::from_static("public, max-age=3600"),
            ),
        ],
        state.schema.to_string(),
    )
        .into_response()
}

async fn assess_handler(State(state): State<AppState>, body: Bytes) -> Response {
    let (sheet, delta) = match parse_assess_request(&body) {
        Ok(parsed) => parsed,
        Err(err) => return ErrorBody::from(err).respond(StatusCode::BAD_REQUEST),
    };
    let evaluate = || -> Result<AssessResponse, AssessmentError> {
        let result = state.assessor.assess(&sheet)?;
        let sensitivity = state.assessor.sensitivity(&sheet, delta)?;
        Ok(AssessResponse {
            report: ReportDocument::new(&result, true),
            sensitivity,
        })
    };
    match evaluate() {
        Ok(response) => Json(response).into_response(),
        Err(AssessmentError::Validation(v)) => {
            ErrorBody::from(DocumentError::Validation(v)).respond(StatusCode::BAD_REQUEST)
        }
        // a validated sheet always assesses; anything else is a defect
        Err(err) => {
            ErrorBody::new("internal", err.to_string()).respond(StatusCode::INTERNAL_SERVER_ERROR)
        }
    }
}

async fn method_not_allowed(method: Method, uri: Uri) -> Response {
    ErrorBody::new(
        "method_not_allowed",
        format!("{method} is not allowed on {}", uri.path()),
    )
    .respond(StatusCode::METHOD_NOT_ALLOWED)
}

async fn not_found(uri: Uri) -> Response {
    ErrorBody::new("not_found", format!("no resource at {}", uri.path()))
        .respond(StatusCode::NOT_FOUND)
}

/// Serves `app` on an already bound listener until `shutdown` resolves.
pub async fn serve(
    listener: tokio::net::TcpListener,
    app: Router,
    shutdown: impl std::future::Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, app)
        .with_graceful_shutdown(shutdown)
        .await
}
