use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use cfw_core::arquiver::ArquiverError;
use cfw_core::exchange::ExchangeError;
use cfw_core::frieze::FriezeError;
use cfw_core::laurent::LaurentError;
use cfw_core::polygon::PolygonError;
use cfw_core::quiver::QuiverError;
use cfw_core::seed::SeedError;
use serde_json::{json, Value};

/// A failure with a stable snake_case code and a human-readable detail.
#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: &'static str,
    pub detail: Value,
}

impl ApiError {
    pub fn malformed(detail: impl ToString) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            code: "malformed_request",
            detail: Value::String(detail.to_string()),
        }
    }

    fn domain(code: &'static str, detail: impl ToString) -> Self {
        ApiError {
            status: StatusCode::UNPROCESSABLE_ENTITY,
            code,
            detail: Value::String(detail.to_string()),
        }
    }

    pub fn invalid(code: &'static str, detail: impl ToString) -> Self {
        Self::domain(code, detail)
    }

    /// `{"error": code, "detail": ...}`.
    pub fn body(&self) -> Value {
        json!({ "error": self.code, "detail": self.detail })
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({ "ok": false, "error": self.code, "detail": self.detail });
        (self.status, Json(body)).into_response()
    }
}

impl From<QuiverError> for ApiError {
    fn from(e: QuiverError) -> Self {
        let code = match e {
            QuiverError::VertexOutOfRange { .. } => "vertex_out_of_range",
            QuiverError::TooLarge { .. } => "too_large",
            QuiverError::InvalidRank { .. } | QuiverError::OrientationLength { .. } => "invalid_dynkin",
            QuiverError::BadPermutation => "bad_permutation",
            _ => "invalid_quiver",
        };
        ApiError::domain(code, e)
    }
}

impl From<LaurentError> for ApiError {
    fn from(e: LaurentError) -> Self {
        let code = match e {
            LaurentError::NotDivisible => "not_divisible",
            _ => "invalid_polynomial",
        };
        ApiError::domain(code, e)
    }
}

impl From<SeedError> for ApiError {
    fn from(e: SeedError) -> Self {
        match e {
            SeedError::Quiver(q) => q.into(),
            SeedError::LaurentViolation { .. } => ApiError::domain("not_divisible", e),
            _ => ApiError::domain("invalid_seed", e),
        }
    }
}

impl From<ExchangeError> for ApiError {
    fn from(e: ExchangeError) -> Self {
        match e {
            ExchangeError::Seed(s) => s.into(),
            ExchangeError::Quiver(q) => q.into(),
            ExchangeError::ZeroBudget => ApiError::domain("invalid_budget", e),
            ExchangeError::NotFiniteType => ApiError::domain("not_finite_type", e),
            ExchangeError::BudgetExceeded { budget, ref partial } => ApiError {
                status: StatusCode::UNPROCESSABLE_ENTITY,
                code: "budget_exceeded",
                detail: json!({
                    "message": e.to_string(),
                    "budget": budget,
                    "partial": partial,
                }),
            },
        }
    }
}

impl From<PolygonError> for ApiError {
    fn from(e: PolygonError) -> Self {
        let code = match e {
            PolygonError::TooSmall(_) => "polygon_too_small",
            PolygonError::InvalidDiagonal { .. } => "invalid_diagonal",
            PolygonError::NotInTriangulation(_) => "not_in_triangulation",
            _ => "invalid_triangulation",
        };
        ApiError::domain(code, e)
    }
}

impl From<FriezeError> for ApiError {
    fn from(e: FriezeError) -> Self {
        let code = match e {
            FriezeError::Polygon(p) => return p.into(),
            FriezeError::TooShort(_) => "too_short",
            FriezeError::NonInteger { .. } => "non_integer",
            FriezeError::NonPositive { .. } => "non_positive",
            FriezeError::DoesNotClose { .. } => "does_not_close",
            FriezeError::Overflow { .. } => "overflow",
            FriezeError::InvalidBolt(_) => "invalid_bolt",
            FriezeError::ValueCount { .. } => "value_count",
            FriezeError::MalformedFrieze(_) => "malformed_frieze",
            FriezeError::LaurentViolation { .. } => "not_divisible",
        };
        ApiError::domain(code, e)
    }
}

impl From<ArquiverError> for ApiError {
    fn from(e: ArquiverError) -> Self {
        match e {
            ArquiverError::Polygon(p) => p.into(),
            ArquiverError::Frieze(f) => f.into(),
            ArquiverError::VertexOutOfRange { .. } => ApiError::domain("vertex_out_of_range", e),
            ArquiverError::WindowTooSmall { .. } => ApiError::domain("window_too_small", e),
            ArquiverError::ZeroRank => ApiError::domain("invalid_rank", e),
        }
    }
}
