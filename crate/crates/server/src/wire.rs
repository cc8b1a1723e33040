//! Decoding request fragments. Shape errors are malformed requests; values
//! that parse but violate a domain invariant are domain errors.

use cfw_core::frieze::{BoltJson, LightningBolt, SymbolicFrieze};
use cfw_core::laurent::LaurentPoly;
use cfw_core::polygon::{Diagonal, Triangulation, TriangulationJson};
use cfw_core::quiver::{Quiver, QuiverJson};
use cfw_core::seed::Seed;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::ApiError;

fn shape<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T, ApiError> {
    T::deserialize(v).map_err(|e| ApiError::malformed(format!("{what}: {e}")))
}

pub fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, ApiError> {
    v.get(name)
        .ok_or_else(|| ApiError::malformed(format!("missing field {name:?}")))
}

pub fn vertex(v: &Value, name: &str) -> Result<usize, ApiError> {
    field(v, name)?
        .as_u64()
        .map(|k| k as usize)
        .ok_or_else(|| ApiError::malformed(format!("{name} must be a nonnegative integer")))
}

pub fn quiver(v: &Value) -> Result<Quiver, ApiError> {
    let j: QuiverJson = shape(v, "quiver")?;
    Ok(Quiver::try_from(j)?)
}

pub fn seed(v: &Value) -> Result<Seed, ApiError> {
    #[derive(Deserialize)]
    struct Raw {
        quiver: Value,
        vars: Vec<Value>,
    }
    let raw: Raw = shape(v, "seed")?;
    let q = quiver(&raw.quiver)?;
    let vars = raw
        .vars
        .iter()
        .map(|p| LaurentPoly::from_wire(q.n(), p).map_err(|e| ApiError::malformed(format!("seed vars: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Seed::new(q, vars)?)
}

pub fn triangulation(v: &Value) -> Result<Triangulation, ApiError> {
    let j: TriangulationJson = shape(v, "triangulation")?;
    Ok(Triangulation::new(j.n, &j.diagonals)?)
}

pub fn diagonal(v: &Value) -> Result<Diagonal, ApiError> {
    shape(v, "diagonal")
}

pub fn bolt(v: &Value) -> Result<LightningBolt, ApiError> {
    let j: BoltJson = shape(v, "bolt")?;
    if j.cells.len() != j.n {
        return Err(ApiError::invalid(
            "invalid_bolt",
            format!("bolt of height {} has {} cells", j.n, j.cells.len()),
        ));
    }
    Ok(LightningBolt::new(j.cells)?)
}

/// `[{"a", "b", "poly"}, ...]` sorted by diagonal.
pub fn symbolic_cells(s: &SymbolicFrieze) -> Value {
    let mut cells: Vec<_> = s.cells().collect();
    cells.sort_by_key(|(d, _)| **d);
    Value::Array(
        cells
            .into_iter()
            .map(|((a, b), p)| json!({ "a": a, "b": b, "poly": p }))
            .collect(),
    )
}
