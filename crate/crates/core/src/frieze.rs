//! Frieze patterns in pair coordinates.
//!
//! A height-`n` frieze on `N = n + 3` is a function `m(a, b)` on integer
//! pairs with `0 <= b - a <= N`, where
//!
//! * `m(a, a) = m(a, a + N) = 0` and `m(a, a + 1) = m(a, a + N - 1) = 1`,
//! * `m(a, b) m(a+1, b+1) = m(a+1, b) m(a, b+1) + 1`,
//! * `m(a, b) = m(b, a + N)`.
//!
//! Row `r = b - a - 1` holds the entry `m(a, b)` at horizontal position
//! `a + b`; rows `1..=n` are the nontrivial ones. Modulo the glide, the
//! nontrivial cells are exactly the polygon diagonals `(a, b)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::polygon::{self, Diagonal, PolygonError, Triangulation};
use crate::quiver::Quiver;

pub type Cell = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("quiddity sequence needs at least 4 entries, got {0}")]
    TooShort(usize),
    #[error("entry m({a}, {b}) is not an integer")]
    NonInteger { a: i64, b: i64 },
    #[error("entry m({a}, {b}) is not positive")]
    NonPositive { a: i64, b: i64 },
    #[error("row {row} does not close to 1 at m({a}, {b})")]
    DoesNotClose { row: usize, a: i64, b: i64 },
    #[error("entry m({a}, {b}) overflows 64 bits")]
    Overflow { a: i64, b: i64 },
    #[error("invalid lightning bolt: {0}")]
    InvalidBolt(String),
    #[error("expected {expected} bolt values, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("malformed frieze: {0}")]
    MalformedFrieze(String),
    #[error("Laurent phenomenon violated at m({a}, {b})")]
    LaurentViolation { a: i64, b: i64 },
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

/// Reduces a nontrivial cell to its polygon diagonal, using row periodicity
/// and the glide.
pub fn cell_diagonal(big_n: usize, (a, b): Cell) -> Diagonal {
    let nn = big_n as i64;
    let a1 = (a - 1).rem_euclid(nn) + 1;
    let b1 = b - (a - a1);
    if b1 <= nn {
        (a1 as usize, b1 as usize)
    } else {
        ((b1 - nn) as usize, a1 as usize)
    }
}

/// An integer frieze of height `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frieze {
    n: usize,
    // rows[d][(a - 1) mod N] = m(a, a + d) for d in 0..=N
    rows: Vec<Vec<u64>>,
}

impl Frieze {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Polygon size `N = n + 3`, the row period.
    pub fn size(&self) -> usize {
        self.n + 3
    }

    /// `m(a, b)`, or `None` outside `0 <= b - a <= N`.
    pub fn entry(&self, a: i64, b: i64) -> Option<u64> {
        let nn = self.size() as i64;
        let d = b - a;
        if !(0..=nn).contains(&d) {
            return None;
        }
        Some(self.rows[d as usize][(a - 1).rem_euclid(nn) as usize])
    }

    /// `m(a, b)`; panics outside the strip.
    pub fn m(&self, a: i64, b: i64) -> u64 {
        self.entry(a, b)
            .unwrap_or_else(|| panic!("m({a}, {b}) lies outside the frieze"))
    }

    /// Nontrivial row `r` (1-based) as `m(a, a + r + 1)` for `a = 1..=N`.
    pub fn row(&self, r: usize) -> Vec<u64> {
        self.rows[r + 1].clone()
    }

    /// `q[i] = m(i - 1, i + 1)` for `i = 1..=N`.
    pub fn quiddity(&self) -> Vec<u64> {
        let nn = self.size() as i64;
        (1..=nn).map(|i| self.m(i - 1, i + 1)).collect()
    }

    /// Values on the polygon diagonals, sorted.
    pub fn domain(&self) -> Vec<(usize, usize, u64)> {
        polygon::all_diagonals(self.size())
            .into_iter()
            .map(|(a, b)| (a, b, self.m(a as i64, b as i64)))
            .collect()
    }

    /// Largest entry.
    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Builds and validates a frieze from its values on the diagonals of
    /// the `(n + 3)`-gon.
    pub fn from_domain(n: usize, cells: &[(usize, usize, u64)]) -> Result<Frieze, FriezeError> {
        let big_n = n + 3;
        let mut values: HashMap<Diagonal, u64> = HashMap::new();
        for &(a, b, v) in cells {
            let d = polygon::normalize_diagonal(big_n, (a, b))?;
            if values.insert(d, v).is_some() {
                return Err(FriezeError::MalformedFrieze(format!(
                    "cell ({}, {}) given twice",
                    d.0, d.1
                )));
            }
        }
        let mut rows = trivial_rows(n);
        for d in 2..=n + 1 {
            for i in 0..big_n {
                let a = i as i64 + 1;
                let diag = cell_diagonal(big_n, (a, a + d as i64));
                rows[d][i] = *values.get(&diag).ok_or_else(|| {
                    FriezeError::MalformedFrieze(format!("missing cell ({}, {})", diag.0, diag.1))
                })?;
            }
        }
        let f = Frieze { n, rows };
        f.validate()?;
        Ok(f)
    }

    /// Checks the boundary rows, positivity, the diamond rule and the glide.
    pub fn validate(&self) -> Result<(), FriezeError> {
        let n = self.n;
        let nn = self.size() as i64;
        if self.rows.len() != n + 4 || self.rows.iter().any(|r| r.len() != n + 3) {
            return Err(FriezeError::MalformedFrieze("wrong shape".into()));
        }
        for a in 1..=nn {
            for (d, want) in [(0, 0), (1, 1), (nn - 1, 1), (nn, 0)] {
                if self.m(a, a + d) != want {
                    return Err(FriezeError::MalformedFrieze(format!(
                        "m({a}, {}) should be {want}",
                        a + d
                    )));
                }
            }
            for d in 2..=nn - 2 {
                if self.m(a, a + d) == 0 {
                    return Err(FriezeError::NonPositive { a, b: a + d });
                }
            }
            for d in 1..=nn - 1 {
                let b = a + d;
                let lhs = self.m(a, b) as u128 * self.m(a + 1, b + 1) as u128;
                let rhs = self.m(a + 1, b) as u128 * self.m(a, b + 1) as u128 + 1;
                if lhs != rhs {
                    return Err(FriezeError::MalformedFrieze(format!(
                        "diamond rule fails at m({a}, {b})"
                    )));
                }
            }
            for d in 0..=nn {
                let b = a + d;
                if self.m(a, b) != self.m(b, a + nn) {
                    return Err(FriezeError::MalformedFrieze(format!(
                        "glide fails at m({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Completes a frieze from its first nontrivial row.
    pub fn from_quiddity(q: &[u64]) -> Result<Frieze, FriezeError> {
        let big_n = q.len();
        if big_n < 4 {
            return Err(FriezeError::TooShort(big_n));
        }
        let n = big_n - 3;
        let nn = big_n as i64;
        let mut rows = vec![vec![0u64; big_n]; big_n + 1];
        rows[1] = vec![1; big_n];
        for i in 0..big_n {
            // m(a, a + 2) = q[a + 1], 1-based cyclic
            rows[2][i] = q[(i + 1) % big_n];
            if rows[2][i] == 0 {
                let a = i as i64 + 1;
                return Err(FriezeError::NonPositive { a, b: a + 2 });
            }
        }
        let idx = |a: i64| (a - 1).rem_euclid(nn) as usize;
        // m(a, b+1) = (m(a, b) m(a+1, b+1) - 1) / m(a+1, b), with d = b - a
        for d in 2..=n + 1 {
            for i in 0..big_n {
                let a = i as i64 + 1;
                let b = a + d as i64;
                let num = rows[d][i] as u128 * rows[d][idx(a + 1)] as u128 - 1;
                let den = rows[d - 1][idx(a + 1)] as u128;
                if num % den != 0 {
                    return Err(FriezeError::NonInteger { a, b: b + 1 });
                }
                let v = num / den;
                if v == 0 {
                    return Err(FriezeError::NonPositive { a, b: b + 1 });
                }
                rows[d + 1][i] = u64::try_from(v).map_err(|_| FriezeError::Overflow { a, b: b + 1 })?;
            }
        }
        for i in 0..big_n {
            if rows[n + 2][i] != 1 {
                let a = i as i64 + 1;
                return Err(FriezeError::DoesNotClose {
                    row: n + 1,
                    a,
                    b: a + n as i64 + 2,
                });
            }
        }
        let f = Frieze { n, rows };
        f.validate()?;
        Ok(f)
    }

    /// The frieze whose quiddity sequence counts the triangles at each
    /// vertex of `t`.
    pub fn from_triangulation(t: &Triangulation) -> Result<Frieze, FriezeError> {
        if t.size() < 4 {
            return Err(FriezeError::TooShort(t.size()));
        }
        let f = Frieze::from_quiddity(&t.quiddity())?;
        for &(a, b) in t.diagonals() {
            if f.m(a as i64, b as i64) != 1 {
                return Err(FriezeError::MalformedFrieze(format!(
                    "diagonal ({a}, {b}) has value {}",
                    f.m(a as i64, b as i64)
                )));
            }
        }
        Ok(f)
    }

    /// Recovers the triangulation by cutting ears off the quiddity sequence.
    pub fn to_triangulation(&self) -> Result<Triangulation, FriezeError> {
        let big_n = self.size();
        let mut poly: Vec<(usize, u64)> = self
            .quiddity()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (i + 1, v))
            .collect();
        let mut diagonals = Vec::with_capacity(big_n - 3);
        while poly.len() > 3 {
            let len = poly.len();
            let ear = poly
                .iter()
                .position(|&(_, v)| v == 1)
                .ok_or_else(|| FriezeError::MalformedFrieze("no ear in quiddity".into()))?;
            let prev = (ear + len - 1) % len;
            let next = (ear + 1) % len;
            for nb in [prev, next] {
                poly[nb].1 = poly[nb].1.checked_sub(1).filter(|&v| v > 0).ok_or_else(|| {
                    FriezeError::MalformedFrieze("quiddity entry drops to zero".into())
                })?;
            }
            diagonals.push((poly[prev].0, poly[next].0));
            poly.remove(ear);
        }
        if poly.iter().any(|&(_, v)| v != 1) {
            return Err(FriezeError::MalformedFrieze(
                "final triangle is not an ear".into(),
            ));
        }
        let t = Triangulation::new(big_n, &diagonals)
            .map_err(|e| FriezeError::MalformedFrieze(e.to_string()))?;
        if Frieze::from_triangulation(&t)? != *self {
            return Err(FriezeError::MalformedFrieze(
                "triangulation does not reproduce the frieze".into(),
            ));
        }
        Ok(t)
    }

    /// Values of this frieze along a bolt.
    pub fn bolt_values(&self, bolt: &LightningBolt) -> Vec<u64> {
        bolt.cells.iter().map(|&(a, b)| self.m(a, b)).collect()
    }

    /// Propagates positive integers from a lightning bolt.
    pub fn from_bolt(bolt: &LightningBolt, values: &[u64]) -> Result<Frieze, FriezeError> {
        let n = bolt.n();
        if values.len() != n {
            return Err(FriezeError::ValueCount {
                expected: n,
                got: values.len(),
            });
        }
        for (&(a, b), &v) in bolt.cells.iter().zip(values) {
            if v == 0 {
                return Err(FriezeError::NonPositive { a, b });
            }
        }
        let cells = propagate(bolt, values.to_vec(), 1u64, |left, top, bottom, (a, b)| {
            let num = *top as u128 * *bottom as u128 + 1;
            let den = *left as u128;
            if num % den != 0 {
                return Err(FriezeError::NonInteger { a, b });
            }
            u64::try_from(num / den).map_err(|_| FriezeError::Overflow { a, b })
        })?;
        let domain: Vec<(usize, usize, u64)> = cells.into_iter().map(|((a, b), v)| (a, b, v)).collect();
        Frieze::from_domain(n, &domain)
    }

    /// All height-`n` friezes, one per triangulation of the `(n + 3)`-gon.
    pub fn enumerate(n: usize) -> Result<Vec<Frieze>, FriezeError> {
        if n == 0 {
            return Err(FriezeError::TooShort(3));
        }
        polygon::enumerate(n + 3)?
            .iter()
            .map(Frieze::from_triangulation)
            .collect()
    }

    /// Text rendering of `width` entries per row, trivial rows shown as
    /// `*1*`. Row `r` entry `m(a, b)` sits in column `a + b`.
    pub fn render(&self, width: usize) -> String {
        let nn = self.size() as i64;
        let digits = self.max_entry().to_string().len();
        let cw = digits.max(3) + 1;
        let start = 3i64;
        let mut out = String::new();
        for d in 1..nn {
            let trivial = d == 1 || d == nn - 1;
            let mut line = String::new();
            for p in start..start + 2 * width as i64 {
                if (p - d).rem_euclid(2) != 0 {
                    line.push_str(&" ".repeat(cw));
                    continue;
                }
                let a = (p - d) / 2;
                let text = if trivial {
                    "*1*".to_string()
                } else {
                    self.m(a, a + d).to_string()
                };
                let _ = write!(line, "{text:>cw$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn trivial_rows(n: usize) -> Vec<Vec<u64>> {
    let big_n = n + 3;
    let mut rows = vec![vec![0u64; big_n]; big_n + 1];
    rows[1] = vec![1; big_n];
    rows[big_n - 1] = vec![1; big_n];
    rows
}

/// JSON form `{"n": int, "domain": [[a, b, value], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeJson {
    pub n: usize,
    pub domain: Vec<(usize, usize, u64)>,
}

impl Serialize for Frieze {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FriezeJson {
            n: self.n,
            domain: self.domain(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Frieze {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = FriezeJson::deserialize(d)?;
        Frieze::from_domain(j.n, &j.domain).map_err(serde::de::Error::custom)
    }
}

/// One cell per nontrivial row; cells in adjacent rows share a diamond.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LightningBolt {
    cells: Vec<Cell>,
}

/// Direction from the row-`r` cell of a bolt to its row-`r + 1` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoltStep {
    Left,
    Right,
}

impl LightningBolt {
    /// Cell `r` (1-based) must satisfy `b - a = r + 1`; the next cell is
    /// `(a - 1, b)` or `(a, b + 1)`.
    pub fn new(cells: Vec<Cell>) -> Result<Self, FriezeError> {
        if cells.is_empty() {
            return Err(FriezeError::InvalidBolt("a bolt needs at least one row".into()));
        }
        for (r0, &(a, b)) in cells.iter().enumerate() {
            if b - a != r0 as i64 + 2 {
                return Err(FriezeError::InvalidBolt(format!(
                    "cell ({a}, {b}) is not in row {}",
                    r0 + 1
                )));
            }
        }
        for w in cells.windows(2) {
            let ((a, b), next) = (w[0], w[1]);
            if next != (a - 1, b) && next != (a, b + 1) {
                return Err(FriezeError::InvalidBolt(format!(
                    "({a}, {b}) and ({}, {}) do not share a diamond",
                    next.0, next.1
                )));
            }
        }
        Ok(LightningBolt { cells })
    }

    /// The bolt starting at `(a, a + 2)` in row 1 and moving by `steps`.
    pub fn from_steps(a: i64, steps: &[BoltStep]) -> Self {
        let mut cells = vec![(a, a + 2)];
        for s in steps {
            let (a, b) = *cells.last().expect("nonempty");
            cells.push(match s {
                BoltStep::Left => (a - 1, b),
                BoltStep::Right => (a, b + 1),
            });
        }
        LightningBolt { cells }
    }

    /// Every bolt of height `n` whose row-1 cell has `a` in `1..=n + 3`.
    pub fn all(n: usize) -> Vec<LightningBolt> {
        let mut out = Vec::new();
        for a in 1..=(n as i64 + 3) {
            for mask in 0u64..(1 << (n - 1)) {
                let steps: Vec<BoltStep> = (0..n - 1)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            BoltStep::Right
                        } else {
                            BoltStep::Left
                        }
                    })
                    .collect();
                out.push(LightningBolt::from_steps(a, &steps));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn steps(&self) -> Vec<BoltStep> {
        self.cells
            .windows(2)
            .map(|w| {
                if w[1].0 < w[0].0 {
                    BoltStep::Left
                } else {
                    BoltStep::Right
                }
            })
            .collect()
    }

    /// Polygon diagonals of the bolt cells, in row order.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        let big_n = self.n() + 3;
        self.cells.iter().map(|&c| cell_diagonal(big_n, c)).collect()
    }

    /// Type-A quiver: `i + 1 -> i` when row `i + 1` steps left, else
    /// `i -> i + 1`.
    pub fn to_quiver(&self) -> Quiver {
        let arrows: Vec<(usize, usize, u32)> = self
            .steps()
            .iter()
            .enumerate()
            .map(|(i, s)| match s {
                BoltStep::Left => (i + 2, i + 1, 1),
                BoltStep::Right => (i + 1, i + 2, 1),
            })
            .collect();
        Quiver::from_arrows(self.n(), &arrows).expect("path quiver is valid")
    }
}

/// JSON form `{"n": int, "cells": [[a, b], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoltJson {
    pub n: usize,
    pub cells: Vec<Cell>,
}

impl Serialize for LightningBolt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BoltJson {
            n: self.n(),
            cells: self.cells.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LightningBolt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = BoltJson::deserialize(d)?;
        if j.cells.len() != j.n {
            return Err(serde::de::Error::custom(format!(
                "bolt of height {} has {} cells",
                j.n,
                j.cells.len()
            )));
        }
        LightningBolt::new(j.cells).map_err(serde::de::Error::custom)
    }
}

/// Fills in a frieze from a bolt, sweeping right until each row has moved
/// a full period, and returns the value on every polygon diagonal.
///
/// `diamond(left, top, bottom, cell)` computes the right corner of a
/// diamond. Rows 0 and `n + 1` are the constant `one`.
fn propagate<V, F>(
    bolt: &LightningBolt,
    init: Vec<V>,
    one: V,
    diamond: F,
) -> Result<BTreeMap<Diagonal, V>, FriezeError>
where
    V: Clone + PartialEq,
    F: Fn(&V, &V, &V, Cell) -> Result<V, FriezeError>,
{
    let n = bolt.n();
    let big_n = n + 3;
    // cur[r] for r = 0..=n+1; rows 0 and n+1 are trivial
    let mut cur: Vec<Cell> = Vec::with_capacity(n + 2);
    let mut val: Vec<V> = Vec::with_capacity(n + 2);
    let (a1, b1) = bolt.cells[0];
    cur.push((a1 + 1, b1)); // placeholder, never read for trivial rows
    val.push(one.clone());
    for (c, v) in bolt.cells.iter().zip(init) {
        cur.push(*c);
        val.push(v);
    }
    cur.push((0, 0));
    val.push(one.clone());

    let mut out: BTreeMap<Diagonal, V> = BTreeMap::new();
    let mut record = |cell: Cell, v: &V| -> Result<(), FriezeError> {
        let d = cell_diagonal(big_n, cell);
        match out.get(&d) {
            Some(prev) if prev != v => Err(FriezeError::MalformedFrieze(format!(
                "bolt propagation is not periodic at m({}, {})",
                cell.0, cell.1
            ))),
            Some(_) => Ok(()),
            None => {
                out.insert(d, v.clone());
                Ok(())
            }
        }
    };
    for r in 1..=n {
        record(cur[r], &val[r])?;
    }
    let mut shifts = vec![0usize; n + 2];
    loop {
        // the row furthest left can always move: its neighbours sit one
        // position to its right
        let r = (1..=n)
            .filter(|&r| shifts[r] <= big_n)
            .min_by_key(|&r| (cur[r].0 + cur[r].1, r));
        let Some(r) = r else { break };
        let (a, b) = cur[r];
        let top = &val[r - 1];
        let bottom = &val[r + 1];
        if r > 1 {
            debug_assert_eq!(cur[r - 1], (a + 1, b));
        }
        if r < n {
            debug_assert_eq!(cur[r + 1], (a, b + 1));
        }
        let next = diamond(&val[r], top, bottom, (a + 1, b + 1))?;
        cur[r] = (a + 1, b + 1);
        val[r] = next;
        record(cur[r], &val[r])?;
        shifts[r] += 1;
    }
    if out.len() != big_n * n / 2 {
        return Err(FriezeError::MalformedFrieze(
            "bolt propagation left cells unfilled".into(),
        ));
    }
    Ok(out)
}

/// Frieze with Laurent polynomial entries in `x_1, ..., x_n`, where `x_r`
/// sits in row `r` of a lightning bolt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicFrieze {
    n: usize,
    cells: BTreeMap<Diagonal, LaurentPoly>,
}

impl SymbolicFrieze {
    pub fn from_bolt(bolt: &LightningBolt) -> Result<SymbolicFrieze, FriezeError> {
        let n = bolt.n();
        let init: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::variable(n, i)).collect();
        let one = LaurentPoly::one(n);
        let cells = propagate(bolt, init, one.clone(), |left, top, bottom, (a, b)| {
            let num = &(top * bottom) + &one;
            num.div_exact(left)
                .map_err(|_| FriezeError::LaurentViolation { a, b })
        })?;
        Ok(SymbolicFrieze { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry on a polygon diagonal.
    pub fn get(&self, d: Diagonal) -> Option<&LaurentPoly> {
        let d = if d.0 <= d.1 { d } else { (d.1, d.0) };
        self.cells.get(&d)
    }

    /// Entry at any nontrivial cell.
    pub fn cell(&self, c: Cell) -> Option<&LaurentPoly> {
        let d = c.1 - c.0;
        if d < 2 || d > self.n as i64 + 1 {
            return None;
        }
        self.cells.get(&cell_diagonal(self.n + 3, c))
    }

    /// Entries on the polygon diagonals, sorted by diagonal.
    pub fn cells(&self) -> impl Iterator<Item = (&Diagonal, &LaurentPoly)> {
        self.cells.iter()
    }

    /// The integer frieze obtained by setting every `x_r` to 1.
    pub fn at_ones(&self) -> Result<Frieze, FriezeError> {
        let domain: Vec<(usize, usize, u64)> = self
            .cells
            .iter()
            .map(|(&(a, b), p)| {
                let v = p.eval_at_ones();
                u64::try_from(v).map(|v| (a, b, v)).map_err(|_| FriezeError::NonPositive {
                    a: a as i64,
                    b: b as i64,
                })
            })
            .collect::<Result<_, _>>()?;
        Frieze::from_domain(self.n, &domain)
    }
}
