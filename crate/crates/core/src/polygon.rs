//! Triangulations of a labeled convex polygon.
//!
//! Vertices are `1..=N`. A diagonal is stored as `(a, b)` with `a < b`; sides
//! `(i, i + 1)` and `(1, N)` are not diagonals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Diagonal = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("({a}, {b}) is not a diagonal of the {n}-gon")]
    InvalidDiagonal { a: usize, b: usize, n: usize },
    #[error("diagonals ({}, {}) and ({}, {}) cross", .0.0, .0.1, .1.0, .1.1)]
    Crossing(Diagonal, Diagonal),
    #[error("duplicate diagonal ({}, {})", .0.0, .0.1)]
    Duplicate(Diagonal),
    #[error("{got} diagonals, a triangulation of the {n}-gon has {expected}")]
    WrongCount { n: usize, expected: usize, got: usize },
    #[error("diagonal ({}, {}) is not in the triangulation", .0.0, .0.1)]
    NotInTriangulation(Diagonal),
}

/// Orders the endpoints and checks that `d` is a diagonal of the `n`-gon.
pub fn normalize_diagonal(n: usize, d: Diagonal) -> Result<Diagonal, PolygonError> {
    let (a, b) = if d.0 <= d.1 { d } else { (d.1, d.0) };
    if a == 0 || b > n || b - a < 2 || (a == 1 && b == n) {
        return Err(PolygonError::InvalidDiagonal { a: d.0, b: d.1, n });
    }
    Ok((a, b))
}

/// All diagonals of the `n`-gon, sorted.
pub fn all_diagonals(n: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in (a + 2)..=n {
            if !(a == 1 && b == n) {
                out.push((a, b));
            }
        }
    }
    out
}

/// True iff the normalized diagonals cross in the interior.
pub fn crossing(d1: Diagonal, d2: Diagonal) -> bool {
    let ((a, b), (c, d)) = (d1, d2);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Diagonals are additionally checked against the polygon size.
pub fn crossing_checked(n: usize, d1: Diagonal, d2: Diagonal) -> Result<bool, PolygonError> {
    Ok(crossing(normalize_diagonal(n, d1)?, normalize_diagonal(n, d2)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    /// Validates a maximal non-crossing set of diagonals.
    pub fn new(n: usize, diagonals: &[Diagonal]) -> Result<Self, PolygonError> {
        if n < 3 {
            return Err(PolygonError::TooSmall(n));
        }
        let mut ds = Vec::with_capacity(diagonals.len());
        for &d in diagonals {
            ds.push(normalize_diagonal(n, d)?);
        }
        ds.sort_unstable();
        if let Some(w) = ds.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolygonError::Duplicate(w[0]));
        }
        for (i, &d1) in ds.iter().enumerate() {
            for &d2 in &ds[i + 1..] {
                if crossing(d1, d2) {
                    return Err(PolygonError::Crossing(d1, d2));
                }
            }
        }
        if ds.len() != n - 3 {
            return Err(PolygonError::WrongCount {
                n,
                expected: n - 3,
                got: ds.len(),
            });
        }
        Ok(Triangulation { n, diagonals: ds })
    }

    /// Number of polygon vertices.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        let d = if d.0 <= d.1 { d } else { (d.1, d.0) };
        self.diagonals.binary_search(&d).is_ok()
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b - a == 1 || (a == 1 && b == self.n) || self.diagonals.binary_search(&(a, b)).is_ok()
    }

    /// `1 +` the number of diagonals at each vertex.
    pub fn quiddity(&self) -> Vec<u64> {
        let mut q = vec![1u64; self.n];
        for &(a, b) in &self.diagonals {
            q[a - 1] += 1;
            q[b - 1] += 1;
        }
        q
    }

    /// The two triangles on either side of `d`, as their apexes.
    pub fn apexes(&self, d: Diagonal) -> Result<(usize, usize), PolygonError> {
        let d = normalize_diagonal(self.n, d)?;
        if !self.contains(d) {
            return Err(PolygonError::NotInTriangulation(d));
        }
        let (a, b) = d;
        let inside = ((a + 1)..b).find(|&c| self.is_edge(a, c) && self.is_edge(b, c));
        let outside = (1..=self.n)
            .filter(|&c| c < a || c > b)
            .find(|&c| self.is_edge(a, c) && self.is_edge(b, c));
        match (inside, outside) {
            (Some(c), Some(e)) => Ok((c, e)),
            _ => unreachable!("validated triangulation has two triangles at each diagonal"),
        }
    }

    /// Replaces `d` by the other diagonal of its quadrilateral.
    pub fn flip(&self, d: Diagonal) -> Result<Triangulation, PolygonError> {
        let d = normalize_diagonal(self.n, d)?;
        let (c, e) = self.apexes(d)?;
        let fresh = if c < e { (c, e) } else { (e, c) };
        let mut diagonals: Vec<Diagonal> =
            self.diagonals.iter().copied().filter(|&x| x != d).collect();
        diagonals.push(fresh);
        diagonals.sort_unstable();
        Ok(Triangulation {
            n: self.n,
            diagonals,
        })
    }

    /// The diagonal that replaces `d` under [`Triangulation::flip`].
    pub fn flipped_diagonal(&self, d: Diagonal) -> Result<Diagonal, PolygonError> {
        let (c, e) = self.apexes(d)?;
        Ok(if c < e { (c, e) } else { (e, c) })
    }

    /// Rotation `i -> i + shift` (mod `N`) applied to every diagonal.
    pub fn rotate(&self, shift: i64) -> Triangulation {
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|&(a, b)| rotate_diagonal(self.n, (a, b), shift))
            .collect();
        diagonals.sort_unstable();
        Triangulation {
            n: self.n,
            diagonals,
        }
    }
}

/// Rotates both endpoints by `shift` modulo `n`, keeping labels in `1..=n`.
pub fn rotate_diagonal(n: usize, d: Diagonal, shift: i64) -> Diagonal {
    let r = |x: usize| ((x as i64 - 1 + shift).rem_euclid(n as i64) + 1) as usize;
    let (a, b) = (r(d.0), r(d.1));
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All triangulations of the labeled `n`-gon, sorted.
///
/// Recurses on the triangle `(1, 2, c)` over the side `(1, 2)`, so every
/// triangulation is produced exactly once.
pub fn enumerate(n: usize) -> Result<Vec<Triangulation>, PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooSmall(n));
    }
    let verts: Vec<usize> = (1..=n).collect();
    let mut out: Vec<Triangulation> = triangulate(&verts)
        .into_iter()
        .map(|mut diagonals| {
            diagonals.sort_unstable();
            Triangulation { n, diagonals }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Triangulations of the convex polygon on `verts` (in cyclic order), as
/// lists of chords not on its boundary.
fn triangulate(verts: &[usize]) -> Vec<Vec<Diagonal>> {
    let k = verts.len();
    if k < 4 {
        return vec![Vec::new()];
    }
    let (p, q) = (verts[0], verts[1]);
    let mut out = Vec::new();
    for ci in 2..k {
        let c = verts[ci];
        // sub-polygons (q .. c) and (c .. end, p)
        let right: Vec<usize> = verts[1..=ci].to_vec();
        let mut left: Vec<usize> = verts[ci..].to_vec();
        left.push(p);
        let mut chords = Vec::new();
        if ci != 2 {
            chords.push(ordered(q, c));
        }
        if ci != k - 1 {
            chords.push(ordered(p, c));
        }
        for r in triangulate(&right) {
            for l in triangulate(&left) {
                let mut ds = chords.clone();
                ds.extend(r.iter().copied());
                ds.extend(l.iter().copied());
                out.push(ds);
            }
        }
    }
    out
}

fn ordered(a: usize, b: usize) -> Diagonal {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// JSON form `{"N": int, "diagonals": [[a, b], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub diagonals: Vec<Diagonal>,
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TriangulationJson {
            n: self.n,
            diagonals: self.diagonals.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TriangulationJson::deserialize(d)?;
        Triangulation::new(j.n, &j.diagonals).map_err(serde::de::Error::custom)
    }
}

/// Connected components of the flip graph on `enumerate(n)`.
pub fn flip_graph_components(n: usize) -> Result<usize, PolygonError> {
    let all = enumerate(n)?;
    let mut unseen: BTreeSet<Triangulation> = all.into_iter().collect();
    let mut components = 0;
    while let Some(start) = unseen.pop_first() {
        components += 1;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &d in t.diagonals() {
                let u = t.flip(d)?;
                if unseen.remove(&u) {
                    stack.push(u);
                }
            }
        }
    }
    Ok(components)
}
