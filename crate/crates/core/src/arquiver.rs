//! The mesh category of `ZA_n` and the type `A_n` cluster category.
//!
//! Vertices `(i, m)` of `ZA_n` carry arrows `(i, m) -> (i + 1, m)` and
//! `(i + 1, m) -> (i, m + 1)`; the horizontal position is `t = 2m + i`.
//! The vertex `(i, m)` sits at the frieze cell `(m - 1, m + i)`, so its
//! orbit in the cluster category is the polygon diagonal of that cell.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frieze::{cell_diagonal, Frieze, FriezeError, LightningBolt, SymbolicFrieze};
use crate::laurent::LaurentPoly;
use crate::polygon::{self, rotate_diagonal, Diagonal, PolygonError, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArquiverError {
    #[error("vertex ({i}, {m}) has i outside 1..={n}")]
    VertexOutOfRange { i: usize, m: i64, n: usize },
    #[error("vertex ({i}, {m}) lies outside the window")]
    WindowTooSmall { i: usize, m: i64 },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZQVertex {
    pub i: usize,
    pub m: i64,
}

impl ZQVertex {
    pub fn new(n: usize, i: usize, m: i64) -> Result<Self, ArquiverError> {
        if i == 0 || i > n {
            return Err(ArquiverError::VertexOutOfRange { i, m, n });
        }
        Ok(ZQVertex { i, m })
    }

    /// Horizontal position `2m + i`.
    pub fn position(&self) -> i64 {
        2 * self.m + self.i as i64
    }

    /// `tau(i, m) = (i, m - 1)`.
    pub fn tau(&self) -> ZQVertex {
        ZQVertex {
            i: self.i,
            m: self.m - 1,
        }
    }

    pub fn tau_inverse(&self) -> ZQVertex {
        ZQVertex {
            i: self.i,
            m: self.m + 1,
        }
    }

    /// Suspension `(i, m) -> (n + 1 - i, m + i)`.
    pub fn sigma(&self, n: usize) -> ZQVertex {
        ZQVertex {
            i: n + 1 - self.i,
            m: self.m + self.i as i64,
        }
    }

    /// `Sigma o tau^-1`, the glide `(i, m) -> (n + 1 - i, m + i + 1)`; it
    /// generates the orbits that become isomorphic in the cluster category.
    pub fn glide(&self, n: usize) -> ZQVertex {
        self.tau_inverse().sigma(n)
    }

    pub fn glide_inverse(&self, n: usize) -> ZQVertex {
        ZQVertex {
            i: n + 1 - self.i,
            m: self.m - (n + 1 - self.i) as i64 - 1,
        }
    }

    /// Frieze cell `(m - 1, m + i)`.
    pub fn cell(&self) -> (i64, i64) {
        (self.m - 1, self.m + self.i as i64)
    }

    /// Arrows ending here, as their tails.
    fn predecessors(&self, n: usize) -> Vec<ZQVertex> {
        let mut out = Vec::with_capacity(2);
        if self.i > 1 {
            out.push(ZQVertex {
                i: self.i - 1,
                m: self.m,
            });
        }
        if self.i < n {
            out.push(ZQVertex {
                i: self.i + 1,
                m: self.m - 1,
            });
        }
        out
    }

    /// Arrows starting here, as their heads.
    fn successors(&self, n: usize) -> Vec<ZQVertex> {
        let mut out = Vec::with_capacity(2);
        if self.i < n {
            out.push(ZQVertex {
                i: self.i + 1,
                m: self.m,
            });
        }
        if self.i > 1 {
            out.push(ZQVertex {
                i: self.i - 1,
                m: self.m + 1,
            });
        }
        out
    }
}

/// The diagonal representing the cluster-category orbit of `v`.
pub fn orbit_diagonal(n: usize, v: ZQVertex) -> Diagonal {
    cell_diagonal(n + 3, v.cell())
}

/// The vertex `(b - a - 1, a + 1)` lifting the diagonal `(a, b)`.
pub fn lift(n: usize, d: Diagonal) -> Result<ZQVertex, ArquiverError> {
    let (a, b) = polygon::normalize_diagonal(n + 3, d)?;
    ZQVertex::new(n, b - a - 1, a as i64 + 1)
}

/// `tau` on diagonals: rotation by `-1`.
pub fn tau_diagonal(n: usize, d: Diagonal) -> Diagonal {
    rotate_diagonal(n + 3, d, -1)
}

/// Slices `m_min..=m_max` of `ZA_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshWindow {
    pub n: usize,
    pub m_min: i64,
    pub m_max: i64,
}

impl MeshWindow {
    pub fn new(n: usize, m_min: i64, m_max: i64) -> Result<Self, ArquiverError> {
        if n == 0 {
            return Err(ArquiverError::ZeroRank);
        }
        Ok(MeshWindow { n, m_min, m_max })
    }

    pub fn contains(&self, v: ZQVertex) -> bool {
        (1..=self.n).contains(&v.i) && (self.m_min..=self.m_max).contains(&v.m)
    }

    /// Vertices sorted by position.
    pub fn vertices(&self) -> Vec<ZQVertex> {
        let mut out: Vec<ZQVertex> = (self.m_min..=self.m_max)
            .flat_map(|m| (1..=self.n).map(move |i| ZQVertex { i, m }))
            .collect();
        out.sort_by_key(|v| (v.position(), v.i));
        out
    }

    fn check(&self, v: ZQVertex) -> Result<(), ArquiverError> {
        if !(1..=self.n).contains(&v.i) {
            return Err(ArquiverError::VertexOutOfRange {
                i: v.i,
                m: v.m,
                n: self.n,
            });
        }
        if !self.contains(v) {
            return Err(ArquiverError::WindowTooSmall { i: v.i, m: v.m });
        }
        Ok(())
    }
}

type Matrix = Vec<Vec<BigRational>>;

/// Basis of `{x : a x = 0}` for an `rows x cols` matrix.
fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

fn rank(a: &Matrix, cols: usize) -> usize {
    cols - nullspace(a, cols).len()
}

/// `Hom(x, -)` on the mesh category, for every vertex of the window.
///
/// `Hom(x, y)` is spanned by paths ending in an arrow `z -> y`, modulo the
/// mesh relation at `tau y` composed with paths `x -> tau y`, so it is the
/// cokernel of `Hom(x, tau y) -> (+)_z Hom(x, z)`. Each space is stored with
/// a basis together with the matrices of composition with arrows.
pub fn hom_dims_from(w: &MeshWindow, x: ZQVertex) -> Result<BTreeMap<ZQVertex, usize>, ArquiverError> {
    w.check(x)?;
    let n = w.n;
    let mut dim: HashMap<ZQVertex, usize> = HashMap::new();
    // arrow_map[(z, y)] : Hom(x, z) -> Hom(x, y), as dim(y) rows
    let mut arrow_map: HashMap<(ZQVertex, ZQVertex), Matrix> = HashMap::new();
    dim.insert(x, 1);
    let get_dim = |dim: &HashMap<ZQVertex, usize>, v: &ZQVertex| dim.get(v).copied().unwrap_or(0);

    for y in w.vertices() {
        if y.position() <= x.position() || y.m < x.m {
            continue;
        }
        let preds: Vec<ZQVertex> = y
            .predecessors(n)
            .into_iter()
            .filter(|z| get_dim(&dim, z) > 0)
            .collect();
        let offsets: Vec<usize> = preds
            .iter()
            .scan(0, |acc, z| {
                let o = *acc;
                *acc += get_dim(&dim, z);
                Some(o)
            })
            .collect();
        let e: usize = preds.iter().map(|z| get_dim(&dim, z)).sum();
        if e == 0 {
            continue;
        }
        // relation image: columns indexed by a basis of Hom(x, tau y)
        let ty = y.tau();
        let k = get_dim(&dim, &ty);
        let mut rel: Matrix = vec![vec![BigRational::zero(); k]; e];
        for (z, &off) in preds.iter().zip(&offsets) {
            // the path through (i - 1, m) counts +1, through (i + 1, m - 1) -1
            let sign = if z.i < y.i {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            if let Some(mat) = arrow_map.get(&(ty, *z)) {
                for (r, row) in mat.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        rel[off + r][c] = &sign * v;
                    }
                }
            }
        }
        // projection onto the cokernel: rows span the left nullspace of rel
        let rel_t: Matrix = (0..k)
            .map(|c| (0..e).map(|r| rel[r][c].clone()).collect())
            .collect();
        let proj = nullspace(&rel_t, e);
        let d = proj.len();
        if d == 0 {
            continue;
        }
        dim.insert(y, d);
        for (z, &off) in preds.iter().zip(&offsets) {
            let dz = get_dim(&dim, z);
            let block: Matrix = proj.iter().map(|row| row[off..off + dz].to_vec()).collect();
            arrow_map.insert((*z, y), block);
        }
    }
    Ok(w.vertices()
        .into_iter()
        .map(|v| (v, get_dim(&dim, &v)))
        .collect())
}

/// `dim Hom(x, y)` in the mesh category restricted to the window.
pub fn hom_dim_mesh(w: &MeshWindow, x: ZQVertex, y: ZQVertex) -> Result<usize, ArquiverError> {
    w.check(y)?;
    Ok(hom_dims_from(w, x)?[&y])
}

/// `dim Hom(x, y)` computed literally: every path from `x` to `y` is a basis
/// vector, every mesh relation sandwiched between paths is a relation, and
/// the answer is the number of paths minus the rank of the relations.
/// Exponential in the distance; meant as a cross-check on small windows.
pub fn hom_dim_paths(w: &MeshWindow, x: ZQVertex, y: ZQVertex) -> Result<usize, ArquiverError> {
    w.check(x)?;
    w.check(y)?;
    let n = w.n;
    fn paths(n: usize, from: ZQVertex, to: ZQVertex) -> Vec<Vec<ZQVertex>> {
        if from == to {
            return vec![vec![from]];
        }
        if from.position() >= to.position() || from.m > to.m {
            return Vec::new();
        }
        let mut out = Vec::new();
        for s in from.successors(n) {
            for mut p in paths(n, s, to) {
                p.insert(0, from);
                out.push(p);
            }
        }
        out
    }
    let basis = paths(n, x, y);
    if basis.is_empty() {
        return Ok(0);
    }
    let index: HashMap<&Vec<ZQVertex>, usize> =
        basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut relations: Matrix = Vec::new();
    for v in MeshWindow::vertices(w) {
        let end = v.tau_inverse();
        if !w.contains(end) {
            continue;
        }
        let heads = paths(n, x, v);
        let tails = paths(n, end, y);
        if heads.is_empty() || tails.is_empty() {
            continue;
        }
        let middles: Vec<(ZQVertex, BigRational)> = v
            .successors(n)
            .into_iter()
            .map(|mid| {
                let s = if mid.i < v.i {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                (mid, s)
            })
            .collect();
        for h in &heads {
            for t in &tails {
                let mut row = vec![BigRational::zero(); basis.len()];
                for (mid, s) in &middles {
                    let mut p = h.clone();
                    p.push(*mid);
                    p.extend(t.iter().copied());
                    let idx = index[&p];
                    row[idx] += s;
                }
                relations.push(row);
            }
        }
    }
    Ok(basis.len() - rank(&relations, basis.len()))
}

/// Closed form: `Hom(x, y)` is one-dimensional exactly on the rectangle
/// spanned from `x`, and zero elsewhere.
pub fn hom_dim_rectangle(n: usize, x: ZQVertex, y: ZQVertex) -> usize {
    let (i, m) = (x.i as i64, x.m);
    let (j, mp) = (y.i as i64, y.m);
    let n = n as i64;
    let inside = m <= mp && mp <= m + i - 1 && m + i <= mp + j && mp + j <= m + n;
    usize::from(inside)
}

/// `dim Hom(x, y)` in the cluster category, summing over the glide orbit.
pub fn hom_cluster(n: usize, x: Diagonal, y: Diagonal) -> Result<usize, ArquiverError> {
    let lx = lift(n, x)?;
    let ly = lift(n, y)?;
    let mut total = 0;
    let mut up = ly;
    let mut down = ly.glide_inverse(n);
    for _ in 0..4 {
        total += hom_dim_rectangle(n, lx, up) + hom_dim_rectangle(n, lx, down);
        up = up.glide(n);
        down = down.glide_inverse(n);
    }
    Ok(total)
}

/// `dim Hom(x, Sigma y)` in the cluster category.
pub fn ext_dim(n: usize, x: Diagonal, y: Diagonal) -> Result<usize, ArquiverError> {
    let sy = orbit_diagonal(n, lift(n, y)?.sigma(n));
    hom_cluster(n, x, sy)
}

/// `Hom(x, Sigma y) = 0`.
pub fn compatible(n: usize, x: Diagonal, y: Diagonal) -> Result<bool, ArquiverError> {
    Ok(ext_dim(n, x, y)? == 0)
}

/// Indecomposable objects of the cluster category, as diagonals.
pub fn indecomposables(n: usize) -> Vec<Diagonal> {
    polygon::all_diagonals(n + 3)
}

/// Cluster-tilting objects, as triangulations.
pub fn cluster_tilting_objects(n: usize) -> Result<Vec<Triangulation>, ArquiverError> {
    if n == 0 {
        return Err(ArquiverError::ZeroRank);
    }
    Ok(polygon::enumerate(n + 3)?)
}

/// Exchanges the summand `x` for the other completion.
pub fn mutate_ct(t: &Triangulation, x: Diagonal) -> Result<Triangulation, ArquiverError> {
    Ok(t.flip(x)?)
}

/// The frieze taking the value 1 on every summand of `t`.
pub fn frieze_from_ct(t: &Triangulation) -> Result<Frieze, ArquiverError> {
    Ok(Frieze::from_triangulation(t)?)
}

/// `phi_x` relative to the cluster-tilting object read off `bolt`.
pub fn cluster_variable_of(x: Diagonal, bolt: &LightningBolt) -> Result<LaurentPoly, ArquiverError> {
    let n = bolt.n();
    let d = polygon::normalize_diagonal(n + 3, x)?;
    let s = SymbolicFrieze::from_bolt(bolt)?;
    Ok(s.get(d).expect("every diagonal has an entry").clone())
}

/// `phi` for every indecomposable, keyed by diagonal.
pub fn cluster_variables_of(bolt: &LightningBolt) -> Result<BTreeMap<Diagonal, LaurentPoly>, ArquiverError> {
    let s = SymbolicFrieze::from_bolt(bolt)?;
    Ok(s.cells().map(|(d, p)| (*d, p.clone())).collect())
}

/// A mesh `A -> B, C -> D` with `D = tau^-1 A`; `B` or `C` is absent at the
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshDiamond {
    pub a: Diagonal,
    pub b: Option<Diagonal>,
    pub c: Option<Diagonal>,
    pub d: Diagonal,
}

/// One mesh per vertex `(i, m)`, `m = 1..=n + 3`.
pub fn mesh_diamonds(n: usize) -> Vec<MeshDiamond> {
    let mut out = Vec::new();
    for m in 1..=(n as i64 + 3) {
        for i in 1..=n {
            let v = ZQVertex { i, m };
            let w = v.tau_inverse();
            let upper = (i > 1).then(|| ZQVertex { i: i - 1, m: m + 1 });
            let lower = (i < n).then(|| ZQVertex { i: i + 1, m });
            out.push(MeshDiamond {
                a: orbit_diagonal(n, v),
                b: upper.map(|u| orbit_diagonal(n, u)),
                c: lower.map(|u| orbit_diagonal(n, u)),
                d: orbit_diagonal(n, w),
            });
        }
    }
    out
}
