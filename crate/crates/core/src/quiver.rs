//! Cluster quivers stored as skew-symmetric integer matrices.
//!
//! Vertices are labeled `1..=n` throughout the public API. Entry `b(i, j) > 0`
//! records `b(i, j)` arrows `i -> j`; skew-symmetry rules out loops and
//! 2-cycles.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default vertex limit for [`Quiver::canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("arrow {i} -> {j} is a loop")]
    Loop { i: usize, j: usize },
    #[error("arrows {i} -> {j} and {j} -> {i} form a 2-cycle")]
    TwoCycle { i: usize, j: usize },
    #[error("{n} vertices exceeds the canonical-form limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid rank {rank} for type {kind}")]
    InvalidRank { kind: DynkinKind, rank: usize },
    #[error("orientation has {got} entries, the diagram has {expected} edges")]
    OrientationLength { expected: usize, got: usize },
    #[error("invalid permutation")]
    BadPermutation,
}

/// A loop-free, 2-cycle-free quiver on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiver {
    n: usize,
    b: Vec<i64>,
}

impl Quiver {
    /// The quiver with `n` vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        Quiver {
            n,
            b: vec![0; n * n],
        }
    }

    /// Builds a quiver from its signed adjacency matrix.
    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self, QuiverError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuiverError::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -rows[j][i] {
                    return Err(QuiverError::NotSkewSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Quiver {
            n,
            b: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a quiver from `(tail, head, multiplicity)` triples.
    ///
    /// Repeated triples accumulate. Loops and opposite arrows are rejected
    /// rather than cancelled.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u32)]) -> Result<Self, QuiverError> {
        let mut q = Quiver::empty(n);
        for &(i, j, m) in arrows {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(QuiverError::Loop { i, j });
            }
            if m == 0 {
                continue;
            }
            if q.get(i - 1, j - 1) < 0 {
                return Err(QuiverError::TwoCycle { i, j });
            }
            let v = q.get(i - 1, j - 1) + m as i64;
            q.set(i - 1, j - 1, v);
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.b[i * self.n + j] = v;
        self.b[j * self.n + i] = -v;
    }

    /// Signed arrow count `b(i, j)` for 1-based vertices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.get(i - 1, j - 1)
    }

    /// Number of arrows `i -> j` (1-based).
    pub fn arrows_between(&self, i: usize, j: usize) -> u32 {
        self.entry(i, j).max(0) as u32
    }

    /// The signed adjacency matrix, row by row.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.b.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    /// All arrows as sorted `(tail, head, multiplicity)` triples.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if v > 0 {
                    out.push((i + 1, j + 1, v as u32));
                }
            }
        }
        out
    }

    /// Largest arrow multiplicity between any pair of vertices.
    pub fn max_multiplicity(&self) -> u64 {
        self.b.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    fn check_vertex(&self, k: usize) -> Result<(), QuiverError> {
        if k == 0 || k > self.n {
            Err(QuiverError::VertexOutOfRange { vertex: k, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Mutation at vertex `k`, by the three-step procedure: compose each path
    /// `i -> k -> j` into an arrow `i -> j`, reverse every arrow at `k`, then
    /// cancel 2-cycles.
    pub fn mutate(&self, k: usize) -> Result<Quiver, QuiverError> {
        self.check_vertex(k)?;
        let n = self.n;
        let k = k - 1;
        // arrows[i][j] = number of arrows i -> j
        let mut arrows: Vec<u64> = self.b.iter().map(|&v| v.max(0) as u64).collect();

        // (1) shortcut each length-2 path through k
        for i in 0..n {
            let ik = arrows[i * n + k];
            if ik == 0 {
                continue;
            }
            for j in 0..n {
                arrows[i * n + j] += ik * arrows[k * n + j];
            }
        }
        // (2) reverse arrows incident with k
        for i in 0..n {
            arrows.swap(i * n + k, k * n + i);
        }
        // (3) remove a maximal set of 2-cycles
        let mut out = Quiver::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                let forward = arrows[i * n + j] as i64;
                let backward = arrows[j * n + i] as i64;
                out.set(i, j, forward - backward);
            }
        }
        Ok(out)
    }

    /// Applies a sequence of mutations in order.
    pub fn mutate_path(&self, path: &[usize]) -> Result<Quiver, QuiverError> {
        path.iter().try_fold(self.clone(), |q, &k| q.mutate(k))
    }

    /// Relabels vertex `i` as `perm[i - 1]` (both 1-based).
    pub fn relabel(&self, perm: &[usize]) -> Result<Quiver, QuiverError> {
        check_permutation(perm, self.n)?;
        let mut out = Quiver::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.b[(perm[i] - 1) * self.n + (perm[j] - 1)] = self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Vertices with no outgoing arrows, and vertices with no incoming arrows.
    pub fn sinks_sources(&self) -> (Vec<usize>, Vec<usize>) {
        let mut sinks = Vec::new();
        let mut sources = Vec::new();
        for i in 0..self.n {
            let row = &self.b[i * self.n..(i + 1) * self.n];
            if row.iter().all(|&v| v <= 0) {
                sinks.push(i + 1);
            }
            if row.iter().all(|&v| v >= 0) {
                sources.push(i + 1);
            }
        }
        (sinks, sources)
    }

    /// True when the quiver has no oriented cycles.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n;
        let mut indeg: Vec<usize> = (0..n)
            .map(|j| (0..n).filter(|&i| self.get(i, j) > 0).count())
            .collect();
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in 0..n {
                if self.get(i, j) > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == n
    }

    /// Connected components of the underlying graph, each sorted, 1-based.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![];
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v + 1);
                for w in 0..n {
                    if self.get(v, w) != 0 && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Canonical representative under vertex relabeling, with the default
    /// size limit.
    pub fn canonical_form(&self) -> Result<(Quiver, Vec<usize>), QuiverError> {
        self.canonical_form_with_limit(CANONICAL_LIMIT)
    }

    /// Returns a relabeling that depends only on the isomorphism class,
    /// together with the witnessing permutation in the format accepted by
    /// [`Quiver::relabel`].
    ///
    /// Vertices are first split into classes by iterated degree refinement
    /// and the classes are laid out in a label-independent order. Among the
    /// orderings compatible with that layout, the one whose strict lower
    /// triangle (row by row) is lexicographically smallest wins.
    pub fn canonical_form_with_limit(
        &self,
        limit: usize,
    ) -> Result<(Quiver, Vec<usize>), QuiverError> {
        if self.n > limit {
            return Err(QuiverError::TooLarge { n: self.n, limit });
        }
        let colors = self.refined_colors();
        let mut search = CanonSearch::new(self, &colors);
        search.run();
        let order = search.best_order.expect("at least one ordering exists");
        let mut perm = vec![0; self.n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos + 1;
        }
        let canon = self.relabel(&perm)?;
        Ok((canon, perm))
    }

    fn refined_colors(&self) -> Vec<usize> {
        let n = self.n;
        let mut colors = vec![0usize; n];
        let mut count = 1;
        loop {
            let sigs: Vec<(usize, Vec<(i64, usize)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(i64, usize)> = (0..n)
                        .filter(|&w| self.get(v, w) != 0)
                        .map(|w| (-self.get(v, w), colors[w]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = sigs
                .iter()
                .map(|s| distinct.binary_search(s).expect("signature present"))
                .collect();
            let new_count = distinct.len();
            colors = next;
            if new_count == count {
                return colors;
            }
            count = new_count;
        }
    }

    /// Renders the arrows as `1->2, 3=>2` (multiplicity shown as `=m=>` when
    /// greater than one).
    pub fn describe(&self) -> String {
        let arrows = self.arrows();
        if arrows.is_empty() {
            return format!("(no arrows, {} vertices)", self.n);
        }
        arrows
            .iter()
            .map(|&(i, j, m)| {
                if m == 1 {
                    format!("{i}->{j}")
                } else {
                    format!("{i}={m}=>{j}")
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver({}; {})", self.n, self.describe())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<(), QuiverError> {
    if perm.len() != n {
        return Err(QuiverError::BadPermutation);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(QuiverError::BadPermutation);
        }
        seen[p - 1] = true;
    }
    Ok(())
}

/// Branch-and-bound over orderings that respect the color classes.
struct CanonSearch<'a> {
    q: &'a Quiver,
    // class_at[pos] = color that position pos must take
    class_at: Vec<usize>,
    colors: &'a [usize],
    best_key: Vec<i64>,
    best_order: Option<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn new(q: &'a Quiver, colors: &'a [usize]) -> Self {
        let mut class_at: Vec<usize> = colors.to_vec();
        class_at.sort_unstable();
        CanonSearch {
            q,
            class_at,
            colors,
            best_key: Vec::new(),
            best_order: None,
        }
    }

    fn run(&mut self) {
        let mut order = Vec::with_capacity(self.q.n);
        let mut used = vec![false; self.q.n];
        let mut key = Vec::with_capacity(self.q.n * self.q.n / 2);
        self.extend(&mut order, &mut used, &mut key);
    }

    /// `key` holds the lower-triangle rows of the positions placed so far.
    fn extend(&mut self, order: &mut Vec<usize>, used: &mut [bool], key: &mut Vec<i64>) {
        let pos = order.len();
        if pos == self.q.n {
            if self.best_order.is_none() || *key < self.best_key {
                self.best_key = key.clone();
                self.best_order = Some(order.clone());
            }
            return;
        }
        let want = self.class_at[pos];
        for v in 0..self.q.n {
            if used[v] || self.colors[v] != want {
                continue;
            }
            let mark = key.len();
            key.extend(order.iter().map(|&u| self.q.get(v, u)));
            let prefix_cmp = if self.best_order.is_some() {
                key[..].cmp(&self.best_key[..key.len()])
            } else {
                std::cmp::Ordering::Less
            };
            if prefix_cmp != std::cmp::Ordering::Greater {
                used[v] = true;
                order.push(v);
                self.extend(order, used, key);
                order.pop();
                used[v] = false;
            }
            key.truncate(mark);
        }
    }
}

/// Simply-laced Dynkin families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinKind {
    A,
    D,
    E,
}

impl fmt::Display for DynkinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DynkinKind::A => "A",
            DynkinKind::D => "D",
            DynkinKind::E => "E",
        })
    }
}

/// A connected Dynkin diagram such as `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinDiagram {
    pub kind: DynkinKind,
    pub rank: usize,
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl std::str::FromStr for DynkinDiagram {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinKind::A,
            Some('D') => DynkinKind::D,
            Some('E') => DynkinKind::E,
            _ => return Err(format!("unknown Dynkin type {s:?}")),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("invalid rank in {s:?}"))?;
        let d = DynkinDiagram { kind, rank };
        dynkin_edges(kind, rank).map_err(|e| e.to_string())?;
        Ok(d)
    }
}

/// Direction of one edge of a Dynkin diagram, relative to the listed
/// `(u, v)` order of [`dynkin_edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Backward,
}

/// Edges of the Dynkin diagram. `A_n` is the path `1 - 2 - ... - n`; `D_n`
/// adds `n` to the path `1 - ... - (n-1)` at vertex 2; `E_n` adds `n` to the
/// path `1 - ... - (n-1)` at vertex 3.
pub fn dynkin_edges(kind: DynkinKind, rank: usize) -> Result<Vec<(usize, usize)>, QuiverError> {
    let valid = match kind {
        DynkinKind::A => rank >= 1,
        DynkinKind::D => rank >= 4,
        DynkinKind::E => (6..=8).contains(&rank),
    };
    if !valid {
        return Err(QuiverError::InvalidRank { kind, rank });
    }
    let mut edges: Vec<(usize, usize)> = match kind {
        DynkinKind::A => (1..rank).map(|i| (i, i + 1)).collect(),
        DynkinKind::D | DynkinKind::E => (1..rank - 1).map(|i| (i, i + 1)).collect(),
    };
    match kind {
        DynkinKind::A => {}
        DynkinKind::D => edges.push((2, rank)),
        DynkinKind::E => edges.push((3, rank)),
    }
    Ok(edges)
}

/// An orientation of a Dynkin diagram; `orientation[e]` applies to the
/// `e`-th edge of [`dynkin_edges`].
pub fn dynkin(
    kind: DynkinKind,
    rank: usize,
    orientation: &[Orientation],
) -> Result<Quiver, QuiverError> {
    let edges = dynkin_edges(kind, rank)?;
    if orientation.len() != edges.len() {
        return Err(QuiverError::OrientationLength {
            expected: edges.len(),
            got: orientation.len(),
        });
    }
    let arrows: Vec<(usize, usize, u32)> = edges
        .iter()
        .zip(orientation)
        .map(|(&(u, v), o)| match o {
            Orientation::Forward => (u, v, 1),
            Orientation::Backward => (v, u, 1),
        })
        .collect();
    Quiver::from_arrows(rank, &arrows)
}

/// The orientation with every edge listed forward, e.g. `1 -> 2 -> ... -> n`.
pub fn dynkin_forward(kind: DynkinKind, rank: usize) -> Result<Quiver, QuiverError> {
    let edges = dynkin_edges(kind, rank)?;
    dynkin(kind, rank, &vec![Orientation::Forward; edges.len()])
}

/// Recognizes an orientation of a (possibly disconnected) Dynkin diagram;
/// components are returned sorted.
pub fn identify_dynkin(q: &Quiver) -> Option<Vec<DynkinDiagram>> {
    if q.max_multiplicity() > 1 || q.n == 0 {
        return None;
    }
    let mut out = Vec::new();
    for comp in q.components() {
        out.push(identify_tree(q, &comp)?);
    }
    out.sort();
    Some(out)
}

fn identify_tree(q: &Quiver, comp: &[usize]) -> Option<DynkinDiagram> {
    let size = comp.len();
    let neighbors = |v: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&w| q.entry(v, w) != 0)
            .collect()
    };
    let edge_count: usize = comp.iter().map(|&v| neighbors(v).len()).sum::<usize>() / 2;
    if edge_count + 1 != size {
        return None;
    }
    let branch: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| neighbors(v).len() >= 3)
        .collect();
    match branch.as_slice() {
        [] => Some(DynkinDiagram {
            kind: DynkinKind::A,
            rank: size,
        }),
        [center] => {
            let nb = neighbors(*center);
            if nb.len() != 3 {
                return None;
            }
            let mut arms: Vec<usize> = nb
                .iter()
                .map(|&start| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (*center, start);
                    loop {
                        let next: Vec<usize> =
                            neighbors(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                len += 1;
                                prev = cur;
                                cur = *w;
                            }
                            _ => return len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some(DynkinDiagram {
                    kind: DynkinKind::D,
                    rank: k + 3,
                }),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(DynkinDiagram {
                    kind: DynkinKind::E,
                    rank: size,
                }),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Outcome of [`is_finite_type`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTypeReport {
    pub finite: bool,
    /// Dynkin components of a member of the mutation class, when finite.
    pub dynkin: Option<Vec<DynkinDiagram>>,
    /// Mutation sequence from the input to `witness`: a Dynkin member when
    /// finite, a quiver with a multiple arrow when not.
    pub path: Vec<usize>,
    pub witness: Option<Quiver>,
    /// Number of isomorphism classes visited.
    pub classes_visited: usize,
}

impl FiniteTypeReport {
    /// Type label such as `A3` or `A1+A2`.
    pub fn type_label(&self) -> Option<String> {
        self.dynkin.as_ref().map(|ds| {
            ds.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("+")
        })
    }
}

/// Decides whether the cluster algebra of `q` has finite type.
///
/// Breadth-first search over the mutation class modulo relabeling. The search
/// stops with `finite = false` at the first quiver having an arrow of
/// multiplicity at least two; otherwise the class closes and is finite type
/// exactly when some member is a Dynkin quiver.
pub fn is_finite_type(q: &Quiver) -> Result<FiniteTypeReport, QuiverError> {
    struct Node {
        quiver: Quiver,
        parent: Option<(usize, usize)>,
    }
    fn path_to(nodes: &[Node], mut idx: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some((p, k)) = nodes[idx].parent {
            path.push(k);
            idx = p;
        }
        path.reverse();
        path
    }

    let mut nodes = vec![Node {
        quiver: q.clone(),
        parent: None,
    }];
    let mut seen: HashMap<Quiver, usize> = HashMap::new();
    seen.insert(q.canonical_form()?.0, 0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(idx) = queue.pop_front() {
        if nodes[idx].quiver.max_multiplicity() >= 2 {
            return Ok(FiniteTypeReport {
                finite: false,
                dynkin: None,
                path: path_to(&nodes, idx),
                witness: Some(nodes[idx].quiver.clone()),
                classes_visited: nodes.len(),
            });
        }
        for k in 1..=q.n {
            let next = nodes[idx].quiver.mutate(k)?;
            let canon = next.canonical_form()?.0;
            if seen.contains_key(&canon) {
                continue;
            }
            let id = nodes.len();
            seen.insert(canon, id);
            let multiple = next.max_multiplicity() >= 2;
            nodes.push(Node {
                quiver: next,
                parent: Some((idx, k)),
            });
            if multiple {
                return Ok(FiniteTypeReport {
                    finite: false,
                    dynkin: None,
                    path: path_to(&nodes, id),
                    witness: Some(nodes[id].quiver.clone()),
                    classes_visited: nodes.len(),
                });
            }
            queue.push_back(id);
        }
    }

    for (idx, node) in nodes.iter().enumerate() {
        if let Some(d) = identify_dynkin(&node.quiver) {
            return Ok(FiniteTypeReport {
                finite: true,
                dynkin: Some(d),
                path: path_to(&nodes, idx),
                witness: Some(node.quiver.clone()),
                classes_visited: nodes.len(),
            });
        }
    }
    Ok(FiniteTypeReport {
        finite: false,
        dynkin: None,
        path: Vec::new(),
        witness: None,
        classes_visited: nodes.len(),
    })
}

/// `{"finite", "type", "path", "witness", "classes_visited"}`; `type` is the
/// label from [`FiniteTypeReport::type_label`] or null.
impl Serialize for FiniteTypeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FiniteTypeReport", 5)?;
        st.serialize_field("finite", &self.finite)?;
        st.serialize_field("type", &self.type_label())?;
        st.serialize_field("path", &self.path)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("classes_visited", &self.classes_visited)?;
        st.end()
    }
}

/// JSON form `{"n": int, "arrows": [[i, j, multiplicity], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub n: usize,
    pub arrows: Vec<(usize, usize, u32)>,
}

impl From<&Quiver> for QuiverJson {
    fn from(q: &Quiver) -> Self {
        QuiverJson {
            n: q.n,
            arrows: q.arrows(),
        }
    }
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = QuiverError;
    fn try_from(j: QuiverJson) -> Result<Self, QuiverError> {
        Quiver::from_arrows(j.n, &j.arrows)
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuiverJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = QuiverJson::deserialize(d)?;
        Quiver::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        let a: Vec<_> = arrows.iter().map(|&(i, j)| (i, j, 1)).collect();
        Quiver::from_arrows(n, &a).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v + 1);
                    go(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Brute-force class representative: minimum lower triangle over all
    /// relabelings.
    fn brute_canonical(q: &Quiver) -> Quiver {
        permutations(q.n())
            .into_iter()
            .map(|p| q.relabel(&p).unwrap())
            .min_by_key(|r| {
                let mut key = Vec::new();
                for i in 1..=r.n() {
                    for j in 1..i {
                        key.push(r.entry(i, j));
                    }
                }
                key
            })
            .unwrap()
    }

    #[test]
    fn paper_four_vertex_mutation() {
        let start = q(4, &[(1, 2), (1, 3), (2, 4), (3, 4), (4, 1)]);
        let got = start.mutate(1).unwrap();
        assert_eq!(got, q(4, &[(2, 1), (3, 1), (1, 4)]));
        assert_eq!(got.mutate(1).unwrap(), start);
    }

    #[test]
    fn source_mutation_reverses() {
        assert_eq!(q(2, &[(1, 2)]).mutate(1).unwrap(), q(2, &[(2, 1)]));
    }

    #[test]
    fn mutate_rejects_bad_vertex() {
        let a2 = q(2, &[(1, 2)]);
        assert_eq!(
            a2.mutate(3),
            Err(QuiverError::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert!(a2.mutate(0).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Quiver::from_arrows(2, &[(1, 1, 1)]),
            Err(QuiverError::Loop { i: 1, j: 1 })
        );
        assert_eq!(
            Quiver::from_arrows(2, &[(1, 2, 1), (2, 1, 1)]),
            Err(QuiverError::TwoCycle { i: 2, j: 1 })
        );
        assert!(Quiver::from_matrix(&[vec![0, 1], vec![1, 0]]).is_err());
        assert!(Quiver::from_matrix(&[vec![0, 1]]).is_err());
        assert_eq!(
            Quiver::from_matrix(&[vec![0, 2], vec![-2, 0]]).unwrap(),
            Quiver::from_arrows(2, &[(1, 2, 2)]).unwrap()
        );
    }

    #[test]
    fn canonical_form_relabels() {
        let (canon, perm) = q(2, &[(2, 1)]).canonical_form().unwrap();
        assert_eq!(canon, q(2, &[(1, 2)]));
        assert_eq!(perm, vec![2, 1]);
        let (canon, perm) = q(2, &[(1, 2)]).canonical_form().unwrap();
        assert_eq!(canon, q(2, &[(1, 2)]));
        assert_eq!(perm, vec![1, 2]);
    }

    #[test]
    fn canonical_form_of_linear_a3_is_minimal() {
        let a3 = q(3, &[(1, 2), (2, 3)]);
        let (canon, perm) = a3.canonical_form().unwrap();
        assert_eq!(canon, brute_canonical(&a3));
        assert_eq!(a3.relabel(&perm).unwrap(), canon);
        assert_eq!(canon, a3);
    }

    #[test]
    fn canonical_form_matches_brute_force_on_small_quivers() {
        // every skew-symmetric matrix on 4 vertices with entries in -1..=1
        let pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (i, j))).collect();
        let mut canon_reps = HashSet::new();
        let mut brute_reps = HashSet::new();
        for code in 0..3usize.pow(pairs.len() as u32) {
            let mut m = vec![vec![0i64; 4]; 4];
            let mut c = code;
            for &(i, j) in &pairs {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                m[i][j] = v;
                m[j][i] = -v;
            }
            let quiver = Quiver::from_matrix(&m).unwrap();
            let (canon, perm) = quiver.canonical_form().unwrap();
            assert_eq!(quiver.relabel(&perm).unwrap(), canon);
            // canonical forms agree across the isomorphism class
            let brute = brute_canonical(&quiver);
            assert_eq!(brute.canonical_form().unwrap().0, canon);
            canon_reps.insert(canon);
            brute_reps.insert(brute);
        }
        assert_eq!(canon_reps.len(), brute_reps.len());
    }

    #[test]
    fn canonical_form_identifies_isomorphic_quivers() {
        // mutate linear A3 at its sink, then relabel
        let a3 = q(3, &[(1, 2), (2, 3)]);
        let mutated = a3.mutate(3).unwrap().relabel(&[3, 1, 2]).unwrap();
        let reversed = q(3, &[(2, 1), (3, 2)]);
        let brute_equal = permutations(3)
            .iter()
            .any(|p| mutated.relabel(p).unwrap() == reversed);
        assert_eq!(
            mutated.canonical_form().unwrap().0 == reversed.canonical_form().unwrap().0,
            brute_equal
        );
    }

    #[test]
    fn canonical_form_limit() {
        assert_eq!(
            Quiver::empty(11).canonical_form(),
            Err(QuiverError::TooLarge { n: 11, limit: 10 })
        );
    }

    #[test]
    fn dynkin_constructors() {
        assert_eq!(
            dynkin(DynkinKind::A, 2, &[Orientation::Forward]).unwrap(),
            q(2, &[(1, 2)])
        );
        use Orientation::*;
        let a6 = dynkin(DynkinKind::A, 6, &[Forward, Backward, Forward, Forward, Forward]).unwrap();
        assert_eq!(a6, q(6, &[(1, 2), (3, 2), (3, 4), (4, 5), (5, 6)]));
        let d4 = dynkin(DynkinKind::D, 4, &[Forward, Backward, Backward]).unwrap();
        assert_eq!(d4, q(4, &[(1, 2), (3, 2), (4, 2)]));
        assert!(matches!(
            dynkin_edges(DynkinKind::D, 3),
            Err(QuiverError::InvalidRank { .. })
        ));
        assert!(dynkin_edges(DynkinKind::E, 9).is_err());
        assert!(dynkin_edges(DynkinKind::A, 0).is_err());
        assert_eq!(
            dynkin(DynkinKind::A, 3, &[Forward]),
            Err(QuiverError::OrientationLength { expected: 2, got: 1 })
        );
    }

    #[test]
    fn dynkin_parse_and_identify() {
        for label in ["A1", "A5", "D4", "D7", "E6", "E7", "E8"] {
            let d: DynkinDiagram = label.parse().unwrap();
            let quiver = dynkin_forward(d.kind, d.rank).unwrap();
            assert_eq!(identify_dynkin(&quiver), Some(vec![d]), "{label}");
            assert_eq!(d.to_string(), label);
        }
        assert!("D3".parse::<DynkinDiagram>().is_err());
        assert!("X2".parse::<DynkinDiagram>().is_err());
        assert_eq!(identify_dynkin(&q(3, &[(1, 2), (2, 3), (3, 1)])), None);
        assert_eq!(
            identify_dynkin(&q(3, &[(1, 2)])).unwrap(),
            vec![
                DynkinDiagram { kind: DynkinKind::A, rank: 1 },
                DynkinDiagram { kind: DynkinKind::A, rank: 2 }
            ]
        );
    }

    #[test]
    fn sinks_and_sources() {
        assert_eq!(q(2, &[(1, 2)]).sinks_sources(), (vec![2], vec![1]));
        assert_eq!(
            q(3, &[(1, 2), (2, 3), (3, 1)]).sinks_sources(),
            (vec![], vec![])
        );
        let a6 = q(6, &[(1, 2), (3, 2), (3, 4), (4, 5), (5, 6)]);
        let (sinks, sources) = a6.sinks_sources();
        assert_eq!(sources, vec![1, 3]);
        assert_eq!(sinks, vec![2, 6]);
    }

    #[test]
    fn finite_type_examples() {
        let a2 = q(2, &[(1, 2)]);
        let r = is_finite_type(&a2).unwrap();
        assert!(r.finite);
        assert_eq!(r.type_label().as_deref(), Some("A2"));

        let kronecker = Quiver::from_arrows(2, &[(1, 2, 2)]).unwrap();
        let r = is_finite_type(&kronecker).unwrap();
        assert!(!r.finite);
        assert!(r.path.is_empty());
        assert_eq!(r.witness.as_ref(), Some(&kronecker));

        let cycle = q(3, &[(1, 2), (2, 3), (3, 1)]);
        let r = is_finite_type(&cycle).unwrap();
        assert!(r.finite);
        assert_eq!(r.type_label().as_deref(), Some("A3"));
        let reached = cycle.mutate_path(&r.path).unwrap();
        assert_eq!(Some(reached), r.witness);
    }

    #[test]
    fn infinite_type_certificate_path_is_valid() {
        // acyclic triangle with a non-oriented cycle: affine type
        let tri = q(3, &[(1, 2), (2, 3), (1, 3)]);
        let r = is_finite_type(&tri).unwrap();
        assert!(!r.finite);
        let w = tri.mutate_path(&r.path).unwrap();
        assert!(w.max_multiplicity() >= 2);
        assert_eq!(Some(w), r.witness);
    }

    #[test]
    fn json_shape() {
        let quiver = Quiver::from_arrows(3, &[(1, 2, 1), (3, 2, 2)]).unwrap();
        let json = serde_json::to_string(&quiver).unwrap();
        assert_eq!(json, r#"{"n":3,"arrows":[[1,2,1],[3,2,2]]}"#);
        let back: Quiver = serde_json::from_str(&json).unwrap();
        assert_eq!(back, quiver);
        assert!(serde_json::from_str::<Quiver>(r#"{"n":2,"arrows":[[1,1,1]]}"#).is_err());
    }

    #[test]
    fn mutation_classes_of_small_a_types() {
        // A3 has 4 quivers up to isomorphism: linear, two-sink/source shapes, 3-cycle
        let a3 = q(3, &[(1, 2), (2, 3)]);
        let mut seen = HashSet::new();
        let mut stack = vec![a3];
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur.canonical_form().unwrap().0) {
                continue;
            }
            for k in 1..=3 {
                stack.push(cur.mutate(k).unwrap());
            }
        }
        assert_eq!(seen.len(), 4);
    }
}
