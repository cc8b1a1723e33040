//! Exchange graphs: seeds reachable from the initial seed, up to relabeling.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::quiver::{is_finite_type, Quiver, QuiverError};
use crate::seed::{seed_isomorphism, Seed, SeedError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("exchange graph exceeds {budget} seeds")]
    BudgetExceeded {
        budget: usize,
        partial: Box<ExchangeGraph>,
    },
    #[error("quiver is not of finite type")]
    NotFiniteType,
}

/// Mutating node `from` at vertex `k` gives node `to`, where the new
/// variable sits at vertex `k_to` of the stored representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExchangeEdge {
    pub from: usize,
    pub k: usize,
    pub to: usize,
    pub k_to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    pub n: usize,
    pub nodes: Vec<Seed>,
    /// One edge per `(node, vertex)`, sorted.
    pub edges: Vec<ExchangeEdge>,
    /// All cluster variables, deduplicated and sorted.
    pub variables: Vec<LaurentPoly>,
}

impl ExchangeGraph {
    /// Each undirected edge once, as `(u, v)` with `u <= v`, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| (e.from, e.k) < (e.to, e.k_to))
            .map(|e| (e.from, e.to))
            .collect();
        out.sort_unstable();
        out
    }

    /// Graphviz rendering; nodes are labeled by their clusters.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph exchange {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, seed) in self.nodes.iter().enumerate() {
            let label = seed
                .vars()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\\n");
            let _ = writeln!(s, "  s{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            if (e.from, e.k) < (e.to, e.k_to) {
                let _ = writeln!(
                    s,
                    "  s{} -- s{} [label=\"{}/{}\"];",
                    e.from, e.to, e.k, e.k_to
                );
            }
        }
        s.push_str("}\n");
        s
    }

    /// Plain-text summary, one node per line.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "seeds: {}\nvariables: {}\n",
            self.nodes.len(),
            self.variables.len()
        );
        for (i, seed) in self.nodes.iter().enumerate() {
            let vars = seed
                .vars()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(s, "[{i}] {} | {}", seed.quiver().describe(), vars);
        }
        for e in &self.edges {
            let _ = writeln!(s, "{} -{}-> {} ({})", e.from, e.k, e.to, e.k_to);
        }
        s
    }
}

impl Serialize for ExchangeGraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<[usize; 4]> = self
            .edges
            .iter()
            .map(|e| [e.from, e.k, e.to, e.k_to])
            .collect();
        let mut st = ser.serialize_struct("ExchangeGraph", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("nodes", &self.nodes)?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("variables", &self.variables)?;
        st.end()
    }
}

type SeedKey = (Quiver, Vec<LaurentPoly>);

fn seed_key(seed: &Seed) -> Result<SeedKey, QuiverError> {
    Ok((seed.quiver().canonical_form()?.0, seed.sorted_vars()))
}

/// Breadth-first enumeration of the exchange graph from the initial seed of
/// `q`, stopping with [`ExchangeError::BudgetExceeded`] once more than
/// `budget` seeds would be needed.
///
/// Seeds are identified up to relabeling. The result is independent of
/// thread scheduling: each level is mutated in parallel and then merged in
/// `(node, vertex)` order.
pub fn enumerate(q: &Quiver, budget: usize) -> Result<ExchangeGraph, ExchangeError> {
    if budget == 0 {
        return Err(ExchangeError::ZeroBudget);
    }
    let n = q.n();
    let start = Seed::initial(q.clone());
    let mut nodes = vec![start.clone()];
    let mut index: HashMap<SeedKey, Vec<usize>> = HashMap::new();
    index.entry(seed_key(&start)?).or_default().push(0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];

    while !frontier.is_empty() {
        let expanded: Vec<Vec<(Seed, SeedKey)>> = frontier
            .par_iter()
            .map(|&u| {
                (1..=n)
                    .map(|k| {
                        let next = nodes[u].mutate(k)?;
                        let key = seed_key(&next)?;
                        Ok((next, key))
                    })
                    .collect::<Result<Vec<_>, ExchangeError>>()
            })
            .collect::<Result<Vec<_>, ExchangeError>>()?;

        let mut next_frontier = Vec::new();
        for (&u, children) in frontier.iter().zip(expanded) {
            for (k0, (child, key)) in children.into_iter().enumerate() {
                let k = k0 + 1;
                let known = index.get(&key).and_then(|ids| {
                    ids.iter()
                        .find_map(|&v| seed_isomorphism(&child, &nodes[v]).map(|p| (v, p)))
                });
                let (v, k_to) = match known {
                    Some((v, perm)) => (v, perm[k - 1]),
                    None => {
                        if nodes.len() == budget {
                            let partial = finish(n, nodes, edges);
                            return Err(ExchangeError::BudgetExceeded {
                                budget,
                                partial: Box::new(partial),
                            });
                        }
                        let v = nodes.len();
                        nodes.push(child);
                        index.entry(key).or_default().push(v);
                        next_frontier.push(v);
                        (v, k)
                    }
                };
                edges.push(ExchangeEdge {
                    from: u,
                    k,
                    to: v,
                    k_to,
                });
            }
        }
        frontier = next_frontier;
    }
    Ok(finish(n, nodes, edges))
}

fn finish(n: usize, nodes: Vec<Seed>, mut edges: Vec<ExchangeEdge>) -> ExchangeGraph {
    edges.sort_unstable();
    let mut variables: Vec<LaurentPoly> = nodes.iter().flat_map(|s| s.vars().to_vec()).collect();
    variables.sort();
    variables.dedup();
    ExchangeGraph {
        n,
        nodes,
        edges,
        variables,
    }
}

/// All cluster variables of a finite-type quiver.
pub fn cluster_variables(q: &Quiver) -> Result<Vec<LaurentPoly>, ExchangeError> {
    if !is_finite_type(q)?.finite {
        return Err(ExchangeError::NotFiniteType);
    }
    Ok(enumerate(q, usize::MAX)?.variables)
}
