//! Irredundant sets and their correspondence with independent edge sets of
//! the doubled bipartite graph.
//!
//! A set `S` is irredundant when every member `v` has a *unique* vertex: a
//! vertex in `N̄(v)` that no other member dominates. In the doubled graph
//! `H` on `V ∪ V'` (left ids `0..n`, right ids `n..2n`), `u` and `v'` are
//! adjacent when `uv ∈ E` or `u = v`. An edge set of `H` is independent when
//! it is an induced matching; `{v, u(v)'}` over `v ∈ S` is such a set and
//! conversely its left endpoints form an irredundant set of the same size.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};

/// Unique vertex chosen for each member of an irredundant set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IrredundantWitness {
    pub unique_of: BTreeMap<usize, usize>,
}

impl IrredundantWitness {
    pub fn check(&self, g: &Graph, s: &VertexSet) -> Result<()> {
        if self.unique_of.len() != s.len() || !self.unique_of.keys().all(|&v| s.contains(v)) {
            return Err(Error::contract("witness keys differ from the set"));
        }
        for (&v, &u) in &self.unique_of {
            if !g.closed_neighbors(v).contains(u) {
                return Err(Error::contract(format!("{u} is not dominated by {v}")));
            }
            if s.iter().any(|w| w != v && g.closed_neighbors(w).contains(u)) {
                return Err(Error::contract(format!("{u} is dominated by another member")));
            }
        }
        Ok(())
    }
}

/// Returns a witness (lowest-id unique vertex per member) iff `s` is
/// irredundant.
pub fn is_irredundant(g: &Graph, s: &VertexSet) -> Option<IrredundantWitness> {
    let n = g.n();
    let mut count = vec![0u32; n];
    for v in s.iter() {
        count[v] += 1;
        for &u in g.neighbor_list(v) {
            count[u] += 1;
        }
    }
    let mut unique_of = BTreeMap::new();
    for v in s.iter() {
        let u = g.closed_neighbors(v).iter().find(|&u| count[u] == 1)?;
        unique_of.insert(v, u);
    }
    Some(IrredundantWitness { unique_of })
}

/// Whether no vertex can be added to the irredundant set `s` keeping it
/// irredundant. Errors if `s` itself is not irredundant.
pub fn is_maximal_irredundant(g: &Graph, s: &VertexSet) -> Result<bool> {
    if is_irredundant(g, s).is_none() {
        return Err(Error::contract("set is not irredundant"));
    }
    let mut grown = s.clone();
    for v in (0..g.n()).filter(|&v| !s.contains(v)) {
        grown.insert(v);
        if is_irredundant(g, &grown).is_some() {
            return Ok(false);
        }
        grown.remove(v);
    }
    Ok(true)
}

/// The bipartite graph `H`. Left vertex `v` has id `v`, right vertex `v'`
/// has id `n + v`.
#[derive(Debug, Clone)]
pub struct DoubledGraph {
    base_n: usize,
    graph: Graph,
}

impl DoubledGraph {
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn right(&self, v: usize) -> usize {
        self.base_n + v
    }

    pub fn is_left(&self, id: usize) -> bool {
        id < self.base_n
    }

    pub fn has_edge(&self, left: usize, right_base: usize) -> bool {
        left < self.base_n && right_base < self.base_n && self.graph.has_edge(left, self.right(right_base))
    }
}

pub fn build_doubled_graph(g: &Graph) -> DoubledGraph {
    let n = g.n();
    let mut builder = GraphBuilder::new(2 * n);
    for u in 0..n {
        builder.add_edge(u, n + u).expect("fresh edge");
        for &v in g.neighbor_list(u) {
            builder.add_edge(u, n + v).expect("fresh edge");
        }
    }
    DoubledGraph {
        base_n: n,
        graph: builder.build(),
    }
}

/// Edges of `H` written as `(left, right)` with `right` given as the base
/// vertex id (`v` standing for `v'`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndependentEdgeSet {
    pub edges: Vec<(usize, usize)>,
}

impl IndependentEdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Both conditions: members share no endpoint, and no edge of `H` joins
/// endpoints of two different members. Edges outside `H` make the answer
/// `false`.
pub fn is_independent_edge_set(h: &DoubledGraph, m: &[(usize, usize)]) -> bool {
    if !m.iter().all(|&(l, r)| h.has_edge(l, r)) {
        return false;
    }
    for (i, &(l1, r1)) in m.iter().enumerate() {
        for &(l2, r2) in &m[i + 1..] {
            if l1 == l2 || r1 == r2 || h.has_edge(l1, r2) || h.has_edge(l2, r1) {
                return false;
            }
        }
    }
    true
}

/// Left endpoints of an independent edge set.
pub fn edge_set_to_irset(h: &DoubledGraph, m: &IndependentEdgeSet) -> Result<VertexSet> {
    if !is_independent_edge_set(h, &m.edges) {
        return Err(Error::contract("edge set is not independent"));
    }
    Ok(VertexSet::from_iter(h.base_n(), m.edges.iter().map(|&(l, _)| l)))
}

/// `{(v, u(v)) : v ∈ S}` for the unique vertices in `w`.
pub fn irset_to_edge_set(h: &DoubledGraph, s: &VertexSet, w: &IrredundantWitness) -> Result<IndependentEdgeSet> {
    if w.unique_of.len() != s.len() || !s.iter().all(|v| w.unique_of.contains_key(&v)) {
        return Err(Error::contract("witness does not cover the set"));
    }
    let edges: Vec<(usize, usize)> = w.unique_of.iter().map(|(&v, &u)| (v, u)).collect();
    if !is_independent_edge_set(h, &edges) {
        return Err(Error::contract("witness does not certify the set"));
    }
    Ok(IndependentEdgeSet { edges })
}
