//! Simplified capacitated domination: a forced set `U` may use its full
//! capacity, every other member dominates at most one vertex.
//!
//! Solutions correspond to matchings of an auxiliary graph that replaces
//! each `u ∈ U` by `c(u)` copies; a minimum solution has size
//! `|V| - |maximum matching|`.

use crate::error::{Error, Result};
use crate::graph::{CapacitatedInstance, DominationWitness, Graph, GraphBuilder, VertexSet};
use crate::matching::{max_matching, Matching};

#[derive(Debug, Clone, Copy)]
pub struct ScdsInstance<'a> {
    inst: &'a CapacitatedInstance,
    forced: &'a VertexSet,
}

impl<'a> ScdsInstance<'a> {
    pub fn new(inst: &'a CapacitatedInstance, forced: &'a VertexSet) -> Result<Self> {
        if forced.universe() != inst.n() {
            return Err(Error::InvalidArgument(format!(
                "forced set over {} vertices, instance has {}",
                forced.universe(),
                inst.n()
            )));
        }
        Ok(ScdsInstance { inst, forced })
    }

    pub fn instance(&self) -> &'a CapacitatedInstance {
        self.inst
    }

    pub fn forced(&self) -> &'a VertexSet {
        self.forced
    }

    /// Capacity a member may actually use: `c(v)` inside `U`, at most one outside.
    pub fn effective_capacity(&self, v: usize) -> usize {
        if self.forced.contains(v) {
            self.inst.capacity(v)
        } else {
            self.inst.capacity(v).min(1)
        }
    }
}

/// Node of the auxiliary graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxNode {
    /// A vertex outside `U`.
    Plain(usize),
    /// The `index`-th copy of `of ∈ U`.
    Copy { of: usize, index: usize },
}

impl AuxNode {
    pub fn original(self) -> usize {
        match self {
            AuxNode::Plain(v) => v,
            AuxNode::Copy { of, .. } => of,
        }
    }
}

/// The auxiliary graph: plain nodes for `V ∖ U` (in increasing id), then
/// `c(u)` copies for each `u ∈ U` (in increasing id).
#[derive(Debug, Clone)]
pub struct AuxGraph {
    nodes: Vec<AuxNode>,
    graph: Graph,
    plain_of: Vec<Option<usize>>,
    first_copy: Vec<Option<usize>>,
}

impl AuxGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn nodes(&self) -> &[AuxNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> AuxNode {
        self.nodes[id]
    }

    pub fn plain(&self, v: usize) -> Option<usize> {
        self.plain_of[v]
    }

    /// Node id of `Copy(u, index)`, if it exists.
    pub fn copy(&self, u: usize, index: usize, capacity: usize) -> Option<usize> {
        self.first_copy[u]
            .filter(|_| index < capacity)
            .map(|first| first + index)
    }
}

pub fn build_aux_graph(si: &ScdsInstance<'_>) -> AuxGraph {
    let inst = si.instance();
    let g = inst.graph();
    let n = g.n();
    let mut nodes = Vec::new();
    let mut plain_of = vec![None; n];
    let mut first_copy = vec![None; n];

    for v in (0..n).filter(|&v| !si.forced().contains(v)) {
        plain_of[v] = Some(nodes.len());
        nodes.push(AuxNode::Plain(v));
    }
    for u in si.forced().iter() {
        if inst.capacity(u) > 0 {
            first_copy[u] = Some(nodes.len());
        }
        nodes.extend((0..inst.capacity(u)).map(|index| AuxNode::Copy { of: u, index }));
    }

    let mut builder = GraphBuilder::new(nodes.len());
    for (v, w) in g.edges() {
        match (plain_of[v], plain_of[w]) {
            (Some(a), Some(b)) => {
                if inst.capacity(v) + inst.capacity(w) > 0 {
                    builder.add_edge(a, b).expect("fresh edge");
                }
            }
            (Some(a), None) => {
                for i in 0..inst.capacity(w) {
                    builder.add_edge(a, first_copy[w].unwrap() + i).expect("fresh edge");
                }
            }
            (None, Some(b)) => {
                for i in 0..inst.capacity(v) {
                    builder.add_edge(b, first_copy[v].unwrap() + i).expect("fresh edge");
                }
            }
            (None, None) => {}
        }
    }

    AuxGraph {
        nodes,
        graph: builder.build(),
        plain_of,
        first_copy,
    }
}

/// A feasible solution: `U ⊆ S`, a dominating function, and every member
/// outside `U` dominating at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScdsSolution {
    pub s: VertexSet,
    pub witness: DominationWitness,
}

impl ScdsSolution {
    pub fn check(&self, si: &ScdsInstance<'_>) -> Result<()> {
        if !si.forced().is_subset(&self.s) {
            return Err(Error::contract("forced set is not contained in the solution"));
        }
        self.witness.check(si.instance(), &self.s)?;
        for (v, load) in self.witness.load().into_iter().enumerate() {
            if load > 1 && !si.forced().contains(v) {
                return Err(Error::contract(format!(
                    "vertex {v} outside the forced set dominates {load} vertices"
                )));
            }
        }
        Ok(())
    }
}

/// Maps a solution to a matching of the auxiliary graph with
/// `|V| - |M| = |S|`. Assignees of `u ∈ U` receive copies `0, 1, …` in
/// increasing assignee order.
pub fn solution_to_matching(si: &ScdsInstance<'_>, aux: &AuxGraph, sol: &ScdsSolution) -> Result<Matching> {
    sol.check(si)?;
    let inst = si.instance();
    let mut next_copy = vec![0usize; inst.n()];
    let mut edges = Vec::new();
    for (v, d) in sol.witness.pairs() {
        let a = aux.plain(v).expect("non-members lie outside U");
        let b = if si.forced().contains(d) {
            let idx = next_copy[d];
            next_copy[d] += 1;
            aux.copy(d, idx, inst.capacity(d)).expect("capacity checked")
        } else {
            aux.plain(d).expect("non-forced member")
        };
        edges.push((a, b));
    }
    Matching::from_edges(aux.graph(), &edges)
}

/// Maps a matching of the auxiliary graph to a solution with
/// `|S| = |V| - |M|`. When both endpoints of a plain edge have positive
/// capacity, the lower id joins `S`.
pub fn matching_to_solution(si: &ScdsInstance<'_>, aux: &AuxGraph, m: &Matching) -> Result<ScdsSolution> {
    if !m.is_valid_in(aux.graph()) {
        return Err(Error::contract("not a matching of the auxiliary graph"));
    }
    let inst = si.instance();
    let n = inst.n();
    let mut s = si.forced().clone();
    let mut witness = DominationWitness::new(n);

    for (a, b) in m.edges() {
        match (aux.node(a), aux.node(b)) {
            (AuxNode::Plain(v), AuxNode::Copy { of, .. }) | (AuxNode::Copy { of, .. }, AuxNode::Plain(v)) => {
                witness.assign(v, of);
            }
            (AuxNode::Plain(v), AuxNode::Plain(w)) => {
                let (lo, hi) = (v.min(w), v.max(w));
                let (keep, dominated) = if inst.capacity(lo) > 0 { (lo, hi) } else { (hi, lo) };
                s.insert(keep);
                witness.assign(dominated, keep);
            }
            (AuxNode::Copy { .. }, AuxNode::Copy { .. }) => {
                return Err(Error::contract("copy-copy edge in matching"));
            }
        }
    }
    for (id, node) in aux.nodes().iter().enumerate() {
        if let AuxNode::Plain(v) = *node {
            if m.mate(id).is_none() {
                s.insert(v);
            }
        }
    }
    Ok(ScdsSolution { s, witness })
}

/// Minimum solution via a maximum matching of the auxiliary graph.
pub fn solve_scds(si: &ScdsInstance<'_>) -> ScdsSolution {
    let aux = build_aux_graph(si);
    let m = max_matching(aux.graph());
    matching_to_solution(si, &aux, &m).expect("maximum matching is a matching of the aux graph")
}

/// Size of a minimum solution, without building the witness.
pub fn scds_optimum(si: &ScdsInstance<'_>) -> usize {
    let aux = build_aux_graph(si);
    si.instance().n() - max_matching(aux.graph()).len()
}
