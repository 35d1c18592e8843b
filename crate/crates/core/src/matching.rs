//! Maximum-cardinality matching on general graphs and the capacitated
//! domination feasibility check.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{CapacitatedInstance, DominationWitness, Graph, VertexSet};

/// A set of vertex-disjoint edges, stored as a mate array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut matching = Self::empty(g.n());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::contract(format!("({u}, {v}) is not an edge")));
            }
            if matching.mate[u].is_some() || matching.mate[v].is_some() {
                return Err(Error::contract(format!("({u}, {v}) shares an endpoint")));
            }
            matching.mate[u] = Some(v);
            matching.mate[v] = Some(u);
        }
        Ok(matching)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn len(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.mate.iter().all(Option::is_none)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

/// Maximum matching via Edmonds' blossom algorithm (BFS over alternating
/// trees with blossom contraction through base relabelling), `O(V³)`.
pub fn max_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

const NIL: usize = usize::MAX;

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NIL; n],
            parent: vec![NIL; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        let n = self.g.n();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NIL {
                if let Some(&w) = self.g.neighbor_list(v).iter().find(|&&w| self.mate[w] == NIL) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NIL {
                continue;
            }
            let mut v = self.find_augmenting_path(root);
            while v != NIL {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        Matching {
            mate: self.mate.into_iter().map(|m| (m != NIL).then_some(m)).collect(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, or `NIL`.
    fn find_augmenting_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbor_list(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NIL
    }
}

/// Decides whether `s` is a capacitated dominating set of `inst` and, if
/// so, returns a dominating function for it.
///
/// Solved as a degree-constrained bipartite matching between `V ∖ S`
/// (demand 1 each) and `S` (capacity `c(w)` each) with augmenting paths;
/// vertices and neighbours are scanned in increasing id order.
pub fn verify_capacitated(inst: &CapacitatedInstance, s: &VertexSet) -> Option<DominationWitness> {
    let g = inst.graph();
    let n = g.n();
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut assignees: Vec<Vec<usize>> = vec![Vec::new(); n];

    for v in (0..n).filter(|&v| !s.contains(v)) {
        let mut visited = vec![false; n];
        if !augment(inst, s, v, &mut visited, &mut assigned, &mut assignees) {
            return None;
        }
    }

    let mut witness = DominationWitness::new(n);
    for (v, d) in assigned.iter().enumerate() {
        if let Some(d) = *d {
            witness.assign(v, d);
        }
    }
    Some(witness)
}

fn augment(
    inst: &CapacitatedInstance,
    s: &VertexSet,
    v: usize,
    visited: &mut [bool],
    assigned: &mut [Option<usize>],
    assignees: &mut [Vec<usize>],
) -> bool {
    let g = inst.graph();
    for &w in g.neighbor_list(v) {
        if !s.contains(w) || visited[w] || inst.capacity(w) == 0 {
            continue;
        }
        visited[w] = true;
        if assignees[w].len() < inst.capacity(w) {
            assignees[w].push(v);
            assigned[v] = Some(w);
            return true;
        }
        for idx in 0..assignees[w].len() {
            let other = assignees[w][idx];
            if augment(inst, s, other, visited, assigned, assignees) {
                assignees[w][idx] = v;
                assigned[v] = Some(w);
                return true;
            }
        }
    }
    false
}
