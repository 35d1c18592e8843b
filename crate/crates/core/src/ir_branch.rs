//! Branch-and-reduce search for a largest independent edge set (induced
//! matching) of the doubled graph, which yields a largest irredundant set.
//!
//! At every node the first applicable rule is applied, scanning vertices in
//! increasing id:
//!
//! 1. isolated vertex: drop it;
//! 2. degree-1 vertex whose neighbour has degree 1: choose the edge;
//! 3. degree-1 vertex `v` with neighbour `u`: drop `u`, or choose `uv`;
//! 4. vertex of degree `>= 8`: drop it, or choose each incident edge;
//! 5. adjacent degree-2 pair `u, v`: choose `uu₁`, `uv` or `vv₁`;
//! 6. degree-2 vertex `v` with neighbours `u, w`: choose `uv`, choose `vw`,
//!    drop `{u, v, w}`, or drop `v` and choose one private edge at each of
//!    `u` and `w`;
//! 7. adjacent degree-3 pair `u, v`: choose one of the five edges at `u` or
//!    `v`; or drop `u` and choose an edge at each of `u₁, u₂`; or drop
//!    `u, v, u₁, u₂` and choose an edge at each of `v₁, v₂`;
//! 8. otherwise some vertex of degree 3..7 has all neighbours of degree
//!    `>= 4`: drop it, or choose each incident edge.
//!
//! Choosing an edge `ab` removes `N̄(a) ∪ N̄(b)` from the live graph.

use crate::graph::{Graph, VertexSet};
use crate::irredundance::{
    build_doubled_graph, edge_set_to_irset, is_independent_edge_set, DoubledGraph, IndependentEdgeSet,
    IrredundantWitness,
};

/// Rule identifiers, in application order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Isolated,
    PendantPair,
    Pendant,
    HighDegree,
    AdjacentDegreeTwo,
    DegreeTwo,
    AdjacentDegreeThree,
    Remaining,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::Isolated,
        Rule::PendantPair,
        Rule::Pendant,
        Rule::HighDegree,
        Rule::AdjacentDegreeTwo,
        Rule::DegreeTwo,
        Rule::AdjacentDegreeThree,
        Rule::Remaining,
    ];

    /// `"R1"` .. `"R8"`.
    pub fn label(self) -> &'static str {
        ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"][self as usize]
    }
}

#[derive(Debug, Clone)]
pub struct BranchOutcome {
    pub size: usize,
    pub edges: IndependentEdgeSet,
    /// Search nodes visited, including leaves.
    pub nodes: u64,
    /// How often each rule fired, indexed by `Rule as usize`.
    pub rule_counts: [u64; 8],
}

#[derive(Debug, Clone)]
pub struct IrMaxResult {
    pub size: usize,
    pub set: VertexSet,
    pub witness: IrredundantWitness,
    pub nodes: u64,
}

/// Largest irredundant set of `g`.
pub fn solve_ir_max(g: &Graph) -> IrMaxResult {
    let h = build_doubled_graph(g);
    let outcome = max_independent_edge_set(&h);
    let set = edge_set_to_irset(&h, &outcome.edges).expect("search returns independent edge sets");
    let witness = IrredundantWitness {
        unique_of: outcome.edges.edges.iter().copied().collect(),
    };
    IrMaxResult {
        size: outcome.size,
        set,
        witness,
        nodes: outcome.nodes,
    }
}

pub fn max_independent_edge_set(h: &DoubledGraph) -> BranchOutcome {
    let g = h.graph();
    let mut search = Search {
        g,
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        rule_counts: [0; 8],
    };
    search.run(VertexSet::full(g.n()));
    let n = h.base_n();
    let mut edges: Vec<(usize, usize)> = search
        .best
        .iter()
        .map(|&(a, b)| if a < n { (a, b - n) } else { (b, a - n) })
        .collect();
    edges.sort_unstable();
    debug_assert!(is_independent_edge_set(h, &edges));
    BranchOutcome {
        size: edges.len(),
        edges: IndependentEdgeSet { edges },
        nodes: search.nodes,
        rule_counts: search.rule_counts,
    }
}

struct Search<'a> {
    g: &'a Graph,
    chosen: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    nodes: u64,
    rule_counts: [u64; 8],
}

impl Search<'_> {
    fn degree(&self, live: &VertexSet, v: usize) -> usize {
        self.g.neighbors(v).intersection_len(live)
    }

    fn live_neighbors(&self, live: &VertexSet, v: usize) -> Vec<usize> {
        self.g
            .neighbor_list(v)
            .iter()
            .copied()
            .filter(|&w| live.contains(w))
            .collect()
    }

    fn without(live: &VertexSet, vertices: &[usize]) -> VertexSet {
        let mut next = live.clone();
        for &v in vertices {
            next.remove(v);
        }
        next
    }

    /// Chooses every edge in `edges` at once and recurses.
    fn choose(&mut self, live: &VertexSet, edges: &[(usize, usize)]) {
        let mut next = live.clone();
        for &(a, b) in edges {
            debug_assert!(next.contains(a) && next.contains(b) && self.g.has_edge(a, b));
            next.difference_with(self.g.neighbors(a));
            next.difference_with(self.g.neighbors(b));
            next.remove(a);
            next.remove(b);
            self.chosen.push((a, b));
        }
        self.run(next);
        self.chosen.truncate(self.chosen.len() - edges.len());
    }

    /// Pairs `(x, y)` with `x ∈ N(a) ∖ N(b)`, `y ∈ N(b) ∖ N(a)` in `live`,
    /// so that edges `ax` and `by` can be chosen together.
    fn private_pairs(&self, live: &VertexSet, a: usize, b: usize) -> Vec<(usize, usize)> {
        let xs: Vec<usize> = self
            .live_neighbors(live, a)
            .into_iter()
            .filter(|&x| !self.g.has_edge(b, x))
            .collect();
        let ys: Vec<usize> = self
            .live_neighbors(live, b)
            .into_iter()
            .filter(|&y| !self.g.has_edge(a, y))
            .collect();
        xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
    }

    fn fire(&mut self, rule: Rule) {
        self.rule_counts[rule as usize] += 1;
    }

    fn run(&mut self, live: VertexSet) {
        self.nodes += 1;
        #[cfg(debug_assertions)]
        self.assert_chosen_independent();

        let Some(_) = live.first() else {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        };

        let verts: Vec<usize> = live.iter().collect();
        let deg: Vec<usize> = {
            let mut deg = vec![0; self.g.n()];
            for &v in &verts {
                deg[v] = self.degree(&live, v);
            }
            deg
        };

        // R1
        if let Some(&v) = verts.iter().find(|&&v| deg[v] == 0) {
            self.fire(Rule::Isolated);
            return self.run(Self::without(&live, &[v]));
        }

        // R2
        if let Some(&v) = verts
            .iter()
            .find(|&&v| deg[v] == 1 && deg[self.live_neighbors(&live, v)[0]] == 1)
        {
            self.fire(Rule::PendantPair);
            let u = self.live_neighbors(&live, v)[0];
            return self.choose(&live, &[(v, u)]);
        }

        // R3
        if let Some(&v) = verts.iter().find(|&&v| deg[v] == 1) {
            self.fire(Rule::Pendant);
            let u = self.live_neighbors(&live, v)[0];
            self.run(Self::without(&live, &[u, v]));
            return self.choose(&live, &[(u, v)]);
        }

        // R4
        if let Some(&v) = verts.iter().find(|&&v| deg[v] >= 8) {
            self.fire(Rule::HighDegree);
            self.run(Self::without(&live, &[v]));
            for x in self.live_neighbors(&live, v) {
                self.choose(&live, &[(v, x)]);
            }
            return;
        }

        // R5
        if let Some((u, v)) = self.adjacent_pair(&live, &verts, &deg, 2) {
            self.fire(Rule::AdjacentDegreeTwo);
            let u1 = self.other_neighbor(&live, u, &[v])[0];
            let v1 = self.other_neighbor(&live, v, &[u])[0];
            self.choose(&live, &[(u, u1)]);
            self.choose(&live, &[(u, v)]);
            self.choose(&live, &[(v, v1)]);
            return;
        }

        // R6
        if let Some(&v) = verts.iter().find(|&&v| deg[v] == 2) {
            self.fire(Rule::DegreeTwo);
            let nb = self.live_neighbors(&live, v);
            let (u, w) = (nb[0], nb[1]);
            self.choose(&live, &[(u, v)]);
            self.choose(&live, &[(v, w)]);
            self.run(Self::without(&live, &[u, v, w]));
            let rest = Self::without(&live, &[v]);
            for (x, y) in self.private_pairs(&rest, u, w) {
                self.choose(&rest, &[(u, x), (w, y)]);
            }
            return;
        }

        // R7
        if let Some((u, v)) = self.adjacent_pair(&live, &verts, &deg, 3) {
            self.fire(Rule::AdjacentDegreeThree);
            let us = self.other_neighbor(&live, u, &[v]);
            let vs = self.other_neighbor(&live, v, &[u]);
            let (u1, u2, v1, v2) = (us[0], us[1], vs[0], vs[1]);
            for edge in [(u, v), (u, u1), (u, u2), (v, v1), (v, v2)] {
                self.choose(&live, &[edge]);
            }
            let without_u = Self::without(&live, &[u]);
            for (x, y) in self.private_pairs(&without_u, u1, u2) {
                self.choose(&without_u, &[(u1, x), (u2, y)]);
            }
            let rest = Self::without(&live, &[u1, u2, u, v]);
            for (x, y) in self.private_pairs(&rest, v1, v2) {
                self.choose(&rest, &[(v1, x), (v2, y)]);
            }
            return;
        }

        // R8
        let target = verts
            .iter()
            .copied()
            .find(|&v| (3..8).contains(&deg[v]) && self.live_neighbors(&live, v).iter().all(|&w| deg[w] >= 4));
        let Some(v) = target else {
            unreachable!("no branching rule applies to a non-empty graph");
        };
        self.fire(Rule::Remaining);
        self.run(Self::without(&live, &[v]));
        for x in self.live_neighbors(&live, v) {
            self.choose(&live, &[(v, x)]);
        }
    }

    /// Lowest `u` of degree `d` with a neighbour `v` of degree `d`.
    fn adjacent_pair(&self, live: &VertexSet, verts: &[usize], deg: &[usize], d: usize) -> Option<(usize, usize)> {
        verts.iter().find_map(|&u| {
            if deg[u] != d {
                return None;
            }
            self.live_neighbors(live, u)
                .into_iter()
                .find(|&v| deg[v] == d)
                .map(|v| (u, v))
        })
    }

    fn other_neighbor(&self, live: &VertexSet, v: usize, exclude: &[usize]) -> Vec<usize> {
        self.live_neighbors(live, v)
            .into_iter()
            .filter(|w| !exclude.contains(w))
            .collect()
    }

    #[cfg(debug_assertions)]
    fn assert_chosen_independent(&self) {
        for (i, &(a, b)) in self.chosen.iter().enumerate() {
            for &(c, d) in &self.chosen[i + 1..] {
                for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                    assert!(x != y && !self.g.has_edge(x, y), "chosen edges conflict");
                }
            }
        }
    }
}
