//! Seeded instance generators and small-graph enumeration.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{CapacitatedInstance, Graph, GraphBuilder};

/// Largest order accepted by [`all_graphs_up_to_iso`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    b.build()
}

/// `G(n, p)` with capacities drawn uniformly from `0..=max_capacity`.
pub fn random_instance<R: Rng + ?Sized>(n: usize, p: f64, max_capacity: usize, rng: &mut R) -> CapacitatedInstance {
    let g = random_graph(n, p, rng);
    let caps = (0..n).map(|_| rng.gen_range(0..=max_capacity)).collect();
    CapacitatedInstance::new(g, caps).expect("capacity vector has length n")
}

/// Edge code of `g` under `order` (position `i` holds the vertex placed at
/// `i`), bit `k` set for the `k`-th pair in row-major upper-triangle order.
fn code(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Minimum edge code over orderings that list vertices by decreasing degree,
/// trying every permutation inside each degree class.
fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in verts {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_classes(g, &mut classes, 0, &mut order, &mut best);
    best
}

fn permute_classes(g: &Graph, classes: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        *best = (*best).min(code(g, order));
        return;
    }
    heap_permute(g, classes, ci, classes[ci].len(), order, best);
}

fn heap_permute(g: &Graph, classes: &mut [Vec<usize>], ci: usize, k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if k <= 1 {
        let base = order.len();
        order.extend_from_slice(&classes[ci]);
        permute_classes(g, classes, ci + 1, order, best);
        order.truncate(base);
        return;
    }
    for i in 0..k {
        heap_permute(g, classes, ci, k - 1, order, best);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        classes[ci].swap(j, k - 1);
    }
}

fn from_code(n: usize, c: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if c >> bit & 1 == 1 {
                b.add_edge(i, j).expect("fresh edge");
            }
            bit += 1;
        }
    }
    b.build()
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// built by vertex augmentation.
pub fn all_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "enumeration supports at most {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 1..=n {
        let prev: Vec<Graph> = layer.iter().map(|&c| from_code(order - 1, c)).collect();
        let mut next = BTreeSet::new();
        for g in &prev {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..1 << (order - 1) {
                let mut all = edges.clone();
                all.extend((0..order - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, order - 1)));
                let h = Graph::from_edges(order, &all).expect("valid augmentation");
                next.insert(canonical_code(&h));
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().map(|c| from_code(n, c)).collect())
}

pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs_up_to_iso(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}
