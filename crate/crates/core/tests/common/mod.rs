#![allow(dead_code)]

use domset::{CapacitatedInstance, Graph, GraphBuilder, VertexSet};
use proptest::prelude::*;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                b.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    b.build()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn arb_instance(max_n: usize, max_cap: usize) -> impl Strategy<Value = CapacitatedInstance> {
    arb_graph(1, max_n).prop_flat_map(move |g| {
        let n = g.n();
        proptest::collection::vec(0..=max_cap, n)
            .prop_map(move |caps| CapacitatedInstance::new(g.clone(), caps).unwrap())
    })
}

/// An instance with a subset of its vertices, given as a membership mask.
pub fn arb_instance_with_subset(
    max_n: usize,
    max_cap: usize,
) -> impl Strategy<Value = (CapacitatedInstance, VertexSet)> {
    arb_instance(max_n, max_cap).prop_flat_map(|inst| {
        let n = inst.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |mask| {
            let s = VertexSet::from_iter(n, (0..n).filter(|&v| mask[v]));
            (inst.clone(), s)
        })
    })
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |mask| VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
}
