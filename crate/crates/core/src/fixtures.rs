//! Small named instances shipped with the repository.

use crate::error::{Error, Result};
use crate::graph::{parse_instance, CapacitatedInstance, Graph, VertexSet};
use crate::matching::Matching;
use crate::scds::{AuxGraph, ScdsInstance};

pub const FIG1_CDS: &str = include_str!("../../../fixtures/fig1.cds");
pub const P4_GRAPH: &str = include_str!("../../../fixtures/p4.graph");
pub const C5_GRAPH: &str = include_str!("../../../fixtures/c5.graph");
pub const K1_GRAPH: &str = include_str!("../../../fixtures/k1.graph");
pub const STAR4_CDS: &str = include_str!("../../../fixtures/star4.cds");

/// Vertex labels of `fig1.cds`, indexed by 0-based id.
pub const FIG1_LABELS: [&str; 10] = ["A", "B", "C", "D", "E", "F", "H", "K", "L", "M"];

pub fn figure1() -> CapacitatedInstance {
    parse_instance(FIG1_CDS).expect("fixture parses")
}

pub fn fig1_vertex(label: &str) -> usize {
    FIG1_LABELS
        .iter()
        .position(|&l| l == label)
        .unwrap_or_else(|| panic!("no vertex labelled {label}"))
}

pub fn fig1_set(labels: &[&str]) -> VertexSet {
    VertexSet::from_iter(FIG1_LABELS.len(), labels.iter().map(|l| fig1_vertex(l)))
}

pub fn p4() -> Graph {
    parse_instance(P4_GRAPH).expect("fixture parses").graph().clone()
}

pub fn c5() -> Graph {
    parse_instance(C5_GRAPH).expect("fixture parses").graph().clone()
}

pub fn k1() -> Graph {
    parse_instance(K1_GRAPH).expect("fixture parses").graph().clone()
}

pub fn star4() -> CapacitatedInstance {
    parse_instance(STAR4_CDS).expect("fixture parses")
}

/// Forced set `{A, B, C}` of the Figure-1 matching.
pub fn fig1_forced() -> VertexSet {
    fig1_set(&["A", "B", "C"])
}

/// The matching `{A₁H, A₂E, C₁K, DF, LM}` in the auxiliary graph built for
/// [`fig1_forced`]. Copy `X₁` is `Copy(X, 0)`.
pub fn fig1_reference_matching(si: &ScdsInstance<'_>, aux: &AuxGraph) -> Result<Matching> {
    let cap = |l: &str| si.effective_capacity(fig1_vertex(l));
    let copy = |l: &str, i: usize| {
        aux.copy(fig1_vertex(l), i, cap(l))
            .ok_or_else(|| Error::InvalidArgument(format!("no copy {l}{}", i + 1)))
    };
    let plain = |l: &str| {
        aux.plain(fig1_vertex(l))
            .ok_or_else(|| Error::InvalidArgument(format!("{l} is not a plain node")))
    };
    let edges = [
        (copy("A", 0)?, plain("H")?),
        (copy("A", 1)?, plain("E")?),
        (copy("C", 0)?, plain("K")?),
        (plain("D")?, plain("F")?),
        (plain("L")?, plain("M")?),
    ];
    Matching::from_edges(aux.graph(), &edges)
}
