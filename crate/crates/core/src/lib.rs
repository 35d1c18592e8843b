//! Solvers for capacitated domination and irredundance on simple graphs.
//!
//! Vertex ids are `0..n` throughout; the text format uses 1-based ids.

pub mod cds;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod ir_branch;
pub mod ir_small;
pub mod irredundance;
pub mod matching;
pub mod oracle;
pub mod recurrence;
pub mod scalar;
pub mod scds;

use num_rational::{BigRational, Ratio};

pub use cds::{approx_ratio_bound, solve_approx, solve_exact, solve_exact_with, ApproxBound, CdsOptions, CdsResult};
pub use error::{Error, Result};
pub use graph::{
    closed_neighborhood, is_dominating, parse_instance, serialize_instance, CapacitatedInstance, DominationWitness,
    Graph, GraphBuilder, VertexSet,
};
pub use ir_branch::{solve_ir_max, IrMaxResult, Rule};
pub use ir_small::{enumerate_irredundant, solve_ir_min, DepthBudget, IrMinResult};
pub use irredundance::{
    build_doubled_graph, edge_set_to_irset, irset_to_edge_set, is_independent_edge_set, is_irredundant,
    is_maximal_irredundant, DoubledGraph, IndependentEdgeSet, IrredundantWitness,
};
pub use matching::{max_matching, verify_capacitated, Matching};
pub use recurrence::{recurrence_cases, verify_recurrences, RecurrenceCase, RecurrenceReport, Verdict};
pub use scalar::Scalar;
pub use scds::{
    build_aux_graph, matching_to_solution, solution_to_matching, solve_scds, AuxGraph, ScdsInstance, ScdsSolution,
};

/// Exact rational with 64-bit parts.
pub type Rational = Ratio<i64>;

pub type ApproxBoundF64 = ApproxBound<f64>;
pub type ExactApproxBound = ApproxBound<Rational>;
pub type RecurrenceReportF64 = RecurrenceReport<f64>;
pub type ExactRecurrenceReport = RecurrenceReport<BigRational>;
