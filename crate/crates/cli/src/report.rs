//! JSON Lines reports. Every solution is re-checked before it is emitted.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use domset::oracle::{brute_cds, brute_ir_max, brute_ir_min};
use domset::{
    approx_ratio_bound, is_irredundant, is_maximal_irredundant, solve_approx, solve_exact_with, solve_ir_max,
    solve_ir_min, verify_capacitated, CapacitatedInstance, CdsOptions, CdsResult, DominationWitness,
    IrredundantWitness, Rational, VertexSet,
};
use serde::Serialize;

use crate::CliError;

pub const VERSION: &str = concat!("domset ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Problem {
    Cds,
    IrMax,
    IrMin,
}

impl Problem {
    pub fn tag(self) -> &'static str {
        match self {
            Problem::Cds => "cds",
            Problem::IrMax => "ir-max",
            Problem::IrMin => "ir-min",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub c: String,
    pub ratio: String,
    pub ratio_f64: f64,
    pub trivial_ratio: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub problem: &'static str,
    pub solver: &'static str,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub size: usize,
    /// 1-based vertex ids.
    pub solution: Vec<usize>,
    /// Dominated vertex to dominator for `cds`, member to unique vertex for
    /// the irredundance problems; 1-based.
    pub witness: BTreeMap<usize, usize>,
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
}

impl RunReport {
    fn new(problem: Problem, solver: &'static str, name: &str, inst: &CapacitatedInstance, set: &VertexSet) -> Self {
        RunReport {
            problem: problem.tag(),
            solver,
            instance: name.to_string(),
            n: inst.n(),
            m: inst.graph().m(),
            size: set.len(),
            solution: set.iter().map(|v| v + 1).collect(),
            witness: BTreeMap::new(),
            nodes: 0,
            elapsed_ms: 0.0,
            version: VERSION,
            bound: None,
        }
    }

    fn timed(mut self, elapsed: Duration, nodes: u64) -> Self {
        self.elapsed_ms = elapsed.as_secs_f64() * 1e3;
        self.nodes = nodes;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

fn cds_witness(w: &DominationWitness) -> BTreeMap<usize, usize> {
    w.pairs().map(|(v, d)| (v + 1, d + 1)).collect()
}

fn ir_witness(w: &IrredundantWitness) -> BTreeMap<usize, usize> {
    w.unique_of.iter().map(|(&v, &u)| (v + 1, u + 1)).collect()
}

fn recheck_cds(inst: &CapacitatedInstance, s: &VertexSet, w: &DominationWitness) -> Result<(), CliError> {
    w.check(inst, s).map_err(|e| CliError::Verification(e.to_string()))?;
    if verify_capacitated(inst, s).is_none() {
        return Err(CliError::Verification(
            "solution is not a capacitated dominating set".into(),
        ));
    }
    Ok(())
}

fn recheck_ir(
    inst: &CapacitatedInstance,
    s: &VertexSet,
    w: &IrredundantWitness,
    maximal: bool,
) -> Result<(), CliError> {
    let g = inst.graph();
    w.check(g, s).map_err(|e| CliError::Verification(e.to_string()))?;
    if is_irredundant(g, s).is_none() {
        return Err(CliError::Verification("solution is not irredundant".into()));
    }
    if maximal && !is_maximal_irredundant(g, s).map_err(|e| CliError::Verification(e.to_string()))? {
        return Err(CliError::Verification("solution is not inclusion-maximal".into()));
    }
    Ok(())
}

fn cds_report(
    name: &str,
    inst: &CapacitatedInstance,
    r: &CdsResult,
    solver: &'static str,
) -> Result<RunReport, CliError> {
    recheck_cds(inst, &r.s, &r.witness)?;
    let mut report = RunReport::new(Problem::Cds, solver, name, inst, &r.s).timed(r.elapsed, r.subsets_examined);
    report.witness = cds_witness(&r.witness);
    Ok(report)
}

pub fn solve(problem: Problem, name: &str, inst: &CapacitatedInstance, parallel: bool) -> Result<RunReport, CliError> {
    match problem {
        Problem::Cds => {
            let opts = CdsOptions {
                parallel,
                ..CdsOptions::default()
            };
            cds_report(name, inst, &solve_exact_with(inst, opts), "exact")
        }
        Problem::IrMax => {
            let start = Instant::now();
            let r = solve_ir_max(inst.graph());
            let elapsed = start.elapsed();
            recheck_ir(inst, &r.set, &r.witness, false)?;
            let mut report = RunReport::new(problem, "branch", name, inst, &r.set).timed(elapsed, r.nodes);
            report.witness = ir_witness(&r.witness);
            Ok(report)
        }
        Problem::IrMin => {
            let start = Instant::now();
            let r = solve_ir_min(inst.graph());
            let elapsed = start.elapsed();
            recheck_ir(inst, &r.set, &r.witness, true)?;
            let mut report = RunReport::new(problem, "deepening", name, inst, &r.set).timed(elapsed, r.nodes);
            report.witness = ir_witness(&r.witness);
            Ok(report)
        }
    }
}

pub fn approx(name: &str, inst: &CapacitatedInstance, c: Rational) -> Result<RunReport, CliError> {
    let bound = approx_ratio_bound(c).map_err(CliError::from_core)?;
    let r = solve_approx(inst, &c).map_err(CliError::from_core)?;
    let mut report = cds_report(name, inst, &r, "approx")?;
    report.bound = Some(BoundReport {
        c: c.to_string(),
        ratio: bound.scheme_ratio.to_string(),
        ratio_f64: bound.numeric_max,
        trivial_ratio: bound.trivial_ratio.to_string(),
    });
    Ok(report)
}

pub fn oracle(problem: Problem, name: &str, inst: &CapacitatedInstance) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let g = inst.graph();
    let result = match problem {
        Problem::Cds => brute_cds(inst),
        Problem::IrMax => brute_ir_max(g),
        Problem::IrMin => brute_ir_min(g),
    }
    .map_err(CliError::from_core)?;
    let elapsed = start.elapsed();
    let set = &result.all_optima[0];
    let mut report = RunReport::new(problem, "oracle", name, inst, set).timed(elapsed, result.enumerated);
    report.witness = match problem {
        Problem::Cds => {
            let w = verify_capacitated(inst, set)
                .ok_or_else(|| CliError::Verification("oracle optimum is infeasible".into()))?;
            recheck_cds(inst, set, &w)?;
            cds_witness(&w)
        }
        Problem::IrMax | Problem::IrMin => {
            let w = is_irredundant(g, set)
                .ok_or_else(|| CliError::Verification("oracle optimum is not irredundant".into()))?;
            recheck_ir(inst, set, &w, problem == Problem::IrMin)?;
            ir_witness(&w)
        }
    };
    Ok(report)
}
