//! Capacitated Dominating Set: exact solver over forced sets of size at
//! most `⌊n/3⌋`, and the approximation scheme that stops at `⌊cn⌋`.
//!
//! In any solution with dominating function `f`, the members dominating two
//! or more vertices number at most `n/3`; taking them as the forced set turns
//! the solution into a feasible simplified instance, so the minimum over all
//! small forced sets is the optimum.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CapacitatedInstance, DominationWitness, VertexSet};
use crate::scalar::{floor_times, Scalar};
use crate::scds::{solve_scds, ScdsInstance, ScdsSolution};

#[derive(Debug, Clone)]
pub struct CdsResult {
    pub s: VertexSet,
    pub witness: DominationWitness,
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CdsOptions {
    /// Stop as soon as a solution meets `max(1, ⌈n / (1 + max c)⌉)`.
    pub early_exit: bool,
    /// Evaluate each cardinality level across the rayon pool.
    pub parallel: bool,
}

impl Default for CdsOptions {
    fn default() -> Self {
        CdsOptions {
            early_exit: true,
            parallel: false,
        }
    }
}

/// `max(1, ⌈n / (1 + max c)⌉)`, or 0 for the empty graph.
pub fn size_lower_bound(inst: &CapacitatedInstance) -> usize {
    let n = inst.n();
    if n == 0 {
        return 0;
    }
    n.div_ceil(1 + inst.max_capacity()).max(1)
}

pub fn solve_exact(inst: &CapacitatedInstance) -> CdsResult {
    solve_exact_with(inst, CdsOptions::default())
}

pub fn solve_exact_with(inst: &CapacitatedInstance, opts: CdsOptions) -> CdsResult {
    solve_up_to(inst, inst.n() / 3, opts)
}

/// Approximation scheme with forced sets of size at most `⌊cn⌋`, for
/// `0 < c < 1/3`.
pub fn solve_approx<T: Scalar>(inst: &CapacitatedInstance, c: &T) -> Result<CdsResult> {
    solve_approx_with(inst, c, CdsOptions::default())
}

pub fn solve_approx_with<T: Scalar>(inst: &CapacitatedInstance, c: &T, opts: CdsOptions) -> Result<CdsResult> {
    check_fraction(c)?;
    Ok(solve_up_to(inst, floor_times(c, inst.n()), opts))
}

fn check_fraction<T: Scalar>(c: &T) -> Result<()> {
    if *c <= T::zero() || *c >= T::from_ratio(1, 3) {
        return Err(Error::InvalidArgument(format!(
            "c must lie in (0, 1/3), got {}",
            c.to_f64_lossy()
        )));
    }
    Ok(())
}

/// Minimum over all forced sets `U` with `|U| <= limit`, enumerated by
/// increasing size and lexicographically within a size. The first set
/// reaching the minimum wins.
fn solve_up_to(inst: &CapacitatedInstance, limit: usize, opts: CdsOptions) -> CdsResult {
    let start = Instant::now();
    let n = inst.n();
    let lower = size_lower_bound(inst);
    let mut best: Option<ScdsSolution> = None;
    let mut examined = 0u64;

    'levels: for k in 0..=limit.min(n) {
        if opts.parallel {
            const CHUNK: usize = 2048;
            for chunk in &(0..n).combinations(k).chunks(CHUNK) {
                let chunk: Vec<Vec<usize>> = chunk.collect();
                examined += chunk.len() as u64;
                let found = chunk
                    .par_iter()
                    .map(|members| solve_forced(inst, members))
                    .enumerate()
                    .min_by_key(|(idx, sol)| (sol.s.len(), *idx))
                    .map(|(_, sol)| sol);
                if let Some(sol) = found {
                    if best.as_ref().is_none_or(|b| sol.s.len() < b.s.len()) {
                        best = Some(sol);
                    }
                }
                if opts.early_exit && best.as_ref().is_some_and(|b| b.s.len() <= lower) {
                    break 'levels;
                }
            }
        } else {
            for members in (0..n).combinations(k) {
                examined += 1;
                let sol = solve_forced(inst, &members);
                if best.as_ref().is_none_or(|b| sol.s.len() < b.s.len()) {
                    best = Some(sol);
                }
                if opts.early_exit && best.as_ref().is_some_and(|b| b.s.len() <= lower) {
                    break 'levels;
                }
            }
        }
    }

    let best = best.expect("the empty forced set is always examined");
    CdsResult {
        s: best.s,
        witness: best.witness,
        subsets_examined: examined,
        elapsed: start.elapsed(),
    }
}

fn solve_forced(inst: &CapacitatedInstance, members: &[usize]) -> ScdsSolution {
    let forced = VertexSet::from_iter(inst.n(), members.iter().copied());
    let si = ScdsInstance::new(inst, &forced).expect("universe matches");
    solve_scds(&si)
}

/// Closed-form ratio guarantees of the approximation scheme for a given `c`,
/// alongside the ratio `1/c - 1` of the trivial small-or-large subset scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxBound<T> {
    pub c: T,
    pub scheme_ratio: T,
    pub trivial_ratio: T,
    /// Numerical maximum of `1 + (1 - cx)(x - 2)` over `x ∈ [3, 1/c]`.
    pub numeric_max: f64,
}

pub fn approx_ratio_bound<T: Scalar>(c: T) -> Result<ApproxBound<T>> {
    check_fraction(&c)?;
    let one = T::one();
    let scheme_ratio = if c <= T::from_ratio(1, 4) {
        one.clone() / (T::from_count(4) * c.clone()) + c.clone()
    } else {
        T::from_count(2) - T::from_count(3) * c.clone()
    };
    let trivial_ratio = one.clone() / c.clone() - one;

    let cf = c.to_f64_lossy();
    let numeric_max = golden_section_max(|x| 1.0 + (1.0 - cf * x) * (x - 2.0), 3.0, 1.0 / cf);
    let closed = scheme_ratio.to_f64_lossy();
    if (numeric_max - closed).abs() > 1e-9 {
        return Err(Error::contract(format!(
            "closed-form ratio {closed} disagrees with numeric maximum {numeric_max}"
        )));
    }
    Ok(ApproxBound {
        c,
        scheme_ratio,
        trivial_ratio,
        numeric_max,
    })
}

/// Maximum of a unimodal function on `[lo, hi]`, including the endpoints.
fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let (a0, b0) = (lo, hi);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2).max(f(a0)).max(f(b0))
}
