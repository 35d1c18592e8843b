//! Exhaustive reference solvers. No pruning beyond stopping at the first
//! feasible cardinality; they exist to be obviously correct.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{CapacitatedInstance, Graph, VertexSet};
use crate::irredundance::{is_irredundant, is_maximal_irredundant};
use crate::matching::verify_capacitated;

pub const DEFAULT_LIMIT: usize = 16;
pub const DEFAULT_OPTIMA_CAP: usize = 64;

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub size: usize,
    /// Optimal sets in enumeration order, at most `optima_cap` of them.
    pub all_optima: Vec<VertexSet>,
    /// Subsets examined.
    pub enumerated: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub limit: usize,
    pub optima_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: DEFAULT_LIMIT,
            optima_cap: DEFAULT_OPTIMA_CAP,
        }
    }
}

impl OracleConfig {
    fn admit(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::OracleLimit { n, limit: self.limit });
        }
        Ok(())
    }
}

fn subset(n: usize, members: &[usize]) -> VertexSet {
    VertexSet::from_iter(n, members.iter().copied())
}

/// Smallest capacitated dominating set by increasing-cardinality sweep.
pub fn brute_cds(inst: &CapacitatedInstance) -> Result<OracleResult> {
    brute_cds_with(inst, OracleConfig::default())
}

pub fn brute_cds_with(inst: &CapacitatedInstance, cfg: OracleConfig) -> Result<OracleResult> {
    let n = inst.n();
    cfg.admit(n)?;
    let mut enumerated = 0;
    for k in 0..=n {
        let mut optima = Vec::new();
        let mut any = false;
        for members in (0..n).combinations(k) {
            enumerated += 1;
            let s = subset(n, &members);
            if verify_capacitated(inst, &s).is_some() {
                any = true;
                if optima.len() < cfg.optima_cap {
                    optima.push(s);
                }
            }
        }
        if any {
            return Ok(OracleResult {
                size: k,
                all_optima: optima,
                enumerated,
            });
        }
    }
    unreachable!("the whole vertex set is always feasible")
}

/// Largest irredundant set over all `2ⁿ` subsets.
pub fn brute_ir_max(g: &Graph) -> Result<OracleResult> {
    brute_ir_max_with(g, OracleConfig::default())
}

pub fn brute_ir_max_with(g: &Graph, cfg: OracleConfig) -> Result<OracleResult> {
    sweep(g, cfg, |s| is_irredundant(g, s).is_some(), |a, b| a > b)
}

/// Smallest inclusion-maximal irredundant set over all `2ⁿ` subsets.
pub fn brute_ir_min(g: &Graph) -> Result<OracleResult> {
    brute_ir_min_with(g, OracleConfig::default())
}

pub fn brute_ir_min_with(g: &Graph, cfg: OracleConfig) -> Result<OracleResult> {
    sweep(
        g,
        cfg,
        |s| is_irredundant(g, s).is_some() && is_maximal_irredundant(g, s).unwrap_or(false),
        |a, b| a < b,
    )
}

fn sweep(
    g: &Graph,
    cfg: OracleConfig,
    feasible: impl Fn(&VertexSet) -> bool,
    better: impl Fn(usize, usize) -> bool,
) -> Result<OracleResult> {
    let n = g.n();
    cfg.admit(n)?;
    let mut best: Option<usize> = None;
    let mut optima = Vec::new();
    let mut enumerated = 0;
    for k in 0..=n {
        for members in (0..n).combinations(k) {
            enumerated += 1;
            let s = subset(n, &members);
            if !feasible(&s) {
                continue;
            }
            match best {
                Some(b) if b == k => {
                    if optima.len() < cfg.optima_cap {
                        optima.push(s);
                    }
                }
                Some(b) if !better(k, b) => {}
                _ => {
                    best = Some(k);
                    optima.clear();
                    optima.push(s);
                }
            }
        }
    }
    Ok(OracleResult {
        size: best.expect("the empty set is irredundant"),
        all_optima: optima,
        enumerated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cds_examples() {
        assert_eq!(brute_cds(&fixtures::star4()).unwrap().size, 1);
        let fig1 = brute_cds(&fixtures::figure1()).unwrap();
        assert_eq!(fig1.size, 4);
        assert!(fig1.all_optima.contains(&fixtures::fig1_set(&["A", "C", "D", "L"])));

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let zero = CapacitatedInstance::new(k2, vec![0, 0]).unwrap();
        assert_eq!(brute_cds(&zero).unwrap().size, 2);
    }

    #[test]
    fn ir_max_examples() {
        let p4 = brute_ir_max(&fixtures::p4()).unwrap();
        assert_eq!(p4.size, 2);
        let optima: Vec<Vec<usize>> = p4.all_optima.iter().map(VertexSet::to_vec).collect();
        assert_eq!(optima, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        assert_eq!(p4.enumerated, 16);
        assert_eq!(brute_ir_max(&fixtures::k1()).unwrap().size, 1);
        assert_eq!(brute_ir_max(&fixtures::c5()).unwrap().size, 2);
    }

    #[test]
    fn ir_min_examples() {
        assert_eq!(brute_ir_min(&fixtures::p4()).unwrap().size, 2);
        assert_eq!(brute_ir_min(&fixtures::k1()).unwrap().size, 1);
        let star = brute_ir_min(fixtures::star4().graph()).unwrap();
        assert_eq!(star.size, 1);
        assert_eq!(star.all_optima[0].to_vec(), vec![0]);
    }

    #[test]
    fn refuses_large_instances() {
        let g = Graph::empty(17);
        assert_eq!(brute_ir_max(&g).unwrap_err(), Error::OracleLimit { n: 17, limit: 16 });
        let cfg = OracleConfig {
            limit: 20,
            optima_cap: 1,
        };
        assert_eq!(brute_ir_max_with(&g, cfg).unwrap().size, 17);
    }
}
