//! Checks that `T(n) = C·αⁿ` satisfies every branching inequality of the
//! independent-edge-set search.
//!
//! A branching that leaves `mᵢ` subproblems each with `rᵢ` fewer vertices
//! holds for `α` when `1 >= Σ mᵢ·α^(-rᵢ)`; the margin is the difference.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ir_branch::Rule;
use crate::scalar::Scalar;

/// Margins this close to zero are not trusted in floating point.
pub const FLOAT_NOISE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Branch {
    pub multiplicity: u32,
    pub removed: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseParams {
    None,
    HighDegree {
        k: u32,
    },
    DegreeTwo {
        d_u: u32,
        d_w: u32,
        k: u32,
    },
    AdjacentDegreeThree {
        i1: u32,
        i2: u32,
        j1: u32,
        j2: u32,
        k_u: u32,
        k_v: u32,
    },
    Remaining {
        i: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// `1 >= Σ multiplicity · α^(-removed)`.
    Branching(Vec<Branch>),
    /// `α > (k + 1) / k`, which makes `k·α^(-k-2)` decreasing in `k`, so a
    /// single degree suffices for the high-degree rule.
    MonotoneTail { k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCase {
    pub rule: Rule,
    pub params: CaseParams,
    pub kind: CaseKind,
}

impl RecurrenceCase {
    fn branching(rule: Rule, params: CaseParams, branches: &[(u32, u32)]) -> Self {
        let branches = branches
            .iter()
            .filter(|&&(m, _)| m > 0)
            .map(|&(multiplicity, removed)| {
                debug_assert!(removed >= 1);
                Branch { multiplicity, removed }
            })
            .collect();
        RecurrenceCase {
            rule,
            params,
            kind: CaseKind::Branching(branches),
        }
    }

    /// Margin of the inequality at `alpha`; non-negative means it holds.
    pub fn margin<T: Scalar>(&self, alpha: &T) -> T {
        self.margin_with(alpha, &inverse_powers(alpha, self.max_removed()))
    }

    fn max_removed(&self) -> u32 {
        match &self.kind {
            CaseKind::Branching(branches) => branches.iter().map(|b| b.removed).max().unwrap_or(0),
            CaseKind::MonotoneTail { .. } => 0,
        }
    }

    /// `inv_pow[r]` must hold `α^(-r)` for every `r` used by this case.
    fn margin_with<T: Scalar>(&self, alpha: &T, inv_pow: &[T]) -> T {
        match &self.kind {
            CaseKind::Branching(branches) => branches.iter().fold(T::one(), |acc, b| {
                acc - T::from_count(b.multiplicity as usize) * inv_pow[b.removed as usize].clone()
            }),
            CaseKind::MonotoneTail { k } => alpha.clone() - T::from_ratio(i64::from(*k) + 1, i64::from(*k)),
        }
    }
}

impl fmt::Display for RecurrenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule.label())?;
        match (self.params, &self.kind) {
            (_, CaseKind::MonotoneTail { k }) => write!(f, "(alpha>{}/{k})", k + 1),
            (CaseParams::None, _) => Ok(()),
            (CaseParams::HighDegree { k }, _) => write!(f, "(k={k})"),
            (CaseParams::DegreeTwo { d_u, d_w, k }, _) => write!(f, "(d_u={d_u},d_w={d_w},k={k})"),
            (
                CaseParams::AdjacentDegreeThree {
                    i1,
                    i2,
                    j1,
                    j2,
                    k_u,
                    k_v,
                },
                _,
            ) => {
                write!(f, "(i1={i1},i2={i2},j1={j1},j2={j2},k_u={k_u},k_v={k_v})")
            }
            (CaseParams::Remaining { i }, _) => write!(f, "(i={i})"),
        }
    }
}

/// All inequalities over their full parameter ranges.
pub fn recurrence_cases() -> Vec<RecurrenceCase> {
    let mut cases = vec![
        RecurrenceCase::branching(Rule::Pendant, CaseParams::None, &[(1, 2), (1, 3)]),
        RecurrenceCase::branching(Rule::HighDegree, CaseParams::HighDegree { k: 8 }, &[(1, 1), (8, 10)]),
        RecurrenceCase {
            rule: Rule::HighDegree,
            params: CaseParams::HighDegree { k: 8 },
            kind: CaseKind::MonotoneTail { k: 8 },
        },
        RecurrenceCase::branching(Rule::AdjacentDegreeTwo, CaseParams::None, &[(3, 4)]),
    ];

    for d_u in 3..=7u32 {
        for d_w in 3..=7u32 {
            for k in 0..d_u.min(d_w) {
                cases.push(RecurrenceCase::branching(
                    Rule::DegreeTwo,
                    CaseParams::DegreeTwo { d_u, d_w, k },
                    &[
                        (1, d_u + 2),
                        (1, d_w + 2),
                        (1, 3),
                        ((d_u - k - 1) * (d_w - k - 1), d_u + d_w + 2 - k),
                    ],
                ));
            }
        }
    }

    for i1 in 3..=7u32 {
        for i2 in 3..=7u32 {
            for j1 in 1..=7u32 {
                for j2 in 1..=7u32 {
                    for k_u in 0..i1.min(i2) {
                        for k_v in 0..j1.min(j2) {
                            cases.push(RecurrenceCase::branching(
                                Rule::AdjacentDegreeThree,
                                CaseParams::AdjacentDegreeThree {
                                    i1,
                                    i2,
                                    j1,
                                    j2,
                                    k_u,
                                    k_v,
                                },
                                &[
                                    (5, 6),
                                    ((i1 - k_u - 1) * (i2 - k_u - 1), i1 + i2 - k_u + 3),
                                    ((j1 - k_v - 1) * (j2 - k_v - 1), j1 + j2 - k_v + 6),
                                ],
                            ));
                        }
                    }
                }
            }
        }
    }

    for i in 3..=7u32 {
        cases.push(RecurrenceCase::branching(
            Rule::Remaining,
            CaseParams::Remaining { i },
            &[(1, 1), (i, i + 4)],
        ));
    }
    cases
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Float margin within [`FLOAT_NOISE`] of zero.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct CaseOutcome<T> {
    pub case: RecurrenceCase,
    pub margin: T,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct RecurrenceReport<T> {
    pub alpha: T,
    pub outcomes: Vec<CaseOutcome<T>>,
    /// Index into `outcomes` of the smallest margin.
    pub binding: usize,
}

impl<T: Scalar> RecurrenceReport<T> {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.verdict == Verdict::Pass)
    }

    pub fn min_margin(&self) -> &T {
        &self.outcomes[self.binding].margin
    }

    pub fn binding_case(&self) -> &RecurrenceCase {
        &self.outcomes[self.binding].case
    }

    pub fn with_verdict(&self, verdict: Verdict) -> impl Iterator<Item = &CaseOutcome<T>> {
        self.outcomes.iter().filter(move |o| o.verdict == verdict)
    }
}

/// Evaluates every case at `alpha`. The powers involved overflow
/// `Rational64` for most decimal inputs; use `BigRational` for exact runs.
pub fn verify_recurrences<T: Scalar>(alpha: T) -> Result<RecurrenceReport<T>> {
    if alpha <= T::one() {
        return Err(Error::InvalidArgument(format!(
            "alpha must exceed 1, got {}",
            alpha.to_f64_lossy()
        )));
    }
    let cases = recurrence_cases();
    let max_removed = cases.iter().map(RecurrenceCase::max_removed).max().unwrap_or(0);
    let inv_pow = inverse_powers(&alpha, max_removed);
    // many parameter tuples share a branching vector
    let mut memo: HashMap<CaseKind, T> = HashMap::new();
    let outcomes: Vec<CaseOutcome<T>> = cases
        .into_iter()
        .map(|case| {
            let margin = memo
                .entry(case.kind.clone())
                .or_insert_with(|| case.margin_with(&alpha, &inv_pow))
                .clone();
            let verdict = classify(&margin);
            CaseOutcome { case, margin, verdict }
        })
        .collect();
    let binding = outcomes
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.margin.partial_cmp(&b.1.margin).expect("margins are comparable"))
        .map(|(i, _)| i)
        .expect("case list is non-empty");
    Ok(RecurrenceReport {
        alpha,
        outcomes,
        binding,
    })
}

fn inverse_powers<T: Scalar>(alpha: &T, max: u32) -> Vec<T> {
    let inv = T::one() / alpha.clone();
    let mut out = vec![T::one()];
    for r in 1..=max as usize {
        out.push(out[r - 1].clone() * inv.clone());
    }
    out
}

fn classify<T: Scalar>(margin: &T) -> Verdict {
    if !T::EXACT && margin.to_f64_lossy().abs() <= FLOAT_NOISE {
        Verdict::Inconclusive
    } else if *margin >= T::zero() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
