//! Smallest inclusion-maximal irredundant set by iterative deepening.
//!
//! Irredundant sets are closed under taking subsets, so depth-first search
//! that only extends by vertices above the current maximum, and prunes
//! non-irredundant extensions, visits each irredundant set exactly once.
//! The sweep for budget `k = 0, 1, …` stops at the first maximal set.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::irredundance::IrredundantWitness;

/// Upper bound on the size of the sets enumerated in one sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthBudget(usize);

impl DepthBudget {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidArgument(format!("budget {k} exceeds {n} vertices")));
        }
        Ok(DepthBudget(k))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Incrementally maintained irredundance data for a growing set.
///
/// `count[u]` is the number of members dominating `u`, `xor[u]` the xor of
/// their ids (so the sole dominator is `xor[u]` when `count[u] == 1`), and
/// `private[v]` the number of vertices only `v` dominates.
struct IncrementalSet<'g> {
    g: &'g Graph,
    members: Vec<usize>,
    in_set: VertexSet,
    count: Vec<u32>,
    xor: Vec<usize>,
    private: Vec<u32>,
    /// Members whose private count dropped to zero, with multiplicity.
    starved: usize,
}

impl<'g> IncrementalSet<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        IncrementalSet {
            g,
            members: Vec::new(),
            in_set: VertexSet::empty(n),
            count: vec![0; n],
            xor: vec![0; n],
            private: vec![0; n],
            starved: 0,
        }
    }

    fn for_closed(&self, w: usize) -> impl Iterator<Item = usize> + 'g {
        let g = self.g;
        std::iter::once(w).chain(g.neighbor_list(w).iter().copied())
    }

    /// Adds `w`; the set stays irredundant iff this returns true. Always
    /// pair with [`Self::pop`].
    fn push(&mut self, w: usize) -> bool {
        for u in self.for_closed(w) {
            self.count[u] += 1;
            self.xor[u] ^= w;
            match self.count[u] {
                1 => self.private[w] += 1,
                2 => {
                    let other = self.xor[u] ^ w;
                    self.private[other] -= 1;
                    if self.private[other] == 0 {
                        self.starved += 1;
                    }
                }
                _ => {}
            }
        }
        if self.private[w] == 0 {
            self.starved += 1;
        }
        self.members.push(w);
        self.in_set.insert(w);
        self.starved == 0
    }

    fn pop(&mut self) {
        let w = self.members.pop().expect("pop on empty set");
        self.in_set.remove(w);
        if self.private[w] == 0 {
            self.starved -= 1;
        }
        for u in self.for_closed(w) {
            match self.count[u] {
                1 => self.private[w] -= 1,
                2 => {
                    let other = self.xor[u] ^ w;
                    if self.private[other] == 0 {
                        self.starved -= 1;
                    }
                    self.private[other] += 1;
                }
                _ => {}
            }
            self.count[u] -= 1;
            self.xor[u] ^= w;
        }
    }

    fn len(&self) -> usize {
        self.members.len()
    }

    fn witness(&self) -> IrredundantWitness {
        let unique_of = self
            .members
            .iter()
            .map(|&v| {
                let u = self
                    .for_closed(v)
                    .filter(|&u| self.count[u] == 1)
                    .min()
                    .expect("members of an irredundant set have unique vertices");
                (v, u)
            })
            .collect();
        IrredundantWitness { unique_of }
    }

    /// No outside vertex can be added while keeping irredundance.
    fn is_maximal(&mut self) -> bool {
        for v in 0..self.g.n() {
            if self.in_set.contains(v) {
                continue;
            }
            let ok = self.push(v);
            self.pop();
            if ok {
                return false;
            }
        }
        true
    }
}

/// A set handed to the [`enumerate_irredundant`] callback.
pub struct Visit<'a, 'g> {
    state: &'a IncrementalSet<'g>,
}

impl Visit<'_, '_> {
    pub fn set(&self) -> &VertexSet {
        &self.state.in_set
    }

    pub fn len(&self) -> usize {
        self.state.len()
    }

    pub fn is_empty(&self) -> bool {
        self.state.len() == 0
    }

    /// Lowest-id unique vertex for each member.
    pub fn witness(&self) -> IrredundantWitness {
        self.state.witness()
    }
}

/// Calls `visit` once for every irredundant set of size at most `k`, in
/// canonical depth-first order (starting with `∅`). Returns the number of
/// sets visited.
pub fn enumerate_irredundant<F>(g: &Graph, k: DepthBudget, mut visit: F) -> u64
where
    F: FnMut(&Visit<'_, '_>) -> ControlFlow<()>,
{
    let mut state = IncrementalSet::new(g);
    let mut visited = 0;
    let _ = dfs(&mut state, 0, k.get(), &mut |s| {
        visited += 1;
        visit(&Visit { state: s })
    });
    visited
}

fn dfs<F>(state: &mut IncrementalSet<'_>, from: usize, budget: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&mut IncrementalSet<'_>) -> ControlFlow<()>,
{
    visit(state)?;
    if state.len() == budget {
        return ControlFlow::Continue(());
    }
    for v in from..state.g.n() {
        if state.in_set.contains(v) {
            continue;
        }
        let ok = state.push(v);
        let flow = if ok {
            dfs(state, v + 1, budget, visit)
        } else {
            ControlFlow::Continue(())
        };
        state.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

#[derive(Debug, Clone)]
pub struct IrMinResult {
    pub size: usize,
    pub set: VertexSet,
    pub witness: IrredundantWitness,
    /// Sets visited over all sweeps.
    pub nodes: u64,
}

/// Smallest inclusion-maximal irredundant set of `g`. Isolated vertices
/// belong to every maximal irredundant set and seed every candidate.
pub fn solve_ir_min(g: &Graph) -> IrMinResult {
    let mut state = IncrementalSet::new(g);
    for v in g.isolated_vertices().iter() {
        let ok = state.push(v);
        debug_assert!(ok);
    }
    let forced = state.len();
    let mut nodes = 0u64;

    for k in forced..=g.n() {
        let mut found = None;
        let _ = dfs(&mut state, 0, k, &mut |s| {
            nodes += 1;
            if s.len() == k && s.is_maximal() {
                found = Some(IrMinResult {
                    size: k,
                    set: s.in_set.clone(),
                    witness: s.witness(),
                    nodes: 0,
                });
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Some(mut result) = found {
            result.nodes = nodes;
            return result;
        }
    }
    unreachable!("a largest irredundant set is always inclusion-maximal")
}
