//! Simple undirected graphs, vertex sets, closed neighbourhoods and
//! capacitated instances.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of `0..universe`, stored as a dense bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Panics if any member is `>= universe`.
    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = Self::empty(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe());
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits.set(v, false);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is kept both as bitsets (for set algebra) and as sorted lists
/// (for traversal). Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    lists: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::empty(n); n],
            lists: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut builder = GraphBuilder::new(n);
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbor_list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `N̄(v)`: `v` together with its neighbours.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.n(), (0..self.n()).filter(|&v| self.degree(v) == 0))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for &w in &self.lists[v] {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
    m: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn build(self) -> Graph {
        let lists = self.adj.iter().map(VertexSet::to_vec).collect();
        Graph {
            adj: self.adj,
            lists,
            m: self.m,
        }
    }
}

/// `N̄(W)`, the union of closed neighbourhoods over `w`.
pub fn closed_neighborhood(g: &Graph, w: &VertexSet) -> VertexSet {
    let mut out = w.clone();
    for v in w.iter() {
        out.union_with(g.neighbors(v));
    }
    out
}

pub fn is_dominating(g: &Graph, w: &VertexSet) -> bool {
    closed_neighborhood(g, w).len() == g.n()
}

/// A graph with a non-negative capacity per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacitatedInstance {
    graph: Graph,
    capacity: Vec<usize>,
}

impl CapacitatedInstance {
    /// Capacities above `n - 1` are clamped, since no vertex has more than
    /// `n - 1` others to dominate.
    pub fn new(graph: Graph, capacity: Vec<usize>) -> Result<Self> {
        if capacity.len() != graph.n() {
            return Err(Error::InvalidArgument(format!(
                "{} capacities for {} vertices",
                capacity.len(),
                graph.n()
            )));
        }
        let cap_max = graph.n().saturating_sub(1);
        let capacity = capacity.into_iter().map(|c| c.min(cap_max)).collect();
        Ok(CapacitatedInstance { graph, capacity })
    }

    pub fn uniform(graph: Graph, c: usize) -> Self {
        let n = graph.n();
        Self::new(graph, vec![c; n]).expect("length matches")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn capacity(&self, v: usize) -> usize {
        self.capacity[v]
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacity
    }

    pub fn max_capacity(&self) -> usize {
        self.capacity.iter().copied().max().unwrap_or(0)
    }
}

/// The dominating function `f_S`: each vertex outside `S` maps to the
/// member of `S` that dominates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationWitness {
    assignment: Vec<Option<usize>>,
}

impl DominationWitness {
    pub fn new(n: usize) -> Self {
        DominationWitness {
            assignment: vec![None; n],
        }
    }

    pub fn assign(&mut self, v: usize, dominator: usize) {
        self.assignment[v] = Some(dominator);
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    /// `(v, f(v))` pairs in increasing `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|d| (v, d)))
    }

    pub fn domain_len(&self) -> usize {
        self.assignment.iter().flatten().count()
    }

    /// `|f⁻¹(w)|` for every vertex.
    pub fn load(&self) -> Vec<usize> {
        let mut load = vec![0; self.assignment.len()];
        for (_, d) in self.pairs() {
            load[d] += 1;
        }
        load
    }

    /// Re-checks that this witness certifies `s` as a capacitated
    /// dominating set of `inst`.
    pub fn check(&self, inst: &CapacitatedInstance, s: &VertexSet) -> Result<()> {
        let g = inst.graph();
        if self.assignment.len() != g.n() || s.universe() != g.n() {
            return Err(Error::contract("witness size does not match instance"));
        }
        for v in 0..g.n() {
            match (s.contains(v), self.assignment[v]) {
                (true, Some(_)) => return Err(Error::contract(format!("member {v} is also assigned"))),
                (false, None) => return Err(Error::contract(format!("vertex {v} is not dominated"))),
                (false, Some(d)) => {
                    if !s.contains(d) {
                        return Err(Error::contract(format!("{v} assigned to non-member {d}")));
                    }
                    if !g.has_edge(v, d) {
                        return Err(Error::contract(format!("{v} assigned to non-neighbour {d}")));
                    }
                }
                (true, None) => {}
            }
        }
        for (w, load) in self.load().into_iter().enumerate() {
            if load > inst.capacity(w) {
                return Err(Error::contract(format!(
                    "vertex {w} dominates {load} > capacity {}",
                    inst.capacity(w)
                )));
            }
        }
        Ok(())
    }
}

/// Reads the line-oriented instance format:
///
/// ```text
/// c comment
/// p cds <n> <m>
/// w <v> <capacity>
/// e <u> <v>
/// ```
///
/// Vertex ids are 1-based in the file. Missing `w` lines mean capacity 0.
pub fn parse_instance(text: &str) -> Result<CapacitatedInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut capacity: Vec<Option<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                if rest.len() != 3 || rest[0] != "cds" {
                    return Err(Error::parse(line_no, "malformed header, expected `p cds <n> <m>`"));
                }
                let n = parse_count(rest[1], line_no)?;
                let m = parse_count(rest[2], line_no)?;
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
                capacity = vec![None; n];
            }
            "w" | "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "data line before header"));
                };
                if rest.len() != 2 {
                    return Err(Error::parse(line_no, format!("`{tag}` line needs two fields")));
                }
                if tag == "w" {
                    let v = parse_vertex(rest[0], n, line_no)?;
                    let cap = parse_count(rest[1], line_no)?;
                    if capacity[v].replace(cap).is_some() {
                        return Err(Error::parse(
                            line_no,
                            format!("duplicate capacity for vertex {}", v + 1),
                        ));
                    }
                } else {
                    let u = parse_vertex(rest[0], n, line_no)?;
                    let v = parse_vertex(rest[1], n, line_no)?;
                    let b = builder.as_mut().expect("header seen");
                    if u == v {
                        return Err(Error::parse(line_no, format!("self-loop at vertex {}", u + 1)));
                    }
                    if b.has_edge(u, v) {
                        return Err(Error::parse(line_no, format!("duplicate edge {} {}", u + 1, v + 1)));
                    }
                    b.add_edge(u, v).map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
            }
            other => return Err(Error::parse(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let Some((_, m)) = header else {
        return Err(Error::parse(text.lines().count().max(1), "missing `p cds` header"));
    };
    let graph = builder.expect("header seen").build();
    if graph.m() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("header declares {m} edges, found {}", graph.m()),
        ));
    }
    let capacity = capacity.into_iter().map(|c| c.unwrap_or(0)).collect();
    CapacitatedInstance::new(graph, capacity)
}

fn parse_count(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got `{field}`")))
}

fn parse_vertex(field: &str, n: usize, line: usize) -> Result<usize> {
    let id = parse_count(field, line)?;
    if id == 0 || id > n {
        return Err(Error::parse(line, format!("vertex id {id} out of range 1..={n}")));
    }
    Ok(id - 1)
}

/// Writes an instance in the format read by [`parse_instance`]. Zero
/// capacities are omitted.
pub fn serialize_instance(inst: &CapacitatedInstance) -> String {
    let g = inst.graph();
    let mut out = format!("p cds {} {}\n", g.n(), g.m());
    for (v, &c) in inst.capacities().iter().enumerate() {
        if c > 0 {
            out.push_str(&format!("w {} {}\n", v + 1, c));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
