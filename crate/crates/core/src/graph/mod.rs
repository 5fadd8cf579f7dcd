//! Simple undirected graphs on vertices `1..=n`, stored as adjacency bitmasks.
//!
//! Everything downstream (ideals, minors, incidence matrices) is driven by
//! the connected induced subsets computed here.

mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_VARS;

pub use graph6::parse_graph6;

/// A set of vertices (or variables), bit `i - 1` standing for label `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in labels {
            s.insert(v);
        }
        s
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VARS).contains(&v));
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VARS).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Largest label in the set, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = labels.iter().find(|&&v| v == 0 || v > MAX_VARS) {
            return Err(serde::de::Error::custom(format!("vertex label {bad} out of range")));
        }
        Ok(VertexSet::from_labels(labels))
    }
}

/// Path or cycle detection result, up to relabeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    Path(usize),
    Cycle(usize),
    Other,
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::InvalidArgument(format!("vertex {w} outside 1..={}", self.n)));
            }
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    /// `P_n`: edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("path needs at least one vertex".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n`: the path edges plus `{1, n}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a simple cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(1, n)?;
        Ok(g)
    }

    /// `K_{1,leaves}` with centre `1`.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("complete graph needs at least one vertex".into()));
        }
        let mut g = Graph::empty(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in VertexSet(self.adj[u - 1]).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// The graph with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || VertexSet::from_labels(perm.iter().copied()) != self.vertices() {
            return Err(Error::InvalidArgument("relabeling is not a permutation of the vertices".into()));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u - 1], perm[v - 1])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Whether the induced subgraph on `set` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        let set = set.bits();
        if set == 0 {
            return true;
        }
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_set(self.vertices())
    }

    /// All `t`-subsets of the vertices inducing a connected subgraph, in
    /// lexicographic order of their sorted member lists.
    pub fn connected_induced_subsets(&self, t: usize) -> Result<Vec<VertexSet>> {
        if t == 0 || t > self.n {
            return Err(Error::InvalidArgument(format!("t = {t} outside 1..={}", self.n)));
        }
        let mut out = Vec::new();
        self.extend_subsets(0, t, 0, &mut out);
        Ok(out)
    }

    // Lexicographic combination walk. A partial choice whose vertices are
    // separated by a gap nothing later can bridge is abandoned early.
    fn extend_subsets(&self, chosen: u64, remaining: usize, next: usize, out: &mut Vec<VertexSet>) {
        if remaining == 0 {
            if self.is_connected_set(VertexSet(chosen)) {
                out.push(VertexSet(chosen));
            }
            return;
        }
        for v in next..=self.n - remaining {
            let with = chosen | 1 << v;
            if !self.could_connect(with, v + 1) {
                continue;
            }
            self.extend_subsets(with, remaining - 1, v + 1, out);
        }
    }

    // Every component of `chosen` must touch a vertex with index >= `from`
    // (0-based), or be the whole of `chosen`.
    fn could_connect(&self, chosen: u64, from: usize) -> bool {
        let later = if from >= 64 { 0 } else { u64::MAX << from } & VertexSet::full(self.n).bits();
        let mut rest = chosen;
        let mut components = 0;
        let mut isolated = false;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & chosen & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            components += 1;
            let reach = comp.iter_bits().fold(0, |acc, v| acc | self.adj[v]);
            if reach & later == 0 {
                isolated = true;
            }
        }
        components == 1 || !isolated
    }

    /// Vertices whose deletion leaves the graph connected. A single vertex
    /// graph has its one vertex non-cut.
    pub fn non_cut_vertices(&self) -> Result<VertexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.non_cut_within(self.vertices()))
    }

    /// Non-cut vertices of the induced subgraph on a connected `set`.
    pub fn non_cut_within(&self, set: VertexSet) -> VertexSet {
        if set.len() <= 1 {
            return set;
        }
        VertexSet::from_labels(set.iter().filter(|&v| {
            let mut rest = set;
            rest.remove(v);
            self.is_connected_set(rest)
        }))
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![0u8; self.n];
        for root in 0..self.n {
            if colour[root] != 0 {
                continue;
            }
            colour[root] = 1;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in VertexSet(self.adj[u]).iter() {
                    let w = w - 1;
                    if colour[w] == 0 {
                        colour[w] = 3 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Recognises paths and cycles regardless of labeling.
    pub fn classify_shape(&self) -> Result<Shape> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n;
        let max_degree = (1..=n).map(|v| self.degree(v)).max().unwrap_or(0);
        let edges = self.edge_count();
        Ok(if max_degree <= 2 && edges + 1 == n {
            Shape::Path(n)
        } else if n >= 3 && edges == n && (1..=n).all(|v| self.degree(v) == 2) {
            Shape::Cycle(n)
        } else {
            Shape::Other
        })
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    /// Every connected labeled graph on `n` vertices, in increasing order of
    /// the upper-triangle edge bitmask (graph6 bit order).
    pub fn connected_labeled(n: usize) -> Result<Vec<Graph>> {
        if n == 0 || n > 8 {
            return Err(Error::InvalidArgument(format!("labeled enumeration supports 1..=8 vertices, got {n}")));
        }
        let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::empty(n)?;
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(u, v)?;
                }
            }
            if g.is_connected() {
                out.push(g);
            }
        }
        Ok(out)
    }
}

trait BitIter {
    fn iter_bits(self) -> BitIndices;
}

struct BitIndices(u64);

impl Iterator for BitIndices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl BitIter for u64 {
    fn iter_bits(self) -> BitIndices {
        BitIndices(self)
    }
}
