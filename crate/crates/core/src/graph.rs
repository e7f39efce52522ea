//! Simple undirected graphs on at most 64 vertices, stored as bitset
//! adjacency rows.
//!
//! Vertices are 0-based inside the library. Text formats and `Display`
//! impls use 1-based labels.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, stored as a bitmask. Iteration is always ascending.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// Builds a set from 1-based labels, as written in files and examples.
    pub fn one_based(labels: &[usize]) -> Self {
        labels
            .iter()
            .map(|&l| {
                assert!((1..=MAX_VERTICES).contains(&l), "label {l} out of range");
                l - 1
            })
            .collect()
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
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

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Shifts every member up by `offset`.
    pub fn shifted(self, offset: usize) -> VertexSet {
        if self.0 == 0 {
            return self;
        }
        debug_assert!(64 - self.0.leading_zeros() as usize + offset <= MAX_VERTICES);
        VertexSet(self.0 << offset)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Canonical ordering used for every list of vertex sets in output:
    /// by size, then lexicographically on the ascending member lists.
    pub fn canonical_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }

    /// Lexicographic order on the ascending member lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

/// Serialized as the ascending list of 1-based labels.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|v| v + 1))
    }
}

/// A simple undirected graph on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// An induced subgraph together with the map from its vertices back to the
/// host graph.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the host vertex relabeled to `i`.
    pub map: Vec<usize>,
}

impl Induced {
    /// Translates a vertex set of the subgraph into host labels.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.map[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is allowed here; I/O and the
    /// named constructors reject it.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges, rejecting loops and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w + 1, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u + 1));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge { u: u.min(v) + 1, v: u.max(v) + 1 });
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Inserts an edge; idempotent. Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn induced_subgraph(&self, set: VertexSet) -> Induced {
        debug_assert!(set.is_subset(self.vertices()));
        let map: Vec<usize> = set.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Graph { n: map.len(), adj: vec![0; map.len()] };
        for (i, &v) in map.iter().enumerate() {
            for w in self.neighbors(v).intersection(set) {
                graph.adj[i] |= 1u64 << index[w];
            }
        }
        Induced { graph, map }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.0;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// their minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach(v, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    pub fn count_components_within(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.min() {
            rest = rest.difference(self.reach(v, rest));
            count += 1;
        }
        count
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for nonempty graphs with exactly one component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()) == self.vertices()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Copy of `self` with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Chordality via maximum cardinality search: the visit order is a
    /// reversed perfect elimination ordering iff the graph is chordal, which
    /// holds iff the already-visited neighbours of every vertex form a clique.
    pub fn is_chordal(&self) -> bool {
        let order = self.maximum_cardinality_search();
        let mut visited = VertexSet::EMPTY;
        for &v in &order {
            let earlier = self.neighbors(v).intersection(visited);
            if !self.is_clique(earlier) {
                return false;
            }
            visited.insert(v);
        }
        true
    }

    /// Visit order of maximum cardinality search, ties broken by smallest
    /// vertex.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut unvisited = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        while !unvisited.is_empty() {
            let v = unvisited
                .iter()
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("nonempty");
            order.push(v);
            unvisited.remove(v);
            for w in self.neighbors(v).intersection(unvisited) {
                weight[w] += 1;
            }
        }
        order
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::named_empty(n)?;
        let full = g.vertices().0;
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    /// `n` isolated vertices, the complement of `K_n`.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::named_empty(n)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::named_empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    /// `K_{n_1, .., n_t}` with parts numbered consecutively in the given
    /// order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("parts must be nonempty and positive".into()));
        }
        let n: usize = parts.iter().sum();
        let mut g = Graph::named_empty(n)?;
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union with the summands' vertex blocks laid out consecutively.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(Graph::n).sum();
        let mut g = Graph::named_empty(n)?;
        let mut offset = 0;
        for p in parts {
            for v in 0..p.n {
                g.adj[offset + v] = p.adj[v] << offset;
            }
            offset += p.n;
        }
        Ok(g)
    }

    fn named_empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Graph::empty(n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        f.write_str("])")
    }
}
