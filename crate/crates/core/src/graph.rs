//! Immutable simple graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so vertex sets are bitmasks and most
//! primitives are a handful of word operations.

use std::fmt;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices in `0..64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        let mut s = 0u64;
        for v in it {
            s |= 1u64 << v;
        }
        VertexSet(s)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let range = VertexSet::full(n).0;
        for (v, &row) in rows.iter().enumerate() {
            if row & !range != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - (row & !range).leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    // Rows are trusted: symmetric, irreflexive, in range.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
        }
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(VertexSet(self.adj[u] & self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Contracts the edge `uv`.
    ///
    /// The merged vertex takes the slot of `min(u, v)`; every other vertex keeps
    /// its relative order and the labels are compacted to `0..n-1`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut rows = self.adj.clone();
        let merged = (rows[keep] | rows[gone]) & !(1u64 << keep) & !(1u64 << gone);
        for w in VertexSet(rows[gone]) {
            rows[w] |= 1u64 << keep;
        }
        rows[keep] = merged;
        for w in VertexSet(merged) {
            rows[w] |= 1u64 << keep;
        }
        let g = Graph { n: self.n, adj: rows };
        Ok(g.remove_vertex_unchecked(gone))
    }

    fn remove_vertex_unchecked(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let squeeze = |r: u64| (r & low) | ((r >> 1) & !low);
        let adj = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| squeeze(self.adj[w] & !(1u64 << v)))
            .collect();
        Graph { n: self.n - 1, adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.remove_vertex_unchecked(v))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Returns `g + uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Joins every pair of vertices of `z`.
    pub fn add_clique(&self, z: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(z)?;
        let mut g = self.clone();
        for v in z {
            g.adj[v] |= z.0 & !(1u64 << v);
        }
        Ok(g)
    }

    /// `G[X]`, relabeled so that the members of `x` become `0..|x|` in increasing order.
    pub fn induced_subgraph(&self, x: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(x)?;
        let members = x.to_vec();
        let adj = members
            .iter()
            .map(|&v| compress(self.adj[v] & x.0, x.0))
            .collect();
        Ok(Graph { n: members.len(), adj })
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(GraphError::BadPermutation);
            }
            seen |= 1u64 << p;
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0u64;
            for w in self.neighbors(v) {
                row |= 1u64 << perm[w];
            }
            adj[perm[v]] = row;
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start.0 & within.0;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Whether `G[s]` is connected. The empty set is not connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach(VertexSet::singleton(v), s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.vertices())
    }

    /// Connected components, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(VertexSet::singleton(v), left);
            out.push(c);
            left = left.difference(c);
        }
        out
    }

    /// Neighbors of a set, excluding the set itself.
    pub fn set_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.0)
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits of the result.
#[inline]
pub(crate) fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m & m.wrapping_neg();
        if row & b != 0 {
            out |= 1u64 << i;
        }
        i += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
