//! Generation of graphs up to isomorphism by canonical vertex augmentation.
//!
//! A graph `C` on `m + 1` vertices has one canonical parent: `C − w`, where `w`
//! is the minimum-degree vertex with the largest canonical position. A child
//! `P + v` is kept when `v` is a minimum-degree vertex and `P + v − w ≅ P`;
//! isomorphic children of the same parent are merged. Edge bounds and a
//! minimum-degree bound for connectivity prune intermediate levels, since
//! along the parent chain edges only grow and the minimum degree grows by at
//! most one per level. Dense requests are generated as complements; there the
//! connectivity bound becomes a maximum degree, which is never exceeded by an
//! induced subgraph.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, Code};
use crate::connectivity::is_k_connected;
use crate::error::EnumError;
use crate::graph::{Graph, VertexSet};

/// Largest order for native generation.
pub const MAX_GENERATED: usize = 11;

type Test = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct Predicate {
    name: String,
    test: Test,
}

impl Predicate {
    pub fn new(name: impl Into<String>, test: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Predicate {
        Predicate { name: name.into(), test: Arc::new(test) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn test(&self, g: &Graph) -> bool {
        (self.test)(g)
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Predicate({})", self.name)
    }
}

/// Order, edge bounds, minimum vertex connectivity and extra named tests.
#[derive(Clone, Debug)]
pub struct GraphFilter {
    pub n: usize,
    pub min_edges: usize,
    pub max_edges: Option<usize>,
    /// `0` disables the connectivity test.
    pub min_connectivity: usize,
    pub predicates: Vec<Predicate>,
}

impl GraphFilter {
    pub fn new(n: usize) -> GraphFilter {
        GraphFilter { n, min_edges: 0, max_edges: None, min_connectivity: 0, predicates: Vec::new() }
    }

    pub fn min_edges(mut self, e: usize) -> GraphFilter {
        self.min_edges = e;
        self
    }

    pub fn max_edges(mut self, e: usize) -> GraphFilter {
        self.max_edges = Some(e);
        self
    }

    pub fn min_connectivity(mut self, k: usize) -> GraphFilter {
        self.min_connectivity = k;
        self
    }

    pub fn with(mut self, p: Predicate) -> GraphFilter {
        self.predicates.push(p);
        self
    }

    pub fn edge_cap(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn upper(&self) -> usize {
        self.max_edges.unwrap_or(self.edge_cap()).min(self.edge_cap())
    }

    pub fn check(&self) -> Result<(), EnumError> {
        if self.n > MAX_GENERATED {
            return Err(EnumError::UnsupportedOrder(self.n));
        }
        let cap = self.edge_cap();
        let max = self.max_edges.unwrap_or(cap);
        if self.min_edges > max || max > cap {
            return Err(EnumError::InconsistentBounds { min: self.min_edges, max, cap });
        }
        Ok(())
    }

    /// Whether `g` passes every condition. Usable on graphs of any origin.
    pub fn accepts(&self, g: &Graph) -> bool {
        let e = g.edge_count();
        g.n() == self.n
            && e >= self.min_edges
            && e <= self.upper()
            && (self.min_connectivity == 0 || is_k_connected(g, self.min_connectivity))
            && self.predicates.iter().all(|p| p.test(g))
    }
}

/// One canonically labeled representative per isomorphism class passing the
/// filter, in increasing canonical-form order.
pub fn generate_graphs(filter: &GraphFilter) -> Result<Vec<Graph>, EnumError> {
    filter.check()?;
    let n = filter.n;
    let cap = filter.edge_cap();
    let upper = filter.upper();
    // dense requests are cheaper through the complements
    let flip = filter.min_edges > cap / 2;
    let bounds = if flip {
        // minimum degree k in G is maximum degree n − 1 − k in the complement
        let max_degree = n.saturating_sub(1).saturating_sub(filter.min_connectivity);
        Bounds { n, min_edges: cap - upper, max_edges: cap - filter.min_edges, min_degree: 0, max_degree }
    } else {
        let max_degree = usize::MAX;
        Bounds { n, min_edges: filter.min_edges, max_edges: upper, min_degree: filter.min_connectivity, max_degree }
    };
    // the last level is filtered as it is produced, so only accepted graphs are kept
    let finish = |code: Code, g: Graph| -> Option<(Code, Graph)> {
        if flip {
            let g = g.complement();
            if !filter.accepts(&g) {
                return None;
            }
            let lab = canonical_labeling(&g);
            let canon = lab.code.to_graph(n);
            Some((lab.code, canon))
        } else {
            filter.accepts(&g).then_some((code, g))
        }
    };
    let mut out: Vec<(Code, Graph)> = if n == 0 {
        let g = Graph::empty(0).expect("n = 0");
        finish(Code::of_graph(&g), g).into_iter().collect()
    } else {
        generate(&bounds, finish)
    };
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Number of classes passing the filter.
pub fn count_graphs(filter: &GraphFilter) -> Result<usize, EnumError> {
    generate_graphs(filter).map(|v| v.len())
}

/// Canonical representatives of the distinct classes in `graphs` that pass the
/// filter, in canonical order. This is the entry point for external streams.
pub fn canonical_classes<I: IntoIterator<Item = Graph>>(graphs: I, filter: &GraphFilter) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out: Vec<(Code, Graph)> = Vec::new();
    for g in graphs {
        if !filter.accepts(&g) {
            continue;
        }
        let lab = canonical_labeling(&g);
        if seen.insert(lab.code.clone()) {
            let canon = lab.code.to_graph(g.n());
            out.push((lab.code, canon));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

struct Bounds {
    n: usize,
    min_edges: usize,
    max_edges: usize,
    min_degree: usize,
    max_degree: usize,
}

impl Bounds {
    /// Whether a graph on `m` vertices with `e` edges and minimum degree `delta`
    /// can still grow into an accepted graph on `n` vertices.
    fn viable(&self, m: usize, e: usize, delta: usize) -> bool {
        let r = self.n - m;
        // edges still addable: each new vertex joins all earlier ones
        let room = r * m + r * r.saturating_sub(1) / 2;
        e <= self.max_edges && e + room >= self.min_edges && delta + r >= self.min_degree
    }
}

fn generate<F>(bounds: &Bounds, finish: F) -> Vec<(Code, Graph)>
where
    F: Fn(Code, Graph) -> Option<(Code, Graph)> + Sync,
{
    let first = Graph::empty(1).expect("n = 1");
    if !bounds.viable(1, 0, 0) {
        return Vec::new();
    }
    if bounds.n == 1 {
        return finish(Code::of_graph(&first), first).into_iter().collect();
    }
    let mut level = vec![first];
    for m in 1..bounds.n - 1 {
        level = level.par_iter().flat_map_iter(|p| children(p, m, bounds).into_iter().map(|(_, g)| g)).collect();
    }
    let m = bounds.n - 1;
    level
        .par_iter()
        .flat_map_iter(|p| children(p, m, bounds).into_iter().filter_map(|(code, g)| finish(code, g)))
        .collect()
}

/// Accepted children of the canonically labeled parent `p` on `m` vertices.
fn children(p: &Graph, m: usize, bounds: &Bounds) -> Vec<(Code, Graph)> {
    let parent_code = Code::of_graph(p);
    let degrees: Vec<usize> = (0..m).map(|v| p.degree(v)).collect();
    let pe = p.edge_count();
    let mut seen: HashSet<Code> = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << m) {
        let d = s.count_ones() as usize;
        // the new vertex must have minimum degree
        let delta = (0..m).map(|v| degrees[v] + (s >> v & 1) as usize).min().unwrap_or(usize::MAX);
        if d > delta || d > bounds.max_degree {
            continue;
        }
        if VertexSet(s).iter().any(|v| degrees[v] + 1 > bounds.max_degree) {
            continue;
        }
        if !bounds.viable(m + 1, pe + d, d) {
            continue;
        }
        let mut rows = p.rows().to_vec();
        for v in VertexSet(s) {
            rows[v] |= 1u64 << m;
        }
        rows.push(s);
        let child = Graph::from_rows_unchecked(rows);
        let lab = canonical_labeling(&child);
        let pos = lab.positions();
        let w = (0..=m).filter(|&v| child.degree(v) == d).max_by_key(|&v| pos[v]).expect("new vertex qualifies");
        if w != m {
            let rest = child.delete_vertex(w).expect("w is a vertex");
            if canonical_labeling(&rest).code != parent_code {
                continue;
            }
        }
        if seen.insert(lab.code.clone()) {
            let g = lab.code.to_graph(m + 1);
            out.push((lab.code, g));
        }
    }
    out
}
