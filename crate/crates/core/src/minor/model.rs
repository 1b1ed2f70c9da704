use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::patterns::{Pattern, RootMode};

/// A model of `pattern` in `host`: `bags[u]` is the branch set of pattern vertex `u`.
///
/// `root_binding` lists `(pattern vertex, host vertex)` pairs in the order of
/// the pattern's roots. It is empty for unrooted models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub host: Graph,
    pub pattern: Pattern,
    pub bags: Vec<VertexSet>,
    pub root_binding: Vec<(usize, usize)>,
}

impl Model {
    pub fn is_valid(&self) -> bool {
        validate_model(self).is_ok()
    }

    /// Host vertices used by some bag.
    pub fn support(&self) -> VertexSet {
        self.bags.iter().fold(VertexSet::EMPTY, |acc, b| acc.union(*b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelViolation {
    #[error("pattern has {expected} vertices but the model has {got} bags")]
    BagCount { expected: usize, got: usize },
    #[error("bag of {pattern_vertex} contains {host_vertex}, which is not a host vertex")]
    OutsideHost { pattern_vertex: usize, host_vertex: usize },
    #[error("bags are not pairwise disjoint: {host_vertex} lies in the bags of {first} and {second}")]
    Overlap { first: usize, second: usize, host_vertex: usize },
    #[error("bag of {0} is empty (bags must be non-null)")]
    EmptyBag(usize),
    #[error("bag of {0} does not induce a connected subgraph")]
    DisconnectedBag(usize),
    #[error("pattern edge {0}{1} is not realized by any host edge between their bags")]
    MissingEdge(usize, usize),
    #[error("root {host_vertex} is not in the bag of {pattern_vertex}")]
    RootOutsideBag { pattern_vertex: usize, host_vertex: usize },
    #[error("root binding is inconsistent with the pattern roots: {0}")]
    RootBinding(String),
}

/// Checks the four model conditions in order and reports the first failure:
/// disjointness, non-null connected bags, realized pattern edges, roots.
pub fn validate_model(m: &Model) -> Result<(), ModelViolation> {
    let h = m.pattern.graph();
    if m.bags.len() != h.n() {
        return Err(ModelViolation::BagCount { expected: h.n(), got: m.bags.len() });
    }
    let all = m.host.vertices();
    for (u, bag) in m.bags.iter().enumerate() {
        if let Some(x) = bag.difference(all).first() {
            return Err(ModelViolation::OutsideHost { pattern_vertex: u, host_vertex: x });
        }
    }
    for u in 0..m.bags.len() {
        for w in (u + 1)..m.bags.len() {
            if let Some(x) = m.bags[u].intersection(m.bags[w]).first() {
                return Err(ModelViolation::Overlap { first: u, second: w, host_vertex: x });
            }
        }
    }
    for (u, bag) in m.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(ModelViolation::EmptyBag(u));
        }
        if !m.host.is_connected_set(*bag) {
            return Err(ModelViolation::DisconnectedBag(u));
        }
    }
    for (u, w) in h.edges() {
        let touching = m.host.set_neighbors(m.bags[u]).union(m.bags[u]);
        if touching.intersection(m.bags[w]).is_empty() {
            return Err(ModelViolation::MissingEdge(u, w));
        }
    }
    check_binding(m)
}

fn check_binding(m: &Model) -> Result<(), ModelViolation> {
    if m.root_binding.is_empty() {
        return Ok(());
    }
    let roots = m.pattern.roots();
    if roots.mode == RootMode::None {
        return Err(ModelViolation::RootBinding("pattern has no roots".into()));
    }
    if m.root_binding.len() != roots.indices.len() {
        return Err(ModelViolation::RootBinding(format!(
            "{} roots bound, pattern has {}",
            m.root_binding.len(),
            roots.indices.len()
        )));
    }
    let mut hosts = VertexSet::EMPTY;
    for (&(p, x), &expected) in m.root_binding.iter().zip(&roots.indices) {
        if roots.mode == RootMode::Ordered && p != expected {
            return Err(ModelViolation::RootBinding(format!("ordered root {expected} bound out of order")));
        }
        if !roots.indices.contains(&p) {
            return Err(ModelViolation::RootBinding(format!("{p} is not a pattern root")));
        }
        if x >= m.host.n() || hosts.contains(x) {
            return Err(ModelViolation::RootBinding(format!("host root {x} is repeated or out of range")));
        }
        hosts.insert(x);
        if !m.bags[p].contains(x) {
            return Err(ModelViolation::RootOutsideBag { pattern_vertex: p, host_vertex: x });
        }
    }
    let bound: VertexSet = m.root_binding.iter().map(|&(p, _)| p).collect();
    if bound != roots.as_set() {
        return Err(ModelViolation::RootBinding("a pattern root is bound twice".into()));
    }
    Ok(())
}

/// [`validate_model`] plus agreement of the binding with the requested host roots:
/// the `i`-th host root in the `i`-th ordered root's bag, or any bijection for
/// unordered roots.
pub fn validate_rooted(m: &Model, host_roots: &[usize]) -> Result<(), ModelViolation> {
    validate_model(m)?;
    let roots = m.pattern.roots();
    if host_roots.len() != roots.arity() || m.root_binding.len() != host_roots.len() {
        return Err(ModelViolation::RootBinding(format!(
            "{} host roots requested, {} bound",
            host_roots.len(),
            m.root_binding.len()
        )));
    }
    match roots.mode {
        RootMode::Ordered => {
            for (i, &(p, x)) in m.root_binding.iter().enumerate() {
                if x != host_roots[i] {
                    return Err(ModelViolation::RootOutsideBag { pattern_vertex: p, host_vertex: host_roots[i] });
                }
            }
        }
        _ => {
            let want: VertexSet = host_roots.iter().copied().collect();
            let got: VertexSet = m.root_binding.iter().map(|&(_, x)| x).collect();
            if want != got {
                return Err(ModelViolation::RootBinding("bound host roots differ from the requested ones".into()));
            }
        }
    }
    Ok(())
}
