//! Named target graphs and their root designations.
//!
//! Labelings are fixed so certificates can refer to pattern vertices:
//!
//! * `K_t^∨` (`k<t>v`): vertex 0 loses its edges to 1 and 2.
//! * `K_t^=` (`k<t>mm`): the edges 01 and 23 are removed.
//! * `K_t^−` (`k<t>m`): the edge 01 is removed.
//! * complete multipartite graphs: parts are consecutive label ranges.
//! * `K_{k,m}` and `K*_{k,m}`: the independent root side is `0..k`, the other side
//!   `k..k+m` (a clique in `K*`).
//! * `C_k`: `0, 1, …, k−1` in cycle order, rooted in that order.
//! * Moser spindle: `u1..u5 = 0..4`, `u4' = 5`, `u3' = 6`.

use std::fmt;

use crate::error::PatternError;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    /// `K_t` minus two edges sharing an end.
    CompleteVee(usize),
    /// `K_t` minus a two-edge matching.
    CompleteMatching(usize),
    /// `K_t` minus one edge.
    CompleteMinus(usize),
    Multipartite(Vec<usize>),
    /// `K_{k,m}`: both sides independent.
    Bipartite { k: usize, m: usize },
    /// `K*_{k,m}`: the `m`-side is a clique.
    BipartiteStar { k: usize, m: usize },
    Cycle(usize),
    MoserSpindle,
    Explicit(Graph),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootMode {
    None,
    /// Roots bind to the host roots under some bijection.
    Unordered,
    /// The `i`-th pattern root binds to the `i`-th host root.
    Ordered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpec {
    pub mode: RootMode,
    pub indices: Vec<usize>,
}

impl RootSpec {
    pub fn none() -> RootSpec {
        RootSpec { mode: RootMode::None, indices: Vec::new() }
    }

    pub fn unordered(indices: Vec<usize>) -> RootSpec {
        RootSpec { mode: RootMode::Unordered, indices }
    }

    pub fn ordered(indices: Vec<usize>) -> RootSpec {
        RootSpec { mode: RootMode::Ordered, indices }
    }

    pub fn arity(&self) -> usize {
        match self.mode {
            RootMode::None => 0,
            _ => self.indices.len(),
        }
    }

    pub fn as_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.indices.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    family: Family,
    graph: Graph,
    roots: RootSpec,
}

impl Pattern {
    pub fn new(family: Family) -> Result<Pattern, PatternError> {
        let graph = realize(&family)?;
        let roots = default_roots(&family);
        Ok(Pattern { family, graph, roots })
    }

    pub fn explicit(graph: Graph) -> Pattern {
        Pattern { family: Family::Explicit(graph.clone()), graph, roots: RootSpec::none() }
    }

    /// Replaces the root designation. Ordered roots are reserved for cycles.
    pub fn with_roots(mut self, roots: RootSpec) -> Result<Pattern, PatternError> {
        if roots.mode == RootMode::Ordered && !matches!(self.family, Family::Cycle(_)) {
            return Err(PatternError::InvalidParameters {
                family: "roots",
                reason: "ordered roots are only used for cycles".into(),
            });
        }
        self.roots = roots;
        self.check_roots()?;
        Ok(self)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> &RootSpec {
        &self.roots
    }

    /// The pattern's CLI name; `Pattern::parse(p.name())` rebuilds `p` up to roots.
    pub fn name(&self) -> String {
        match &self.family {
            Family::Complete(t) => format!("k{t}"),
            Family::CompleteVee(t) => format!("k{t}v"),
            Family::CompleteMatching(t) => format!("k{t}mm"),
            Family::CompleteMinus(t) => format!("k{t}m"),
            Family::Multipartite(parts) if parts == &[2, 2, 2, 2] => "k2222".into(),
            Family::Multipartite(parts) => format!("kp:{}", join(parts)),
            Family::Bipartite { k: 4, m: 2 } => "k42".into(),
            Family::Bipartite { k: 4, m: 4 } => "k44".into(),
            Family::Bipartite { k, m } => format!("kb:{k},{m}"),
            Family::BipartiteStar { k: 4, m: 2 } => "k42s".into(),
            Family::BipartiteStar { k, m } => format!("kbs:{k},{m}"),
            Family::Cycle(k) => format!("c{k}"),
            Family::MoserSpindle => "spindle".into(),
            Family::Explicit(g) => format!("g6:{}", graph6::emit(g)),
        }
    }

    /// Parses a CLI pattern name such as `k7v`, `k2222`, `c5` or `g6:C~`.
    pub fn parse(name: &str) -> Result<Pattern, PatternError> {
        let unknown = || PatternError::UnknownName(name.to_string());
        let family = match name {
            "k2222" => Family::Multipartite(vec![2, 2, 2, 2]),
            "k42" => Family::Bipartite { k: 4, m: 2 },
            "k44" => Family::Bipartite { k: 4, m: 4 },
            "k42s" => Family::BipartiteStar { k: 4, m: 2 },
            "spindle" => Family::MoserSpindle,
            _ => {
                if let Some(rest) = name.strip_prefix("g6:") {
                    return Ok(Pattern::explicit(graph6::parse(rest)?));
                } else if let Some(rest) = name.strip_prefix("kp:") {
                    Family::Multipartite(parse_list(rest).ok_or_else(unknown)?)
                } else if let Some(rest) = name.strip_prefix("kbs:") {
                    match parse_list(rest).ok_or_else(unknown)?.as_slice() {
                        &[k, m] => Family::BipartiteStar { k, m },
                        _ => return Err(unknown()),
                    }
                } else if let Some(rest) = name.strip_prefix("kb:") {
                    match parse_list(rest).ok_or_else(unknown)?.as_slice() {
                        &[k, m] => Family::Bipartite { k, m },
                        _ => return Err(unknown()),
                    }
                } else if let Some(rest) = name.strip_prefix('c') {
                    Family::Cycle(rest.parse().map_err(|_| unknown())?)
                } else if let Some(rest) = name.strip_prefix('k') {
                    let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
                    let t: usize = rest[..digits].parse().map_err(|_| unknown())?;
                    match &rest[digits..] {
                        "" => Family::Complete(t),
                        "v" => Family::CompleteVee(t),
                        "mm" => Family::CompleteMatching(t),
                        "m" => Family::CompleteMinus(t),
                        _ => return Err(unknown()),
                    }
                } else {
                    return Err(unknown());
                }
            }
        };
        Pattern::new(family)
    }

    /// Checks that the stored graph matches its construction and the roots are sound.
    pub fn check(&self) -> Result<(), PatternError> {
        if let Family::Explicit(g) = &self.family {
            if g != &self.graph {
                return Err(PatternError::InvalidParameters {
                    family: "explicit",
                    reason: "graph differs from its definition".into(),
                });
            }
        } else if realize(&self.family)? != self.graph {
            return Err(PatternError::InvalidParameters {
                family: "pattern",
                reason: "graph differs from its construction".into(),
            });
        }
        self.check_roots()
    }

    fn check_roots(&self) -> Result<(), PatternError> {
        let set = self.roots.as_set();
        let bad = self.roots.indices.iter().any(|&r| r >= self.graph.n())
            || set.len() != self.roots.indices.len();
        if bad {
            return Err(PatternError::InvalidParameters {
                family: "roots",
                reason: "root indices must be distinct pattern vertices".into(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse().ok()).collect()
}

fn invalid(family: &'static str, reason: impl Into<String>) -> PatternError {
    PatternError::InvalidParameters { family, reason: reason.into() }
}

fn realize(family: &Family) -> Result<Graph, PatternError> {
    let too_big = |n: usize| n > MAX_VERTICES;
    let g = match family {
        Family::Complete(t) => {
            if *t == 0 || too_big(*t) {
                return Err(invalid("K_t", format!("need 1 <= t <= 64, got {t}")));
            }
            Graph::complete(*t)?
        }
        Family::CompleteVee(t) | Family::CompleteMatching(t) => {
            if *t < 4 || too_big(*t) {
                return Err(invalid("K_t minus two edges", format!("need 4 <= t <= 64, got {t}")));
            }
            let k = Graph::complete(*t)?;
            if matches!(family, Family::CompleteVee(_)) {
                k.delete_edge(0, 1)?.delete_edge(0, 2)?
            } else {
                k.delete_edge(0, 1)?.delete_edge(2, 3)?
            }
        }
        Family::CompleteMinus(t) => {
            if *t < 2 || too_big(*t) {
                return Err(invalid("K_t^-", format!("need 2 <= t <= 64, got {t}")));
            }
            Graph::complete(*t)?.delete_edge(0, 1)?
        }
        Family::Multipartite(parts) => {
            let n: usize = parts.iter().sum();
            if parts.is_empty() || parts.contains(&0) || too_big(n) {
                return Err(invalid("complete multipartite", "parts must be nonempty, total at most 64"));
            }
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)?
        }
        Family::Bipartite { k, m } | Family::BipartiteStar { k, m } => {
            if *k == 0 || *m == 0 || too_big(k + m) {
                return Err(invalid("K_{k,m}", "sides must be nonempty, total at most 64"));
            }
            let mut edges = Vec::new();
            for a in 0..*k {
                for b in *k..(k + m) {
                    edges.push((a, b));
                }
            }
            if matches!(family, Family::BipartiteStar { .. }) {
                for b in *k..(k + m) {
                    for c in (b + 1)..(k + m) {
                        edges.push((b, c));
                    }
                }
            }
            Graph::from_edges(k + m, &edges)?
        }
        Family::Cycle(k) => {
            if *k < 3 || too_big(*k) {
                return Err(invalid("C_k", format!("need 3 <= k <= 64, got {k}")));
            }
            let edges: Vec<_> = (0..*k).map(|i| (i, (i + 1) % k)).collect();
            Graph::from_edges(*k, &edges)?
        }
        Family::MoserSpindle => {
            // u1 u2 u3 u4 u5 u4' u3' = 0 1 2 3 4 5 6
            let edges = [
                (0, 3),
                (0, 2),
                (2, 4),
                (4, 1),
                (1, 3),
                (3, 5),
                (0, 5),
                (0, 6),
                (2, 6),
                (4, 6),
                (1, 5),
            ];
            Graph::from_edges(7, &edges)?
        }
        Family::Explicit(g) => g.clone(),
    };
    Ok(g)
}

fn default_roots(family: &Family) -> RootSpec {
    match family {
        Family::Complete(t)
        | Family::CompleteVee(t)
        | Family::CompleteMatching(t)
        | Family::CompleteMinus(t) => RootSpec::unordered((0..*t).collect()),
        Family::Bipartite { k, .. } | Family::BipartiteStar { k, .. } => RootSpec::unordered((0..*k).collect()),
        Family::Cycle(k) => RootSpec::ordered((0..*k).collect()),
        Family::Multipartite(_) | Family::MoserSpindle | Family::Explicit(_) => RootSpec::none(),
    }
}

/// Every named pattern the harness uses, in a fixed order.
pub fn pattern_roster() -> Vec<Pattern> {
    [
        "k7v", "k7mm", "k7m", "k7", "k6v", "k2222", "k4", "k4m", "k42s", "k42", "k44", "c3", "c4", "c5",
        "spindle",
    ]
    .iter()
    .map(|name| Pattern::parse(name).expect("roster names parse"))
    .collect()
}

/// Four universal vertices over a perfect-as-possible matching on the other `n − 4`.
///
/// Vertices `0..4` are universal; the remaining ones are matched in
/// consecutive pairs `(4,5), (6,7), …`. Every minor of it loses all but a
/// matching after deleting at most four vertices, so `K_7^=` is not a minor.
pub fn apex_matching_graph(n: usize) -> Result<Graph, PatternError> {
    if !(4..=MAX_VERTICES).contains(&n) {
        return Err(invalid("apex matching graph", format!("need 4 <= n <= 64, got {n}")));
    }
    let mut edges = Vec::new();
    for a in 0..4 {
        for v in (a + 1)..n {
            edges.push((a, v));
        }
    }
    let mut v = 4;
    while v + 1 < n {
        edges.push((v, v + 1));
        v += 2;
    }
    Ok(Graph::from_edges(n, &edges)?)
}
