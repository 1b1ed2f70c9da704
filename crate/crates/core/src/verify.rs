//! Exhaustive verification sweeps over small graphs.
//!
//! Each claim enumerates the graphs satisfying its hypothesis, searches for the
//! promised object and records a certificate for every case. Graphs are checked
//! on a worker pool and merged in canonical order, so reports do not depend on
//! the number of workers.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::isomorphic;
use crate::certificate::Certificate;
use crate::color::{chromatic_number, clique_number, greedy_coloring, independence_number};
use crate::connectivity::{is_internally_k_connected, is_k_connected, next_subset};
use crate::enumerate::{canonical_classes, generate_graphs, GraphFilter};
use crate::error::{CertificateError, VerifyError};
use crate::graph::{Graph, VertexSet};
use crate::minor::{find_model, find_rooted_model, has_subgraph, validate_model, Model};
use crate::patterns::{apex_matching_graph, Family, Pattern};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Worker threads; `0` is treated as one.
    pub jobs: usize,
    /// Use these graphs instead of generating them. They are filtered and
    /// reduced to one canonical representative per class first.
    pub input: Option<Vec<Graph>>,
    /// Keep the certificate of every witnessed case in [`Report::witnesses`].
    pub keep_witnesses: bool,
}

impl Options {
    pub fn with_jobs(jobs: usize) -> Options {
        Options { jobs, ..Options::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSummary {
    pub min_edges: usize,
    pub max_edges: Option<usize>,
    pub min_connectivity: usize,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    pub graph: String,
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub n: usize,
    pub version: String,
    pub filter: FilterSummary,
    pub graphs_examined: usize,
    /// Instances to which the claim applies (graphs, or graph and root set pairs).
    pub cases: usize,
    /// Cases for which the promised object was found.
    pub witnessed: usize,
    pub violations: Vec<Certificate>,
    pub exceptions: Vec<ExceptionRecord>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
    #[serde(skip)]
    pub workers: usize,
    #[serde(skip)]
    pub witnesses: Vec<Certificate>,
}

#[derive(Serialize)]
struct Timed<'a> {
    #[serde(flatten)]
    report: &'a Report,
    wall_time_seconds: f64,
    workers: usize,
}

impl Report {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }

    /// Pretty JSON. Timing fields are only included on request because they
    /// differ between otherwise identical runs.
    pub fn to_json(&self, timing: bool) -> String {
        if timing {
            let t = Timed { report: self, wall_time_seconds: self.wall_time.as_secs_f64(), workers: self.workers };
            serde_json::to_string_pretty(&t).expect("reports serialize")
        } else {
            serde_json::to_string_pretty(self).expect("reports serialize")
        }
    }

    /// Revalidates every violation and exception certificate.
    pub fn revalidate(&self) -> Result<(), CertificateError> {
        for c in &self.violations {
            c.revalidate()?;
        }
        for e in &self.exceptions {
            Certificate::Exception { graph: e.graph.clone(), tag: e.tag.clone() }.revalidate()?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Extremal,
    Main,
    LemmaK4,
    LemmaK4Minus,
    LemmaK42Star,
    Spindle,
    MaxDeg2,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Extremal,
        Claim::Main,
        Claim::LemmaK4,
        Claim::LemmaK4Minus,
        Claim::LemmaK42Star,
        Claim::Spindle,
        Claim::MaxDeg2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Extremal => "extremal",
            Claim::Main => "main",
            Claim::LemmaK4 => "lemma-k4",
            Claim::LemmaK4Minus => "lemma-k4minus",
            Claim::LemmaK42Star => "lemma-k42star",
            Claim::Spindle => "spindle",
            Claim::MaxDeg2 => "maxdeg2",
        }
    }

    pub fn parse(s: &str) -> Result<Claim, VerifyError> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }

    /// Supported orders, inclusive.
    pub fn range(self) -> (usize, usize) {
        match self {
            Claim::Extremal => (5, 11),
            Claim::Main => (7, 9),
            Claim::LemmaK4 => (4, 8),
            Claim::LemmaK4Minus | Claim::LemmaK42Star => (6, 8),
            Claim::Spindle | Claim::MaxDeg2 => (7, 7),
        }
    }

    pub fn run(self, n: usize, opts: &Options) -> Result<Report, VerifyError> {
        match self {
            Claim::Extremal => verify_extremal(n, opts),
            Claim::Main => verify_main(n, opts),
            Claim::LemmaK4 => verify_lemma_k4(n, opts),
            Claim::LemmaK4Minus => verify_lemma_k4minus(n, opts),
            Claim::LemmaK42Star => verify_lemma_k42star(n, opts),
            Claim::Spindle => in_range(self.id(), n, self.range()).and_then(|_| verify_spindle_claim(opts)),
            Claim::MaxDeg2 => in_range(self.id(), n, self.range()).and_then(|_| verify_maxdeg2_cases(opts)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exploration {
    K7mmExtremal,
    K7mmColor,
    K7mColor,
}

impl Exploration {
    pub const ALL: [Exploration; 3] = [Exploration::K7mmExtremal, Exploration::K7mmColor, Exploration::K7mColor];

    pub fn id(self) -> &'static str {
        match self {
            Exploration::K7mmExtremal => "k7mm-extremal",
            Exploration::K7mmColor => "k7mm-color",
            Exploration::K7mColor => "k7m-color",
        }
    }

    pub fn parse(s: &str) -> Result<Exploration, VerifyError> {
        Exploration::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Result of checking one graph.
#[derive(Default)]
struct Outcome {
    cases: usize,
    witnessed: usize,
    violations: Vec<Certificate>,
    exceptions: Vec<ExceptionRecord>,
    witnesses: Vec<Certificate>,
}

impl Outcome {
    fn witness(&mut self, c: Certificate, keep: bool) {
        self.cases += 1;
        self.witnessed += 1;
        if keep {
            self.witnesses.push(c);
        }
    }

    fn violation(&mut self, c: Certificate) {
        self.cases += 1;
        self.violations.push(c);
    }
}

fn in_range(claim: &'static str, n: usize, (lo, hi): (usize, usize)) -> Result<(), VerifyError> {
    if n < lo || n > hi {
        return Err(VerifyError::OutOfRange { claim, n, lo, hi });
    }
    Ok(())
}

fn pattern(name: &str) -> Pattern {
    Pattern::parse(name).expect("built-in pattern names parse")
}

/// Runs `check` on every graph passing `filter`, in canonical order.
fn sweep<F>(claim: &str, filter: GraphFilter, opts: &Options, check: F) -> Result<Report, VerifyError>
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    let start = Instant::now();
    let workers = opts.jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let cap = filter.edge_cap();
    let graphs = if filter.min_edges > cap {
        Vec::new()
    } else {
        match &opts.input {
            Some(list) => canonical_classes(list.iter().cloned(), &filter),
            None => pool.install(|| generate_graphs(&filter))?,
        }
    };
    let outcomes: Vec<Outcome> = pool.install(|| graphs.par_iter().map(&check).collect());
    let mut report = Report {
        claim: claim.to_string(),
        n: filter.n,
        version: VERSION.to_string(),
        filter: FilterSummary {
            min_edges: filter.min_edges,
            max_edges: filter.max_edges,
            min_connectivity: filter.min_connectivity,
            source: if opts.input.is_some() { "input" } else { "generated" }.to_string(),
        },
        graphs_examined: graphs.len(),
        cases: 0,
        witnessed: 0,
        violations: Vec::new(),
        exceptions: Vec::new(),
        notes: Vec::new(),
        wall_time: Duration::ZERO,
        workers,
        witnesses: Vec::new(),
    };
    for o in outcomes {
        report.cases += o.cases;
        report.witnessed += o.witnessed;
        report.violations.extend(o.violations);
        report.exceptions.extend(o.exceptions);
        report.witnesses.extend(o.witnesses);
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

fn four_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    let mask = VertexSet::full(n).0;
    let mut cur = 0u64;
    std::iter::from_fn(move || loop {
        cur = next_subset(cur, mask);
        if cur == 0 {
            return None;
        }
        if cur.count_ones() == 4 {
            return Some(VertexSet(cur));
        }
    })
}

/// 4-connected graphs with `|E| ≥ 4n − 8` have a `K_7^∨` minor unless isomorphic to `K_{2,2,2,2}`.
pub fn verify_extremal(n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range("extremal", n, Claim::Extremal.range())?;
    let target = pattern("k7v");
    let exception = pattern("k2222");
    let filter = GraphFilter::new(n).min_edges(4 * n - 8).min_connectivity(4);
    let mut report = sweep("extremal", filter, opts, |g| {
        let mut o = Outcome::default();
        match find_model(g, &target) {
            Some(m) => o.witness(Certificate::from_model(&m), opts.keep_witnesses),
            None if isomorphic(g, exception.graph()) => {
                o.cases += 1;
                o.exceptions.push(ExceptionRecord { graph: crate::graph6::emit(g), tag: exception.name() });
            }
            None => o.violation(Certificate::no_model(g, &target, &[])),
        }
        o
    })?;
    report.notes.push(format!("pattern {target}; exception class {exception}"));
    Ok(report)
}

/// Graphs on `n` vertices with chromatic number at least 7 have a `target` minor.
fn color_sweep(claim: &str, n: usize, target: &Pattern, opts: &Options) -> Result<Report, VerifyError> {
    // χ ≥ 7 needs a 7-critical subgraph, hence at least 21 edges
    let filter = GraphFilter::new(n).min_edges(21);
    let mut report = sweep(claim, filter, opts, |g| {
        let mut o = Outcome::default();
        if greedy_coloring(g).used() <= 6 || chromatic_number(g) < 7 {
            return o;
        }
        match find_model(g, target) {
            Some(m) => o.witness(Certificate::from_model(&m), opts.keep_witnesses),
            None => o.violation(Certificate::no_model(g, target, &[])),
        }
        o
    })?;
    report.notes.push(format!(
        "pattern {target}; graphs with fewer than 21 edges or a greedy 6-coloring are skipped, the rest get exact chromatic numbers"
    ));
    Ok(report)
}

/// Every graph with chromatic number at least 7 has a `K_7^∨` minor.
pub fn verify_main(n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range("main", n, Claim::Main.range())?;
    color_sweep("main", n, &pattern("k7v"), opts)
}

/// Internally 4-connected `(G, Z)` with `|Z| = 4` and enough edges have a
/// `Z`-rooted model of `target`. `also` is checked on the same bags.
fn rooted_sweep(
    claim: &str,
    filter: GraphFilter,
    target: &Pattern,
    also: Option<&Pattern>,
    opts: &Options,
) -> Result<Report, VerifyError> {
    let n = filter.n;
    let mut report = sweep(claim, filter, opts, |g| {
        let mut o = Outcome::default();
        for z in four_subsets(n) {
            if !is_internally_k_connected(g, z, 4) {
                continue;
            }
            let roots = z.to_vec();
            match find_rooted_model(g, target, &roots).expect("roots are four distinct vertices") {
                Some(m) => {
                    if let Some(weaker) = also {
                        let relaxed = Model { pattern: weaker.clone(), ..m.clone() };
                        if validate_model(&relaxed).is_err() {
                            o.violations.push(Certificate::from_model(&relaxed));
                        }
                    }
                    o.witness(Certificate::from_model(&m), opts.keep_witnesses);
                }
                None => o.violation(Certificate::no_model(g, target, &roots)),
            }
        }
        o
    })?;
    report.notes.push(format!("pattern {target} rooted at every internally 4-connected 4-subset Z"));
    if let Some(weaker) = also {
        report.notes.push(format!("every {target} model found was revalidated as a {weaker} model"));
    }
    Ok(report)
}

pub fn verify_lemma_k4(n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range("lemma-k4", n, Claim::LemmaK4.range())?;
    rooted_sweep("lemma-k4", GraphFilter::new(n).min_edges(3 * n - 6), &pattern("k4"), None, opts)
}

pub fn verify_lemma_k4minus(n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range("lemma-k4minus", n, Claim::LemmaK4Minus.range())?;
    rooted_sweep("lemma-k4minus", GraphFilter::new(n), &pattern("k4m"), None, opts)
}

pub fn verify_lemma_k42star(n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range("lemma-k42star", n, Claim::LemmaK42Star.range())?;
    let filter = GraphFilter::new(n).min_edges(4 * n - 9);
    rooted_sweep("lemma-k42star", filter, &pattern("k42s"), Some(&pattern("k42")), opts)
}

/// Seven-vertex graphs with independence number at most 2 and clique number at
/// most 3 contain the Moser spindle as a subgraph.
pub fn verify_spindle_claim(opts: &Options) -> Result<Report, VerifyError> {
    let spindle = pattern("spindle");
    let mut report = sweep("spindle", GraphFilter::new(7), opts, |g| {
        let mut o = Outcome::default();
        if independence_number(g) > 2 || clique_number(g) > 3 {
            return o;
        }
        match has_subgraph(g, spindle.graph()) {
            Some(phi) => {
                let m = Model {
                    host: g.clone(),
                    pattern: spindle.clone(),
                    bags: phi.into_iter().map(VertexSet::singleton).collect(),
                    root_binding: Vec::new(),
                };
                o.witness(Certificate::from_model(&m), opts.keep_witnesses);
            }
            None => o.violation(Certificate::no_model(g, &spindle, &[])),
        }
        o
    })?;
    report.notes.push("cases are the graphs with independence number <= 2 and clique number <= 3".into());
    Ok(report)
}

/// The five hosts of the maximum-degree-2 case: `C7`, `C6 ⊔ K1`, `C5 ⊔ K2`, `C4 ⊔ C3`, `C3 ⊔ C3 ⊔ K1`.
pub fn maxdeg2_hosts() -> Vec<Graph> {
    let c = |k: usize| pattern(&format!("c{k}")).graph().clone();
    let k = |t: usize| Graph::complete(t).expect("small");
    let u = |a: Graph, b: Graph| a.disjoint_union(&b).expect("small");
    vec![c(7), u(c(6), k(1)), u(c(5), k(2)), u(c(4), c(3)), u(u(c(3), c(3)), k(1))]
}

/// Seven-vertex graphs with maximum degree at most 2 embed in one of [`maxdeg2_hosts`].
pub fn verify_maxdeg2_cases(opts: &Options) -> Result<Report, VerifyError> {
    let hosts = maxdeg2_hosts();
    let mut report = sweep("maxdeg2", GraphFilter::new(7), opts, |g| {
        let mut o = Outcome::default();
        if g.max_degree() > 2 {
            return o;
        }
        let as_pattern = Pattern::explicit(g.clone());
        let hit = hosts.iter().find_map(|h| has_subgraph(h, g).map(|phi| (h, phi)));
        match hit {
            Some((h, phi)) => {
                let m = Model {
                    host: h.clone(),
                    pattern: as_pattern,
                    bags: phi.into_iter().map(VertexSet::singleton).collect(),
                    root_binding: Vec::new(),
                };
                o.witness(Certificate::from_model(&m), opts.keep_witnesses);
            }
            None => {
                o.cases += 1;
                for h in &hosts {
                    o.violations.push(Certificate::no_model(h, &as_pattern, &[]));
                }
            }
        }
        o
    })?;
    report.notes.push("cases are the graphs with maximum degree <= 2; witnesses embed them in a listed host".into());
    Ok(report)
}

/// Exploratory sweeps around the `K_7^=` and `K_7^−` questions. Nothing is
/// claimed; violations are counterexample candidates.
pub fn explore_conjecture(which: Exploration, n: usize, opts: &Options) -> Result<Report, VerifyError> {
    in_range(which.id(), n, (1, 10))?;
    let mut report = match which {
        Exploration::K7mmExtremal => {
            let target = pattern("k7mm");
            let exception = pattern("k6");
            let filter = GraphFilter::new(n).min_edges((4 * n).saturating_sub(9)).min_connectivity(5);
            let mut r = sweep(which.id(), filter, opts, |g| {
                let mut o = Outcome::default();
                match find_model(g, &target) {
                    Some(m) => o.witness(Certificate::from_model(&m), opts.keep_witnesses),
                    None if isomorphic(g, exception.graph()) => {
                        o.cases += 1;
                        o.exceptions.push(ExceptionRecord { graph: crate::graph6::emit(g), tag: exception.name() });
                    }
                    None => o.violation(Certificate::no_model(g, &target, &[])),
                }
                o
            })?;
            r.notes.push(format!("pattern {target}; stated exception {exception}"));
            r
        }
        Exploration::K7mmColor => color_sweep(which.id(), n, &pattern("k7mm"), opts)?,
        Exploration::K7mColor => color_sweep(which.id(), n, &pattern("k7m"), opts)?,
    };
    report.notes.push("exploratory: violations are counterexample candidates".into());
    if n >= 4 {
        report.notes.push(apex_matching_check(n));
    }
    Ok(report)
}

/// Sanity check of the four-apex matching family: edge count, 4-connectivity
/// and absence of a `K_7^=` minor.
pub fn apex_matching_check(n: usize) -> String {
    let g = apex_matching_graph(n).expect("n >= 4");
    let edges_ok = g.edge_count() == 4 * n + n / 2 - 12;
    let connected = n < 5 || is_k_connected(&g, 4);
    let free = find_model(&g, &Pattern::new(Family::CompleteMatching(7)).expect("k7mm")).is_none();
    let status = if edges_ok && connected && free { "ok" } else { "FAILED" };
    format!(
        "G_{n} sanity check {status}: {} edges (4n + floor(n/2) - 12 = {}), 4-connected: {connected}, no k7mm minor: {free}",
        g.edge_count(),
        4 * n + n / 2 - 12
    )
}

/// Dispatches a claim id with its order.
pub fn verify(claim: &str, n: usize, opts: &Options) -> Result<Report, VerifyError> {
    Claim::parse(claim)?.run(n, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremal_small_orders() {
        let opts = Options::with_jobs(1);
        for n in [5, 6] {
            let r = verify_extremal(n, &opts).unwrap();
            assert_eq!(r.graphs_examined, 0);
            assert!(r.verified());
        }
        let r = verify_extremal(7, &opts).unwrap();
        assert!(r.verified());
        assert!(r.exceptions.is_empty());
        assert_eq!(r.cases, r.witnessed);
        assert!(r.graphs_examined >= 2);
    }

    #[test]
    fn main_at_seven_is_k7_only() {
        let r = verify_main(7, &Options::with_jobs(2)).unwrap();
        assert_eq!(r.cases, 1);
        assert!(r.verified());
    }

    #[test]
    fn lemma_k4_small() {
        let r = verify_lemma_k4(4, &Options::default()).unwrap();
        assert_eq!((r.graphs_examined, r.cases, r.witnessed), (1, 1, 1));
        let r = verify_lemma_k4(6, &Options::default()).unwrap();
        assert!(r.verified());
    }

    #[test]
    fn lemma_k42star_at_six_is_k6() {
        let r = verify_lemma_k42star(6, &Options::default()).unwrap();
        assert_eq!(r.graphs_examined, 1);
        assert_eq!(r.cases, 15);
        assert!(r.verified());
    }

    #[test]
    fn ranges_and_names() {
        assert!(matches!(verify("extremal", 4, &Options::default()), Err(VerifyError::OutOfRange { .. })));
        assert!(matches!(verify("nope", 7, &Options::default()), Err(VerifyError::UnknownClaim(_))));
        assert!(matches!(verify("spindle", 8, &Options::default()), Err(VerifyError::OutOfRange { .. })));
        for c in Claim::ALL {
            assert_eq!(Claim::parse(c.id()).unwrap(), c);
        }
    }

    #[test]
    fn explore_k6_exception() {
        let r = explore_conjecture(Exploration::K7mmExtremal, 6, &Options::default()).unwrap();
        assert_eq!(r.exceptions.len(), 1);
        assert_eq!(r.exceptions[0].tag, "k6");
        assert!(r.verified());
        assert!(r.notes.iter().any(|s| s.starts_with("G_6 sanity check ok")));
        assert!(r.revalidate().is_ok());
    }

    #[test]
    fn apex_family_has_no_k7_double_minus() {
        assert!(apex_matching_check(9).starts_with("G_9 sanity check ok"));
    }

    #[test]
    fn input_stream_matches_generation() {
        let graphs = generate_graphs(&GraphFilter::new(7)).unwrap();
        let shuffled: Vec<Graph> = graphs.iter().rev().map(|g| g.relabel(&[6, 5, 4, 3, 2, 1, 0]).unwrap()).collect();
        let opts = Options { jobs: 1, input: Some(shuffled), keep_witnesses: false };
        let a = verify_extremal(7, &opts).unwrap();
        let b = verify_extremal(7, &Options::with_jobs(1)).unwrap();
        assert_eq!(a.graphs_examined, b.graphs_examined);
        assert_eq!(a.violations, b.violations);
        assert_eq!(a.filter.source, "input");
    }

    #[test]
    fn json_is_stable() {
        let r1 = verify_extremal(7, &Options::with_jobs(1)).unwrap();
        let r2 = verify_extremal(7, &Options::with_jobs(3)).unwrap();
        assert_eq!(r1.to_json(false), r2.to_json(false));
        let parsed: Report = serde_json::from_str(&r1.to_json(false)).unwrap();
        assert_eq!(parsed.graphs_examined, r1.graphs_examined);
        assert!(r1.to_json(true).contains("wall_time_seconds"));
    }
}
