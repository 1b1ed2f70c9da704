//! Exact coloring, clique and independence numbers, Kempe chains and the
//! Kriesell–Mohr rooted cycle model.

use crate::error::{ColorError, KempeError};
use crate::graph::{Graph, VertexSet};
use crate::minor::{search_bags, Model};
use crate::patterns::{Family, Pattern};

/// A proper coloring with colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Checks length, palette and propriety.
    pub fn new(g: &Graph, colors: Vec<usize>, k: usize) -> Result<Coloring, ColorError> {
        check_proper(g, &colors, k)?;
        Ok(Coloring { colors, k })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn class(&self, color: usize) -> VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &c)| c == color).map(|(v, _)| v).collect()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        self.colors.iter().fold(0u64, |acc, &c| acc | 1u64 << c.min(63)).count_ones() as usize
    }

    /// Colors renumbered in order of first occurrence along the vertex order.
    pub fn canonicalized(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.k.max(1)];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Coloring { colors, k: self.k }
    }
}

/// Validates a raw color vector against `g` without building a [`Coloring`].
pub fn check_proper(g: &Graph, colors: &[usize], k: usize) -> Result<(), ColorError> {
    if colors.len() != g.n() {
        return Err(ColorError::WrongLength { n: g.n(), got: colors.len() });
    }
    for (v, &c) in colors.iter().enumerate() {
        if c >= k {
            return Err(ColorError::ColorOutOfPalette { vertex: v, color: c, k });
        }
    }
    for (u, v) in g.edges() {
        if colors[u] == colors[v] {
            return Err(ColorError::Monochromatic(u, v));
        }
    }
    Ok(())
}

/// A vertex set of maximum size inducing a clique.
pub fn max_clique(g: &Graph) -> VertexSet {
    fn expand(g: &Graph, r: u64, mut p: u64, best: &mut u64) {
        if p == 0 {
            if r.count_ones() > best.count_ones() {
                *best = r;
            }
            return;
        }
        while p != 0 {
            if r.count_ones() + p.count_ones() <= best.count_ones() {
                return;
            }
            let v = p.trailing_zeros() as usize;
            p &= p - 1;
            expand(g, r | 1u64 << v, p & g.rows()[v], best);
        }
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
    }
    let mut best = 0u64;
    expand(g, 0, g.vertices().0, &mut best);
    VertexSet(best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// DSATUR greedy coloring: not optimal, but never worse than `Δ + 1` colors.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen = vec![0u64; n];
    let mut k = 0;
    for _ in 0..n {
        let v = pick(g, &colors, &seen);
        let c = (!seen[v]).trailing_zeros() as usize;
        colors[v] = c;
        k = k.max(c + 1);
        for w in g.neighbors(v) {
            seen[w] |= 1u64 << c;
        }
    }
    Coloring { colors, k }.canonicalized()
}

/// Uncolored vertex with the most distinct neighbor colors, then the most
/// uncolored neighbors, then the lowest label.
fn pick(g: &Graph, colors: &[usize], seen: &[u64]) -> usize {
    let uncolored: u64 = (0..g.n()).filter(|&v| colors[v] == usize::MAX).fold(0, |a, v| a | 1u64 << v);
    VertexSet(uncolored)
        .iter()
        .max_by_key(|&v| (seen[v].count_ones(), (g.rows()[v] & uncolored).count_ones(), std::cmp::Reverse(v)))
        .expect("an uncolored vertex remains")
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring { colors: Vec::new(), k });
    }
    if k == 0 || clique_number(g) > k {
        return None;
    }
    let greedy = greedy_coloring(g);
    if greedy.used() <= k {
        return Some(Coloring { colors: greedy.colors, k });
    }
    let mut colors = vec![usize::MAX; n];
    let mut seen = vec![0u64; n];
    if dsatur(g, k, &mut colors, &mut seen, 0, n) {
        Some(Coloring { colors, k }.canonicalized())
    } else {
        None
    }
}

fn dsatur(g: &Graph, k: usize, colors: &mut [usize], seen: &mut [u64], used: usize, left: usize) -> bool {
    if left == 0 {
        return true;
    }
    let v = pick(g, colors, seen);
    // a fresh color is interchangeable with every other fresh color
    let limit = k.min(used + 1);
    for c in 0..limit {
        if seen[v] >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        let saved: Vec<(usize, u64)> = g.neighbors(v).iter().map(|w| (w, seen[w])).collect();
        let mut dead = false;
        for w in g.neighbors(v) {
            seen[w] |= 1u64 << c;
            if colors[w] == usize::MAX && seen[w].count_ones() as usize >= k {
                dead = true;
            }
        }
        if !dead && dsatur(g, k, colors, seen, used.max(c + 1), left - 1) {
            return true;
        }
        for (w, s) in saved {
            seen[w] = s;
        }
        colors[v] = usize::MAX;
    }
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let upper = greedy_coloring(g).used();
    let lower = clique_number(g);
    (lower..upper).find(|&k| find_coloring(g, k).is_some()).unwrap_or(upper)
}

/// The component containing `anchor` of the subgraph induced by two color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    /// Color of the anchor.
    pub s1: usize,
    pub s2: usize,
    pub members: VertexSet,
    pub anchor: usize,
}

pub fn kempe_chain(g: &Graph, c: &Coloring, v: usize, s2: usize) -> Result<KempeChain, ColorError> {
    g.check_vertex(v)?;
    if c.colors.len() != g.n() {
        return Err(ColorError::WrongLength { n: g.n(), got: c.colors.len() });
    }
    let s1 = c.color(v);
    if s1 == s2 {
        return Err(ColorError::SameColor);
    }
    let both = c.class(s1).union(c.class(s2));
    Ok(KempeChain { s1, s2, members: g.reach(VertexSet::singleton(v), both), anchor: v })
}

/// Exchanges the chain's two colors on its members.
pub fn kempe_swap(g: &Graph, c: &Coloring, chain: &KempeChain) -> Result<Coloring, ColorError> {
    if chain.anchor >= g.n() || c.color(chain.anchor) != chain.s1 {
        return Err(ColorError::InvalidChain);
    }
    if kempe_chain(g, c, chain.anchor, chain.s2)? != *chain {
        return Err(ColorError::InvalidChain);
    }
    let mut colors = c.colors.clone();
    for v in chain.members {
        colors[v] = if colors[v] == chain.s1 { chain.s2 } else { chain.s1 };
    }
    Ok(Coloring { colors, k: c.k.max(chain.s2 + 1) })
}

/// Where [`cycle_model_with_stage`] found its model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KempeStage {
    /// Inside the union of the `k` Kempe chains joining consecutive roots.
    Chains,
    /// Inside the union of the `k` root color classes.
    ColorClasses,
    /// Anywhere in the graph.
    Unrestricted,
}

/// A `(v_1, …, v_k)`-rooted `C_k` model, given a proper coloring in which the
/// roots have distinct colors and each `v_i` shares a Kempe chain with `v_{i+1}`.
pub fn cycle_model_from_kempe(g: &Graph, c: &Coloring, roots: &[usize]) -> Result<Model, KempeError> {
    cycle_model_with_stage(g, c, roots).map(|(m, _)| m)
}

/// Same as [`cycle_model_from_kempe`], also reporting which search stage succeeded.
pub fn cycle_model_with_stage(g: &Graph, c: &Coloring, roots: &[usize]) -> Result<(Model, KempeStage), KempeError> {
    check_proper(g, &c.colors, c.k)?;
    let k = roots.len();
    if k < 3 {
        return Err(KempeError::TooFewRoots(k));
    }
    for &r in roots {
        g.check_vertex(r).map_err(ColorError::from)?;
    }
    if VertexSet::from_vertices(roots.iter().copied()).len() != k {
        return Err(KempeError::RepeatedRoot);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if c.color(roots[i]) == c.color(roots[j]) {
                return Err(KempeError::RepeatedColor(roots[i], roots[j]));
            }
        }
    }
    let mut chains = VertexSet::EMPTY;
    for i in 0..k {
        let next = (i + 1) % k;
        let chain = kempe_chain(g, c, roots[i], c.color(roots[next]))?;
        if !chain.members.contains(roots[next]) {
            return Err(KempeError::ChainBroken { index: i, next });
        }
        chains = chains.union(chain.members);
    }
    let classes = roots.iter().fold(VertexSet::EMPTY, |acc, &r| acc.union(c.class(c.color(r))));
    let pattern = Pattern::new(Family::Cycle(k)).map_err(|_| KempeError::TooFewRoots(k))?;
    let pattern_roots: Vec<usize> = (0..k).collect();
    let stages = [
        (KempeStage::Chains, chains),
        (KempeStage::ColorClasses, classes),
        (KempeStage::Unrestricted, g.vertices()),
    ];
    for (stage, within) in stages {
        if let Some((bags, root_binding)) = search_bags(g, pattern.graph(), within, &pattern_roots, roots, true) {
            let model = Model { host: g.clone(), pattern, bags, root_binding };
            return Ok((model, stage));
        }
    }
    Err(KempeError::NoModel)
}
