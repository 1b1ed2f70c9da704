//! Vertex connectivity, internal connectivity of rooted pairs, and separations.

use crate::graph::{Graph, VertexSet};

/// A separation `(A, B)`: `A ∪ B = V(G)` and no edge joins `A − B` to `B − A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.a.intersection(self.b).len()
    }

    pub fn separator(&self) -> VertexSet {
        self.a.intersection(self.b)
    }

    /// Neither side is the whole vertex set.
    pub fn is_nontrivial(&self, g: &Graph) -> bool {
        self.a != g.vertices() && self.b != g.vertices()
    }

    /// Checks the defining conditions against `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.a.union(self.b) != g.vertices() {
            return false;
        }
        let only_a = self.a.difference(self.b);
        let only_b = self.b.difference(self.a);
        g.set_neighbors(only_a).intersection(only_b).is_empty()
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, stopping at `cap`.
///
/// `s` and `t` must be distinct and non-adjacent. Runs augmenting paths on the
/// vertex-split digraph: each vertex other than `s`, `t` has unit capacity.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // through: vertices whose in->out arc carries flow.
    // arc[u] bit v: flow on out(u) -> in(v).
    let mut through = 0u64;
    let mut arc = vec![0u64; n];
    let mut flow = 0;
    // node ids: in(v) = 2v, out(v) = 2v + 1
    let mut prev = vec![usize::MAX; 2 * n];
    let mut queue = Vec::with_capacity(2 * n);
    while flow < cap {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        let source = 2 * s + 1;
        let sink = 2 * t;
        prev[source] = source;
        queue.push(source);
        let mut head = 0;
        let mut found = false;
        'bfs: while head < queue.len() {
            let x = queue[head];
            head += 1;
            let v = x / 2;
            if x % 2 == 1 {
                // out(v): forward to in(w) along unused edges
                for w in VertexSet(g.rows()[v] & !arc[v]) {
                    let y = 2 * w;
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        if y == sink {
                            found = true;
                            break 'bfs;
                        }
                        queue.push(y);
                    }
                }
                // back across the split arc
                if v != s && v != t && through >> v & 1 == 1 {
                    let y = 2 * v;
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push(y);
                    }
                }
            } else {
                // in(v): across the split arc if unused
                if v != s && through >> v & 1 == 0 {
                    let y = 2 * v + 1;
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push(y);
                    }
                }
                // cancel flow arriving at in(v)
                for u in 0..n {
                    if arc[u] >> v & 1 == 1 {
                        let y = 2 * u + 1;
                        if prev[y] == usize::MAX {
                            prev[y] = x;
                            queue.push(y);
                        }
                    }
                }
            }
        }
        if !found {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            let (xv, yv) = (x / 2, y / 2);
            match (x % 2, xv == yv) {
                // out(v) -> in(v): undo the split arc
                (1, true) => through &= !(1u64 << xv),
                (1, false) => arc[xv] |= 1u64 << yv,
                (_, true) => through |= 1u64 << xv,
                // in(v) -> out(u): cancel out(u) -> in(v)
                (_, false) => arc[yv] &= !(1u64 << xv),
            }
            y = x;
        }
        flow += 1;
    }
    flow
}

/// `true` iff `n ≥ k + 1` and no set of fewer than `k` vertices disconnects `g`.
///
/// Decided by Menger: every non-adjacent pair must be joined by `k`
/// internally disjoint paths.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k {
        return false;
    }
    for u in 0..n {
        let non = g.vertices().difference(g.neighbors(u)).0 & !((2u64 << u).wrapping_sub(1));
        for v in VertexSet(non) {
            if local_connectivity(g, u, v, k) < k {
                return false;
            }
        }
    }
    true
}

/// Vertex connectivity; `n − 1` for complete graphs and `0` for the empty graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                best = best.min(local_connectivity(g, u, v, best));
            }
        }
    }
    best
}

/// `(G, Z)` is internally `k`-connected: there is no separation `(A, B)` with
/// `Z ⊆ A`, order below `k` and `B − A` nonempty.
pub fn is_internally_k_connected(g: &Graph, z: VertexSet, k: usize) -> bool {
    let z = z.intersection(g.vertices());
    let rest = g.vertices().difference(z);
    if rest.is_empty() {
        return true;
    }
    if rest.len() <= 16 {
        // B − A = S ranges over nonempty subsets of V − Z; the cheapest B is S ∪ N(S).
        let mask = rest.0;
        let mut s = 0u64;
        loop {
            s = next_subset(s, mask);
            if s == 0 {
                return true;
            }
            if g.set_neighbors(VertexSet(s)).len() < k {
                return false;
            }
        }
    }
    if z.len() < k || g.n() < k + 1 {
        // (Z, V) itself is a separation of order |Z| with B − A = V − Z.
        return false;
    }
    is_k_connected(&g.add_clique(z).expect("z is in range"), k)
}

/// Next subset of `mask` after `cur` in increasing numeric order; `0` after the last.
#[inline]
pub(crate) fn next_subset(cur: u64, mask: u64) -> u64 {
    (cur | !mask).wrapping_add(1) & mask
}

/// Lazily enumerates the non-trivial separations `(A, B)` of `(G, Z)` with
/// `Z ⊆ A`, order at most `max_order` and `B − A ≠ ∅`.
///
/// When both orientations satisfy the constraints the separation is yielded
/// once, oriented so that the lowest vertex of `(A − B) ∪ (B − A)` lies in `A − B`.
pub fn enumerate_separations(g: &Graph, max_order: usize, z: VertexSet) -> Separations<'_> {
    let z = z.intersection(g.vertices());
    Separations {
        g,
        max_order,
        z,
        free: g.vertices().difference(z).0,
        s: 0,
        avail: 0,
        t: 0,
        done: false,
    }
}

pub struct Separations<'a> {
    g: &'a Graph,
    max_order: usize,
    z: VertexSet,
    free: u64,
    s: u64,
    avail: u64,
    t: u64,
    done: bool,
}

impl Iterator for Separations<'_> {
    type Item = Separation;

    fn next(&mut self) -> Option<Separation> {
        let n = self.g.n();
        while !self.done {
            if self.s != 0 {
                self.t = next_subset(self.t, self.avail);
            }
            if self.t == 0 {
                self.s = next_subset(self.s, self.free);
                if self.s == 0 {
                    self.done = true;
                    return None;
                }
                let s = VertexSet(self.s);
                self.avail = self.g.vertices().difference(s.union(self.g.set_neighbors(s))).0;
                self.t = 0;
                continue;
            }
            let (s, t) = (self.s, self.t);
            let order = n - s.count_ones() as usize - t.count_ones() as usize;
            if order > self.max_order {
                continue;
            }
            if t & self.z.0 == 0 && (s | t).trailing_zeros() != t.trailing_zeros() {
                continue;
            }
            let all = self.g.vertices().0;
            return Some(Separation { a: VertexSet(all & !s), b: VertexSet(all & !t) });
        }
        None
    }
}
