use crate::graph::{Graph, VertexSet};

/// An injection `φ` with `φ(u)φ(w) ∈ E(g)` for every edge `uw` of `h`, if one exists.
/// `φ[u]` is the host vertex of pattern vertex `u`.
pub fn has_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() || h.max_degree() > g.max_degree() {
        return if h.n() == 0 { Some(Vec::new()) } else { None };
    }
    // each pattern vertex after the first has as many placed neighbors as possible
    let mut order = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    for _ in 0..h.n() {
        let next = (0..h.n())
            .filter(|&u| placed >> u & 1 == 0)
            .max_by_key(|&u| ((h.rows()[u] & placed).count_ones(), h.degree(u), std::cmp::Reverse(u)))
            .expect("an unplaced vertex remains");
        placed |= 1u64 << next;
        order.push(next);
    }
    let mut phi = vec![usize::MAX; h.n()];
    if embed(g, h, &order, 0, 0, &mut phi) {
        Some(phi)
    } else {
        None
    }
}

fn embed(g: &Graph, h: &Graph, order: &[usize], idx: usize, used: u64, phi: &mut [usize]) -> bool {
    if idx == order.len() {
        return true;
    }
    let u = order[idx];
    let mut cand = g.vertices().0 & !used;
    for w in h.neighbors(u) {
        if phi[w] != usize::MAX {
            cand &= g.rows()[phi[w]];
        }
    }
    for x in VertexSet(cand) {
        if g.degree(x) < h.degree(u) {
            continue;
        }
        phi[u] = x;
        if embed(g, h, order, idx + 1, used | 1u64 << x, phi) {
            return true;
        }
    }
    phi[u] = usize::MAX;
    false
}
