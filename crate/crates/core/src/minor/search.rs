//! Exact minor search by enumerating partitions of the host into connected bags.
//!
//! If some model exists, one exists in which every host component meeting a
//! bag is covered by bags: an unused vertex next to a bag can always join it.
//! So each component is either fully used or fully unused, and the search
//! walks vertices in breadth-first order, deciding per component and then
//! placing each vertex into an existing or a fresh block. Blocks are
//! unlabeled until a leaf, where a bijection from pattern vertices to blocks
//! is sought in the quotient graph. Roots are placed first, one per block.

use super::{has_subgraph, Model};
use crate::error::SearchError;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{Pattern, RootMode};

/// A model of `p.graph()` in `g`, ignoring any roots of `p`.
pub fn find_model(g: &Graph, p: &Pattern) -> Option<Model> {
    let h = p.graph();
    if h.n() > g.n() {
        return None;
    }
    let bags = match has_subgraph(g, h) {
        Some(embedding) => embedding.into_iter().map(VertexSet::singleton).collect(),
        None => search_bags(g, h, g.vertices(), &[], &[], false)?.0,
    };
    Some(Model { host: g.clone(), pattern: p.clone(), bags, root_binding: Vec::new() })
}

/// A model of `p` with its roots bound to `host_roots`: position by position for
/// ordered roots, under some bijection for unordered ones.
pub fn find_rooted_model(g: &Graph, p: &Pattern, host_roots: &[usize]) -> Result<Option<Model>, SearchError> {
    let roots = p.roots();
    if roots.arity() != host_roots.len() {
        return Err(SearchError::RootArity { expected: roots.arity(), got: host_roots.len() });
    }
    for &r in host_roots {
        g.check_vertex(r)?;
    }
    let set: VertexSet = host_roots.iter().copied().collect();
    if set.len() != host_roots.len() {
        return Err(SearchError::RootsNotDistinct);
    }
    let pattern_roots: &[usize] = if roots.mode == RootMode::None { &[] } else { &roots.indices };
    let ordered = roots.mode == RootMode::Ordered;
    Ok(search_bags(g, p.graph(), g.vertices(), pattern_roots, host_roots, ordered).map(|(bags, root_binding)| {
        Model { host: g.clone(), pattern: p.clone(), bags, root_binding }
    }))
}

/// Bags of a model of `h` inside `g[within]`, with `host_roots[i]` placed in
/// the bag of `pattern_roots[i]` (ordered) or of some pattern root (unordered).
/// Returns the bags and the `(pattern root, host root)` binding.
pub(crate) fn search_bags(
    g: &Graph,
    h: &Graph,
    within: VertexSet,
    pattern_roots: &[usize],
    host_roots: &[usize],
    ordered: bool,
) -> Option<(Vec<VertexSet>, Vec<(usize, usize)>)> {
    let hn = h.n();
    if hn == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    let within = within.intersection(g.vertices());
    if hn > within.len() || host_roots.iter().any(|&r| !within.contains(r)) {
        return None;
    }
    debug_assert_eq!(pattern_roots.len(), host_roots.len());
    let k = host_roots.len();
    let rows: Vec<u64> = g.rows().iter().map(|r| r & within.0).collect();

    // roots, then breadth-first from them, then the remaining components
    let mut order = Vec::with_capacity(within.len());
    let mut opens = Vec::with_capacity(within.len());
    let mut seen = 0u64;
    for &r in host_roots {
        order.push(r);
        opens.push(false);
        seen |= 1u64 << r;
    }
    let mut head = 0;
    loop {
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in VertexSet(rows[v] & !seen) {
                seen |= 1u64 << w;
                order.push(w);
                opens.push(false);
            }
        }
        let left = within.0 & !seen;
        if left == 0 {
            break;
        }
        let v = left.trailing_zeros() as usize;
        seen |= 1u64 << v;
        order.push(v);
        opens.push(true);
    }
    // after[i]: vertices at positions beyond i
    let mut after = vec![0u64; order.len()];
    let mut acc = 0u64;
    for i in (0..order.len()).rev() {
        after[i] = acc;
        acc |= 1u64 << order[i];
    }

    let all_blocks = VertexSet::full(hn).0;
    let root_blocks = VertexSet::full(k).0;
    let allowed: Vec<u64> = (0..hn)
        .map(|u| match pattern_roots.iter().position(|&p| p == u) {
            _ if k == 0 => all_blocks,
            Some(i) if ordered => 1u64 << i,
            Some(_) => root_blocks,
            None => all_blocks & !root_blocks,
        })
        .collect();
    let hdeg: Vec<usize> = (0..hn).map(|u| h.degree(u)).collect();
    let mut hdeg_desc = hdeg.clone();
    hdeg_desc.sort_unstable_by(|a, b| b.cmp(a));

    let mut search = Search {
        rows,
        order,
        opens,
        after,
        k,
        h,
        hn,
        pattern_edges: h.edge_count(),
        hdeg,
        hdeg_desc,
        allowed,
        porder: pattern_order(h),
        blocks: vec![0u64; hn],
        created: 0,
        unused: 0,
        phi: Vec::new(),
    };
    if !search.place(0) {
        return None;
    }
    let mut bags = vec![VertexSet::EMPTY; hn];
    for u in 0..hn {
        bags[u] = VertexSet(search.blocks[search.phi[u]]);
    }
    let binding = pattern_roots.iter().map(|&p| (p, host_roots[search.phi[p]])).collect();
    Some((bags, binding))
}

/// Pattern vertices ordered so that each one has many earlier neighbors.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let mut out = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    for _ in 0..h.n() {
        let next = (0..h.n())
            .filter(|&u| placed >> u & 1 == 0)
            .max_by_key(|&u| ((h.rows()[u] & placed).count_ones(), h.degree(u), std::cmp::Reverse(u)))
            .expect("an unplaced vertex remains");
        placed |= 1u64 << next;
        out.push(next);
    }
    out
}

struct Search<'a> {
    rows: Vec<u64>,
    order: Vec<usize>,
    opens: Vec<bool>,
    after: Vec<u64>,
    k: usize,
    h: &'a Graph,
    hn: usize,
    pattern_edges: usize,
    hdeg: Vec<usize>,
    hdeg_desc: Vec<usize>,
    allowed: Vec<u64>,
    porder: Vec<usize>,
    blocks: Vec<u64>,
    created: usize,
    unused: u64,
    phi: Vec<usize>,
}

impl Search<'_> {
    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.leaf();
        }
        let v = self.order[i];
        let bit = 1u64 << v;
        if i < self.k {
            self.blocks[i] = bit;
            self.created = i + 1;
            let ok = self.feasible(i) && self.place(i + 1);
            if !ok {
                self.blocks[i] = 0;
                self.created = i;
            }
            return ok;
        }
        if !self.opens[i] && self.rows[v] & self.unused != 0 {
            return self.skip(i, bit);
        }
        if !self.opens[i] {
            for b in 0..self.created {
                self.blocks[b] |= bit;
                if self.feasible(i) && self.place(i + 1) {
                    return true;
                }
                self.blocks[b] &= !bit;
            }
        }
        if self.created < self.hn {
            let b = self.created;
            self.blocks[b] = bit;
            self.created += 1;
            if self.feasible(i) && self.place(i + 1) {
                return true;
            }
            self.created -= 1;
            self.blocks[b] = 0;
        }
        self.opens[i] && self.skip(i, bit)
    }

    fn skip(&mut self, i: usize, bit: u64) -> bool {
        self.unused |= bit;
        if self.feasible(i) && self.place(i + 1) {
            return true;
        }
        self.unused &= !bit;
        false
    }

    /// Pruning after the vertex at position `i` has been placed.
    fn feasible(&self, i: usize) -> bool {
        let free = self.after[i];
        if self.hn - self.created > free.count_ones() as usize {
            return false;
        }
        let mut realized = 0;
        for b in 0..self.created {
            let block = self.blocks[b];
            if reach(&self.rows, block & block.wrapping_neg(), block | free) & block != block {
                return false;
            }
            let mut nb = 0u64;
            for v in VertexSet(block) {
                nb |= self.rows[v];
            }
            for c in (b + 1)..self.created {
                if nb & self.blocks[c] != 0 {
                    realized += 1;
                }
            }
        }
        let mut touching = 0usize;
        let mut inner = 0usize;
        for u in VertexSet(free) {
            touching += self.rows[u].count_ones() as usize;
            inner += (self.rows[u] & free).count_ones() as usize;
        }
        realized + touching - inner / 2 >= self.pattern_edges
    }

    fn leaf(&mut self) -> bool {
        if self.created != self.hn {
            return false;
        }
        let mut q = vec![0u64; self.hn];
        for b in 0..self.hn {
            let mut nb = 0u64;
            for v in VertexSet(self.blocks[b]) {
                nb |= self.rows[v];
            }
            for c in 0..self.hn {
                if c != b && nb & self.blocks[c] != 0 {
                    q[b] |= 1u64 << c;
                }
            }
        }
        let qdeg: Vec<usize> = q.iter().map(|r| r.count_ones() as usize).collect();
        let mut qdesc = qdeg.clone();
        qdesc.sort_unstable_by(|a, b| b.cmp(a));
        if qdesc.iter().zip(&self.hdeg_desc).any(|(a, b)| a < b) {
            return false;
        }
        self.phi = vec![usize::MAX; self.hn];
        self.assign(&q, &qdeg, 0, 0)
    }

    fn assign(&mut self, q: &[u64], qdeg: &[usize], idx: usize, used: u64) -> bool {
        if idx == self.hn {
            return true;
        }
        let u = self.porder[idx];
        let mut cand = self.allowed[u] & !used;
        for w in self.h.neighbors(u) {
            if self.phi[w] != usize::MAX {
                cand &= q[self.phi[w]];
            }
        }
        for b in VertexSet(cand) {
            if qdeg[b] < self.hdeg[u] {
                continue;
            }
            self.phi[u] = b;
            if self.assign(q, qdeg, idx + 1, used | 1u64 << b) {
                return true;
            }
        }
        self.phi[u] = usize::MAX;
        false
    }
}

fn reach(rows: &[u64], start: u64, within: u64) -> u64 {
    let mut seen = start & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in VertexSet(frontier) {
            next |= rows[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::{validate_model, validate_rooted};

    fn k2222() -> Graph {
        Pattern::parse("k2222").unwrap().graph().clone()
    }

    fn octahedron() -> Graph {
        Pattern::parse("kp:2,2,2").unwrap().graph().clone()
    }

    #[test]
    fn k2222_has_no_k7_vee() {
        assert!(find_model(&k2222(), &Pattern::parse("k7v").unwrap()).is_none());
    }

    #[test]
    fn k2222_has_k7_double_minus() {
        let m = find_model(&k2222(), &Pattern::parse("k7mm").unwrap()).unwrap();
        assert_eq!(validate_model(&m), Ok(()));
        assert_eq!(m.bags.iter().filter(|b| b.len() == 2).count(), 1);
    }

    #[test]
    fn k8_has_k7_vee_as_subgraph() {
        let m = find_model(&Graph::complete(8).unwrap(), &Pattern::parse("k7v").unwrap()).unwrap();
        assert!(m.bags.iter().all(|b| b.len() == 1));
        assert!(m.is_valid());
    }

    #[test]
    fn small_hosts_and_empty_patterns() {
        assert!(find_model(&Graph::complete(5).unwrap(), &Pattern::parse("k6").unwrap()).is_none());
        let empty = Pattern::explicit(Graph::empty(0).unwrap());
        let m = find_model(&Graph::empty(0).unwrap(), &empty).unwrap();
        assert!(m.bags.is_empty());
        assert!(m.is_valid());
    }

    #[test]
    fn contraction_is_found() {
        // C6 contracts to C3, C4, C5
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = Graph::from_edges(6, &edges).unwrap();
        for name in ["c3", "c4", "c5"] {
            let m = find_model(&c6, &Pattern::parse(name).unwrap()).unwrap();
            assert!(m.is_valid());
        }
        assert!(find_model(&c6, &Pattern::parse("k4").unwrap()).is_none());
    }

    #[test]
    fn rooted_examples() {
        let k4 = Pattern::parse("k4").unwrap();
        let m = find_rooted_model(&Graph::complete(4).unwrap(), &k4, &[0, 1, 2, 3]).unwrap().unwrap();
        assert!(m.bags.iter().all(|b| b.len() == 1));
        assert_eq!(validate_rooted(&m, &[0, 1, 2, 3]), Ok(()));

        let m = find_rooted_model(&octahedron(), &k4, &[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!(validate_rooted(&m, &[0, 1, 2, 3]), Ok(()));

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(find_rooted_model(&star, &k4, &[1, 2, 3, 4]).unwrap().is_none());
    }

    #[test]
    fn ordered_cycle_roots() {
        // in C4 the roots must follow the cycle order
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = Pattern::parse("c4").unwrap();
        let m = find_rooted_model(&c4, &p, &[1, 2, 3, 0]).unwrap().unwrap();
        assert_eq!(validate_rooted(&m, &[1, 2, 3, 0]), Ok(()));
        assert!(find_rooted_model(&c4, &p, &[0, 2, 1, 3]).unwrap().is_none());
    }

    #[test]
    fn rooted_errors() {
        let k4 = Pattern::parse("k4").unwrap();
        let g = Graph::complete(5).unwrap();
        assert_eq!(find_rooted_model(&g, &k4, &[0, 1]), Err(SearchError::RootArity { expected: 4, got: 2 }));
        assert_eq!(find_rooted_model(&g, &k4, &[0, 1, 2, 2]), Err(SearchError::RootsNotDistinct));
        assert!(matches!(find_rooted_model(&g, &k4, &[0, 1, 2, 9]), Err(SearchError::Graph(_))));
    }

    #[test]
    fn restricted_search_stays_inside() {
        let g = Graph::complete(6).unwrap();
        let within = VertexSet::from_vertices([1, 3, 5]);
        let (bags, _) = search_bags(&g, &Graph::complete(3).unwrap(), within, &[], &[], false).unwrap();
        assert!(bags.iter().all(|b| b.is_subset(within)));
        assert!(search_bags(&g, &Graph::complete(4).unwrap(), within, &[], &[], false).is_none());
    }
}
