//! Canonical labeling by partition refinement and individualization search.
//!
//! The canonical labeling is the vertex ordering, among the leaves of the
//! refinement search tree, whose upper-triangle adjacency bit string (read in
//! graph6 order, column by column) is lexicographically smallest. Automorphisms
//! found at equal leaves prune sibling subtrees that lie in the same orbit
//! under the pointwise stabilizer of the current prefix.

use std::cmp::Ordering;

use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// Upper-triangle bit string of a labeled graph in graph6 bit order, packed
/// MSB-first into 64-bit words. Lexicographic order on codes of equal-order
/// graphs is lexicographic order on their graph6 strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(pub Vec<u64>);

impl Code {
    /// Code of `g` read through `order` (position -> vertex).
    pub fn of_ordering(g: &Graph, order: &[usize]) -> Code {
        let n = order.len();
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64).max(1)];
        let mut pos = 0usize;
        for j in 1..n {
            let row = g.rows()[order[j]];
            for &vi in &order[..j] {
                if row >> vi & 1 == 1 {
                    words[pos / 64] |= 1u64 << (63 - pos % 64);
                }
                pos += 1;
            }
        }
        Code(words)
    }

    pub fn of_graph(g: &Graph) -> Code {
        let id: Vec<usize> = (0..g.n()).collect();
        Code::of_ordering(g, &id)
    }

    /// Rebuilds the labeled graph on `n` vertices from a code.
    pub fn to_graph(&self, n: usize) -> Graph {
        let mut rows = vec![0u64; n];
        let mut pos = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.0[pos / 64] >> (63 - pos % 64) & 1 == 1 {
                    rows[i] |= 1u64 << j;
                    rows[j] |= 1u64 << i;
                }
                pos += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

/// Result of the canonical labeling search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[p]` is the vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// Code of the canonically relabeled graph.
    pub code: Code,
    /// Automorphisms discovered during the search (as vertex maps).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    /// `position[v]` is the canonical position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

/// Canonical form: the graph6 bytes of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.n();
    if n <= 1 {
        let order: Vec<usize> = (0..n).collect();
        return Labeling { code: Code::of_ordering(g, &order), order, automorphisms: Vec::new() };
    }
    let mut cells = initial_partition(g);
    refine(g, &mut cells);
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    let mut prefix = Vec::with_capacity(n);
    search.visit(cells, &mut prefix);
    let (code, order, _) = search.best.expect("search reaches a leaf");
    Labeling { order, code, automorphisms: search.automorphisms }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    lab.code.to_graph(g.n())
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::emit(&canonical_graph(g)).into_bytes())
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_labeling(g).code == canonical_labeling(h).code
}

fn initial_partition(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut by_degree = vec![0u64; n];
    for v in 0..n {
        by_degree[g.degree(v)] |= 1u64 << v;
    }
    by_degree.into_iter().filter(|&c| c != 0).collect()
}

/// Refines an ordered partition until it is equitable. Cells are split by the
/// number of neighbors in each splitter cell, new pieces ordered by that count.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let rows = g.rows();
    let n = g.n();
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            if cells.len() == n {
                return;
            }
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                groups.clear();
                for v in VertexSet(cell) {
                    let c = (rows[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some(entry) => entry.1 |= 1u64 << v,
                        None => groups.push((c, 1u64 << v)),
                    }
                }
                if groups.len() == 1 {
                    i += 1;
                    continue;
                }
                groups.sort_unstable_by_key(|&(c, _)| c);
                cells.splice(i..=i, groups.iter().map(|&(_, m)| m));
                i += groups.len();
                changed = true;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Code, Vec<usize>, Vec<usize>)>,
    best: Option<(Code, Vec<usize>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// No backjump requested.
const NONE: usize = usize::MAX;

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns the depth to resume at when
    /// an automorphism shows the rest of the subtree is equivalent to one
    /// already explored.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> usize {
        let n = self.g.n();
        if cells.len() == n {
            return self.leaf(&cells, prefix);
        }
        let depth = prefix.len();
        // first smallest non-singleton cell
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for w in VertexSet(cell) {
            if !explored.is_empty() && self.same_orbit(w, &explored, prefix) {
                continue;
            }
            explored.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << w);
            child.push(cell & !(1u64 << w));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            prefix.push(w);
            let back = self.visit(child, prefix);
            prefix.pop();
            if back < depth {
                return back;
            }
        }
        NONE
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> usize {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = Code::of_ordering(self.g, &order);
        let Some((first_code, first_order, first_path)) = &self.first else {
            self.first = Some((code.clone(), order.clone(), prefix.to_vec()));
            self.best = Some((code, order, prefix.to_vec()));
            return NONE;
        };
        if *first_code == code {
            let aut = automorphism(&order, first_order);
            let back = common_prefix(prefix, first_path);
            self.automorphisms.push(aut);
            return back;
        }
        let (best_code, best_order, best_path) = self.best.as_ref().expect("set with first");
        match code.cmp(best_code) {
            Ordering::Less => {
                self.best = Some((code, order, prefix.to_vec()));
                NONE
            }
            Ordering::Equal => {
                let aut = automorphism(&order, best_order);
                let back = common_prefix(prefix, best_path);
                if !self.automorphisms.contains(&aut) {
                    self.automorphisms.push(aut);
                }
                back
            }
            Ordering::Greater => NONE,
        }
    }

    /// Whether `w` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.automorphisms {
            if prefix.iter().any(|&p| aut[p] != p) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, aut[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }
}

/// Map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut map = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        map[a] = b;
    }
    map
}
