use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// Vertex-disjoint paths `s1 → t1` and `s2 → t2`, if they exist.
///
/// Backtracks over induced `s1`–`t1` paths avoiding `s2`, `t2`, abandoning a
/// branch as soon as `s2` and `t2` are separated by the partial path. Any
/// solution can be shortened to one whose first path is induced.
pub fn two_disjoint_paths(
    g: &Graph,
    s1: usize,
    t1: usize,
    s2: usize,
    t2: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>, GraphError> {
    let terminals = [s1, t1, s2, t2];
    for &v in &terminals {
        g.check_vertex(v)?;
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if terminals[i] == terminals[j] {
                return Err(GraphError::SameVertex(terminals[i]));
            }
        }
    }
    let mut walk = Walk { g, t1, s2, t2, path: vec![s1], on_path: VertexSet::singleton(s1), found: None };
    if walk.connected() {
        walk.extend();
    }
    Ok(walk.found)
}

struct Walk<'a> {
    g: &'a Graph,
    t1: usize,
    s2: usize,
    t2: usize,
    path: Vec<usize>,
    on_path: VertexSet,
    found: Option<(Vec<usize>, Vec<usize>)>,
}

impl Walk<'_> {
    fn connected(&self) -> bool {
        let rest = self.g.vertices().difference(self.on_path);
        self.g.reach(VertexSet::singleton(self.s2), rest).contains(self.t2)
    }

    fn extend(&mut self) -> bool {
        let last = *self.path.last().expect("path starts at s1");
        if self.g.has_edge(last, self.t1) {
            self.path.push(self.t1);
            self.on_path.insert(self.t1);
            if let Some(p2) = self.second_path() {
                self.found = Some((self.path.clone(), p2));
                return true;
            }
            self.path.pop();
            self.on_path.remove(self.t1);
            return false;
        }
        let before = self.on_path.without(last);
        let blocked = VertexSet::from_vertices([self.s2, self.t2]);
        for v in self.g.neighbors(last).difference(self.on_path).difference(blocked) {
            // keep the path induced
            if !self.g.neighbors(v).intersection(before).is_empty() {
                continue;
            }
            self.path.push(v);
            self.on_path.insert(v);
            if self.connected() && self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path.remove(v);
        }
        false
    }

    /// Breadth-first `s2`–`t2` path avoiding the first path, lowest labels first.
    fn second_path(&self) -> Option<Vec<usize>> {
        let n = self.g.n();
        let avoid = self.on_path;
        let mut prev = vec![usize::MAX; n];
        prev[self.s2] = self.s2;
        let mut queue = vec![self.s2];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if v == self.t2 {
                let mut out = vec![v];
                let mut x = v;
                while x != self.s2 {
                    x = prev[x];
                    out.push(x);
                }
                out.reverse();
                return Some(out);
            }
            for w in self.g.neighbors(v).difference(avoid) {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push(w);
                }
            }
        }
        None
    }
}
