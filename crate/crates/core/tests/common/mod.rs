//! Brute-force oracles. They only read adjacency through `Graph::n` and
//! `Graph::has_edge`, so they share no search code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

use minorforge::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub fn labeled_graph(n: usize, bits: u64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, p)| p).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Minimum over all relabelings of the upper-triangle bit string, first pair most significant.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let m = matrix(g);
    let ps = pairs(g.n());
    perms
        .iter()
        .map(|p| ps.iter().fold(0u64, |acc, &(i, j)| acc << 1 | m[p[i]][p[j]] as u64))
        .min()
        .unwrap_or(0)
}

/// Isomorphism classes of all labeled graphs on `n` vertices (use n <= 6).
pub fn labeled_classes(n: usize) -> HashSet<u64> {
    let perms = permutations(n);
    let m = pairs(n).len();
    (0..1u64 << m).map(|bits| brute_canon(&labeled_graph(n, bits), &perms)).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in (1..=n.min(max)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, out);
        cur.pop();
    }
}

/// Number of unlabeled graphs on `n` vertices with each edge count (Pólya
/// counting over the cycle types of the symmetric group acting on pairs).
pub fn polya_edge_counts(n: usize) -> Vec<u128> {
    let m = n * n.saturating_sub(1) / 2;
    let mut total = vec![0u128; m + 1];
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    for lambda in parts {
        // permutations with this cycle type: n! / prod(k^m_k m_k!)
        let mut denom = 1u128;
        let mut i = 0;
        while i < lambda.len() {
            let k = lambda[i];
            let mult = lambda.iter().filter(|&&x| x == k).count();
            denom *= (k as u128).pow(mult as u32) * fact(mult);
            i += mult;
        }
        let weight = fact(n) / denom;
        let mut lengths = Vec::new();
        for (a, &k) in lambda.iter().enumerate() {
            if k % 2 == 1 {
                lengths.extend(std::iter::repeat_n(k, (k - 1) / 2));
            } else {
                lengths.extend(std::iter::repeat_n(k, k / 2 - 1));
                lengths.push(k / 2);
            }
            for &l in &lambda[a + 1..] {
                let g = gcd(k, l);
                lengths.extend(std::iter::repeat_n(k * l / g, g));
            }
        }
        let mut poly = vec![0u128; m + 1];
        poly[0] = 1;
        for len in lengths {
            for e in (len..=m).rev() {
                poly[e] += poly[e - len];
            }
        }
        for e in 0..=m {
            total[e] += weight * poly[e];
        }
    }
    total.into_iter().map(|c| c / fact(n)).collect()
}

pub fn burnside_count(n: usize) -> u128 {
    polya_edge_counts(n).iter().sum()
}

fn connected_within(m: &[Vec<bool>], set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        i += 1;
        for &w in set {
            if m[v][w] && !seen.contains(&w) {
                seen.push(w);
            }
        }
    }
    seen.len() == set.len()
}

pub enum Roots<'a> {
    None,
    Ordered { pattern: &'a [usize], host: &'a [usize] },
    Unordered { pattern: &'a [usize], host: &'a [usize] },
}

/// Tries every map from host vertices to pattern vertices or "unused".
pub fn brute_model_exists(g: &Graph, h: &Graph, roots: Roots) -> bool {
    let (n, k) = (g.n(), h.n());
    if k == 0 {
        return true;
    }
    let gm = matrix(g);
    let hm = matrix(h);
    let mut a = vec![0usize; n];
    loop {
        if check_assignment(&gm, &hm, &a, &roots) {
            return true;
        }
        // next assignment in base k + 1 (value k = unused)
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] <= k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

fn check_assignment(gm: &[Vec<bool>], hm: &[Vec<bool>], a: &[usize], roots: &Roots) -> bool {
    let k = hm.len();
    let bags: Vec<Vec<usize>> = (0..k).map(|u| (0..a.len()).filter(|&v| a[v] == u).collect()).collect();
    if bags.iter().any(|b| !connected_within(gm, b)) {
        return false;
    }
    for u in 0..k {
        for w in (u + 1)..k {
            if hm[u][w] && !bags[u].iter().any(|&x| bags[w].iter().any(|&y| gm[x][y])) {
                return false;
            }
        }
    }
    match roots {
        Roots::None => true,
        Roots::Ordered { pattern, host } => pattern.iter().zip(host.iter()).all(|(&p, &x)| a[x] == p),
        Roots::Unordered { pattern, host } => {
            let mut got: Vec<usize> = host.iter().map(|&x| a[x]).collect();
            let mut want = pattern.to_vec();
            got.sort();
            want.sort();
            got == want
        }
    }
}

/// Enumerates every simple `s1`–`t1` path and looks for an `s2`–`t2` path avoiding it.
pub fn brute_two_paths(g: &Graph, s1: usize, t1: usize, s2: usize, t2: usize) -> bool {
    let m = matrix(g);
    let n = g.n();
    fn avoid_reach(m: &[Vec<bool>], blocked: &[bool], s: usize, t: usize) -> bool {
        let mut seen = vec![false; m.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            if v == t {
                return true;
            }
            for w in 0..m.len() {
                if m[v][w] && !seen[w] && !blocked[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
    fn dfs(m: &[Vec<bool>], on: &mut Vec<bool>, v: usize, t1: usize, s2: usize, t2: usize) -> bool {
        if v == t1 {
            return avoid_reach(m, on, s2, t2);
        }
        for w in 0..m.len() {
            if m[v][w] && !on[w] && w != s2 && w != t2 {
                on[w] = true;
                if dfs(m, on, w, t1, s2, t2) {
                    return true;
                }
                on[w] = false;
            }
        }
        false
    }
    let mut on = vec![false; n];
    on[s1] = true;
    dfs(&m, &mut on, s1, t1, s2, t2)
}

/// Smallest `k` with a proper `k`-coloring, by trying all color vectors.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let m = matrix(g);
    for k in 1..=n {
        let mut c = vec![0usize; n];
        loop {
            let proper = (0..n).all(|u| (u + 1..n).all(|v| !m[u][v] || c[u] != c[v]));
            if proper {
                return k;
            }
            // vertex 0 keeps color 0
            let mut i = 1;
            loop {
                if i >= n {
                    break;
                }
                c[i] += 1;
                if c[i] < k {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i >= n {
                break;
            }
        }
    }
    n
}

fn subsets_of_size_below(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).filter(move |s| (s.count_ones() as usize) < k).map(move |s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
}

/// At least `k + 1` vertices and connected after deleting any `k − 1` of them.
pub fn brute_is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n < k + 1 {
        return false;
    }
    let m = matrix(g);
    subsets_of_size_below(n, k).all(|s| {
        let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        connected_within(&m, &rest)
    })
}

/// No separation `(A, B)` with `Z ⊆ A`, order below `k` and `B − A` nonempty:
/// tries every split of the vertices into `A − B`, `B − A` and `A ∩ B`.
pub fn brute_internally_k_connected(g: &Graph, z: &[usize], k: usize) -> bool {
    let n = g.n();
    let m = matrix(g);
    let mut side = vec![0u8; n]; // 0: A − B, 1: B − A, 2: A ∩ B
    loop {
        let ok_z = z.iter().all(|&v| side[v] != 1);
        let b_only = side.contains(&1);
        let order = side.iter().filter(|&&s| s == 2).count();
        if ok_z && b_only && order < k {
            let separated = (0..n).all(|u| (0..n).all(|v| !(side[u] == 0 && side[v] == 1 && m[u][v])));
            if separated {
                return false;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            side[i] += 1;
            if side[i] < 3 {
                break;
            }
            side[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    let m = matrix(g);
    (0u64..1 << n)
        .filter(|s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().all(|&u| vs.iter().all(|&v| u == v || m[u][v]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_independence_number(g: &Graph) -> usize {
    brute_clique_number(&g.complement())
}

/// Graph on `n` vertices from an edge list given as pairs.
pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &e)
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        p.swap(i, j);
    }
    p
}
