mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use minorforge::connectivity::enumerate_separations;
use minorforge::enumerate::count_graphs;
use minorforge::minor::validate_rooted;
use minorforge::*;

fn all_graphs(n: usize) -> Vec<Graph> {
    generate_graphs(&GraphFilter::new(n)).unwrap()
}

fn four_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n).filter(|s| s.count_ones() == 4).map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect()).collect()
}

#[test]
fn polya_counts_are_the_known_ones() {
    // sanity of the oracle itself against hand counts
    assert_eq!(polya_edge_counts(4), vec![1, 1, 2, 3, 2, 1, 1]);
    let totals: Vec<u128> = (0..=9).map(burnside_count).collect();
    assert_eq!(totals, vec![1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]);
}

#[test]
fn class_counts_match_polya() {
    for n in 0..=8 {
        let got = count_graphs(&GraphFilter::new(n)).unwrap() as u128;
        assert_eq!(got, burnside_count(n), "n = {n}");
    }
}

#[test]
fn edge_slices_match_polya() {
    for n in [6, 7] {
        for (e, &want) in polya_edge_counts(n).iter().enumerate() {
            let f = GraphFilter::new(n).min_edges(e).max_edges(e);
            assert_eq!(count_graphs(&f).unwrap() as u128, want, "n = {n}, e = {e}");
        }
    }
    // one-sided dense bounds go through complements
    let dense: u128 = polya_edge_counts(8)[20..].iter().sum();
    assert_eq!(count_graphs(&GraphFilter::new(8).min_edges(20)).unwrap() as u128, dense);
}

#[test]
fn generated_classes_equal_labeled_classes() {
    for n in 1..=6 {
        let perms = permutations(n);
        let want = labeled_classes(n);
        let got: Vec<u64> = all_graphs(n).iter().map(|g| brute_canon(g, &perms)).collect();
        let distinct: HashSet<u64> = got.iter().copied().collect();
        assert_eq!(distinct.len(), got.len(), "isomorphic duplicates at n = {n}");
        assert_eq!(distinct, want, "n = {n}");
    }
}

#[test]
fn filtered_generation_is_complete() {
    // every labeled 2-connected graph on six vertices with at least 8 edges
    let n = 6;
    let perms = permutations(n);
    let mut want = HashSet::new();
    for bits in 0u64..1 << 15 {
        if bits.count_ones() >= 8 {
            let g = labeled_graph(n, bits);
            if brute_is_k_connected(&g, 2) {
                want.insert(brute_canon(&g, &perms));
            }
        }
    }
    let f = GraphFilter::new(n).min_edges(8).min_connectivity(2);
    let got: HashSet<u64> = generate_graphs(&f).unwrap().iter().map(|g| brute_canon(g, &perms)).collect();
    assert_eq!(got, want);
}

#[test]
fn graph6_round_trip_on_all_small_classes() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let s = emit_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}

#[test]
fn canonical_form_separates_classes() {
    let perms = permutations(5);
    let mut rng = rng(11);
    let graphs = all_graphs(5);
    for g in &graphs {
        for h in &graphs {
            assert_eq!(isomorphic(g, h), brute_canon(g, &perms) == brute_canon(h, &perms));
        }
        let p = random_permutation(&mut rng, 5);
        assert_eq!(canonical_form(&g.relabel(&p).unwrap()), canonical_form(g));
    }
}

#[test]
fn k_connectivity_matches_cut_enumeration() {
    for n in 0..=7 {
        for g in all_graphs(n) {
            for k in 0..=5 {
                assert_eq!(is_k_connected(&g, k), brute_is_k_connected(&g, k), "{} k = {k}", emit_graph6(&g));
            }
            let kappa = (0..=n).take_while(|&k| brute_is_k_connected(&g, k)).last().unwrap_or(0);
            assert_eq!(vertex_connectivity(&g), kappa, "{}", emit_graph6(&g));
        }
    }
}

#[test]
fn internal_connectivity_matches_separation_enumeration() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            for zbits in 0u64..1 << n {
                let z: Vec<usize> = (0..n).filter(|&v| zbits >> v & 1 == 1).collect();
                for k in 1..=4 {
                    assert_eq!(
                        is_internally_k_connected(&g, VertexSet(zbits), k),
                        brute_internally_k_connected(&g, &z, k),
                        "{} Z = {z:?} k = {k}",
                        emit_graph6(&g)
                    );
                }
            }
        }
    }
    let mut rng = rng(5);
    for _ in 0..150 {
        let n = rng_range(&mut rng, 6, 8);
        let g = random_graph(&mut rng, n, 0.6);
        let z = random_permutation(&mut rng, n)[..4].to_vec();
        let zs = VertexSet::from_vertices(z.iter().copied());
        for k in [2, 3, 4] {
            assert_eq!(is_internally_k_connected(&g, zs, k), brute_internally_k_connected(&g, &z, k));
        }
    }
}

fn rng_range(rng: &mut rand::rngs::StdRng, lo: usize, hi: usize) -> usize {
    use rand::Rng;
    rng.random_range(lo..=hi)
}

#[test]
fn internal_connectivity_examples() {
    let k4 = Graph::complete(4).unwrap();
    for k in 0..6 {
        assert!(is_internally_k_connected(&k4, k4.vertices(), k));
    }
    let oct = Pattern::parse("k2222").unwrap().graph().clone().delete_vertex(7).unwrap().delete_vertex(6).unwrap();
    assert_eq!(oct.edge_count(), 12);
    for z in four_subsets(6) {
        let zs = VertexSet::from_vertices(z.iter().copied());
        assert!(is_internally_k_connected(&oct, zs, 4));
        assert!(brute_internally_k_connected(&oct, &z, 4));
    }
    // two K4s sharing the pair {2, 3}
    let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];
    let g = graph(6, &e);
    assert!(!is_internally_k_connected(&g, VertexSet::from_vertices([0, 1, 2, 3]), 4));
    assert!(!brute_internally_k_connected(&g, &[0, 1, 2, 3], 4));
}

/// Unordered separations by brute force: both sides proper, `Z ⊆ A`, order at most `max`.
fn brute_separations(g: &Graph, max: usize, z: u64) -> BTreeSet<(u64, u64)> {
    let n = g.n();
    let m = matrix(g);
    let mut out = BTreeSet::new();
    let mut side = vec![0u8; n];
    loop {
        let a_only: u64 = (0..n).filter(|&v| side[v] == 0).map(|v| 1u64 << v).sum();
        let b_only: u64 = (0..n).filter(|&v| side[v] == 1).map(|v| 1u64 << v).sum();
        let sep: u64 = (0..n).filter(|&v| side[v] == 2).map(|v| 1u64 << v).sum();
        let crossing = (0..n).any(|u| (0..n).any(|v| side[u] == 0 && side[v] == 1 && m[u][v]));
        if a_only != 0 && b_only != 0 && z & b_only == 0 && sep.count_ones() as usize <= max && !crossing {
            let (a, b) = (a_only | sep, b_only | sep);
            out.insert((a.min(b), a.max(b)));
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
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

#[test]
fn separations_match_brute_force() {
    let check = |g: &Graph, max: usize, z: u64| {
        let got: Vec<Separation> = enumerate_separations(g, max, VertexSet(z)).collect();
        for s in &got {
            assert!(s.is_valid(g) && s.is_nontrivial(g) && s.order() <= max);
            assert!(VertexSet(z).is_subset(s.a));
        }
        let set: BTreeSet<(u64, u64)> = got.iter().map(|s| (s.a.0.min(s.b.0), s.a.0.max(s.b.0))).collect();
        assert_eq!(set.len(), got.len(), "a separation was yielded twice");
        assert_eq!(set, brute_separations(g, max, z), "{} max {max} Z {z:b}", emit_graph6(g));
    };
    let c5 = cycle(5);
    check(&c5, 2, 0);
    // the separator is one of the five non-adjacent pairs
    assert_eq!(enumerate_separations(&c5, 2, VertexSet(0)).count(), 5);
    check(&Graph::complete(4).unwrap(), 3, 0);
    assert_eq!(enumerate_separations(&Graph::complete(4).unwrap(), 3, VertexSet(0)).count(), 0);
    let p3 = graph(3, &[(0, 1), (1, 2)]);
    let seps: Vec<_> = enumerate_separations(&p3, 1, VertexSet::singleton(0)).collect();
    assert_eq!(seps, vec![Separation { a: VertexSet(0b011), b: VertexSet(0b110) }]);
    let mut rng = rng(23);
    for _ in 0..200 {
        let n = rng_range(&mut rng, 2, 7);
        let g = random_graph(&mut rng, n, 0.45);
        let z = rand::Rng::random_range(&mut rng, 0..1u64 << n) & rand::Rng::random_range(&mut rng, 0..1u64 << n);
        check(&g, rng_range(&mut rng, 0, 3), z);
    }
}

#[test]
fn rooted_search_matches_brute_force() {
    let patterns: Vec<Pattern> = ["k4", "k4m", "c4"].iter().map(|s| Pattern::parse(s).unwrap()).collect();
    for n in 4..=6 {
        for g in all_graphs(n) {
            for z in four_subsets(n) {
                for p in &patterns {
                    let got = find_rooted_model(&g, p, &z).unwrap();
                    let roots = match p.roots().mode {
                        RootMode::Ordered => Roots::Ordered { pattern: &p.roots().indices, host: &z },
                        _ => Roots::Unordered { pattern: &p.roots().indices, host: &z },
                    };
                    let want = brute_model_exists(&g, p.graph(), roots);
                    assert_eq!(got.is_some(), want, "{} {} Z = {z:?}", emit_graph6(&g), p.name());
                    if let Some(m) = got {
                        validate_rooted(&m, &z).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn rooted_examples() {
    let k4 = Pattern::parse("k4").unwrap();
    let m = find_rooted_model(&Graph::complete(4).unwrap(), &k4, &[0, 1, 2, 3]).unwrap().unwrap();
    assert!(m.bags.iter().all(|b| b.len() == 1));
    // octahedron with antipodal pairs {0,1}, {2,3}, {4,5}
    let oct = Pattern::parse("kp:2,2,2").unwrap().graph().clone();
    assert!(!oct.has_edge(0, 1) && !oct.has_edge(2, 3));
    let z = [0, 1, 2, 3];
    assert!(brute_model_exists(&oct, k4.graph(), Roots::Unordered { pattern: &[0, 1, 2, 3], host: &z }));
    validate_rooted(&find_rooted_model(&oct, &k4, &z).unwrap().unwrap(), &z).unwrap();
}

#[test]
fn two_paths_match_brute_force_exhaustively() {
    for n in 4..=6 {
        for g in all_graphs(n) {
            let vs: Vec<usize> = (0..n).collect();
            for &s1 in &vs {
                for &t1 in &vs {
                    for &s2 in &vs {
                        for &t2 in &vs {
                            if VertexSet::from_vertices([s1, t1, s2, t2]).len() != 4 {
                                continue;
                            }
                            let got = two_disjoint_paths(&g, s1, t1, s2, t2).unwrap();
                            assert_eq!(got.is_some(), brute_two_paths(&g, s1, t1, s2, t2));
                            if let Some((p, q)) = got {
                                check_paths(&g, &p, s1, t1);
                                check_paths(&g, &q, s2, t2);
                                assert!(p.iter().all(|v| !q.contains(v)));
                            }
                        }
                    }
                }
            }
        }
    }
}

fn check_paths(g: &Graph, p: &[usize], s: usize, t: usize) {
    assert_eq!(p.first(), Some(&s));
    assert_eq!(p.last(), Some(&t));
    assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    assert_eq!(VertexSet::from_vertices(p.iter().copied()).len(), p.len());
}

#[test]
fn clique_and_independence_numbers() {
    for n in 0..=7 {
        for g in all_graphs(n) {
            assert_eq!(clique_number(&g), brute_clique_number(&g));
            assert_eq!(independence_number(&g), brute_independence_number(&g));
        }
    }
    let spindle = Pattern::parse("spindle").unwrap().graph().clone();
    assert_eq!(brute_independence_number(&spindle), 2);
    assert_eq!(brute_clique_number(&spindle), 3);
    assert_eq!(spindle.edge_count(), 11);
    let k2222 = Pattern::parse("k2222").unwrap().graph().clone();
    let (u, v) = k2222.edges().next().unwrap();
    assert_eq!(k2222.common_neighbors(u, v).unwrap().len(), 4);
}

#[test]
fn spindle_and_maxdeg2_sweeps_cross_checked() {
    // graphs on seven vertices with α ≤ 2 and ω ≤ 3, by brute force
    let spindle = Pattern::parse("spindle").unwrap();
    let mut hosts = 0;
    for g in all_graphs(7) {
        if brute_independence_number(&g) <= 2 && brute_clique_number(&g) <= 3 {
            hosts += 1;
            assert!(find_model(&g, &spindle).is_some(), "{}", emit_graph6(&g));
        }
    }
    let r = verify::verify_spindle_claim(&Options::with_jobs(1)).unwrap();
    assert_eq!(r.cases, hosts);
    assert!(r.verified());
}
