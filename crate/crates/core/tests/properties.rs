mod common;

use antiramsey_core::construct::{blow_up, normal_coloring, symmetrize, SizeFunction};
use antiramsey_core::formulas::ar_multipartite_k3;
use antiramsey_core::iso::{canonical_form, colored_isomorphic};
use antiramsey_core::partition::RestrictedGrowth;
use antiramsey_core::search::{Goal, Search, Sequential};
use antiramsey_core::theorem6::weighted_color_count;
use antiramsey_core::{ColoredGraph, Graph, PartiteSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A graph on up to 8 vertices with random edges and random colors.
fn colored_graph() -> impl Strategy<Value = ColoredGraph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), 1usize..=8, any::<u64>())
        })
        .prop_map(|(n, keep, colors, seed)| {
            let all = Graph::complete(n);
            let edges: Vec<_> = all
                .edges()
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&p, _)| p)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            common::random_coloring(&mut rng, &g, colors)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn partition_sanity(cg in colored_graph()) {
        let total: usize = cg.classes().iter().map(Vec::len).sum();
        prop_assert_eq!(total, cg.graph().edge_count());
        let cls = cg.classify();
        let (s0, s1, s2) = cls.counts();
        prop_assert_eq!(s0 + s1 + s2, cg.color_count());
        prop_assert_eq!(cg.color_count(), common::color_count(&cg));
    }

    #[test]
    fn exclusive_colors_are_single_edges(cg in colored_graph()) {
        let cls = cg.classify();
        for c in 0..cg.color_count() {
            prop_assert_eq!(cls.s2.contains_key(&c), cg.classes()[c].len() == 1);
        }
        for (&c, &v) in &cls.s1 {
            prop_assert!(cg.is_saturated_by(c, v));
        }
    }

    #[test]
    fn saturated_degrees_sum(cg in colored_graph()) {
        let n = cg.graph().vertex_count();
        let (_, s1, s2) = cg.classify().counts();
        let sum: usize = (0..n).map(|v| cg.saturated_color_degree(v)).sum();
        prop_assert_eq!(sum, s1 + 2 * s2);
        for v in 0..n {
            prop_assert_eq!(cg.saturated_color_degree(v), common::saturated_degree(&cg, v));
        }
    }

    #[test]
    fn rainbow_search_matches_naive(cg in colored_graph(), k in 2usize..=5) {
        let fast = cg.rainbow_clique(k);
        prop_assert_eq!(fast.is_some(), common::has_rainbow_clique(&cg, k));
        if let Some(set) = fast {
            prop_assert_eq!(set.len(), k);
        }
    }

    #[test]
    fn restricted_growth_classes_never_split(m in 1usize..=7) {
        // two positions with equal labels in a prefix stay equal in every
        // string extending that prefix
        let all: Vec<Vec<usize>> = RestrictedGrowth::new(m).collect();
        prop_assert_eq!(all.clone(), common::all_partitions(m));
        for s in &all {
            for t in &all {
                let p = s.iter().zip(t).take_while(|(a, b)| a == b).count();
                for i in 0..p {
                    for j in 0..p {
                        prop_assert_eq!(s[i] == s[j], t[i] == t[j]);
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_form_respects_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let spec = common::random_spec(&mut rng, 2, 7);
        let g = Graph::host(&spec);
        let colors = rng.gen_range(1..=g.edge_count());
        let a = common::random_coloring(&mut rng, &g, colors);
        let b = common::random_relabel(&mut rng, &a);
        assert!(colored_isomorphic(&a, &b));
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }
    let mut distinguished = 0;
    for _ in 0..200 {
        let spec = common::random_spec(&mut rng, 2, 7);
        let g = Graph::host(&spec);
        let a = common::random_coloring(&mut rng, &g, 3);
        let b = common::random_coloring(&mut rng, &g, 3);
        let mut pa: Vec<usize> = a.classes().iter().map(Vec::len).collect();
        let mut pb: Vec<usize> = b.classes().iter().map(Vec::len).collect();
        pa.sort_unstable();
        pb.sort_unstable();
        if pa != pb {
            distinguished += 1;
            assert!(!colored_isomorphic(&a, &b));
            assert_ne!(canonical_form(&a), canonical_form(&b));
        }
        assert_eq!(colored_isomorphic(&a, &b), canonical_form(&a) == canonical_form(&b));
    }
    assert!(distinguished > 50);
}

#[test]
fn blow_up_count_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 2..=5 {
        let g = Graph::complete(r);
        for _ in 0..60 {
            let colors = rng.gen_range(1..=g.edge_count());
            let base = common::random_coloring(&mut rng, &g, colors);
            let f = SizeFunction::new((0..r).map(|_| rng.gen_range(1..=3)).collect::<Vec<_>>()).unwrap();
            let blown = blow_up(&base, &f).unwrap();
            assert_eq!(weighted_color_count(&base, &f).unwrap(), common::color_count(&blown) as u64);
            assert_eq!(blown.graph().part_sizes(), Some(f.as_slice()));
        }
    }
}

#[test]
fn blow_up_preserves_rainbow_freeness_exhaustively() {
    for r in 3..=5 {
        let g = Graph::complete(r);
        let f = SizeFunction::uniform(r, 2).unwrap();
        for labels in RestrictedGrowth::new(g.edge_count()) {
            let base = ColoredGraph::from_labels(g.clone(), &labels).unwrap();
            for k in 3..=r {
                if !base.contains_rainbow_clique(k) {
                    let blown = blow_up(&base, &f).unwrap();
                    assert!(!blown.contains_rainbow_clique(k), "r={r} k={k} {labels:?}");
                }
            }
        }
    }
}

#[test]
fn planted_rainbow_projects_to_base() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let r = rng.gen_range(3..=5);
        let k = rng.gen_range(3..=r);
        let g = Graph::complete(r);
        // rainbow on 0..k, random merges elsewhere
        let mut labels: Vec<usize> = (0..g.edge_count()).collect();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if b >= k && rng.gen_bool(0.7) {
                labels[e] = labels[g.edge_id(0, 1 + a % (k - 1)).unwrap()];
            }
        }
        let base = ColoredGraph::from_labels(g, &labels).unwrap();
        assert!(base.contains_rainbow_clique(k));
        let f = SizeFunction::new((0..r).map(|_| rng.gen_range(1..=3)).collect::<Vec<_>>()).unwrap();
        let blown = blow_up(&base, &f).unwrap();
        let set = blown.rainbow_clique(k).expect("blow-up keeps the planted clique");
        let parts: Vec<usize> = set.iter().map(|&v| blown.graph().part_of(v).unwrap()).collect();
        let base_edges: Vec<usize> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| base.color_between(parts[i], parts[j]).unwrap())
            .collect();
        let mut dedup = base_edges.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), base_edges.len(), "projection is rainbow");
    }
}

#[test]
fn symmetrization_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked_symmetric = 0;
    for _ in 0..300 {
        let spec = common::random_spec(&mut rng, 3, 7);
        let g = Graph::host(&spec);
        let colors = rng.gen_range(1..=g.edge_count());
        let merges = rng.gen_range(0..4);
        let cg = match rng.gen_range(0..3) {
            0 => common::random_coloring(&mut rng, &g, colors),
            1 => common::random_merges(&mut rng, &ar_multipartite_k3(&spec).unwrap().witness.unwrap(), merges),
            _ => {
                let base = common::random_coloring(&mut rng, &Graph::complete(spec.r()), 4);
                blow_up(&base, &SizeFunction::new(spec.sizes()).unwrap()).unwrap()
            }
        };
        let parts = g.parts().unwrap();
        let Some(p) = parts.iter().find(|p| p.len() >= 2) else { continue };
        let (u, v) = (p.start, p.start + 1);
        let out = symmetrize(&cg, v, u).unwrap();
        let expect = cg.color_count() + cg.saturated_color_degree(u) - cg.saturated_color_degree(v);
        assert_eq!(common::color_count(&out), expect);
        assert!(out.vertices_symmetric(u, v).unwrap());
        if !cg.contains_rainbow_clique(3) {
            assert!(!out.contains_rainbow_clique(3));
        }
        // pairs symmetric before stay symmetric after
        for q in &parts {
            for x in q.clone() {
                for y in q.clone() {
                    if x < y && x != v && y != v && cg.vertices_symmetric(x, y).unwrap() {
                        checked_symmetric += 1;
                        assert!(out.vertices_symmetric(x, y).unwrap());
                    }
                }
            }
        }
    }
    assert!(checked_symmetric > 50);
}

#[test]
fn blown_copies_are_symmetric() {
    let base = ColoredGraph::from_labels(Graph::complete(3), &[0, 0, 1]).unwrap();
    let blown = blow_up(&base, &SizeFunction::uniform(3, 2).unwrap()).unwrap();
    for p in blown.graph().parts().unwrap() {
        assert!(blown.vertices_symmetric(p.start, p.start + 1).unwrap());
    }
}

#[test]
fn search_matches_direct_enumeration() {
    // unit weights on small hosts: the search maximum equals the maximum
    // over every partition, and Goal::All returns exactly the argmax set
    let hosts = [
        (Graph::complete(4), 3),
        (Graph::complete(4), 4),
        (Graph::host(&PartiteSpec::new([2, 1, 1]).unwrap()), 3),
        (Graph::host(&PartiteSpec::new([2, 2, 1]).unwrap()), 3),
        (Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (1, 3)]).unwrap(), 3),
    ];
    for (g, k) in hosts {
        let mut best = 0;
        let mut argmax = Vec::new();
        for labels in common::all_partitions(g.edge_count()) {
            let cg = ColoredGraph::from_labels(g.clone(), &labels).unwrap();
            if common::has_rainbow_clique(&cg, k) {
                continue;
            }
            let c = common::color_count(&cg);
            if c > best {
                best = c;
                argmax.clear();
            }
            if c == best {
                argmax.push(labels);
            }
        }
        let n = g.vertex_count();
        for depth in [0, 2, 6] {
            let s = Search::new(&g, k, &vec![1; n]).unwrap().with_prefix_depth(depth);
            let one = s.clone().solve(&Sequential);
            assert_eq!(one.value, Some(best as u64));
            assert_eq!(one.labelings, vec![argmax[0].clone()]);
            let all = s.with_goal(Goal::All).solve(&Sequential);
            assert_eq!(all.labelings, argmax);
        }
    }
}

#[test]
fn weighted_search_matches_direct_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..20 {
        let r = rng.gen_range(3..=5);
        let k = rng.gen_range(3..=r.min(4));
        let f: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let g = Graph::complete(r);
        let sf = SizeFunction::new(f.iter().map(|&x| x as usize).collect::<Vec<_>>()).unwrap();
        let mut best = 0;
        let mut first = None;
        for labels in RestrictedGrowth::new(g.edge_count()) {
            let cg = ColoredGraph::from_labels(g.clone(), &labels).unwrap();
            if cg.contains_rainbow_clique(k) {
                continue;
            }
            let w = weighted_color_count(&cg, &sf).unwrap();
            if w > best {
                best = w;
                first = Some(labels);
            }
        }
        let out = Search::new(&g, k, &f).unwrap().solve(&Sequential);
        assert_eq!(out.value, Some(best), "f={f:?} k={k}");
        assert_eq!(out.labelings.first(), first.as_ref());
    }
}

#[test]
fn normal_coloring_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let k = rng.gen_range(3..=5);
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        let spec = PartiteSpec::new(sizes).unwrap();
        let cg = normal_coloring(&spec, k).unwrap();
        assert_eq!(common::color_count(&cg) as u64, common::kpartite_value(spec.sizes()));
        assert!(!cg.contains_rainbow_clique(k));
    }
}
