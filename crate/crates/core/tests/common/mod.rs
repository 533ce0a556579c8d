//! Naive reference implementations used as independent oracles.
#![allow(dead_code)]

use antiramsey_core::{ColoredGraph, Graph, PartiteSpec};
use rand::seq::SliceRandom;
use rand::Rng;

/// Number of distinct colors, counted directly from the edge colors.
pub fn color_count(cg: &ColoredGraph) -> usize {
    let mut cs = cg.colors().to_vec();
    cs.sort_unstable();
    cs.dedup();
    cs.len()
}

/// Colors all of whose edges touch `v` (and which appear at `v`).
pub fn saturated_degree(cg: &ColoredGraph, v: usize) -> usize {
    let g = cg.graph();
    let mut at_v: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a == v || b == v)
        .map(|(e, _)| cg.colors()[e])
        .collect();
    at_v.sort_unstable();
    at_v.dedup();
    at_v.into_iter()
        .filter(|&c| {
            g.edges()
                .iter()
                .enumerate()
                .all(|(e, &(a, b))| cg.colors()[e] != c || a == v || b == v)
        })
        .count()
}

fn k_subsets(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in from..n {
        cur.push(v);
        k_subsets(n, k, v + 1, cur, out);
        cur.pop();
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    k_subsets(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every `k`-subset and checks for a complete, rainbow one.
pub fn has_rainbow_clique(cg: &ColoredGraph, k: usize) -> bool {
    let g = cg.graph();
    subsets(g.vertex_count(), k).into_iter().any(|set| {
        let mut colors = Vec::new();
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                match g.edge_id(set[i], set[j]) {
                    Some(e) => colors.push(cg.colors()[e]),
                    None => return false,
                }
            }
        }
        let len = colors.len();
        colors.sort_unstable();
        colors.dedup();
        colors.len() == len
    })
}

/// `e(T_{n,p})` as `(n² − Σ sᵢ²) / 2` with parts as equal as possible.
pub fn turan_edges(n: u64, p: u64) -> u64 {
    let (q, r) = (n / p, n % p);
    let squares = r * (q + 1) * (q + 1) + (p - r) * q * q;
    (n * n - squares) / 2
}

/// `Σ nᵢnⱼ − n_k(n_{k−1} + n_{k−2} − 1)` over the sorted sizes.
pub fn kpartite_value(sizes: &[usize]) -> u64 {
    let mut s: Vec<u64> = sizes.iter().map(|&x| x as u64).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let k = s.len();
    let total: u64 = s.iter().sum();
    let pairs = (total * total - s.iter().map(|x| x * x).sum::<u64>()) / 2;
    pairs - s[k - 1] * (s[k - 2] + s[k - 3] - 1)
}

/// Pairing formula for rainbow triangles over the sorted sizes.
pub fn multipartite_k3_value(sizes: &[usize]) -> u64 {
    let mut s: Vec<u64> = sizes.iter().map(|&x| x as u64).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let r = s.len() as u64;
    let paired: u64 = s.chunks_exact(2).map(|c| c[0] * c[1]).sum();
    if r % 2 == 1 {
        paired + s[s.len() - 1] + (r - 1) / 2 - 1
    } else {
        paired + r / 2 - 1
    }
}

/// Every restricted-growth string of length `m`, by direct recursion.
pub fn all_partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let top = if cur.is_empty() { 0 } else { max + 1 };
        for l in 0..=top {
            cur.push(l);
            go(m, cur, max.max(l), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), 0, &mut out);
    out
}

/// A random complete multipartite spec with at most `max_vertices` vertices
/// and at least `min_parts` parts.
pub fn random_spec<R: Rng>(rng: &mut R, min_parts: usize, max_vertices: usize) -> PartiteSpec {
    loop {
        let r = rng.gen_range(min_parts..=max_vertices.min(6));
        let sizes: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        if sizes.iter().sum::<usize>() <= max_vertices {
            return PartiteSpec::new(sizes).unwrap();
        }
    }
}

/// Random labels with at most `colors` distinct values.
pub fn random_coloring<R: Rng>(rng: &mut R, g: &Graph, colors: usize) -> ColoredGraph {
    let labels: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..colors.max(1))).collect();
    ColoredGraph::from_labels(g.clone(), &labels).unwrap()
}

/// Merges random pairs of color classes; merging never creates a rainbow
/// clique.
pub fn random_merges<R: Rng>(rng: &mut R, cg: &ColoredGraph, merges: usize) -> ColoredGraph {
    let mut labels = cg.colors().to_vec();
    for _ in 0..merges {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        if count < 2 {
            break;
        }
        let a = rng.gen_range(0..count);
        let b = rng.gen_range(0..count);
        for l in labels.iter_mut() {
            if *l == b {
                *l = a;
            }
        }
    }
    ColoredGraph::from_labels(cg.graph().clone(), &labels).unwrap()
}

/// Applies a vertex permutation that maps parts onto parts of equal size,
/// and shuffles color names.
pub fn random_relabel<R: Rng>(rng: &mut R, cg: &ColoredGraph) -> ColoredGraph {
    let g = cg.graph();
    let n = g.vertex_count();
    let parts = g.parts().unwrap();
    // permute within each part, then swap whole parts of equal size
    let mut perm: Vec<usize> = (0..n).collect();
    for p in &parts {
        perm[p.clone()].shuffle(rng);
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if parts[i].len() == parts[j].len() && rng.gen_bool(0.5) {
                order.swap(i, j);
            }
        }
    }
    let mut rho = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        let target = &parts[order[i]];
        for (a, v) in p.clone().enumerate() {
            rho[v] = perm[target.start + a];
        }
    }
    let count = cg.color_count();
    let mut sigma: Vec<usize> = (0..count).collect();
    sigma.shuffle(rng);
    let mut colors = vec![0; g.edge_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        colors[g.edge_id(rho[u], rho[v]).unwrap()] = sigma[cg.colors()[e]];
    }
    ColoredGraph::new(g.clone(), colors).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Tries every vertex permutation; colors must correspond one to one.
pub fn naive_colored_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let (ga, gb) = (a.graph(), b.graph());
    let n = ga.vertex_count();
    if n != gb.vertex_count() || ga.edge_count() != gb.edge_count() {
        return false;
    }
    permutations(n).into_iter().any(|p| {
        let mut fwd = std::collections::HashMap::new();
        let mut back = std::collections::HashMap::new();
        ga.edges().iter().enumerate().all(|(e, &(u, v))| match gb.edge_id(p[u], p[v]) {
            None => false,
            Some(f) => {
                let (x, y) = (a.colors()[e], b.colors()[f]);
                *fwd.entry(x).or_insert(y) == y && *back.entry(y).or_insert(x) == x
            }
        })
    })
}

pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    naive_colored_isomorphic(&ColoredGraph::monochromatic(a.clone()), &ColoredGraph::monochromatic(b.clone()))
}
