//! Colored-graph isomorphism for small hosts.
//!
//! Two routes that share nothing but the vertex invariants: a direct
//! backtracking search for `(ρ, σ)`, and a canonical key obtained by
//! lexicographic minimization over invariant-respecting relabelings. On
//! complete multipartite hosts non-adjacency is exactly "same part", so every
//! isomorphism maps parts to parts.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::coloring::{Color, ColoredGraph};
use crate::graph::Vertex;

/// Isomorphism-invariant fingerprint of a vertex: degree, saturated color
/// degree, then the sorted sizes of the color classes seen along its edges.
fn vertex_invariants(cg: &ColoredGraph) -> Vec<Vec<usize>> {
    let g = cg.graph();
    (0..g.vertex_count())
        .map(|v| {
            let mut inv = vec![g.degree(v), cg.saturated_color_degree(v)];
            let mut sizes: Vec<usize> = g.incident(v).map(|e| cg.classes()[cg.color(e)].len()).collect();
            sizes.sort_unstable();
            inv.extend(sizes);
            inv
        })
        .collect()
}

fn class_size_profile(cg: &ColoredGraph) -> Vec<usize> {
    let mut sizes: Vec<usize> = cg.classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

/// Whether there are a vertex bijection `ρ` and a color bijection `σ` with
/// `uv ∈ E(a) ⇔ ρ(u)ρ(v) ∈ E(b)` and `σ(c_a(uv)) = c_b(ρ(u)ρ(v))`.
pub fn colored_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let (ga, gb) = (a.graph(), b.graph());
    if ga.vertex_count() != gb.vertex_count()
        || ga.edge_count() != gb.edge_count()
        || a.color_count() != b.color_count()
        || class_size_profile(a) != class_size_profile(b)
    {
        return false;
    }
    let inv_a = vertex_invariants(a);
    let inv_b = vertex_invariants(b);
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }
    let mut search = IsoSearch {
        a,
        b,
        inv_a: &inv_a,
        inv_b: &inv_b,
        map: vec![usize::MAX; ga.vertex_count()],
        taken: vec![false; gb.vertex_count()],
        fwd: vec![None; a.color_count()],
        bwd: vec![None; b.color_count()],
    };
    search.extend(0)
}

struct IsoSearch<'a> {
    a: &'a ColoredGraph,
    b: &'a ColoredGraph,
    inv_a: &'a [Vec<usize>],
    inv_b: &'a [Vec<usize>],
    map: Vec<Vertex>,
    taken: Vec<bool>,
    fwd: Vec<Option<Color>>,
    bwd: Vec<Option<Color>>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, x: Vertex) -> bool {
        let n = self.map.len();
        if x == n {
            return true;
        }
        for y in 0..n {
            if self.taken[y] || self.inv_a[x] != self.inv_b[y] {
                continue;
            }
            let mut bound: Vec<(Color, Color)> = Vec::new();
            if self.try_map(x, y, &mut bound) {
                self.map[x] = y;
                self.taken[y] = true;
                if self.extend(x + 1) {
                    return true;
                }
                self.taken[y] = false;
                self.map[x] = usize::MAX;
            }
            for (ca, cb) in bound {
                self.fwd[ca] = None;
                self.bwd[cb] = None;
            }
        }
        false
    }

    /// Checks `x ↦ y` against every earlier assignment, extending `σ` where
    /// needed. New color pairs are logged in `bound` for undo.
    fn try_map(&mut self, x: Vertex, y: Vertex, bound: &mut Vec<(Color, Color)>) -> bool {
        for x2 in 0..x {
            let y2 = self.map[x2];
            match (self.a.color_between(x, x2), self.b.color_between(y, y2)) {
                (None, None) => {}
                (Some(ca), Some(cb)) => match (self.fwd[ca], self.bwd[cb]) {
                    (None, None) => {
                        self.fwd[ca] = Some(cb);
                        self.bwd[cb] = Some(ca);
                        bound.push((ca, cb));
                    }
                    (Some(f), _) if f == cb => {}
                    _ => return false,
                },
                _ => return false,
            }
        }
        true
    }
}

/// Canonical key: equal for two colored graphs exactly when they are
/// isomorphic in the sense of [`colored_isomorphic`].
///
/// The key is the lexicographically smallest encoding over all relabelings
/// that sort vertices by their invariants. The encoding lists, for each
/// vertex pair in colex order, `0` for a non-edge or `1 +` the color's rank
/// by first occurrence.
pub fn canonical_form(cg: &ColoredGraph) -> Vec<u8> {
    let n = cg.graph().vertex_count();
    let inv = vertex_invariants(cg);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by(|&x, &y| inv[x].cmp(&inv[y]));
    let slot_inv: Vec<&Vec<usize>> = order.iter().map(|&v| &inv[v]).collect();

    let mut search = CanonSearch {
        cg,
        inv: &inv,
        slot_inv: &slot_inv,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        relabel: vec![None; cg.color_count()],
        next_label: 0,
        key: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.place();
    let best = search.best.unwrap_or_default();

    let mut bytes = Vec::with_capacity(4 + best.len() * 4);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for value in best {
        bytes.extend_from_slice(&value.to_be_bytes());
    }
    bytes
}

struct CanonSearch<'a> {
    cg: &'a ColoredGraph,
    inv: &'a [Vec<usize>],
    slot_inv: &'a [&'a Vec<usize>],
    placed: Vec<Vertex>,
    used: Vec<bool>,
    relabel: Vec<Option<u32>>,
    next_label: u32,
    key: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl CanonSearch<'_> {
    /// Compares the key built so far with the same-length prefix of the
    /// best key.
    fn versus_best(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => self.key[..].cmp(&best[..self.key.len()]),
        }
    }

    fn place(&mut self) {
        let pos = self.placed.len();
        let n = self.used.len();
        if pos == n {
            if self.versus_best() == Ordering::Less {
                self.best = Some(self.key.clone());
            }
            return;
        }
        for x in 0..n {
            if self.used[x] || self.inv[x] != *self.slot_inv[pos] {
                continue;
            }
            let start = self.key.len();
            let mut fresh: Vec<Color> = Vec::new();
            for i in 0..pos {
                let value = match self.cg.color_between(self.placed[i], x) {
                    None => 0,
                    Some(c) => {
                        let label = match self.relabel[c] {
                            Some(l) => l,
                            None => {
                                let l = self.next_label;
                                self.next_label += 1;
                                self.relabel[c] = Some(l);
                                fresh.push(c);
                                l
                            }
                        };
                        label + 1
                    }
                };
                self.key.push(value);
            }
            if self.versus_best() != Ordering::Greater {
                self.placed.push(x);
                self.used[x] = true;
                self.place();
                self.used[x] = false;
                self.placed.pop();
            }
            self.key.truncate(start);
            for c in fresh {
                self.relabel[c] = None;
                self.next_label -= 1;
            }
        }
    }
}
