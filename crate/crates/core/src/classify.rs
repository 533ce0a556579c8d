//! Structural recognition of the three extremal patterns for rainbow `K_k`
//! in complete `k`-partite hosts.
//!
//! Sizes are read non-increasing, `n₁ ≥ … ≥ n_k`, and every predicate tries
//! all ways of placing equal-size parts, so the answer does not depend on
//! how the host numbers its parts.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::coloring::ColoredGraph;
use crate::error::{invalid, Result};
use crate::graph::Vertex;

/// Which extremal pattern a coloring follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    /// `k ≥ 4`, `n_{k−3} = 1`, everything exclusive except two disjoint
    /// edges among the four smallest parts sharing one color.
    One,
    /// `n_{k−1} = 1`, the last three parts carry a book coloring, everything
    /// else exclusive.
    Two,
    /// Each `w ∈ U_k` has one color on all its edges to two whole parts
    /// `U_i ∪ U_j` with `n_i + n_j = n_{k−2} + n_{k−1}`, everything else
    /// exclusive.
    Three,
    None,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::One => "construction1",
            Construction::Two => "construction2",
            Construction::Three => "construction3",
            Construction::None => "none",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

struct Host<'a> {
    cg: &'a ColoredGraph,
    parts: Vec<Range<Vertex>>,
    // n₁ ≥ … ≥ n_k
    sorted: Vec<usize>,
}

impl Host<'_> {
    fn size(&self, p: usize) -> usize {
        self.parts[p].len()
    }

    fn class_len(&self, u: Vertex, v: Vertex) -> usize {
        let c = self.cg.color_between(u, v).expect("cross-part pair");
        self.cg.classes()[c].len()
    }

    fn non_exclusive(&self) -> Vec<usize> {
        (0..self.cg.color_count())
            .filter(|&c| self.cg.classes()[c].len() > 1)
            .collect()
    }
}

/// The first of the three patterns `cg` follows, or [`Construction::None`].
///
/// Fails when the host is not complete `k`-partite or when `cg` already
/// contains a rainbow `K_k`.
pub fn classify_theorem8(cg: &ColoredGraph, k: usize) -> Result<Construction> {
    let m = theorem8_matches(cg, k)?;
    Ok([Construction::One, Construction::Two, Construction::Three]
        .into_iter()
        .zip(m)
        .find_map(|(c, hit)| hit.then_some(c))
        .unwrap_or(Construction::None))
}

/// Membership in each of the three patterns, in order.
pub fn theorem8_matches(cg: &ColoredGraph, k: usize) -> Result<[bool; 3]> {
    let parts = cg
        .graph()
        .parts()
        .ok_or_else(|| invalid!("host is not complete multipartite"))?;
    if k < 3 || parts.len() != k {
        return Err(invalid!("host must be complete k-partite with k ≥ 3, got {} parts and k = {k}", parts.len()));
    }
    if cg.contains_rainbow_clique(k) {
        return Err(invalid!("coloring contains a rainbow K_{k}"));
    }
    let mut sorted: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let host = Host { cg, parts, sorted };
    Ok([one(&host, k), two(&host, k), three(&host, k)])
}

fn one(h: &Host, k: usize) -> bool {
    if k < 4 || h.sorted[k - 4] != 1 {
        return false;
    }
    let repeated = h.non_exclusive();
    if repeated.len() != 1 {
        return false;
    }
    let class = &h.cg.classes()[repeated[0]];
    if class.len() != 2 {
        return false;
    }
    let g = h.cg.graph();
    let (a, b) = g.edge(class[0]);
    let (c, d) = g.edge(class[1]);
    let ends = [a, b, c, d];
    let disjoint = ends.iter().enumerate().all(|(i, x)| !ends[i + 1..].contains(x));
    disjoint && ends.iter().all(|&v| h.size(g.part_of(v).expect("partite host")) == 1)
}

fn two(h: &Host, k: usize) -> bool {
    if h.sorted[k - 2] != 1 {
        return false;
    }
    let book_size = h.sorted[k - 3];
    let singletons: Vec<usize> = (0..k).filter(|&p| h.size(p) == 1).collect();
    (0..k).filter(|&w| h.size(w) == book_size).any(|w| {
        singletons.iter().any(|&x| {
            singletons
                .iter()
                .any(|&y| x < y && x != w && y != w && is_book(h, w, x, y))
        })
    })
}

/// Whether `U_w ∪ U_x ∪ U_y` (with `|U_x| = |U_y| = 1`) carries a book
/// coloring and every other edge is exclusive.
fn is_book(h: &Host, w: usize, x: usize, y: usize) -> bool {
    let cg = h.cg;
    let g = cg.graph();
    let (x, y) = (h.parts[x].start, h.parts[y].start);
    let a0 = cg.color_between(x, y).expect("cross-part pair");
    let mut pages = Vec::new();
    for z in h.parts[w].clone() {
        let p = cg.color_between(z, x).expect("cross-part pair");
        let q = cg.color_between(z, y).expect("cross-part pair");
        let own = match (p == a0, q == a0) {
            (false, false) if p == q => p,
            (false, true) => p,
            (true, false) => q,
            _ => return false,
        };
        pages.push(own);
    }
    pages.sort_unstable();
    if pages.windows(2).any(|s| s[0] == s[1]) {
        return false;
    }
    let book = |a: Vertex| h.parts[w].contains(&a) || a == x || a == y;
    g.edges()
        .iter()
        .all(|&(u, v)| (book(u) && book(v)) || h.class_len(u, v) == 1)
}

fn three(h: &Host, k: usize) -> bool {
    let target = h.sorted[k - 3] + h.sorted[k - 2];
    let smallest = h.sorted[k - 1];
    let repeated = h.non_exclusive().len();
    (0..k)
        .filter(|&p| h.size(p) == smallest && repeated == smallest)
        .any(|p| h.parts[p].clone().all(|w| has_star(h, p, w, target)))
}

/// `w` sees exactly one non-exclusive color, and that class is the set of
/// all edges from `w` to two whole parts whose sizes add up to `target`.
fn has_star(h: &Host, p: usize, w: Vertex, target: usize) -> bool {
    let cg = h.cg;
    let g = cg.graph();
    let mut star = None;
    for e in g.incident(w) {
        let c = cg.color(e);
        if cg.classes()[c].len() > 1 {
            match star {
                None => star = Some(c),
                Some(s) if s == c => {}
                Some(_) => return false,
            }
        }
    }
    let Some(c) = star else {
        return false;
    };
    let mut covered = alloc::vec![0usize; h.parts.len()];
    for &e in &cg.classes()[c] {
        let (a, b) = g.edge(e);
        let other = match (a == w, b == w) {
            (true, _) => b,
            (_, true) => a,
            _ => return false,
        };
        covered[g.part_of(other).expect("partite host")] += 1;
    }
    let hit: Vec<usize> = (0..h.parts.len()).filter(|&q| covered[q] > 0).collect();
    hit.len() == 2
        && !hit.contains(&p)
        && hit.iter().all(|&q| covered[q] == h.size(q))
        && h.size(hit[0]) + h.size(hit[1]) == target
}
