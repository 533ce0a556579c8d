//! Blow-ups, symmetrization and the named rainbow-clique-free colorings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, ColoredGraph};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex};
use crate::iso::canonical_form;
use crate::spec::PartiteSpec;

/// Blow-up sizes, one positive integer per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeFunction(Vec<usize>);

impl SizeFunction {
    pub fn new(sizes: impl Into<Vec<usize>>) -> Result<Self> {
        let sizes = sizes.into();
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(invalid!("size function must be positive, f({v}) = 0"));
        }
        Ok(SizeFunction(sizes))
    }

    pub fn uniform(n: usize, t: usize) -> Result<Self> {
        Self::new(vec![t; n])
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum BlownColor {
    Shared(Color),
    Split(Color, usize),
    Fresh(usize),
}

/// `B(G^c, f)`: every base vertex `vᵢ` becomes an independent set `Uᵢ` of
/// `f(vᵢ)` consecutive vertices. Colors of `S⁰` are copied onto every blown
/// edge, a color of `S¹` saturated by `vᵢ` splits into one color per vertex
/// of `Uᵢ`, and an exclusive color splits into one color per blown edge.
///
/// When the base is complete multipartite so is the result, with each base
/// part replaced by the union of its blown blocks.
pub fn blow_up(base: &ColoredGraph, f: &SizeFunction) -> Result<ColoredGraph> {
    let g = base.graph();
    let n = g.vertex_count();
    if f.len() != n {
        return Err(invalid!("size function has {} values for {} vertices", f.len(), n));
    }
    let mut offset = Vec::with_capacity(n + 1);
    let mut origin = Vec::new();
    offset.push(0);
    for v in 0..n {
        offset.push(offset[v] + f.get(v));
        origin.extend((0..f.get(v)).map(|s| (v, s)));
    }
    let total = offset[n];

    let blown = match g.parts() {
        Some(parts) => {
            let sizes: Vec<usize> = parts.iter().map(|p| p.clone().map(|v| f.get(v)).sum()).collect();
            Graph::complete_multipartite(&sizes)?
        }
        None => {
            let mut edges = Vec::new();
            for &(a, b) in g.edges() {
                for s in offset[a]..offset[a + 1] {
                    for t in offset[b]..offset[b + 1] {
                        edges.push((s, t));
                    }
                }
            }
            Graph::new(total, edges)?
        }
    };

    let cls = base.classify();
    let mut ids: BTreeMap<BlownColor, Color> = BTreeMap::new();
    let mut colors = Vec::with_capacity(blown.edge_count());
    for (e, &(x, y)) in blown.edges().iter().enumerate() {
        let (vx, sx) = origin[x];
        let (vy, sy) = origin[y];
        let c = base
            .color_between(vx, vy)
            .ok_or_else(|| invalid!("blown edge {e} has no base edge"))?;
        let key = if let Some(&sat) = cls.s1.get(&c) {
            BlownColor::Split(c, if sat == vx { sx } else { sy })
        } else if cls.s2.contains_key(&c) {
            BlownColor::Fresh(e)
        } else {
            BlownColor::Shared(c)
        };
        let next = ids.len();
        colors.push(*ids.entry(key).or_insert(next));
    }
    ColoredGraph::new(blown, colors)
}

/// Relabels so that ids stay in their original relative order but have no
/// gaps.
fn compact(colors: &[Color]) -> Vec<Color> {
    let mut present: Vec<Color> = colors.to_vec();
    present.sort_unstable();
    present.dedup();
    colors
        .iter()
        .map(|c| present.binary_search(c).expect("present"))
        .collect()
}

/// Symmetrization of the coloring at `v` to `u`: every edge `vx` takes the
/// color of `ux`, except that each color of `S(u)` is replaced by its own
/// fresh color. Fresh ids are appended after the existing ones before the
/// ids are compacted.
pub fn symmetrize(cg: &ColoredGraph, v: Vertex, u: Vertex) -> Result<ColoredGraph> {
    cg.check_pair(u, v)?;
    if !cg.same_neighborhood(u, v) {
        return Err(invalid!("vertices {u} and {v} have different neighborhoods"));
    }
    let g = cg.graph();
    let sat_u = cg.saturated_colors(u);
    let base = cg.color_count();
    let mut colors = cg.colors().to_vec();
    for x in g.neighbors(v).collect::<Vec<_>>() {
        let cu = cg.color_between(u, x).expect("same neighborhood");
        let e = g.edge_id(v, x).expect("x is a neighbor of v");
        colors[e] = match sat_u.binary_search(&cu) {
            Ok(i) => base + i,
            Err(_) => cu,
        };
    }
    ColoredGraph::new(g.clone(), compact(&colors))
}

/// The coloring of `K_{n₁,…,n_k}` obtained by blowing up `K_k` that is
/// rainbow except `c(v_{k−2}v_k) = c(v_{k−1}v_k)` (1-based, sizes sorted).
/// It has `Σ nᵢnⱼ − n_k(n_{k−1} + n_{k−2} − 1)` colors and no rainbow `K_k`.
pub fn normal_coloring(spec: &PartiteSpec, k: usize) -> Result<ColoredGraph> {
    if k < 3 || spec.r() != k {
        return Err(invalid!(
            "the normal coloring needs exactly k ≥ 3 parts, got r = {} and k = {k}",
            spec.r()
        ));
    }
    let base = Graph::complete(k);
    let hub = k - 1;
    let mut labels: Vec<usize> = (0..base.edge_count()).collect();
    let a = base.edge_id(k - 3, hub).expect("complete");
    let b = base.edge_id(k - 2, hub).expect("complete");
    labels[b] = labels[a];
    let base = ColoredGraph::from_labels(base, &labels)?;
    blow_up(&base, &SizeFunction::new(spec.sizes())?)
}

/// Part sizes of the Turán graph `T_{n,p}`, non-increasing.
pub fn turan_sizes(n: usize, p: usize) -> Vec<usize> {
    let (q, rem) = (n / p, n % p);
    (0..p).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// `T_{n,p}`: the complete `p`-partite graph on `n` vertices with parts as
/// equal as possible.
pub fn turan_graph(n: usize, parts: usize) -> Result<Graph> {
    if parts < 1 || parts > n {
        return Err(invalid!("Turán graph T_{{{n},{parts}}} needs 1 ≤ parts ≤ n"));
    }
    Graph::complete_multipartite(&turan_sizes(n, parts))
}

/// `K_r` with a rainbow `T_{r,p}` and one extra common color on the edges
/// inside the Turán parts.
pub fn turan_base(r: usize, p: usize) -> Result<ColoredGraph> {
    let t = turan_graph(r, p)?;
    let base = Graph::complete(r);
    let labels: Vec<usize> = base
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| if t.adjacent(a, b) { e + 1 } else { 0 })
        .collect();
    ColoredGraph::from_labels(base, &labels)
}

/// The Turán coloring of `K_r^t` for rainbow `K_k`: the blow-up with `f ≡ t`
/// of [`turan_base`]`(r, k − 2)`. It has `t²·e(T_{r,k−2}) + 1` colors.
pub fn turan_coloring(r: usize, t: usize, k: usize) -> Result<ColoredGraph> {
    if k < 4 || r <= k || t < 1 {
        return Err(invalid!(
            "the Turán coloring needs r > k ≥ 4 and t ≥ 1, got r = {r}, t = {t}, k = {k}"
        ));
    }
    let base = turan_base(r, k - 2)?;
    blow_up(&base, &SizeFunction::uniform(r, t)?)
}

/// How one page `z` of the book `B_n` is colored: `a₀` is the spine color,
/// `a_z` the page's own color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BookPage {
    /// `c(xz) = c(yz) = a_z`
    Both,
    /// `c(xz) = a_z`, `c(yz) = a₀`
    X,
    /// `c(xz) = a₀`, `c(yz) = a_z`
    Y,
}

impl BookPage {
    pub const ALL: [BookPage; 3] = [BookPage::Both, BookPage::X, BookPage::Y];
}

/// A book coloring of `B_n = K_{n,1,1}`. Pages `z₁..z_n` are vertices
/// `0..n`, the spine is `x = n`, `y = n + 1`.
pub fn book_coloring(pages: &[BookPage]) -> Result<ColoredGraph> {
    let n = pages.len();
    if n == 0 {
        return Err(invalid!("a book needs at least one page"));
    }
    let g = Graph::complete_multipartite(&[n, 1, 1])?;
    let (x, y) = (n, n + 1);
    let mut labels = vec![0; g.edge_count()];
    for (z, page) in pages.iter().enumerate() {
        let own = z + 1;
        let (cx, cy) = match page {
            BookPage::Both => (own, own),
            BookPage::X => (own, 0),
            BookPage::Y => (0, own),
        };
        labels[g.edge_id(x, z).expect("cross edge")] = cx;
        labels[g.edge_id(y, z).expect("cross edge")] = cy;
    }
    ColoredGraph::from_labels(g, &labels)
}

/// Every book coloring of `B_n`, `3ⁿ` of them in lexicographic page order.
/// With `dedupe`, one representative per isomorphism class, ordered by
/// canonical key.
pub fn book_colorings(n: usize, dedupe: bool) -> Result<Vec<ColoredGraph>> {
    if n == 0 {
        return Err(invalid!("a book needs at least one page"));
    }
    let mut pages = vec![BookPage::Both; n];
    let mut raw = Vec::new();
    loop {
        raw.push(book_coloring(&pages)?);
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(if dedupe { dedupe_colorings(raw) } else { raw });
            }
            i -= 1;
            let next = match pages[i] {
                BookPage::Both => Some(BookPage::X),
                BookPage::X => Some(BookPage::Y),
                BookPage::Y => None,
            };
            match next {
                Some(p) => {
                    pages[i] = p;
                    break;
                }
                None => pages[i] = BookPage::Both,
            }
        }
    }
}

/// Keeps the first coloring of each isomorphism class; output sorted by
/// canonical key.
pub fn dedupe_colorings(colorings: Vec<ColoredGraph>) -> Vec<ColoredGraph> {
    let mut seen: BTreeMap<Vec<u8>, ColoredGraph> = BTreeMap::new();
    for cg in colorings {
        seen.entry(canonical_form(&cg)).or_insert(cg);
    }
    seen.into_values().collect()
}

/// A coloring of `K_r^{t₁+t₂}` that is extremal but not totally symmetric.
///
/// `T = T_{r−1,k−2}` is extended twice by a new vertex: once into its first
/// smallest part, once into its second. The first `t₁` copies of the last
/// part follow the first extension, the remaining `t₂` the second. Edges
/// blown up from `T` or from the respective extension get exclusive colors;
/// all other edges share one color.
pub fn example1_coloring(r: usize, k: usize, t1: usize, t2: usize) -> Result<ColoredGraph> {
    if k < 4 || r <= k {
        return Err(invalid!("needs r > k ≥ 4, got r = {r}, k = {k}"));
    }
    if r.is_multiple_of(k - 2) {
        return Err(invalid!(
            "needs k − 2 ∤ r, but {} divides {r}: both extensions of T_{{{},{}}} coincide",
            k - 2,
            r - 1,
            k - 2
        ));
    }
    if t1 == 0 || t2 == 0 {
        return Err(invalid!("both sub-blocks must be non-empty, got t1 = {t1}, t2 = {t2}"));
    }
    let sizes = turan_sizes(r - 1, k - 2);
    let mut part = Vec::with_capacity(r - 1);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(core::iter::repeat_n(p, s));
    }
    let smallest = *sizes.iter().min().expect("k − 2 ≥ 2 parts");
    let mut small_parts = sizes.iter().enumerate().filter(|&(_, &s)| s == smallest).map(|(p, _)| p);
    let first = small_parts.next().expect("at least two smallest parts");
    let second = small_parts.next().expect("at least two smallest parts");

    let t = t1 + t2;
    let g = Graph::complete_multipartite(&vec![t; r])?;
    let last = r - 1;
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            let (i, j) = (a / t, b / t);
            let exclusive = if j == last {
                let copy = b % t;
                let joined = if copy < t1 { first } else { second };
                part[i] != joined
            } else {
                part[i] != part[j]
            };
            if exclusive {
                e + 1
            } else {
                0
            }
        })
        .collect();
    ColoredGraph::from_labels(g, &labels)
}

/// `K_r` colored by `c(vᵢvⱼ) = min(i, j)`: `r − 1` colors and no rainbow
/// triangle.
pub fn min_index_coloring(r: usize) -> Result<ColoredGraph> {
    let g = Graph::complete(r);
    let labels: Vec<usize> = g.edges().iter().map(|&(a, _)| a).collect();
    ColoredGraph::from_labels(g, &labels)
}
