//! Edge-colored graphs and the saturation calculus.
//!
//! A color `a` *appears* at `v` when some edge of color `a` touches `v`, and is
//! *saturated* by `v` when every edge of color `a` touches `v`. Each color is
//! saturated by zero, one or two vertices; two exactly when it colors a single
//! edge (an *exclusive* color).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::graph::{EdgeId, Graph, Vertex};

pub type Color = usize;

/// A graph together with a partition of its edges into color classes.
///
/// Color ids are dense: `0..color_count()`, every id used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<Color>,
    classes: Vec<Vec<EdgeId>>,
}

impl ColoredGraph {
    /// `colors[e]` is the color of edge `e` (colex edge order). Ids must be
    /// dense.
    pub fn new(graph: Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(invalid!(
                "{} colors given for {} edges",
                colors.len(),
                graph.edge_count()
            ));
        }
        let count = colors.iter().max().map_or(0, |&m| m + 1);
        let mut classes = vec![Vec::new(); count];
        for (e, &c) in colors.iter().enumerate() {
            classes[c].push(e);
        }
        if let Some(gap) = classes.iter().position(Vec::is_empty) {
            return Err(invalid!("color ids are not dense: color {gap} is unused"));
        }
        Ok(ColoredGraph {
            graph,
            colors,
            classes,
        })
    }

    /// Builds a coloring from arbitrary labels, renumbering them densely by
    /// first occurrence along the edge order.
    pub fn from_labels(graph: Graph, labels: &[usize]) -> Result<Self> {
        Self::new(graph, first_occurrence(labels))
    }

    pub fn monochromatic(graph: Graph) -> Self {
        let m = graph.edge_count();
        Self::new(graph, vec![0; m]).expect("single class is dense")
    }

    pub fn rainbow(graph: Graph) -> Self {
        let m = graph.edge_count();
        Self::new(graph, (0..m).collect()).expect("identity labels are dense")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.graph.edge_id(u, v).map(|e| self.colors[e])
    }

    pub fn classes(&self) -> &[Vec<EdgeId>] {
        &self.classes
    }

    /// `c(G)`.
    pub fn color_count(&self) -> usize {
        self.classes.len()
    }

    /// Same partition, labels renumbered by first occurrence.
    pub fn normalized(&self) -> Self {
        Self::new(self.graph.clone(), first_occurrence(&self.colors)).expect("relabeling is dense")
    }

    pub fn is_saturated_by(&self, color: Color, v: Vertex) -> bool {
        self.classes[color].iter().all(|&e| {
            let (a, b) = self.graph.edge(e);
            a == v || b == v
        })
    }

    /// `C(v)`: colors appearing at `v`, ascending.
    pub fn colors_at(&self, v: Vertex) -> Vec<Color> {
        let mut cs: Vec<Color> = self.graph.incident(v).map(|e| self.colors[e]).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// `d^c(v)`.
    pub fn color_degree(&self, v: Vertex) -> usize {
        self.colors_at(v).len()
    }

    /// `S(v)`: colors saturated by `v`, ascending.
    pub fn saturated_colors(&self, v: Vertex) -> Vec<Color> {
        self.colors_at(v)
            .into_iter()
            .filter(|&c| self.is_saturated_by(c, v))
            .collect()
    }

    /// `d^s(v)`.
    pub fn saturated_color_degree(&self, v: Vertex) -> usize {
        self.saturated_colors(v).len()
    }

    pub fn classify(&self) -> ColorClassification {
        let mut out = ColorClassification::default();
        for (c, class) in self.classes.iter().enumerate() {
            let (a, b) = self.graph.edge(class[0]);
            if class.len() == 1 {
                out.s2.insert(c, (a, b));
                continue;
            }
            let touches = |v: Vertex| {
                class.iter().all(|&e| {
                    let (x, y) = self.graph.edge(e);
                    x == v || y == v
                })
            };
            // two distinct edges share at most one vertex
            if touches(a) {
                out.s1.insert(c, a);
            } else if touches(b) {
                out.s1.insert(c, b);
            } else {
                out.s0.push(c);
            }
        }
        out
    }

    pub fn contains_rainbow_clique(&self, k: usize) -> bool {
        self.rainbow_clique(k).is_some()
    }

    /// Some `k`-clique whose edges all carry distinct colors, as an
    /// ascending vertex list.
    pub fn rainbow_clique(&self, k: usize) -> Option<Vec<Vertex>> {
        if k > self.graph.vertex_count() {
            return None;
        }
        let mut used = vec![false; self.color_count()];
        let mut current = Vec::with_capacity(k);
        if self.extend_rainbow(k, 0, &mut current, &mut used) {
            Some(current)
        } else {
            None
        }
    }

    fn extend_rainbow(&self, k: usize, from: Vertex, current: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        if current.len() == k {
            return true;
        }
        let n = self.graph.vertex_count();
        if n - from < k - current.len() {
            return false;
        }
        'next: for v in from..n {
            let mut added: Vec<Color> = Vec::with_capacity(current.len());
            for &u in current.iter() {
                match self.color_between(u, v) {
                    Some(c) if !used[c] => {
                        used[c] = true;
                        added.push(c);
                    }
                    _ => {
                        for c in added {
                            used[c] = false;
                        }
                        continue 'next;
                    }
                }
            }
            current.push(v);
            if self.extend_rainbow(k, v + 1, current, used) {
                return true;
            }
            current.pop();
            for c in added {
                used[c] = false;
            }
        }
        false
    }

    /// Whether the non-adjacent vertices `u` and `v` are symmetric: equal
    /// neighborhoods and a bijection `σ: S(u) → S(v)` with `c(vx) = c(ux)`
    /// for colors outside `S(u)` and `c(vx) = σ(c(ux))` inside it.
    ///
    /// `σ` is forced edge by edge, so the check is a direct consistency test.
    pub fn vertices_symmetric(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_pair(u, v)?;
        if !self.same_neighborhood(u, v) {
            return Ok(false);
        }
        let sat_u = self.saturated_colors(u);
        let sat_v = self.saturated_colors(v);
        if sat_u.len() != sat_v.len() {
            return Ok(false);
        }
        let mut sigma: BTreeMap<Color, Color> = BTreeMap::new();
        for x in self.graph.neighbors(u) {
            let cu = self.color_between(u, x).expect("x is a neighbor of u");
            let cv = self.color_between(v, x).expect("same neighborhood");
            if sat_u.binary_search(&cu).is_ok() {
                if sat_v.binary_search(&cv).is_err() {
                    return Ok(false);
                }
                match sigma.get(&cu) {
                    Some(&img) if img != cv => return Ok(false),
                    Some(_) => {}
                    None => {
                        sigma.insert(cu, cv);
                    }
                }
            } else if cu != cv {
                return Ok(false);
            }
        }
        // every a ∈ S(u) appears at u, so σ is total; check injectivity
        let mut images: Vec<Color> = sigma.values().copied().collect();
        images.sort_unstable();
        images.dedup();
        Ok(images.len() == sat_u.len())
    }

    pub(crate) fn check_pair(&self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.graph.vertex_count();
        if u >= n || v >= n {
            return Err(invalid!("vertex out of range 0..{n}"));
        }
        if u == v {
            return Err(invalid!("vertices must be distinct, got {u} twice"));
        }
        if self.graph.adjacent(u, v) {
            return Err(invalid!("vertices {u} and {v} are adjacent"));
        }
        Ok(())
    }

    pub(crate) fn same_neighborhood(&self, u: Vertex, v: Vertex) -> bool {
        (0..self.graph.vertex_count()).all(|x| self.graph.adjacent(u, x) == self.graph.adjacent(v, x))
    }
}

/// Dense relabeling of `labels` in order of first occurrence.
pub fn first_occurrence(labels: &[usize]) -> Vec<usize> {
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// The `S⁰ / S¹ / S²` split of the colors of a colored graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorClassification {
    /// Colors saturated by no vertex.
    pub s0: Vec<Color>,
    /// Colors saturated by exactly one vertex, with that vertex.
    pub s1: BTreeMap<Color, Vertex>,
    /// Exclusive colors, with the endpoints of their single edge.
    pub s2: BTreeMap<Color, (Vertex, Vertex)>,
}

impl ColorClassification {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.s0.len(), self.s1.len(), self.s2.len())
    }
}
