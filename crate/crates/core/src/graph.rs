//! Simple undirected graphs with an optional complete-multipartite structure.
//!
//! Edges are kept in colex order: `(u, v)` with `u < v`, sorted by `v` and
//! then by `u`. Every edge list, coloring and search in the crate indexes
//! edges in this order, so an edge id is stable for a given graph.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;

use crate::error::{invalid, Result};
use crate::spec::PartiteSpec;

pub type Vertex = usize;
pub type EdgeId = usize;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    index: Vec<u32>,
    part_of: Option<Vec<usize>>,
    part_sizes: Option<Vec<usize>>,
}

pub(crate) fn colex(a: &(Vertex, Vertex), b: &(Vertex, Vertex)) -> Ordering {
    (a.1, a.0).cmp(&(b.1, b.0))
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(invalid!("edge ({a}, {b}) has an endpoint outside 0..{n}"));
            }
            if a == b {
                return Err(invalid!("loop at vertex {a}"));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable_by(colex);
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(invalid!("duplicate edge ({}, {})", w[0].0, w[0].1));
            }
        }
        Ok(Self::from_sorted(n, list, None))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>, part_sizes: Option<Vec<usize>>) -> Self {
        assert!(edges.len() < NO_EDGE as usize, "edge count overflows the index");
        let mut index = vec![NO_EDGE; n * n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = id as u32;
            index[v * n + u] = id as u32;
        }
        let part_of = part_sizes.as_ref().map(|sizes| {
            let mut part_of = Vec::with_capacity(n);
            for (p, &s) in sizes.iter().enumerate() {
                part_of.extend(core::iter::repeat_n(p, s));
            }
            part_of
        });
        Graph {
            n,
            edges,
            index,
            part_of,
            part_sizes,
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::complete_multipartite(&vec![1; n]).expect("parts of size one are valid")
    }

    /// Complete multipartite graph with the given part sizes, in the given
    /// order. Vertices are numbered part by part. A single part gives an
    /// edgeless graph; zero-sized parts are rejected.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if let Some(p) = sizes.iter().position(|&s| s == 0) {
            return Err(invalid!("part {p} has size 0"));
        }
        let n: usize = sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &s) in sizes.iter().enumerate() {
            part_of.extend(core::iter::repeat_n(p, s));
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self::from_sorted(n, edges, Some(sizes.to_vec())))
    }

    /// `K_{n₁,…,n_r}` for a validated spec.
    pub fn host(spec: &PartiteSpec) -> Self {
        Self::complete_multipartite(spec.sizes()).expect("spec sizes are positive")
    }

    /// Attaches a partition of the vertices into contiguous parts. The graph
    /// must be exactly the complete multipartite graph on those parts.
    pub fn with_parts(self, sizes: &[usize]) -> Result<Self> {
        let expected = Self::complete_multipartite(sizes)?;
        if expected.n != self.n || expected.edges != self.edges {
            return Err(invalid!(
                "edge set is not the complete multipartite graph with parts {:?}",
                sizes
            ));
        }
        Ok(expected)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&x| self.adjacent(v, x))
    }

    /// Edge ids incident to `v`, ordered by the other endpoint.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.n).filter_map(move |x| self.edge_id(v, x))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.part_of.as_ref().map(|p| p[v])
    }

    pub fn part_sizes(&self) -> Option<&[usize]> {
        self.part_sizes.as_deref()
    }

    /// Vertex ranges of the parts, when the graph carries partite structure.
    pub fn parts(&self) -> Option<Vec<Range<Vertex>>> {
        let sizes = self.part_sizes.as_ref()?;
        let mut start = 0;
        Some(
            sizes
                .iter()
                .map(|&s| {
                    let r = start..start + s;
                    start += s;
                    r
                })
                .collect(),
        )
    }

    pub fn is_complete_multipartite(&self) -> bool {
        self.part_sizes.is_some()
    }

    /// All vertex sets of size `k` that induce a complete subgraph, each
    /// sorted ascending, in lexicographic order.
    pub fn cliques(&self, k: usize) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.extend_cliques(k, 0, &mut current, &mut out);
        out
    }

    fn extend_cliques(&self, k: usize, from: Vertex, current: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in from..self.n {
            if current.iter().all(|&u| self.adjacent(u, v)) {
                current.push(v);
                self.extend_cliques(k, v + 1, current, out);
                current.pop();
            }
        }
    }

    /// Edge ids of the complete subgraph on `vertices` (which must be a clique).
    pub fn clique_edges(&self, vertices: &[Vertex]) -> Vec<EdgeId> {
        let mut ids = Vec::with_capacity(vertices.len() * vertices.len().saturating_sub(1) / 2);
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                ids.push(self.edge_id(a, b).expect("vertices form a clique"));
            }
        }
        ids
    }
}
