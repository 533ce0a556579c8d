//! Extremal graphs without `K_k − e`, and the shape of the best base
//! colorings for balanced hosts `K_r^t` with `r > k`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::coloring::ColoredGraph;
use crate::construct::turan_graph;
use crate::error::{invalid, Error, Result};
use crate::formulas::{ar_balanced, dirac_extremal_bound};
use crate::graph::{Graph, Vertex};
use crate::iso::canonical_form;
use crate::search::{Executor, SearchStats, Sequential};
use crate::spec::PartiteSpec;
use crate::theorem6::{argmax_bases, Theorem6Options};

/// Largest order searched by [`dirac_extremal_graphs`].
pub const DIRAC_MAX_ORDER: usize = 8;

/// Largest base order accepted by [`verify_theorem10`].
pub const THEOREM10_MAX_R: usize = 5;

/// Two triangles sharing a vertex.
pub fn hourglass() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).expect("valid")
}

/// A 4-cycle with a triangle on one side.
pub fn house() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]).expect("valid")
}

/// Two disjoint triangles joined by a perfect matching.
pub fn prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).expect("valid")
}

/// Isomorphism key of an uncolored graph.
pub fn graph_key(g: &Graph) -> Vec<u8> {
    canonical_form(&ColoredGraph::monochromatic(g.clone()))
}

/// Name of `g` among the extremal graphs for `K_k − e`, if it is one of the
/// named ones: `"turan"` for `T_{n,k−2}`, else `"hourglass"`, `"house"` or
/// `"prism"`.
pub fn dirac_graph_name(g: &Graph, k: usize) -> Option<&'static str> {
    let n = g.vertex_count();
    let key = graph_key(g);
    if k >= 3 && n >= k - 2 {
        if let Ok(t) = turan_graph(n, k - 2) {
            if graph_key(&t) == key {
                return Some("turan");
            }
        }
    }
    [("hourglass", hourglass()), ("house", house()), ("prism", prism())]
        .into_iter()
        .find_map(|(name, h)| (graph_key(&h) == key).then_some(name))
}

/// Every graph on `n` vertices with `e(T_{n,k−2})` edges and no `K_k − e`,
/// one per isomorphism class, sorted by [`graph_key`].
pub fn dirac_extremal_graphs(n: usize, k: usize) -> Result<Vec<Graph>> {
    if n > DIRAC_MAX_ORDER {
        return Err(Error::Capacity {
            limit: "vertex count n",
            value: n,
            max: DIRAC_MAX_ORDER,
        });
    }
    let target = dirac_extremal_bound(n, k)? as usize;
    let all = Graph::complete(n);
    let mut gen = Gen {
        n,
        k,
        pairs: all.edges().to_vec(),
        adj: alloc::vec![0u16; n],
        chosen: Vec::new(),
        target,
        found: Vec::new(),
        keys: BTreeSet::new(),
    };
    gen.extend(0);
    let mut found = gen.found;
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

struct Gen {
    n: usize,
    k: usize,
    pairs: Vec<(Vertex, Vertex)>,
    adj: Vec<u16>,
    chosen: Vec<(Vertex, Vertex)>,
    target: usize,
    found: Vec<(Vec<u8>, Graph)>,
    keys: BTreeSet<Vec<u8>>,
}

impl Gen {
    fn extend(&mut self, i: usize) {
        if self.chosen.len() == self.target {
            let g = Graph::new(self.n, self.chosen.iter().copied()).expect("simple");
            let key = graph_key(&g);
            if self.keys.insert(key.clone()) {
                self.found.push((key, g));
            }
            return;
        }
        if i == self.pairs.len() || self.pairs.len() - i < self.target - self.chosen.len() {
            return;
        }
        let (u, v) = self.pairs[i];
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        if !self.near_clique_at(u, v) {
            self.chosen.push((u, v));
            self.extend(i + 1);
            self.chosen.pop();
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.extend(i + 1);
    }

    /// Whether some `k`-set through `u` and `v` spans at least
    /// `C(k,2) − 1` edges.
    fn near_clique_at(&self, u: Vertex, v: Vertex) -> bool {
        let need = self.k * (self.k - 1) / 2 - 1;
        let rest: Vec<Vertex> = (0..self.n).filter(|&x| x != u && x != v).collect();
        let mut pick = Vec::with_capacity(self.k);
        self.subsets(&rest, 0, self.k - 2, &mut pick, u, v, need)
    }

    #[allow(clippy::too_many_arguments)]
    fn subsets(
        &self,
        rest: &[Vertex],
        from: usize,
        left: usize,
        pick: &mut Vec<Vertex>,
        u: Vertex,
        v: Vertex,
        need: usize,
    ) -> bool {
        if left == 0 {
            let mut set: u16 = (1 << u) | (1 << v);
            for &x in pick.iter() {
                set |= 1 << x;
            }
            let twice: u32 = (0..self.n)
                .filter(|&x| set >> x & 1 == 1)
                .map(|x| (self.adj[x] & set).count_ones())
                .sum();
            return twice as usize / 2 >= need;
        }
        for i in from..rest.len() {
            pick.push(rest[i]);
            let hit = self.subsets(rest, i + 1, left - 1, pick, u, v, need);
            pick.pop();
            if hit {
                return true;
            }
        }
        false
    }
}

/// One optimal base found by [`verify_theorem10`].
#[derive(Debug, Clone)]
pub struct Theorem10Base {
    pub base: ColoredGraph,
    /// The graph of exclusive edges.
    pub rainbow_graph: Graph,
    pub name: Option<&'static str>,
    /// Rainbow graph is `K_k − e`-extremal and every other edge shares one
    /// color.
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct Theorem10Report {
    pub r: usize,
    pub t: usize,
    pub k: usize,
    pub value: u64,
    pub expected: u64,
    /// Optimal bases before isomorphism reduction.
    pub labelled_count: usize,
    /// One per isomorphism class, sorted by canonical key.
    pub bases: Vec<Theorem10Base>,
    /// Names of the extremal graphs without `K_k − e` on `r` vertices.
    pub dirac_family: Vec<Option<&'static str>>,
    /// Every base has the expected shape and every extremal graph occurs.
    pub pass: bool,
    pub stats: SearchStats,
}

/// Checks that the optimal base colorings of `K_r` for `f ≡ t` are exactly
/// a rainbow extremal `K_k − e`-free graph plus one common color.
pub fn verify_theorem10(r: usize, t: usize, k: usize) -> Result<Theorem10Report> {
    verify_theorem10_with(r, t, k, &Theorem6Options::default(), &Sequential)
}

pub fn verify_theorem10_with(
    r: usize,
    t: usize,
    k: usize,
    opts: &Theorem6Options,
    exec: &dyn Executor,
) -> Result<Theorem10Report> {
    if k < 4 || r <= k || t < 2 {
        return Err(invalid!("needs r > k ≥ 4 and t ≥ 2, got r = {r}, t = {t}, k = {k}"));
    }
    if r > THEOREM10_MAX_R {
        return Err(Error::Capacity {
            limit: "base order r",
            value: r,
            max: THEOREM10_MAX_R,
        });
    }
    let spec = PartiteSpec::balanced(r, t)?;
    let expected = ar_balanced(r, t, k)?.value;
    let (value, labelled, stats) = argmax_bases(&spec, k, opts, exec)?;
    let family = dirac_extremal_graphs(r, k)?;
    let family_keys: Vec<Vec<u8>> = family.iter().map(graph_key).collect();

    let mut keyed: Vec<(Vec<u8>, ColoredGraph)> =
        labelled.iter().map(|b| (canonical_form(b), b.clone())).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);

    let mut seen = BTreeSet::new();
    let bases: Vec<Theorem10Base> = keyed
        .into_iter()
        .map(|(_, base)| {
            let g = base.graph();
            let exclusive: Vec<(Vertex, Vertex)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(e, _)| base.classes()[base.color(e)].len() == 1)
                .map(|(_, &p)| p)
                .collect();
            let shared = base.color_count() - exclusive.len();
            let rainbow_graph = Graph::new(r, exclusive).expect("subgraph of K_r");
            let key = graph_key(&rainbow_graph);
            let member = family_keys.contains(&key);
            if member {
                seen.insert(key);
            }
            Theorem10Base {
                name: dirac_graph_name(&rainbow_graph, k),
                ok: member && shared == 1,
                rainbow_graph,
                base,
            }
        })
        .collect();
    let pass = value == expected && bases.iter().all(|b| b.ok) && seen.len() == family.len();
    Ok(Theorem10Report {
        r,
        t,
        k,
        value,
        expected,
        labelled_count: labelled.len(),
        bases,
        dirac_family: family.iter().map(|g| dirac_graph_name(g, k)).collect(),
        pass,
        stats,
    })
}
