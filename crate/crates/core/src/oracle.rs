//! Exhaustive search over every edge partition of a small host.

use alloc::vec::Vec;

use crate::coloring::ColoredGraph;
use crate::error::{invalid, Error, Result};
use crate::formulas::{ar_complete, ar_kpartite, ar_multipartite_k3, ArResult, Method};
use crate::graph::Graph;
use crate::iso::canonical_form;
use crate::search::{Executor, Goal, Search, SearchStats, Sequential, DEFAULT_PREFIX_DEPTH};
use crate::spec::PartiteSpec;

/// Largest host, in edges, searched by default.
pub const DEFAULT_EDGE_CAP: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub edge_cap: usize,
    pub prefix_depth: usize,
    /// Start from the best closed-form coloring that fits the host. It only
    /// raises the floor; the search still proves the maximum.
    pub seed: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            edge_cap: DEFAULT_EDGE_CAP,
            prefix_depth: DEFAULT_PREFIX_DEPTH,
            seed: true,
        }
    }
}

/// All extremal colorings of a host up to colored isomorphism.
#[derive(Debug, Clone)]
pub struct ExtremalFamily {
    pub host: Graph,
    pub k: usize,
    pub ar_value: u64,
    /// Sorted by canonical key.
    pub representatives: Vec<ColoredGraph>,
    pub complete: bool,
}

fn host_spec(host: &Graph) -> Option<PartiteSpec> {
    let sizes = host.part_sizes()?;
    let spec = PartiteSpec::new(sizes).ok()?;
    (spec.sizes() == sizes).then_some(spec)
}

/// Closed-form colorings that live on exactly this host.
fn seed_colorings(host: &Graph, k: usize) -> Vec<ColoredGraph> {
    let Some(spec) = host_spec(host) else {
        return Vec::new();
    };
    let r = spec.r();
    let mut found = Vec::new();
    if r == k {
        found.extend(ar_kpartite(&spec, k).ok().and_then(|a| a.witness));
    }
    if k == 3 && r >= 3 {
        found.extend(ar_multipartite_k3(&spec).ok().and_then(|a| a.witness));
    }
    if spec.sizes().iter().all(|&x| x == 1) && r >= k {
        found.extend(ar_complete(r, k).ok().and_then(|a| a.witness));
    }
    found.retain(|w| w.graph().edges() == host.edges() && !w.contains_rainbow_clique(k));
    found
}

fn host_search(host: &Graph, k: usize, opts: &OracleOptions, goal: Goal) -> Result<Search> {
    let m = host.edge_count();
    if m > opts.edge_cap {
        return Err(Error::Capacity {
            limit: "edge count",
            value: m,
            max: opts.edge_cap,
        });
    }
    let mut floor = 0;
    if opts.seed {
        floor = seed_colorings(host, k)
            .iter()
            .map(|w| w.color_count() as u64)
            .max()
            .unwrap_or(0);
    }
    Ok(Search::new(host, k, &alloc::vec![1; host.vertex_count()])?
        .with_floor(floor)
        .with_goal(goal)
        .with_prefix_depth(opts.prefix_depth))
}

/// `ar(host, K_k)` straight from the definition.
pub fn brute_force_ar(host: &Graph, k: usize) -> Result<ArResult> {
    brute_force_ar_with(host, k, &OracleOptions::default(), &Sequential).map(|(res, _)| res)
}

pub fn brute_force_ar_with(
    host: &Graph,
    k: usize,
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<(ArResult, SearchStats)> {
    let out = host_search(host, k, opts, Goal::Best)?.solve(exec);
    let (value, labels) = match (out.value, out.labelings.first()) {
        (Some(v), Some(l)) => (v, l),
        _ => return Err(invalid!("search found no coloring at its floor")),
    };
    let witness = ColoredGraph::from_labels(host.clone(), labels)?;
    Ok((
        ArResult {
            value,
            method: Method::Oracle,
            witness: Some(witness),
        },
        out.stats,
    ))
}

/// Every extremal coloring of `host` for rainbow `K_k`, one per isomorphism
/// class.
pub fn enumerate_extremal(host: &Graph, k: usize) -> Result<ExtremalFamily> {
    enumerate_extremal_with(host, k, &OracleOptions::default(), &Sequential).map(|(fam, _)| fam)
}

pub fn enumerate_extremal_with(
    host: &Graph,
    k: usize,
    opts: &OracleOptions,
    exec: &dyn Executor,
) -> Result<(ExtremalFamily, SearchStats)> {
    let out = host_search(host, k, opts, Goal::All)?.solve(exec);
    let ar_value = out
        .value
        .ok_or_else(|| invalid!("search found no coloring at its floor"))?;
    let mut keyed: Vec<(Vec<u8>, ColoredGraph)> = Vec::new();
    for labels in &out.labelings {
        let cg = ColoredGraph::from_labels(host.clone(), labels)?;
        keyed.push((canonical_form(&cg), cg));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok((
        ExtremalFamily {
            host: host.clone(),
            k,
            ar_value,
            representatives: keyed.into_iter().map(|(_, cg)| cg).collect(),
            complete: true,
        },
        out.stats,
    ))
}
