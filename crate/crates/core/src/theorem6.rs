//! `ar(K_{n₁,…,n_r}, K_k)` as the largest blow-up of a rainbow-`K_k`-free
//! coloring of `K_r`, with base vertex `vᵢ` blown up to `nᵢ` vertices.

use alloc::vec::Vec;

use crate::coloring::ColoredGraph;
use crate::construct::{blow_up, min_index_coloring, normal_coloring, turan_base, SizeFunction};
use crate::error::{invalid, Error, Result};
use crate::formulas::{ArResult, Method};
use crate::graph::Graph;
use crate::search::{Executor, Goal, Search, SearchStats, Sequential, DEFAULT_PREFIX_DEPTH};
use crate::spec::PartiteSpec;

/// Largest base order the engine accepts by default.
pub const DEFAULT_BASE_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem6Options {
    pub base_limit: usize,
    pub prefix_depth: usize,
}

impl Default for Theorem6Options {
    fn default() -> Self {
        Theorem6Options {
            base_limit: DEFAULT_BASE_LIMIT,
            prefix_depth: DEFAULT_PREFIX_DEPTH,
        }
    }
}

/// A base coloring of `K_r` with the color count of its blow-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseColoringScore {
    pub base: ColoredGraph,
    pub weighted_count: u64,
}

/// Everything a run of the engine produces.
#[derive(Debug, Clone)]
pub struct Theorem6Run {
    pub result: ArResult,
    pub base: BaseColoringScore,
    /// Value of the best construction used to seed the search.
    pub seed: u64,
    pub stats: SearchStats,
}

/// `s₀ + Σ_{b∈S¹} f(sat(b)) + Σ_{a∈S² on uv} f(u)f(v)`, the number of colors
/// of `blow_up(base, f)`, without building it.
pub fn weighted_color_count(base: &ColoredGraph, f: &SizeFunction) -> Result<u64> {
    let n = base.graph().vertex_count();
    if f.len() != n {
        return Err(invalid!("size function has {} values for {} vertices", f.len(), n));
    }
    let cls = base.classify();
    let w = |v: usize| f.get(v) as u64;
    Ok(cls.s0.len() as u64
        + cls.s1.values().map(|&v| w(v)).sum::<u64>()
        + cls.s2.values().map(|&(u, v)| w(u) * w(v)).sum::<u64>())
}

fn check(spec: &PartiteSpec, k: usize, opts: &Theorem6Options) -> Result<()> {
    let r = spec.r();
    if k < 3 || r < k {
        return Err(invalid!("the blow-up reduction needs r ≥ k ≥ 3, got r = {r}, k = {k}"));
    }
    if r > opts.base_limit {
        return Err(Error::Capacity {
            limit: "base order r",
            value: r,
            max: opts.base_limit,
        });
    }
    Ok(())
}

/// Known rainbow-`K_k`-free colorings of `K_r`, used only as search floors.
fn seed_bases(r: usize, k: usize) -> Vec<ColoredGraph> {
    let mut out = alloc::vec![ColoredGraph::monochromatic(Graph::complete(r))];
    if k == 3 {
        out.extend(min_index_coloring(r));
    }
    if r == k {
        out.extend(PartiteSpec::balanced(k, 1).and_then(|s| normal_coloring(&s, k)));
    }
    if k >= 4 {
        out.extend(turan_base(r, k - 2));
    }
    out.retain(|c| !c.contains_rainbow_clique(k));
    out
}

fn base_search(
    spec: &PartiteSpec,
    k: usize,
    opts: &Theorem6Options,
    goal: Goal,
) -> Result<(Search, SizeFunction, u64)> {
    check(spec, k, opts)?;
    let r = spec.r();
    let f = SizeFunction::new(spec.sizes())?;
    let mut floor = 0;
    for seed in seed_bases(r, k) {
        floor = floor.max(weighted_color_count(&seed, &f)?);
    }
    let weights: Vec<u64> = spec.sizes().iter().map(|&x| x as u64).collect();
    let search = Search::new(&Graph::complete(r), k, &weights)?
        .with_floor(floor)
        .with_goal(goal)
        .with_prefix_depth(opts.prefix_depth);
    Ok((search, f, floor))
}

/// Exact `ar(K_{n₁,…,n_r}, K_k)` for `3 ≤ k ≤ r ≤ 7`, witnessed by the
/// blow-up of the lexicographically first optimal base.
pub fn ar_via_theorem6(spec: &PartiteSpec, k: usize) -> Result<ArResult> {
    ar_via_theorem6_with(spec, k, &Theorem6Options::default(), &Sequential).map(|run| run.result)
}

pub fn ar_via_theorem6_with(
    spec: &PartiteSpec,
    k: usize,
    opts: &Theorem6Options,
    exec: &dyn Executor,
) -> Result<Theorem6Run> {
    let (search, f, seed) = base_search(spec, k, opts, Goal::Best)?;
    let out = search.solve(exec);
    let (value, labels) = match (out.value, out.labelings.first()) {
        (Some(v), Some(l)) => (v, l),
        _ => return Err(invalid!("no base coloring reached the seeded floor {seed}")),
    };
    let base = ColoredGraph::from_labels(Graph::complete(spec.r()), labels)?;
    let witness = blow_up(&base, &f)?;
    Ok(Theorem6Run {
        result: ArResult {
            value,
            method: Method::Theorem6,
            witness: Some(witness),
        },
        base: BaseColoringScore {
            base,
            weighted_count: value,
        },
        seed,
        stats: out.stats,
    })
}

/// Every optimal base coloring of `K_r` (labelled, not reduced up to
/// isomorphism), in lexicographic order of their label strings.
pub fn argmax_bases(
    spec: &PartiteSpec,
    k: usize,
    opts: &Theorem6Options,
    exec: &dyn Executor,
) -> Result<(u64, Vec<ColoredGraph>, SearchStats)> {
    let (search, _, seed) = base_search(spec, k, opts, Goal::All)?;
    let out = search.solve(exec);
    let value = out
        .value
        .ok_or_else(|| invalid!("no base coloring reached the seeded floor {seed}"))?;
    let g = Graph::complete(spec.r());
    let bases = out
        .labelings
        .iter()
        .map(|l| ColoredGraph::from_labels(g.clone(), l))
        .collect::<Result<Vec<_>>>()?;
    Ok((value, bases, out.stats))
}
