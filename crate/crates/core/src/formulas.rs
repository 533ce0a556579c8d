//! Closed forms for Turán numbers and anti-Ramsey numbers of cliques.
//!
//! All functions take the size `k` of the forbidden rainbow clique `K_k`
//! directly; Turán-index shifts happen inside.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::ColoredGraph;
use crate::construct::{min_index_coloring, normal_coloring, turan_base, turan_coloring, turan_sizes};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::spec::{pairwise_product_sum, PartiteSpec};

/// Where an anti-Ramsey value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// `ar(K_n, K_3) = n − 1`.
    CompleteTriangle,
    /// `ar(K_n, K_k) = ex(K_n, K_{k−1}) + 1`, `k ≥ 4`.
    Complete,
    /// Rainbow triangles in complete multipartite hosts.
    MultipartiteTriangle,
    /// `K_k` in complete `k`-partite hosts.
    KPartite,
    /// `K_k` in balanced complete `r`-partite hosts, `r ≥ k ≥ 4`.
    Balanced,
    /// Maximum blow-up color count over colorings of the base `K_r`.
    Theorem6,
    /// Exhaustive search over all edge partitions of the host.
    Oracle,
    /// `r < k`: the host has no `K_k`, every coloring qualifies.
    Degenerate,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::CompleteTriangle => "formula(complete-k3)",
            Method::Complete => "formula(complete)",
            Method::MultipartiteTriangle => "formula(multipartite-k3)",
            Method::KPartite => "formula(k-partite)",
            Method::Balanced => "formula(balanced)",
            Method::Theorem6 => "theorem6",
            Method::Oracle => "oracle",
            Method::Degenerate => "degenerate",
        }
    }

    pub fn is_formula(self) -> bool {
        matches!(
            self,
            Method::CompleteTriangle
                | Method::Complete
                | Method::MultipartiteTriangle
                | Method::KPartite
                | Method::Balanced
        )
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An anti-Ramsey value with its provenance and, when available, a coloring
/// attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArResult {
    pub value: u64,
    pub method: Method,
    pub witness: Option<ColoredGraph>,
}

impl ArResult {
    /// Checks the witness contract: it has `value` colors and no rainbow
    /// `K_k`. Trivially true without a witness.
    pub fn witness_ok(&self, k: usize) -> bool {
        self.witness
            .as_ref()
            .is_none_or(|w| w.color_count() as u64 == self.value && !w.contains_rainbow_clique(k))
    }
}

/// `ex(K_n, K_k)`, the most edges of a `K_k`-free graph on `n` vertices:
/// `e(T_{n,k−1})`, or `C(n, 2)` when `n < k`.
pub fn turan_number(n: usize, k: usize) -> Result<u64> {
    if k < 2 {
        return Err(invalid!("forbidden clique needs k ≥ 2, got {k}"));
    }
    Ok(pairwise_product_sum(&turan_sizes(n, k - 1)))
}

/// `ar(K_n, K_k)` for `n ≥ k ≥ 3`.
pub fn ar_complete(n: usize, k: usize) -> Result<ArResult> {
    if k < 3 || n < k {
        return Err(invalid!("ar(K_n, K_k) needs n ≥ k ≥ 3, got n = {n}, k = {k}"));
    }
    if k == 3 {
        return Ok(ArResult {
            value: n as u64 - 1,
            method: Method::CompleteTriangle,
            witness: Some(min_index_coloring(n)?),
        });
    }
    Ok(ArResult {
        value: turan_number(n, k - 1)? + 1,
        method: Method::Complete,
        witness: Some(turan_base(n, k - 2)?),
    })
}

/// `ar(K_{n₁,…,n_r}, K_3)` for `r ≥ 3`.
///
/// The witness pairs consecutive parts `(U₁,U₂), (U₃,U₄), …` into blocks.
/// Edges inside a block are rainbow, edges between two blocks take the color
/// of the earlier block, and for odd `r` every vertex of the last part gets
/// one color for all of its edges.
pub fn ar_multipartite_k3(spec: &PartiteSpec) -> Result<ArResult> {
    let n = spec.sizes();
    let r = n.len();
    if r < 3 {
        return Err(invalid!("needs at least 3 parts, got {r}"));
    }
    let paired = r - r % 2;
    let mut value: u64 = (0..paired).step_by(2).map(|i| (n[i] * n[i + 1]) as u64).sum();
    if r % 2 == 1 {
        value += n[r - 1] as u64 + (r as u64 - 1) / 2 - 1;
    } else {
        value += r as u64 / 2 - 1;
    }

    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Key {
        Star(usize),
        Own(usize),
        Block(usize),
    }
    let g = Graph::host(spec);
    let mut ids = BTreeMap::new();
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(x, y))| {
            let (p, q) = (g.part_of(x).unwrap(), g.part_of(y).unwrap());
            let (p, q) = (p.min(q), p.max(q));
            let key = if q >= paired {
                Key::Star(y)
            } else if p / 2 == q / 2 {
                Key::Own(e)
            } else {
                Key::Block(p / 2)
            };
            let next = ids.len();
            *ids.entry(key).or_insert(next)
        })
        .collect();
    Ok(ArResult {
        value,
        method: Method::MultipartiteTriangle,
        witness: Some(ColoredGraph::new(g, labels)?),
    })
}

/// `ar(K_{n₁,…,n_k}, K_k) = Σ nᵢnⱼ − n_k(n_{k−1} + n_{k−2} − 1)`.
pub fn ar_kpartite(spec: &PartiteSpec, k: usize) -> Result<ArResult> {
    if k < 3 || spec.r() != k {
        return Err(invalid!("needs r = k ≥ 3, got r = {}, k = {k}", spec.r()));
    }
    let n = spec.sizes();
    let value = spec.edge_count() - (n[k - 1] * (n[k - 2] + n[k - 3] - 1)) as u64;
    Ok(ArResult {
        value,
        method: Method::KPartite,
        witness: Some(normal_coloring(spec, k)?),
    })
}

/// `ar(K_r^t, K_k)` for `r ≥ k ≥ 4`. Triangles go through
/// [`ar_multipartite_k3`].
pub fn ar_balanced(r: usize, t: usize, k: usize) -> Result<ArResult> {
    if k == 3 {
        return Err(invalid!(
            "k = 3 is covered by ar_multipartite_k3; the balanced formula needs k ≥ 4"
        ));
    }
    if k < 4 || r < k || t < 1 {
        return Err(invalid!("needs r ≥ k ≥ 4 and t ≥ 1, got r = {r}, t = {t}, k = {k}"));
    }
    let t64 = t as u64;
    let (value, witness) = if r == k {
        let kk = (k * (k - 1) / 2) as u64;
        (t64 * t64 * (kk - 2) + t64, normal_coloring(&PartiteSpec::balanced(r, t)?, k)?)
    } else {
        (t64 * t64 * turan_number(r, k - 1)? + 1, turan_coloring(r, t, k)?)
    };
    Ok(ArResult {
        value,
        method: Method::Balanced,
        witness: Some(witness),
    })
}

/// `ex(K_n, K_k − e) = e(T_{n,k−2})` for `k ≥ 4`, `n ≥ k + 1`.
pub fn dirac_extremal_bound(n: usize, k: usize) -> Result<u64> {
    if k < 4 || n < k + 1 {
        return Err(invalid!("needs k ≥ 4 and n ≥ k + 1, got n = {n}, k = {k}"));
    }
    Ok(pairwise_product_sum(&turan_sizes(n, k - 2)))
}
