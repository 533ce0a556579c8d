use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};

/// Part sizes `n₁ ≥ n₂ ≥ … ≥ n_r` of a complete multipartite graph.
///
/// Sizes are sorted on construction, so `[1, 2, 1]` and `[2, 1, 1]` describe
/// the same host.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartiteSpec {
    sizes: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(sizes: impl Into<Vec<usize>>) -> Result<Self> {
        let mut sizes = sizes.into();
        if sizes.len() < 2 {
            return Err(invalid!(
                "a complete multipartite host needs at least 2 parts, got {}",
                sizes.len()
            ));
        }
        if let Some(pos) = sizes.iter().position(|&n| n == 0) {
            return Err(invalid!("part {pos} has size 0; every part needs at least one vertex"));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartiteSpec { sizes })
    }

    /// `K_r^t`: `r` parts of size `t`.
    pub fn balanced(r: usize, t: usize) -> Result<Self> {
        Self::new(alloc::vec![t; r])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts.
    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `Σ_{i<j} nᵢnⱼ`.
    pub fn edge_count(&self) -> u64 {
        pairwise_product_sum(&self.sizes)
    }

    pub fn is_balanced(&self) -> bool {
        self.sizes.iter().all(|&n| n == self.sizes[0])
    }
}

impl fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K_{")?;
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn pairwise_product_sum(sizes: &[usize]) -> u64 {
    let total: u64 = sizes.iter().map(|&n| n as u64).sum();
    let squares: u64 = sizes.iter().map(|&n| (n as u64) * (n as u64)).sum();
    (total * total - squares) / 2
}
