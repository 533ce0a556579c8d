//! Set partitions as restricted-growth strings.
//!
//! A string `a₀a₁…a_{m−1}` is restricted-growth when `a₀ = 0` and each
//! `a_i ≤ 1 + max(a₀..a_{i−1})`. Such strings are in bijection with the set
//! partitions of `{0..m}`, one per partition up to renaming of blocks.

use alloc::vec;
use alloc::vec::Vec;

/// Iterates every restricted-growth string of length `m` in lexicographic
/// order. There are `Bell(m)` of them.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    current: Vec<usize>,
    // prefix maxima: maxes[i] = max(current[0..=i])
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(m: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; m],
            maxes: vec![0; m],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let m = self.current.len();
        for i in (1..m).rev() {
            if self.current[i] <= self.maxes[i - 1] {
                self.current[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.current[i]);
                for j in i + 1..m {
                    self.current[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(self.current.clone())
    }
}

/// Bell numbers by the triangle recurrence; `None` on overflow.
pub fn bell(m: usize) -> Option<u64> {
    let mut row: Vec<u64> = vec![1];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last()?);
        for &x in &row {
            let prev = *next.last()?;
            next.push(prev.checked_add(x)?);
        }
        row = next;
    }
    row.first().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let expect = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (m, &b) in expect.iter().enumerate() {
            assert_eq!(bell(m), Some(b));
            assert_eq!(RestrictedGrowth::new(m).count() as u64, b.max(1));
        }
        assert_eq!(bell(13), Some(27_644_437));
    }

    #[test]
    fn strings_are_lexicographic_and_valid() {
        let all: Vec<Vec<usize>> = RestrictedGrowth::new(5).collect();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for s in &all {
            let mut max = 0;
            assert_eq!(s[0], 0);
            for &x in &s[1..] {
                assert!(x <= max + 1);
                max = max.max(x);
            }
        }
    }

    #[test]
    fn three_edges_give_five() {
        let all: Vec<Vec<usize>> = RestrictedGrowth::new(3).collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }
}
