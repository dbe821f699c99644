//! Compensated floating-point summation with a fixed reduction order.

use rayon::prelude::*;

/// Running sum with an error term, updated by the error-free `two_sum`
/// transformation. The represented value is `sum + compensation`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let (s, err) = two_sum(self.sum, value);
        self.sum = s;
        self.compensation += err;
    }

    /// Folds another partial sum in, keeping both error terms.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.compensation += other.compensation;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Number of consecutive terms reduced serially inside one block.
pub const BLOCK: u64 = 1 << 14;

/// Sums `term(i)` for `i` in `0..n`.
///
/// Terms are grouped into blocks of [`BLOCK`] consecutive indices; each block
/// is summed serially and the block partials are merged in index order. The
/// grouping depends only on `n`, so the result is bit-identical for any
/// number of worker threads.
pub fn blocked_sum(n: u64, term: impl Fn(u64) -> f64 + Sync) -> f64 {
    let blocks = n.div_ceil(BLOCK);
    let partials: Vec<CompensatedSum> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n);
            (lo..hi).map(&term).collect()
        })
        .collect();
    let mut total = CompensatedSum::new();
    for p in &partials {
        total.merge(p);
    }
    total.value()
}
