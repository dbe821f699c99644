use std::sync::RwLock;

use super::combinatorics::binomial;
use super::rational::Rational;

static CACHE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Bernoulli number `B_m`, exact.
///
/// Uses the recurrence `sum_{k=0}^{m} C(m+1, k) B_k = 0`, which fixes the
/// convention `B_1 = -1/2`. Only even indices enter the Penner formulas, so
/// the choice for `B_1` never leaks into results.
///
/// Values are cached process-wide; the cache grows monotonically under a
/// write lock and is read under a shared lock.
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = CACHE.read().expect("bernoulli cache poisoned").get(m) {
        return b.clone();
    }
    let mut cache = CACHE.write().expect("bernoulli cache poisoned");
    while cache.len() <= m {
        let next = cache.len();
        let value = if next == 0 {
            Rational::one()
        } else if next > 1 && next % 2 == 1 {
            Rational::zero()
        } else {
            let n = next as u64;
            let acc: Rational = cache
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_zero())
                .map(|(k, b)| Rational::from_integer(binomial(n + 1, k as u64)) * b)
                .sum();
            -acc / Rational::from(n as i64 + 1)
        };
        cache.push(value);
    }
    cache[m].clone()
}
