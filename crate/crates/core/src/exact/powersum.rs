use super::bernoulli::bernoulli;
use super::combinatorics::binomial;
use super::npoly::NPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Faulhaber polynomial `P_m(N)` with `P_m(n) = 1^m + 2^m + ... + n^m`.
///
/// Built term by term as
/// `N^{m+1}/(m+1) + N^m/2 + sum_{k=1}^{floor(m/2)} C(m, 2k-1) B_{2k}/(2k) N^{m+1-2k}`.
pub fn faulhaber(m: u32) -> Result<NPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("faulhaber needs m >= 1".into()));
    }
    let m_us = m as usize;
    let mut coeffs = vec![Rational::zero(); m_us + 2];
    coeffs[m_us + 1] = Rational::new(1, m as i64 + 1);
    coeffs[m_us] = Rational::new(1, 2);
    for k in 1..=(m_us / 2) {
        let c = Rational::from_integer(binomial(m as u64, 2 * k as u64 - 1)) * bernoulli(2 * k)
            / Rational::from(2 * k as i64);
        coeffs[m_us + 1 - 2 * k] += &c;
    }
    Ok(NPoly::from_coeffs(coeffs))
}

/// `Q_m(N)` with `Q_m(n) = 1^m + 3^m + ... + (2n-1)^m`.
///
/// Obtained as `P_m(2N) - 2^m P_m(N)`. The `N^m` terms of the two pieces
/// cancel exactly; this is checked on every call.
pub fn odd_power_sum(m: u32) -> Result<NPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("odd_power_sum needs m >= 1".into()));
    }
    let p = faulhaber(m)?;
    let two = Rational::from(2);
    let q = &p.scale_var(&two) - &p.scale(&two.pow(m as i32));
    assert!(
        q.coeff(m as usize).is_zero(),
        "middle Faulhaber terms failed to cancel for m = {m}"
    );
    Ok(q)
}
