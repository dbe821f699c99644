use std::fmt;

use super::npoly::NPoly;
use super::rational::Rational;

/// Truncated power series in the coupling `t` with [`NPoly`] coefficients.
///
/// Holds exactly `order + 1` coefficients for `t^0 ..= t^order`. Binary
/// operations on series of different orders work at the smaller order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TSeries {
    coeffs: Vec<NPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            coeffs: vec![NPoly::zero(); order + 1],
        }
    }

    /// `c * t^power`, dropped when `power > order`.
    pub fn monomial(c: NPoly, power: usize, order: usize) -> Self {
        let mut s = TSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Pads with zeros or truncates so the result has exactly `order + 1` coefficients.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<NPoly>) -> Self {
        coeffs.resize(order + 1, NPoly::zero());
        TSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[NPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> &NPoly {
        &self.coeffs[power]
    }

    /// Adds `c` to the coefficient of `t^power`; ignored beyond the order.
    pub fn add_to(&mut self, power: usize, c: &NPoly) {
        if let Some(slot) = self.coeffs.get_mut(power) {
            *slot = &*slot + c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NPoly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TSeries::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn add(&self, rhs: &TSeries) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &TSeries) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn scale_poly(&self, p: &NPoly) -> Self {
        self.map(|a| a * p)
    }

    /// Cauchy product; powers above the common order are never formed.
    pub fn mul(&self, rhs: &TSeries) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = TSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }

    /// Substitutes `N -> c N` in every coefficient.
    pub fn scale_size(&self, c: &Rational) -> Self {
        self.map(|a| a.scale_var(c))
    }

    /// Evaluates every coefficient at `N = n`.
    pub fn eval_size(&self, n: i64) -> Self {
        self.map(|a| NPoly::constant(a.eval_int(n)))
    }

    fn map(&self, f: impl Fn(&NPoly) -> NPoly) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, rhs: &TSeries, f: impl Fn(&NPoly, &NPoly) -> NPoly) -> Self {
        let order = self.order().min(rhs.order());
        TSeries {
            coeffs: (0..=order).map(|k| f(&self.coeffs[k], &rhs.coeffs[k])).collect(),
        }
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSeries(order {})[", self.order())?;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "t^{k}: {c}")?;
        }
        write!(f, "]")
    }
}

/// Truncated `log(1 + c t) = sum_{m=1}^{order} (-1)^{m-1} c^m t^m / m`.
pub fn tseries_log_one_plus(c: &Rational, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    let mut power = Rational::one();
    for m in 1..=order {
        power *= c;
        let coeff = Rational::sign_power(m as i64 - 1) * &power / Rational::from(m as i64);
        s.coeffs[m] = NPoly::constant(coeff);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn constant_series(order: usize, values: &[(i64, i64)]) -> TSeries {
        TSeries::from_coeffs(
            order,
            values
                .iter()
                .map(|&(n, d)| NPoly::constant(Rational::new(n, d)))
                .collect(),
        )
    }

    #[test]
    fn mercator() {
        let s = tseries_log_one_plus(&Rational::one(), 3);
        assert_eq!(s, constant_series(3, &[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert!(tseries_log_one_plus(&Rational::zero(), 5).is_zero());
        let s = tseries_log_one_plus(&Rational::from(2), 2);
        assert_eq!(s, constant_series(2, &[(0, 1), (2, 1), (-2, 1)]));
    }

    #[test]
    fn length_is_order_plus_one() {
        let s = TSeries::from_coeffs(4, vec![NPoly::one(); 9]);
        assert_eq!(s.coeffs().len(), 5);
        assert_eq!(TSeries::zero(0).coeffs().len(), 1);
        assert_eq!(TSeries::monomial(NPoly::n(), 7, 3), TSeries::zero(3));
    }

    #[test]
    fn exp_like_product() {
        // (1 + t)(1 - t) = 1 - t^2
        let a = constant_series(3, &[(1, 1), (1, 1)]);
        let b = constant_series(3, &[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b), constant_series(3, &[(1, 1), (0, 1), (-1, 1)]));
    }

    fn series(order: usize) -> impl Strategy<Value = TSeries> {
        prop::collection::vec(prop::collection::vec(-9i64..9, 0..4), order + 1).prop_map(move |cs| {
            TSeries::from_coeffs(
                order,
                cs.into_iter()
                    .map(|p| NPoly::from_coeffs(p.into_iter().map(Rational::from).collect()))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_is_truncated_convolution(a in series(5), b in series(5)) {
            let prod = a.mul(&b);
            prop_assert_eq!(prod.order(), 5);
            for k in 0..=5 {
                let mut expected = NPoly::zero();
                for i in 0..=k {
                    expected = &expected + &(a.coeff(i) * b.coeff(k - i));
                }
                prop_assert_eq!(prod.coeff(k), &expected);
            }
        }

        #[test]
        fn truncation_is_idempotent_and_commutes_with_mul(a in series(6), b in series(6), m in 0usize..6) {
            prop_assert_eq!(a.truncate(m).truncate(m), a.truncate(m));
            prop_assert_eq!(a.mul(&b).truncate(m), a.truncate(m).mul(&b.truncate(m)));
        }

        #[test]
        fn add_sub_inverse(a in series(4), b in series(4)) {
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            prop_assert!(a.add(&a.neg()).is_zero());
        }
    }
}
