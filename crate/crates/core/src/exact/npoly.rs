use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// Polynomial in the matrix size `N` with rational coefficients.
///
/// Dense, indexed by degree, with trailing zeros stripped so that equality is
/// structural. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NPoly {
    coeffs: Vec<Rational>,
}

impl NPoly {
    pub fn zero() -> Self {
        NPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        NPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NPoly::from_coeffs(vec![c])
    }

    /// The symbol `N`.
    pub fn n() -> Self {
        NPoly::monomial(Rational::one(), 1)
    }

    /// `c * N^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        NPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        NPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `N^degree` (zero beyond the degree).
    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at `N = x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&Rational::from(n))
    }

    /// `p(c * N)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let term = a * &power;
                power *= c;
                term
            })
            .collect();
        NPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NPoly::zero();
        }
        NPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(NPoly::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*N")?,
                _ => write!(f, "({c})*N^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NPoly[{self}]")
    }
}

impl Add for &NPoly {
    type Output = NPoly;
    fn add(self, rhs: &NPoly) -> NPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPoly::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &NPoly {
    type Output = NPoly;
    fn sub(self, rhs: &NPoly) -> NPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPoly::from_coeffs((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &NPoly {
    type Output = NPoly;
    fn mul(self, rhs: &NPoly) -> NPoly {
        if self.is_zero() || rhs.is_zero() {
            return NPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        NPoly::from_coeffs(out)
    }
}

impl Neg for &NPoly {
    type Output = NPoly;
    fn neg(self) -> NPoly {
        NPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for NPoly {
    type Output = NPoly;
    fn add(self, rhs: NPoly) -> NPoly {
        &self + &rhs
    }
}

impl Sub for NPoly {
    type Output = NPoly;
    fn sub(self, rhs: NPoly) -> NPoly {
        &self - &rhs
    }
}

impl Mul for NPoly {
    type Output = NPoly;
    fn mul(self, rhs: NPoly) -> NPoly {
        &self * &rhs
    }
}

impl Neg for NPoly {
    type Output = NPoly;
    fn neg(self) -> NPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = NPoly> {
        prop::collection::vec((-20i64..20, 1i64..8), 0..6)
            .prop_map(|cs| NPoly::from_coeffs(cs.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = NPoly::from_coeffs(vec![Rational::one(), Rational::zero(), Rational::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p, NPoly::one());
        let q = &NPoly::n() - &NPoly::n();
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn scale_var_composes_at_multiple() {
        // (N^2 + N)(2N) = 4N^2 + 2N
        let p = NPoly::from_coeffs(vec![Rational::zero(), Rational::one(), Rational::one()]);
        let q = p.scale_var(&Rational::from(2));
        assert_eq!(q.coeffs(), &[Rational::zero(), Rational::from(2), Rational::from(4)]);
        assert_eq!(q.eval_int(3), p.eval_int(6));
    }

    #[test]
    fn display_is_readable() {
        let p = NPoly::from_coeffs(vec![
            Rational::zero(),
            Rational::new(-1, 12),
            Rational::zero(),
            Rational::new(1, 6),
        ]);
        assert_eq!(p.to_string(), "(1/6)*N^3 + (-1/12)*N");
    }

    proptest! {
        #[test]
        fn ring_axioms(p in poly(), q in poly(), r in poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p + &(-&p)).is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(p in poly(), q in poly(), n in -6i64..10) {
            prop_assert_eq!((&p * &q).eval_int(n), p.eval_int(n) * q.eval_int(n));
            prop_assert_eq!((&p + &q).eval_int(n), p.eval_int(n) + q.eval_int(n));
        }
    }
}
