//! Orbifold Euler characteristics of moduli spaces of complex curves
//! `M_{g,n}` and of real curves of genus `2q`.
//!
//! All values are exact; factorials are big integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiKind {
    Complex,
    Real,
}

impl fmt::Display for ChiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiKind::Complex => "complex",
            ChiKind::Real => "real",
        })
    }
}

impl FromStr for ChiKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(ChiKind::Complex),
            "real" => Ok(ChiKind::Real),
            _ => Err(Error::Parse(format!("unknown kind {s:?}"))),
        }
    }
}

/// One entry of a table of Euler characteristics.
///
/// `genus_index` is `g` for the complex kind and `q` (actual genus `2q`)
/// for the real kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiValue {
    pub kind: ChiKind,
    pub genus_index: u32,
    pub punctures: u32,
    pub value: Rational,
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `2^{2q-1} - 1`, with `2^{-1} = 1/2` at `q = 0`.
pub(crate) fn real_twist(q: u32) -> Rational {
    Rational::from(2).pow(2 * q as i32 - 1) - Rational::one()
}

/// `(2g+n-3)! (2g-1) / ((2g)! n!) * B_{2g}`: the unsigned weight of the cell
/// `(g, n)` in the hermitian generating function.
///
/// Defined whenever `2g + n >= 3`, which includes the unpunctured `n = 0`
/// cells for `g >= 2`.
pub(crate) fn complex_cell_weight(g: u32, n: u32) -> Rational {
    let (g, n) = (g as u64, n as u64);
    debug_assert!(2 * g + n >= 3);
    fact(2 * g + n - 3) * Rational::from(2 * g as i64 - 1) * bernoulli(2 * g as usize) / (fact(2 * g) * fact(n))
}

/// `(2q+n-2)! (2^{2q-1}-1) / ((2q)! n!) * B_{2q}`: the unsigned weight of the
/// cell `(q, n)` in the non-orientable double sum.
///
/// Defined whenever `2q + n >= 2`, which includes `n = 0` for `q >= 1`.
pub(crate) fn real_cell_weight(q: u32, n: u32) -> Rational {
    let (q64, n64) = (q as u64, n as u64);
    debug_assert!(2 * q64 + n64 >= 2);
    fact(2 * q64 + n64 - 2) * real_twist(q) * bernoulli(2 * q as usize) / (fact(2 * q64) * fact(n64))
}

fn complex_stable(g: u32, n: u32) -> bool {
    2 * g as i64 + n as i64 > 2
}

fn real_stable(q: u32, n: u32) -> bool {
    2 * q as i64 + n as i64 > 1
}

/// `chi^c(M_{g,n}) = (-1)^n (2g+n-3)! (2g-1) / ((2g)! n!) B_{2g}`.
pub fn chi_complex(g: u32, n: u32) -> Result<Rational> {
    if n == 0 || !complex_stable(g, n) {
        return Err(Error::Stability { g, n });
    }
    Ok(Rational::sign_power(n as i64) * complex_cell_weight(g, n))
}

/// `chi^r(M_{2q,n}) = (-1)^n 1/2 (2q+n-2)! (2^{2q-1}-1) / ((2q)! n!) B_{2q}`.
pub fn chi_real(q: u32, n: u32) -> Result<Rational> {
    if n == 0 || !real_stable(q, n) {
        return Err(Error::RealRange { q, n });
    }
    Ok(Rational::sign_power(n as i64) * Rational::new(1, 2) * real_cell_weight(q, n))
}

/// `chi^c(M_{g,0}) = B_{2g} / (2g (2g-2))` for `g >= 2`.
pub fn chi_complex_unpunctured(g: u32) -> Result<Rational> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!(
            "unpunctured complex characteristic needs g >= 2, got {g}"
        )));
    }
    let g = g as i64;
    Ok(bernoulli(2 * g as usize) / Rational::from(2 * g * (2 * g - 2)))
}

/// `(2^{2k-1}-1)/(2k-1) * B_{2k}/(4k)` for `k >= 1`.
///
/// This is the positive combination; the minus sign in front of the
/// continuum tail is applied by the continuum series builder.
pub fn chi_real_unpunctured(k: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "unpunctured real characteristic needs k >= 1".into(),
        ));
    }
    let ki = k as i64;
    Ok(real_twist(k) / Rational::from(2 * ki - 1) * bernoulli(2 * k as usize) / Rational::from(4 * ki))
}

/// All in-range values with `genus_index <= g_max` and `1 <= n <= n_max`,
/// row-major in `(genus_index, punctures)`.
pub fn chi_table(kind: ChiKind, g_max: u32, n_max: u32) -> Vec<ChiValue> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for n in 1..=n_max {
            let value = match kind {
                ChiKind::Complex => chi_complex(g, n),
                ChiKind::Real => chi_real(g, n),
            };
            if let Ok(value) = value {
                out.push(ChiValue {
                    kind,
                    genus_index: g,
                    punctures: n,
                    value,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn complex_examples() {
        assert_eq!(chi_complex(1, 1).unwrap(), r(-1, 12));
        assert_eq!(chi_complex(0, 3).unwrap(), r(1, 6));
        assert_eq!(chi_complex(0, 2), Err(Error::Stability { g: 0, n: 2 }));
        assert!(chi_complex(1, 0).is_err());
    }

    #[test]
    fn torus_with_one_puncture_is_zeta_minus_one() {
        // zeta(-1) = -B_2 / 2, computed without the chi formula
        let zeta_minus_one = -bernoulli(2) / Rational::from(2);
        assert_eq!(chi_complex(1, 1).unwrap(), zeta_minus_one);
    }

    #[test]
    fn real_examples() {
        assert_eq!(chi_real(1, 1).unwrap(), r(-1, 24));
        assert_eq!(chi_real(0, 2).unwrap(), r(-1, 8));
        assert_eq!(chi_real(1, 2).unwrap(), r(1, 24));
        assert_eq!(chi_real(0, 3).unwrap(), r(1, 24));
        assert_eq!(chi_real(0, 1), Err(Error::RealRange { q: 0, n: 1 }));
    }

    #[test]
    fn unpunctured_examples() {
        assert_eq!(chi_complex_unpunctured(2).unwrap(), r(-1, 240));
        assert_eq!(chi_complex_unpunctured(3).unwrap(), r(1, 1008));
        assert!(chi_complex_unpunctured(1).is_err());
        assert_eq!(chi_real_unpunctured(1).unwrap(), r(1, 24));
        assert_eq!(chi_real_unpunctured(2).unwrap(), r(-7, 720));
        assert!(chi_real_unpunctured(0).is_err());
    }

    #[test]
    fn unpunctured_values_are_the_n_zero_cells() {
        for g in 2..=10 {
            assert_eq!(complex_cell_weight(g, 0), chi_complex_unpunctured(g).unwrap());
        }
        for q in 1..=10 {
            assert_eq!(real_cell_weight(q, 0) * r(1, 2), chi_real_unpunctured(q).unwrap());
        }
    }

    #[test]
    fn tables() {
        let t = chi_table(ChiKind::Complex, 1, 1);
        assert_eq!(t.len(), 1);
        assert_eq!((t[0].genus_index, t[0].punctures), (1, 1));
        assert_eq!(t[0].value, r(-1, 12));

        let t = chi_table(ChiKind::Real, 0, 3);
        let cells: Vec<_> = t.iter().map(|c| (c.punctures, c.value.clone())).collect();
        assert_eq!(cells, vec![(2, r(-1, 8)), (3, r(1, 24))]);

        assert!(chi_table(ChiKind::Complex, 0, 2).is_empty());

        let t = chi_table(ChiKind::Complex, 3, 4);
        let keys: Vec<_> = t.iter().map(|c| (c.genus_index, c.punctures)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn puncture_ratios() {
        for g in 1..=8 {
            for n in 1..=10 {
                let ratio = chi_complex(g, n + 1).unwrap() / chi_complex(g, n).unwrap();
                let expected = -r(2 * g as i64 + n as i64 - 2, n as i64 + 1);
                assert_eq!(ratio, expected, "complex ({g}, {n})");
            }
        }
        for q in 1..=8 {
            for n in 1..=10 {
                let ratio = chi_real(q, n + 1).unwrap() / chi_real(q, n).unwrap();
                let expected = -r(2 * q as i64 + n as i64 - 1, n as i64 + 1);
                assert_eq!(ratio, expected, "real ({q}, {n})");
            }
        }
    }

    #[test]
    fn real_values_never_vanish_for_positive_q() {
        for q in 1..=8 {
            for n in 1..=6 {
                assert!(!chi_real(q, n).unwrap().is_zero());
            }
        }
    }
}
