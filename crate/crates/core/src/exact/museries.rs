use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use crate::error::{Error, Result};

/// `coeff * mu^mu_power * (log mu)^log_power` with `log_power` in `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MuTerm {
    pub coeff: Rational,
    pub mu_power: i64,
    pub log_power: u8,
}

impl MuTerm {
    pub fn new(coeff: Rational, mu_power: i64, log_power: u8) -> Self {
        MuTerm {
            coeff,
            mu_power,
            log_power,
        }
    }

    /// Value at a concrete `mu > 0`.
    pub fn eval(&self, mu: f64) -> f64 {
        let log = if self.log_power == 1 { mu.ln() } else { 1.0 };
        self.coeff.to_f64() * mu.powi(self.mu_power as i32) * log
    }
}

impl fmt::Debug for MuTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*mu^{}", self.coeff, self.mu_power)?;
        if self.log_power == 1 {
            write!(f, "*log(mu)")?;
        }
        Ok(())
    }
}

/// Finite sum of [`MuTerm`]s in canonical form: sorted by `mu_power`
/// descending then `log_power` descending, one term per `(mu_power,
/// log_power)` pair, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MuSeries {
    terms: Vec<MuTerm>,
}

impl MuSeries {
    pub fn zero() -> Self {
        MuSeries::default()
    }

    /// Canonicalises arbitrary input; rejects `log_power > 1`.
    pub fn from_terms(terms: impl IntoIterator<Item = MuTerm>) -> Result<Self> {
        let mut acc: BTreeMap<(i64, u8), Rational> = BTreeMap::new();
        for t in terms {
            if t.log_power > 1 {
                return Err(Error::UnsupportedTerm {
                    mu_power: t.mu_power,
                    log_power: t.log_power,
                    reason: "only (log mu)^0 and (log mu)^1 are representable",
                });
            }
            *acc.entry((t.mu_power, t.log_power)).or_default() += &t.coeff;
        }
        Ok(MuSeries::from_map(acc))
    }

    fn from_map(acc: BTreeMap<(i64, u8), Rational>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b), c)| MuTerm::new(c, a, b))
            .collect();
        MuSeries { terms }
    }

    fn to_map(&self) -> BTreeMap<(i64, u8), Rational> {
        self.terms
            .iter()
            .map(|t| ((t.mu_power, t.log_power), t.coeff.clone()))
            .collect()
    }

    /// Single term; panics if `log_power > 1`.
    pub fn term(coeff: Rational, mu_power: i64, log_power: u8) -> Self {
        MuSeries::from_terms([MuTerm::new(coeff, mu_power, log_power)]).expect("log power must be 0 or 1")
    }

    pub fn terms(&self) -> &[MuTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `mu^mu_power (log mu)^log_power`, zero when absent.
    pub fn coeff(&self, mu_power: i64, log_power: u8) -> Rational {
        self.terms
            .iter()
            .find(|t| t.mu_power == mu_power && t.log_power == log_power)
            .map(|t| t.coeff.clone())
            .unwrap_or_default()
    }

    pub fn add(&self, rhs: &MuSeries) -> Self {
        let mut acc = self.to_map();
        for t in &rhs.terms {
            *acc.entry((t.mu_power, t.log_power)).or_default() += &t.coeff;
        }
        MuSeries::from_map(acc)
    }

    pub fn sub(&self, rhs: &MuSeries) -> Self {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MuSeries::zero();
        }
        MuSeries {
            terms: self
                .terms
                .iter()
                .map(|t| MuTerm::new(&t.coeff * c, t.mu_power, t.log_power))
                .collect(),
        }
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(&MuTerm) -> bool) -> Self {
        MuSeries {
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    pub fn eval(&self, mu: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(mu)).sum()
    }
}

impl fmt::Debug for MuSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.terms).finish()
    }
}

/// Term-wise `d/dmu`, using `d/dmu [mu^a log mu] = a mu^{a-1} log mu + mu^{a-1}`.
pub fn mu_differentiate(s: &MuSeries) -> MuSeries {
    let mut out: Vec<MuTerm> = Vec::new();
    for t in s.terms() {
        let a = Rational::from(t.mu_power);
        match t.log_power {
            0 => out.push(MuTerm::new(&t.coeff * &a, t.mu_power - 1, 0)),
            _ => {
                out.push(MuTerm::new(&t.coeff * &a, t.mu_power - 1, 1));
                out.push(MuTerm::new(t.coeff.clone(), t.mu_power - 1, 0));
            }
        }
    }
    MuSeries::from_terms(out).expect("differentiation never raises the log power")
}

/// Term-wise antiderivative with zero integration constant.
///
/// `mu^{-1} log mu` would integrate to `(log mu)^2 / 2`, which is not
/// representable, so it is rejected.
pub fn mu_integrate(s: &MuSeries) -> Result<MuSeries> {
    let mut out: Vec<MuTerm> = Vec::new();
    for t in s.terms() {
        let a = t.mu_power;
        match (a, t.log_power) {
            (-1, 0) => out.push(MuTerm::new(t.coeff.clone(), 0, 1)),
            (-1, _) => {
                return Err(Error::UnsupportedTerm {
                    mu_power: -1,
                    log_power: 1,
                    reason: "integral would need (log mu)^2",
                })
            }
            (_, 0) => {
                let k = Rational::from(a + 1);
                out.push(MuTerm::new(&t.coeff / &k, a + 1, 0));
            }
            _ => {
                let k = Rational::from(a + 1);
                out.push(MuTerm::new(&t.coeff / &k, a + 1, 1));
                out.push(MuTerm::new(-(&t.coeff / &(&k * &k)), a + 1, 0));
            }
        }
    }
    MuSeries::from_terms(out)
}
