use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::euler_char::{chi_complex_unpunctured, chi_real_unpunctured, real_twist};
use crate::exact::{bernoulli, MuSeries, MuTerm, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Continuum free energy of the hermitian model:
/// `1/2 mu^2 log mu - 1/12 log mu + sum_{g=2}^{g_max} chi^c(M_{g,0}) mu^{2-2g}`.
pub fn penner_continuum(g_max: u32) -> Result<MuSeries> {
    if g_max < 2 {
        return Err(Error::InvalidArgument(format!("g_max must be at least 2, got {g_max}")));
    }
    let mut terms = vec![MuTerm::new(r(1, 2), 2, 1), MuTerm::new(r(-1, 12), 0, 1)];
    for g in 2..=g_max {
        terms.push(MuTerm::new(chi_complex_unpunctured(g)?, 2 - 2 * g as i64, 0));
    }
    MuSeries::from_terms(terms)
}

/// Non-orientable continuum contribution:
/// `1/4 mu log mu - sum_{k=1}^{k_max} chi^r(M_{2k,0}) mu^{1-2k}`.
pub fn nonorientable_continuum(k_max: u32) -> Result<MuSeries> {
    if k_max < 1 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let mut terms = vec![MuTerm::new(r(1, 4), 1, 1)];
    for k in 1..=k_max {
        terms.push(MuTerm::new(-chi_real_unpunctured(k)?, 1 - 2 * k as i64, 0));
    }
    MuSeries::from_terms(terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContinuumModel {
    Symplectic,
    Orthogonal,
}

impl fmt::Display for ContinuumModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContinuumModel::Symplectic => "symplectic",
            ContinuumModel::Orthogonal => "orthogonal",
        })
    }
}

impl FromStr for ContinuumModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symplectic" => Ok(ContinuumModel::Symplectic),
            "orthogonal" => Ok(ContinuumModel::Orthogonal),
            _ => Err(Error::Parse(format!("unknown continuum model {s:?}"))),
        }
    }
}

/// A continuum series together with the sign findings collected while building it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuumSeries {
    pub series: MuSeries,
    pub notes: Vec<String>,
}

/// `1/2 F(mu) -/+ F^NO(mu)` for the symplectic / orthogonal model.
///
/// The notes compare the result term by term against the published form
/// (see [`published_continuum`]).
pub fn combined_continuum(model: ContinuumModel, g_max: u32, k_max: u32) -> Result<ContinuumSeries> {
    let half_penner = penner_continuum(g_max)?.scale(&r(1, 2));
    let nonorientable = nonorientable_continuum(k_max)?;
    let series = match model {
        ContinuumModel::Symplectic => half_penner.sub(&nonorientable),
        ContinuumModel::Orthogonal => half_penner.add(&nonorientable),
    };
    let published = published_continuum(model, g_max, k_max)?;
    let notes = sign_discrepancies(&series, &published);
    Ok(ContinuumSeries { series, notes })
}

/// The symplectic continuum free energy in its published form,
/// `1/4 mu^2 log mu - 1/4 mu log mu + 1/24 log mu + 1/2 sum_g chi^c_g mu^{2-2g} - sum_k chi^r_k mu^{1-2k}`;
/// the orthogonal one flips the sign of the non-orientable terms.
pub fn published_continuum(model: ContinuumModel, g_max: u32, k_max: u32) -> Result<MuSeries> {
    let no_sign = match model {
        ContinuumModel::Symplectic => r(1, 1),
        ContinuumModel::Orthogonal => r(-1, 1),
    };
    let mut terms = vec![
        MuTerm::new(r(1, 4), 2, 1),
        MuTerm::new(-(&no_sign * r(1, 4)), 1, 1),
        MuTerm::new(r(1, 24), 0, 1),
    ];
    for g in 2..=g_max {
        terms.push(MuTerm::new(r(1, 2) * chi_complex_unpunctured(g)?, 2 - 2 * g as i64, 0));
    }
    for k in 1..=k_max {
        terms.push(MuTerm::new(-(&no_sign * chi_real_unpunctured(k)?), 1 - 2 * k as i64, 0));
    }
    MuSeries::from_terms(terms)
}

fn describe(mu_power: i64, log_power: u8) -> String {
    match (mu_power, log_power) {
        (0, 1) => "log mu".to_string(),
        (1, 1) => "mu log mu".to_string(),
        (a, 1) => format!("mu^{a} log mu"),
        (a, _) => format!("mu^{a}"),
    }
}

/// One note per term where the two series differ.
fn sign_discrepancies(built: &MuSeries, published: &MuSeries) -> Vec<String> {
    let mut keys: Vec<(i64, u8)> = built
        .terms()
        .iter()
        .chain(published.terms())
        .map(|t| (t.mu_power, t.log_power))
        .collect();
    keys.sort_by(|a, b| b.cmp(a));
    keys.dedup();
    keys.into_iter()
        .filter_map(|(a, b)| {
            let ours = built.coeff(a, b);
            let theirs = published.coeff(a, b);
            (ours != theirs).then(|| {
                let kind = if ours == -theirs.clone() {
                    "sign differs"
                } else {
                    "value differs"
                };
                format!(
                    "{kind} on {}: combination 1/2 F -/+ F^NO gives {ours}, published form has {theirs}",
                    describe(a, b)
                )
            })
        })
        .collect()
}

/// Density of states `1/2 [-log mu + sum_{m=1}^{m_max} (2^{2m-1}-1) B_{2m}/m mu^{-2m}]`.
pub fn density_of_states_series(m_max: u32) -> Result<MuSeries> {
    if m_max < 1 {
        return Err(Error::InvalidArgument("m_max must be at least 1".into()));
    }
    let mut terms = vec![MuTerm::new(r(-1, 2), 0, 1)];
    for m in 1..=m_max {
        let c = r(1, 2) * real_twist(m) * bernoulli(2 * m as usize) / Rational::from(m as i64);
        terms.push(MuTerm::new(c, -2 * m as i64, 0));
    }
    MuSeries::from_terms(terms)
}

/// `mu -> i mu` on the real part: even powers `mu^a` pick up `(-1)^{a/2}`.
///
/// Odd powers and log terms have no fixed real rotation; they are passed
/// through unchanged and listed in the returned notes.
pub fn wick_rotate(s: &MuSeries) -> (MuSeries, Vec<String>) {
    let mut notes = Vec::new();
    let terms: Vec<MuTerm> = s
        .terms()
        .iter()
        .map(|t| {
            if t.log_power == 0 && t.mu_power % 2 == 0 {
                let sign = Rational::sign_power(t.mu_power / 2);
                MuTerm::new(&t.coeff * &sign, t.mu_power, 0)
            } else {
                notes.push(format!(
                    "passed through unrotated: ({})*{}",
                    t.coeff,
                    describe(t.mu_power, t.log_power)
                ));
                t.clone()
            }
        })
        .collect();
    let rotated = MuSeries::from_terms(terms).expect("log powers unchanged");
    (rotated, notes)
}
