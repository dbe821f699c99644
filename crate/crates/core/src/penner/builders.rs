use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::euler_char::{complex_cell_weight, real_cell_weight};
use crate::exact::{bernoulli, binomial, faulhaber, odd_power_sum, tseries_log_one_plus, NPoly, Rational, TSeries};

/// Matrix size: a concrete integer, or the symbol `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Size {
    Concrete(u64),
    Symbolic,
}

impl Size {
    /// `(factor * N)^power` as a polynomial (constant when concrete).
    pub fn power(self, factor: i64, power: u32) -> NPoly {
        match self {
            Size::Symbolic => NPoly::monomial(Rational::from(factor).pow(power as i32), power as usize),
            Size::Concrete(n) => NPoly::constant(Rational::from_integer(BigInt::from(factor) * n).pow(power as i32)),
        }
    }

    /// Specialises a polynomial in `N` to this size.
    fn specialise(self, p: NPoly) -> NPoly {
        match self {
            Size::Symbolic => p,
            Size::Concrete(n) => NPoly::constant(p.eval_int(n as i64)),
        }
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Size::Concrete(n) => write!(f, "{n}"),
            Size::Symbolic => f.write_str("sym"),
        }
    }
}

impl FromStr for Size {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "sym" {
            return Ok(Size::Symbolic);
        }
        match s.parse::<u64>() {
            Ok(n) if n >= 1 => Ok(Size::Concrete(n)),
            _ => Err(Error::Parse(format!(
                "matrix size must be a positive integer or `sym`, got {s:?}"
            ))),
        }
    }
}

/// Sign convention for the Stirling prefactor of the closed-form partition function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// The prefactor exactly as written, whose logarithm carries minus the Bernoulli tail.
    AsPrinted,
    /// The reciprocal prefactor, whose logarithm carries plus the Bernoulli tail.
    Reciprocal,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::AsPrinted, Orientation::Reciprocal];
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::AsPrinted => "as_printed",
            Orientation::Reciprocal => "reciprocal",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as_printed" | "as-printed" => Ok(Orientation::AsPrinted),
            "reciprocal" => Ok(Orientation::Reciprocal),
            _ => Err(Error::Parse(format!("unknown orientation {s:?}"))),
        }
    }
}

/// Catalogue of generating functions; each maps to one builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelId {
    HermitianTriple,
    SymplecticTriple,
    HermitianGf,
    SymplecticGf,
    OrthogonalGf,
    NonorientableProduct,
    NonorientableGf,
    PennerClosedForm(Orientation),
    StirlingTail,
}

/// Builds the series for `model`.
pub fn build(model: ModelId, size: Size, order: usize) -> Result<TSeries> {
    match model {
        ModelId::HermitianTriple => free_energy_series(1, size, order),
        ModelId::SymplecticTriple => free_energy_series(2, size, order),
        ModelId::HermitianGf => Ok(hermitian_gf_series(size, order)),
        ModelId::SymplecticGf => Ok(symplectic_gf_series(size, order)),
        ModelId::OrthogonalGf => Ok(orthogonal_gf_series(size, order)),
        ModelId::NonorientableProduct => Ok(nonorientable_product_series(size, order)),
        ModelId::NonorientableGf => Ok(nonorientable_gf_series(size, order)),
        ModelId::PennerClosedForm(o) => penner_closed_form_series(size, order, o),
        ModelId::StirlingTail => Ok(stirling_tail_series(order)),
    }
}

/// `sum_{m, 2m-1 <= order} B_{2m} / (2m(2m-1)) t^{2m-1}`.
///
/// The power tail of `log Gamma(1/t)` once `-(1/t) log t - 1/t + (1/2) log t`
/// and the constant are removed.
pub fn stirling_tail_series(order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for m in 1.. {
        let power = 2 * m - 1;
        if power > order {
            break;
        }
        let m = m as i64;
        let c = bernoulli(2 * m as usize) / Rational::from(2 * m * (2 * m - 1));
        s.add_to(power, &NPoly::constant(c));
    }
    s
}

/// The triple-sum free energy for integer `alpha`:
///
/// `N sum_m B_{2m}/(2m(2m-1)) t^{2m-1}
///   + sum_m (-1)^{m-1}/m [sum_{i=0}^{N-1} sum_{j=1}^{alpha} (N-1-i)(i alpha + j)^m] t^m`.
///
/// Concrete sizes sum the inner `i`, `j` directly; the symbolic size expands
/// `(i alpha + j)^m` binomially and closes each `i`-sum with Faulhaber.
pub fn free_energy_series(alpha: u32, size: Size, order: usize) -> Result<TSeries> {
    if !(1..=2).contains(&alpha) {
        return Err(Error::InvalidArgument(format!("alpha must be 1 or 2, got {alpha}")));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let mut s = stirling_tail_series(order).scale_poly(&size.power(1, 1));
    let inner = match size {
        Size::Concrete(n) => inner_sums_direct(alpha, n, order),
        Size::Symbolic => inner_sums_symbolic(alpha, order)?,
    };
    for (m, poly) in inner.into_iter().enumerate().skip(1) {
        let c = Rational::sign_power(m as i64 - 1) / Rational::from(m as i64);
        s.add_to(m, &poly.scale(&c));
    }
    Ok(s)
}

/// `[_, S_1, ..., S_order]` with `S_m = sum_i sum_j (N-1-i)(i alpha + j)^m` at concrete `N`.
fn inner_sums_direct(alpha: u32, n: u64, order: usize) -> Vec<NPoly> {
    let mut sums = vec![BigInt::from(0); order + 1];
    for i in 0..n {
        let weight = BigInt::from(n - 1 - i);
        if weight == BigInt::from(0) {
            continue;
        }
        for j in 1..=alpha as u64 {
            let base = BigInt::from(i * alpha as u64 + j);
            let mut power = weight.clone();
            for slot in sums.iter_mut().skip(1) {
                power *= &base;
                *slot += &power;
            }
        }
    }
    sums.into_iter()
        .map(|s| NPoly::constant(Rational::from_integer(s)))
        .collect()
}

/// Symbolic counterpart of [`inner_sums_direct`].
fn inner_sums_symbolic(alpha: u32, order: usize) -> Result<Vec<NPoly>> {
    // prefix[r] = sum_{i=0}^{N-1} i^r
    let n = NPoly::n();
    let mut prefix = vec![n.clone()];
    for r in 1..=(order as u32 + 1) {
        prefix.push(&faulhaber(r)? - &NPoly::monomial(Rational::one(), r as usize));
    }
    let n_minus_one = &n - &NPoly::one();
    // weighted[r] = sum_{i=0}^{N-1} (N-1-i) i^r
    let weighted: Vec<NPoly> = (0..=order)
        .map(|r| &(&n_minus_one * &prefix[r]) - &prefix[r + 1])
        .collect();

    let alpha_r = Rational::from(alpha as i64);
    let mut out = vec![NPoly::zero(); order + 1];
    for (m, slot) in out.iter_mut().enumerate().skip(1) {
        let mut acc = NPoly::zero();
        for (r, w) in weighted.iter().enumerate().take(m + 1) {
            let mut c = Rational::zero();
            for j in 1..=alpha as i64 {
                c += &Rational::from(j).pow((m - r) as i32);
            }
            c *= &(Rational::from_integer(binomial(m as u64, r as u64)) * alpha_r.pow(r as i32));
            acc = &acc + &w.scale(&c);
        }
        *slot = acc;
    }
    Ok(out)
}

/// Hermitian generating function
/// `sum_{2-2g-n<0} (2g+n-3)!(2g-1)/((2g)! n!) B_{2g} N^n (-t)^{2g+n-2}`.
pub fn hermitian_gf_series(size: Size, order: usize) -> TSeries {
    complex_double_sum(size, 1, order)
}

/// The hermitian double sum with `N` replaced by `factor * N`.
fn complex_double_sum(size: Size, factor: i64, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for k in 1..=order as u32 {
        // n = k + 2 - 2g >= 1, and n >= 3 when g = 0
        for g in 0..=k.div_ceil(2) {
            let n = k + 2 - 2 * g;
            if n == 0 || 2 * g + n <= 2 {
                continue;
            }
            let c = complex_cell_weight(g, n) * Rational::sign_power(k as i64);
            s.add_to(k as usize, &size.power(factor, n).scale(&c));
        }
    }
    s
}

/// `sum_{1-2q-n<0} (2q+n-2)!(2^{2q-1}-1)/((2q)! n!) B_{2q} (2N)^n (-t)^{2q+n-1}`,
/// which equals `log prod_{p odd} (1 + p t)`.
fn real_double_sum(size: Size, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for k in 1..=order as u32 {
        // n = k + 1 - 2q >= 1, and n >= 2 when q = 0
        for q in 0..=k / 2 {
            let n = k + 1 - 2 * q;
            if n == 0 || 2 * q + n <= 1 {
                continue;
            }
            let c = real_cell_weight(q, n) * Rational::sign_power(k as i64);
            s.add_to(k as usize, &size.power(2, n).scale(&c));
        }
    }
    s
}

/// `1/2 A - 1/2 B` with `A` the hermitian sum at size `2N` and `B` the real double sum.
pub fn symplectic_gf_series(size: Size, order: usize) -> TSeries {
    let half = Rational::new(1, 2);
    complex_double_sum(size, 2, order)
        .sub(&real_double_sum(size, order))
        .scale(&half)
}

/// `1/2 A + 1/2 B`; the orthogonal model is defined by this double sum.
pub fn orthogonal_gf_series(size: Size, order: usize) -> TSeries {
    let half = Rational::new(1, 2);
    complex_double_sum(size, 2, order)
        .add(&real_double_sum(size, order))
        .scale(&half)
}

/// `log prod_{p odd, 1..2N-1} (1 + p t) = sum_m (-1)^{m-1}/m Q_m(N) t^m`.
pub fn nonorientable_product_series(size: Size, order: usize) -> TSeries {
    let mut s = TSeries::zero(order);
    for m in 1..=order {
        let q = odd_power_sum(m as u32).expect("m >= 1");
        let c = Rational::sign_power(m as i64 - 1) / Rational::from(m as i64);
        s.add_to(m, &size.specialise(q).scale(&c));
    }
    s
}

/// Sum of `log(1 + p t)` over odd `p <= 2N - 1`, one Mercator series per factor.
pub fn nonorientable_product_by_factors(n: u64, order: usize) -> TSeries {
    (0..n)
        .map(|k| tseries_log_one_plus(&Rational::from(2 * k as i64 + 1), order))
        .fold(TSeries::zero(order), |acc, s| acc.add(&s))
}

/// `-1/2` times the real double sum: the expansion of `log prod_{p odd}(1 + p t)^{-1/2}`.
pub fn nonorientable_gf_series(size: Size, order: usize) -> TSeries {
    real_double_sum(size, order).scale(&Rational::new(-1, 2))
}

/// Series part of the logarithm of the closed-form partition function:
/// `+/- N * tail + sum_{p=1}^{N} (N - p) log(1 + p t)`.
///
/// The logarithm of the Stirling prefactor contributes `-tail` as printed and
/// `+tail` for the reciprocal; its constant, `log t` and `1/t` pieces cancel
/// against the Stirling formula and are not modelled.
pub fn penner_closed_form_series(size: Size, order: usize, orientation: Orientation) -> Result<TSeries> {
    let n = match size {
        Size::Concrete(n) => n,
        Size::Symbolic => return Err(Error::SymbolicSize),
    };
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let sign = match orientation {
        Orientation::AsPrinted => -Rational::one(),
        Orientation::Reciprocal => Rational::one(),
    };
    let mut s = stirling_tail_series(order).scale(&(sign * Rational::from(n as i64)));
    for p in 1..=n {
        let log = tseries_log_one_plus(&Rational::from(p as i64), order);
        s = s.add(&log.scale(&Rational::from((n - p) as i64)));
    }
    Ok(s)
}
