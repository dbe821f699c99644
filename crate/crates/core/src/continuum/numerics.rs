use super::summation::{blocked_sum, CompensatedSum};
use crate::error::{Error, Result};
use crate::euler_char::{chi_real_unpunctured, real_cell_weight};
use crate::exact::bernoulli;

/// A finite-`N` point on the double-scaling trajectory `mu = 2N(1 - t)`.
///
/// Both `t` and `1 - t = mu/(2N)` are stored so that neither has to be
/// recovered from the other by cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingPoint {
    n: u64,
    mu: f64,
    t: f64,
    one_minus_t: f64,
}

impl ScalingPoint {
    /// Requires `0 < mu < 2N`, hence `0 < t < 1`.
    pub fn new(n: u64, mu: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("matrix size must be positive".into()));
        }
        let two_n = 2.0 * n as f64;
        if !(mu.is_finite() && mu > 0.0 && mu < two_n) {
            return Err(Error::Domain(format!("need 0 < mu < 2N = {two_n}, got mu = {mu}")));
        }
        let one_minus_t = mu / two_n;
        let point = ScalingPoint {
            n,
            mu,
            t: 1.0 - one_minus_t,
            one_minus_t,
        };
        // the largest odd p gives the smallest log argument
        if point.log_argument(2 * n - 1) <= 0.0 {
            return Err(Error::Domain(format!(
                "log argument not positive at N = {n}, mu = {mu}"
            )));
        }
        Ok(point)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn one_minus_t(&self) -> f64 {
        self.one_minus_t
    }

    /// `1 - p t / (2N)`.
    fn log_argument(&self, p: u64) -> f64 {
        let two_n = 2.0 * self.n as f64;
        ((2 * self.n - p) as f64 + p as f64 * self.one_minus_t) / two_n
    }

    /// `log(1 - p t / (2N))`, switching formulas so neither small nor large
    /// `p` loses digits.
    fn log_factor(&self, p: u64) -> f64 {
        let x = p as f64 * self.t / (2.0 * self.n as f64);
        if x < 0.5 {
            (-x).ln_1p()
        } else {
            self.log_argument(p).ln()
        }
    }
}

fn check_open_unit(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("need 0 < t < 1, got t = {t}")))
    }
}

/// Genus-zero resummation `(N/2) [1 + ((1-t)/t) log(1-t)]`.
pub fn genus_zero_closed(n: u64, t: f64) -> Result<f64> {
    check_open_unit(t)?;
    Ok(n as f64 / 2.0 * (1.0 + (1.0 - t) / t * (-t).ln_1p()))
}

/// [`genus_zero_closed`] at a scaling point, using the stored `1 - t`.
pub fn genus_zero_at(point: &ScalingPoint) -> f64 {
    let u = point.one_minus_t;
    point.n as f64 / 2.0 * (1.0 + u / point.t * u.ln())
}

/// `(N/2) sum_{n=2}^{n_max} t^{n-1} / (n(n-1))`.
pub fn genus_zero_partial_sum(n: u64, t: f64, n_max: u32) -> Result<f64> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::Domain(format!("need 0 <= t < 1, got t = {t}")));
    }
    let sum: CompensatedSum = (2..=n_max)
        .map(|k| t.powi(k as i32 - 1) / (k as f64 * (k - 1) as f64))
        .collect();
    Ok(n as f64 / 2.0 * sum.value())
}

/// `-chi^r(M_{2q,0}) x^{1-2q}`, the genus-`2q` term as a function of the scaling argument `x`.
pub fn higher_genus_term_scaled(q: u32, x: f64) -> Result<f64> {
    let chi = chi_real_unpunctured(q)?;
    Ok(-chi.to_f64() * x.powi(1 - 2 * q as i32))
}

/// Genus-`2q` term after summing punctures: `-chi^r(M_{2q,0}) (2N(1-t)/t)^{1-2q}`.
pub fn higher_genus_term(q: u32, n: u64, t: f64) -> Result<f64> {
    if q == 0 {
        return Err(Error::InvalidArgument("higher genus term needs q >= 1".into()));
    }
    check_open_unit(t)?;
    higher_genus_term_scaled(q, 2.0 * n as f64 * (1.0 - t) / t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PunctureResummation {
    pub partial: f64,
    pub closed: f64,
    pub error: f64,
    /// Set when `2N t >= 1`, outside the guaranteed convergence window.
    pub warning: Option<String>,
}

/// Sums the genus-`2q` tower of the non-orientable double sum over
/// punctures `n = 0..=n_max` after `t -> -t/(2N)`, and compares it with
/// [`higher_genus_term`].
///
/// The `n = 0` cell (no marked points) is part of the tower: the closed form
/// is the full sum `sum_{n>=0}`, and without that cell the two differ by
/// `chi^r(M_{2q,0}) (t/2N)^{2q-1}`.
pub fn puncture_resummation_check(q: u32, n: u64, t: f64, n_max: u32) -> Result<PunctureResummation> {
    let closed = higher_genus_term(q, n, t)?;
    let two_n = 2.0 * n as f64;
    let prefactor = two_n.powi(1 - 2 * q as i32);
    let partial: CompensatedSum = (0..=n_max)
        .map(|k| {
            let weight = real_cell_weight(q, k).to_f64();
            -0.5 * weight * prefactor * t.powi((2 * q + k) as i32 - 1)
        })
        .collect();
    let partial = partial.value();
    let warning = (two_n * t >= 1.0).then(|| format!("2N*t = {} >= 1: puncture sum may not converge", two_n * t));
    Ok(PunctureResummation {
        partial,
        closed,
        error: (partial - closed).abs(),
        warning,
    })
}

/// `E(N, mu) = -1/2 sum_{p odd, 1..2N-1} log(1 - p t/(2N))`, with compensated
/// summation in a fixed blocked order.
pub fn double_scaling_eval(point: &ScalingPoint) -> f64 {
    -0.5 * blocked_sum(point.n, |k| point.log_factor(2 * k + 1))
}

/// Serial reference for [`double_scaling_eval`].
pub fn double_scaling_eval_serial(point: &ScalingPoint) -> f64 {
    let sum: CompensatedSum = (0..point.n).map(|k| point.log_factor(2 * k + 1)).collect();
    -0.5 * sum.value()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualCheck {
    pub point: ScalingPoint,
    pub q_max: u32,
    /// `E(N, mu)` minus the exact genus-zero resummation.
    pub residual: f64,
    /// `sum_{q=1}^{q_max}` of the higher-genus terms at argument `mu/t`.
    pub target: f64,
    pub abs_error: f64,
}

/// Compares the finite-`N` non-orientable free energy with genus zero
/// removed against the truncated continuum tail.
pub fn double_scaling_residual(point: &ScalingPoint, q_max: u32) -> Result<ResidualCheck> {
    if q_max == 0 {
        return Err(Error::InvalidArgument("q_max must be at least 1".into()));
    }
    let residual = double_scaling_eval(point) - genus_zero_at(point);
    let x = point.mu / point.t;
    let mut target = CompensatedSum::new();
    for q in 1..=q_max {
        target.add(higher_genus_term_scaled(q, x)?);
    }
    let target = target.value();
    Ok(ResidualCheck {
        point: *point,
        q_max,
        residual,
        target,
        abs_error: (residual - target).abs(),
    })
}

/// `(1 + y) log(1 + y) - y`, accurate near `y = 0`.
fn entropy_like(y: f64) -> f64 {
    if y.abs() < 1e-4 {
        // y^2/2 - y^3/6 + y^4/12 - y^5/20
        let y2 = y * y;
        y2 * (0.5 - y / 6.0 + y2 / 12.0 - y2 * y / 20.0)
    } else {
        (1.0 + y) * y.ln_1p() - y
    }
}

/// Euler-Maclaurin approximation of `sum_{p=lo}^{hi} log(1 + p t)`:
/// boundary average, integral, and `k_max` Bernoulli corrections
/// `B_{2k}/(2k)! [f^{(2k-1)}(hi) - f^{(2k-1)}(lo)]`.
pub fn euler_maclaurin_log_sum(lo: i64, hi: i64, t: f64, k_max: u32) -> Result<f64> {
    if hi < lo {
        return Err(Error::InvalidArgument(format!("need lo <= hi, got {lo} > {hi}")));
    }
    if k_max < 1 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let (a, b) = (1.0 + lo as f64 * t, 1.0 + hi as f64 * t);
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "log(1 + p t) needs 1 + p t > 0 on [{lo}, {hi}] at t = {t}"
        )));
    }
    let f = |x: i64| (x as f64 * t).ln_1p();
    if hi == lo {
        return Ok(f(lo));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let mut acc = CompensatedSum::new();
    acc.add(0.5 * (f(lo) + f(hi)));
    acc.add((entropy_like(hi as f64 * t) - entropy_like(lo as f64 * t)) / t);
    for k in 1..=k_max {
        let j = 2 * k as i32 - 1;
        // f^{(2k-1)}(x) = (2k-2)! t^{2k-1} (1 + x t)^{-(2k-1)}, folded with B_{2k}/(2k)!
        let c = bernoulli(2 * k as usize).to_f64() / (2.0 * k as f64 * (2 * k - 1) as f64);
        acc.add(c * t.powi(j) * (b.powi(-j) - a.powi(-j)));
    }
    Ok(acc.value())
}
