//! Exact arithmetic: rationals, Bernoulli numbers, power sums and the two
//! series algebras everything else is built on.

mod bernoulli;
mod combinatorics;
mod museries;
mod npoly;
mod powersum;
mod rational;
mod tseries;

pub use bernoulli::bernoulli;
pub use combinatorics::{binomial, factorial};
pub use museries::{mu_differentiate, mu_integrate, MuSeries, MuTerm};
pub use npoly::NPoly;
pub use powersum::{faulhaber, odd_power_sum};
pub use rational::Rational;
pub use tseries::{tseries_log_one_plus, TSeries};
