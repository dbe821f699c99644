//! Exact generating functions and continuum limits of the unitary, symplectic
//! and orthogonal Penner matrix models.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rationals, Bernoulli numbers, power sums, and the two series
//!   algebras (`TSeries` in the coupling `t` with polynomial-in-`N`
//!   coefficients, `MuSeries` in the scaling variable `mu` with log terms).
//! - [`euler_char`]: closed-form orbifold Euler characteristics of complex and
//!   real moduli spaces, punctured and unpunctured.
//! - [`penner`]: builders for every generating function and the identity
//!   checker that compares them coefficient by coefficient.
//! - [`continuum`]: double-scaling series in `mu` and the floating-point
//!   checks of the continuum limit.
//! - [`cli`]: the `penner` command line and its JSON/CSV formats.

pub mod cli;
pub mod continuum;
pub mod error;
pub mod euler_char;
pub mod exact;
pub mod penner;

pub use error::{Error, Result};
pub use exact::{bernoulli, MuSeries, MuTerm, NPoly, Rational, TSeries};
