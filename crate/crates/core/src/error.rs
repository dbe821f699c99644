use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `(g, n)` lies outside the stable window of the complex moduli space.
    #[error("unstable complex cell (g = {g}, n = {n}): 2 - 2g - n must be negative")]
    Stability { g: u32, n: u32 },

    /// `(q, n)` lies outside the window of the real moduli space.
    #[error("real cell out of range (q = {q}, n = {n}): 1 - 2q - n must be negative")]
    RealRange { q: u32, n: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A floating-point evaluation was requested outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported term mu^{mu_power} (log mu)^{log_power}: {reason}")]
    UnsupportedTerm {
        mu_power: i64,
        log_power: u8,
        reason: &'static str,
    },

    #[error("operation needs a concrete matrix size, got symbolic N")]
    SymbolicSize,

    #[error("parse error: {0}")]
    Parse(String),
}
