//! Continuum limits: exact series in `mu` and double-scaling numerics.

mod numerics;
mod series;
mod summation;

pub use numerics::{
    double_scaling_eval, double_scaling_eval_serial, double_scaling_residual, euler_maclaurin_log_sum, genus_zero_at,
    genus_zero_closed, genus_zero_partial_sum, higher_genus_term, higher_genus_term_scaled, puncture_resummation_check,
    PunctureResummation, ResidualCheck, ScalingPoint,
};
pub use series::{
    combined_continuum, density_of_states_series, nonorientable_continuum, penner_continuum, published_continuum,
    wick_rotate, ContinuumModel, ContinuumSeries,
};
pub use summation::{blocked_sum, CompensatedSum, BLOCK};
