//! Generating functions of the Penner models as truncated `t`-series, and
//! exact checks of the identities relating them.
//!
//! The triple-sum free energy is the reference object; every other
//! construction is compared against it or against each other.

mod builders;
mod verify;

pub use builders::{
    build, free_energy_series, hermitian_gf_series, nonorientable_gf_series, nonorientable_product_by_factors,
    nonorientable_product_series, orthogonal_gf_series, penner_closed_form_series, stirling_tail_series,
    symplectic_gf_series, ModelId, Orientation, Size,
};
pub use verify::{
    closed_form_orientation, compare, verify_identity, Identity, Mismatch, OrientationFinding, VerificationReport,
};
