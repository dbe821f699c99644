//! C ABI for `penner-core`.
//!
//! Every fallible call returns a [`PennerStatus`] and writes its result
//! through an out-pointer. On failure `penner_last_error_message` describes
//! what went wrong on the calling thread. Handles are opaque and must be
//! released with their `_free` function; strings returned by the library
//! are released with [`penner_string_free`].
//!
//! Matrix sizes are passed as `uint64_t`; [`PENNER_SYMBOLIC_SIZE`] (zero)
//! selects a symbolic `N`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use penner_core::cli::{serialize_museries, serialize_report, serialize_tseries};
use penner_core::continuum::{combined_continuum, double_scaling_residual, nonorientable_continuum, penner_continuum};
use penner_core::continuum::{ContinuumModel, ScalingPoint};
use penner_core::euler_char::{chi_complex, chi_real};
use penner_core::penner::{build, verify_identity, Identity, ModelId, Orientation, Size, VerificationReport};
use penner_core::{Error, MuSeries, TSeries};

/// Pass as the size to work with a symbolic matrix size `N`.
pub const PENNER_SYMBOLIC_SIZE: u64 = 0;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PennerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Input outside the mathematical domain (unstable cell, mu >= 2N, ...).
    Domain = 3,
    /// The operation needs a concrete matrix size.
    SymbolicSize = 4,
    Parse = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PennerModel {
    HermitianTriple = 0,
    SymplecticTriple = 1,
    Hermitian = 2,
    Symplectic = 3,
    Orthogonal = 4,
    NonorientableProduct = 5,
    NonorientableGf = 6,
    ClosedFormAsPrinted = 7,
    ClosedFormReciprocal = 8,
    StirlingTail = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PennerChiKind {
    Complex = 0,
    Real = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PennerContinuum {
    Penner = 0,
    Nonorientable = 1,
    Symplectic = 2,
    Orthogonal = 3,
}

/// Outcome of a double-scaling comparison.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PennerResidual {
    pub n: u64,
    pub mu: f64,
    pub t: f64,
    pub q_max: u32,
    pub residual: f64,
    pub target: f64,
    pub abs_error: f64,
}

/// Opaque truncated series in `t`.
pub struct PennerTSeries(TSeries);

/// Opaque series in `mu`, with any notes produced while building it.
pub struct PennerMuSeries {
    series: MuSeries,
    notes: Vec<String>,
}

/// Opaque identity-verification report.
pub struct PennerReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PennerStatus {
    match e {
        Error::Stability { .. } | Error::RealRange { .. } | Error::Domain(_) | Error::UnsupportedTerm { .. } => {
            PennerStatus::Domain
        }
        Error::InvalidArgument(_) => PennerStatus::InvalidArgument,
        Error::SymbolicSize => PennerStatus::SymbolicSize,
        Error::Parse(_) => PennerStatus::Parse,
    }
}

struct Failure(PennerStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status plus last-error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PennerStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            PennerStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic caught at the C boundary".into());
            PennerStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PennerStatus::NullPointer, format!("{what} is null"))
}

/// Writes `value` through `out`, which the caller guarantees is valid when non-null.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn size_of(n: u64) -> Size {
    if n == PENNER_SYMBOLIC_SIZE {
        Size::Symbolic
    } else {
        Size::Concrete(n)
    }
}

/// Boxes `value` into `out`; nothing is allocated when `out` is null.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Hands `s` to the caller as a C string, to be released with `penner_string_free`.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(CString::new(s).expect("serialized text has no nul bytes").into_raw());
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL after a
/// success. Owned by the library; valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn penner_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn penner_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Euler characteristic as an exact `"num/den"` string.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_chi(
    kind: PennerChiKind,
    genus_index: u32,
    punctures: u32,
    out: *mut *mut c_char,
) -> PennerStatus {
    guard(|| {
        let value = match kind {
            PennerChiKind::Complex => chi_complex(genus_index, punctures)?,
            PennerChiKind::Real => chi_real(genus_index, punctures)?,
        };
        write_string(out, value.to_string())
    })
}

/// Builds a generating function to order `order`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_tseries_build(
    model: PennerModel,
    size: u64,
    order: usize,
    out: *mut *mut PennerTSeries,
) -> PennerStatus {
    guard(|| {
        let id = match model {
            PennerModel::HermitianTriple => ModelId::HermitianTriple,
            PennerModel::SymplecticTriple => ModelId::SymplecticTriple,
            PennerModel::Hermitian => ModelId::HermitianGf,
            PennerModel::Symplectic => ModelId::SymplecticGf,
            PennerModel::Orthogonal => ModelId::OrthogonalGf,
            PennerModel::NonorientableProduct => ModelId::NonorientableProduct,
            PennerModel::NonorientableGf => ModelId::NonorientableGf,
            PennerModel::ClosedFormAsPrinted => ModelId::PennerClosedForm(Orientation::AsPrinted),
            PennerModel::ClosedFormReciprocal => ModelId::PennerClosedForm(Orientation::Reciprocal),
            PennerModel::StirlingTail => ModelId::StirlingTail,
        };
        let series = build(id, size_of(size), order)?;
        write_handle(out, PennerTSeries(series))
    })
}

/// Truncation order of a series; 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn penner_tseries_order(s: *const PennerTSeries) -> usize {
    s.as_ref().map_or(0, |s| s.0.order())
}

/// Series as JSON; free the string with [`penner_string_free`].
///
/// # Safety
/// `s` must be NULL or a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_tseries_to_json(s: *const PennerTSeries, out: *mut *mut c_char) -> PennerStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("series"))?;
        write_string(out, serialize_tseries(&s.0))
    })
}

/// # Safety
/// `s` must be NULL or a handle from [`penner_tseries_build`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn penner_tseries_free(s: *mut PennerTSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Verifies the identity named by `identity` (CLI token such as `"eq17"`).
///
/// # Safety
/// `identity` must be a NUL-terminated string; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_verify(
    identity: *const c_char,
    size: u64,
    order: usize,
    out: *mut *mut PennerReport,
) -> PennerStatus {
    guard(|| {
        if identity.is_null() {
            return Err(null("identity"));
        }
        let token = CStr::from_ptr(identity)
            .to_str()
            .map_err(|_| Failure(PennerStatus::Parse, "identity is not UTF-8".into()))?;
        let identity: Identity = token.parse()?;
        let report = verify_identity(identity, size_of(size), order)?;
        write_handle(out, PennerReport(report))
    })
}

/// Whether every coefficient matched; false for NULL.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn penner_report_matched(r: *const PennerReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.matched)
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn penner_report_mismatch_count(r: *const PennerReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.mismatches.len())
}

/// # Safety
/// `r` must be NULL or a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_report_to_json(r: *const PennerReport, out: *mut *mut c_char) -> PennerStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        write_string(out, serialize_report(&r.0))
    })
}

/// # Safety
/// `r` must be NULL or a handle from [`penner_verify`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn penner_report_free(r: *mut PennerReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Continuum free energy; `g_max` is used by the orientable part, `k_max`
/// by the non-orientable part.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_continuum_build(
    model: PennerContinuum,
    g_max: u32,
    k_max: u32,
    out: *mut *mut PennerMuSeries,
) -> PennerStatus {
    guard(|| {
        let (series, notes) = match model {
            PennerContinuum::Penner => (penner_continuum(g_max)?, Vec::new()),
            PennerContinuum::Nonorientable => (nonorientable_continuum(k_max)?, Vec::new()),
            PennerContinuum::Symplectic => {
                let c = combined_continuum(ContinuumModel::Symplectic, g_max, k_max)?;
                (c.series, c.notes)
            }
            PennerContinuum::Orthogonal => {
                let c = combined_continuum(ContinuumModel::Orthogonal, g_max, k_max)?;
                (c.series, c.notes)
            }
        };
        write_handle(out, PennerMuSeries { series, notes })
    })
}

/// Number of terms; 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn penner_museries_len(s: *const PennerMuSeries) -> usize {
    s.as_ref().map_or(0, |s| s.series.len())
}

/// Number of discrepancy notes; 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn penner_museries_note_count(s: *const PennerMuSeries) -> usize {
    s.as_ref().map_or(0, |s| s.notes.len())
}

/// # Safety
/// `s` must be NULL or a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_museries_to_json(s: *const PennerMuSeries, out: *mut *mut c_char) -> PennerStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("series"))?;
        write_string(out, serialize_museries(&s.series, &s.notes))
    })
}

/// # Safety
/// `s` must be NULL or a handle from [`penner_continuum_build`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn penner_museries_free(s: *mut PennerMuSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Finite-`N` non-orientable free energy at `mu` against its continuum tail.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn penner_double_scaling(n: u64, mu: f64, q_max: u32, out: *mut PennerResidual) -> PennerStatus {
    guard(|| {
        let point = ScalingPoint::new(n, mu)?;
        let c = double_scaling_residual(&point, q_max)?;
        write_out(
            out,
            PennerResidual {
                n,
                mu,
                t: point.t(),
                q_max,
                residual: c.residual,
                target: c.target,
                abs_error: c.abs_error,
            },
        )
    })
}
