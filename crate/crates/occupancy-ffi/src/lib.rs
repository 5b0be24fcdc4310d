//! C ABI for the occupancy crate.
//!
//! Conventions:
//! - every fallible call returns an [`OccStatus`] and writes results
//!   through out-pointers;
//! - exact counts cross the boundary as decimal strings allocated by this
//!   library and released with [`occ_string_free`];
//! - MaxProb results live behind the opaque handle [`OccMaxProb`],
//!   released with [`occ_maxprob_free`];
//! - occupancy vectors are `uint64_t` arrays; the D:I statistics accept
//!   any ordering and zeros (they canonicalize internally), the
//!   multinomial statistic takes the slots as given.
//!
//! The generated header is written to `include/occupancy.h` at build time.

use std::ffi::{c_char, CString};

use occupancy::entropy::{
    entropy_exact_di, entropy_exact_di_degenerate, entropy_shannon, ProbabilityVector,
};
use occupancy::exact;
use occupancy::maxprob::{
    maxprob_di, maxprob_di_degenerate, maxprob_multinomial, SearchError, SearchLimits,
};
use occupancy::realization::{OrderedOccupancy, Realization};
use occupancy::weights::{weight_di, weight_di_degenerate, weight_multinomial, DegenerateSpec};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OccStatus {
    Ok = 0,
    /// A pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a precondition (empty realization, g = 0, ...).
    InvalidArgument = 2,
    /// Input exceeds a size guard or the enumeration cap.
    LimitExceeded = 3,
    /// Index out of range.
    OutOfRange = 4,
}

/// Statistic selector for [`occ_maxprob_run`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OccStatistic {
    /// Distinguishable states (ordered occupancies).
    Multinomial = 0,
    /// Indistinguishable states.
    DI = 1,
    /// Indistinguishable states with g sub-states each.
    DIDegenerate = 2,
}

/// Opaque MaxProb result handle.
pub struct OccMaxProb {
    maxima: Vec<Vec<u64>>,
    weight: String,
    probability: f64,
    entropy: f64,
    total_weight: String,
}

fn write_string(out: *mut *mut c_char, value: String) -> OccStatus {
    if out.is_null() {
        return OccStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            OccStatus::Ok
        }
        Err(_) => OccStatus::InvalidArgument,
    }
}

/// # Safety
/// `parts` must point to `len` readable u64 values when non-null.
unsafe fn slice_arg<'a>(parts: *const u64, len: usize) -> Option<&'a [u64]> {
    if parts.is_null() && len > 0 {
        return None;
    }
    if len == 0 {
        return Some(&[]);
    }
    Some(unsafe { std::slice::from_raw_parts(parts, len) })
}

fn canonical(parts: &[u64]) -> Result<Realization, OccStatus> {
    let r = Realization::canonicalize(parts, parts.len() as u64)
        .map_err(|_| OccStatus::InvalidArgument)?;
    if exact::guard(r.n_total(), exact::DEFAULT_MAX_N).is_err() {
        return Err(OccStatus::LimitExceeded);
    }
    Ok(r)
}

/// Stirling number of the second kind `{n, k}` as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer; the result string must be released with
/// [`occ_string_free`].
#[no_mangle]
pub unsafe extern "C" fn occ_stirling2(n: u64, k: u64, out: *mut *mut c_char) -> OccStatus {
    if exact::guard(n, exact::DEFAULT_MAX_N).is_err() {
        return OccStatus::LimitExceeded;
    }
    write_string(out, exact::stirling2(n, k).to_string())
}

/// Incomplete Bell number `B(n, s)` as a decimal string.
///
/// # Safety
/// As [`occ_stirling2`].
#[no_mangle]
pub unsafe extern "C" fn occ_bell_incomplete(n: u64, s: u64, out: *mut *mut c_char) -> OccStatus {
    if exact::guard(n, exact::DEFAULT_MAX_N).is_err() {
        return OccStatus::LimitExceeded;
    }
    write_string(out, exact::bell_incomplete(n, s).to_string())
}

/// D:I weight of the occupancy multiset `parts[0..len]`.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn occ_weight_di(
    parts: *const u64,
    len: usize,
    out: *mut *mut c_char,
) -> OccStatus {
    let Some(parts) = (unsafe { slice_arg(parts, len) }) else {
        return OccStatus::NullPointer;
    };
    match canonical(parts) {
        Ok(r) => write_string(out, weight_di(&r).to_string()),
        Err(status) => status,
    }
}

/// Equally degenerate D:I weight with `g` sub-states per state.
///
/// # Safety
/// As [`occ_weight_di`].
#[no_mangle]
pub unsafe extern "C" fn occ_weight_di_degenerate(
    parts: *const u64,
    len: usize,
    g: u64,
    out: *mut *mut c_char,
) -> OccStatus {
    let Some(parts) = (unsafe { slice_arg(parts, len) }) else {
        return OccStatus::NullPointer;
    };
    let Ok(spec) = DegenerateSpec::new(g) else {
        return OccStatus::InvalidArgument;
    };
    match canonical(parts) {
        Ok(r) => write_string(out, weight_di_degenerate(&r, spec).to_string()),
        Err(status) => status,
    }
}

/// Multinomial weight of the ordered occupancy `slots[0..len]`.
///
/// # Safety
/// As [`occ_weight_di`].
#[no_mangle]
pub unsafe extern "C" fn occ_weight_multinomial(
    slots: *const u64,
    len: usize,
    out: *mut *mut c_char,
) -> OccStatus {
    let Some(slots) = (unsafe { slice_arg(slots, len) }) else {
        return OccStatus::NullPointer;
    };
    let Ok(occ) = OrderedOccupancy::new(slots.to_vec()) else {
        return OccStatus::InvalidArgument;
    };
    if exact::guard(occ.n_total(), exact::DEFAULT_MAX_N).is_err() {
        return OccStatus::LimitExceeded;
    }
    write_string(out, weight_multinomial(&occ).to_string())
}

/// Exact D:I entropy `(1/N) ln W` of the occupancy multiset, in nats.
///
/// # Safety
/// As [`occ_weight_di`]; `out` receives the entropy.
#[no_mangle]
pub unsafe extern "C" fn occ_entropy_di(
    parts: *const u64,
    len: usize,
    out: *mut f64,
) -> OccStatus {
    let Some(parts) = (unsafe { slice_arg(parts, len) }) else {
        return OccStatus::NullPointer;
    };
    if out.is_null() {
        return OccStatus::NullPointer;
    }
    match canonical(parts) {
        Ok(r) => {
            unsafe { *out = entropy_exact_di(&r).nats() };
            OccStatus::Ok
        }
        Err(status) => status,
    }
}

/// Exact equally degenerate D:I entropy, in nats.
///
/// # Safety
/// As [`occ_entropy_di`].
#[no_mangle]
pub unsafe extern "C" fn occ_entropy_di_degenerate(
    parts: *const u64,
    len: usize,
    g: u64,
    out: *mut f64,
) -> OccStatus {
    let Some(parts) = (unsafe { slice_arg(parts, len) }) else {
        return OccStatus::NullPointer;
    };
    if out.is_null() {
        return OccStatus::NullPointer;
    }
    let Ok(spec) = DegenerateSpec::new(g) else {
        return OccStatus::InvalidArgument;
    };
    match canonical(parts) {
        Ok(r) => {
            unsafe { *out = entropy_exact_di_degenerate(&r, spec).nats() };
            OccStatus::Ok
        }
        Err(status) => status,
    }
}

/// Shannon entropy of the empirical distribution of `counts[0..len]`.
///
/// # Safety
/// As [`occ_entropy_di`].
#[no_mangle]
pub unsafe extern "C" fn occ_entropy_shannon(
    counts: *const u64,
    len: usize,
    out: *mut f64,
) -> OccStatus {
    let Some(counts) = (unsafe { slice_arg(counts, len) }) else {
        return OccStatus::NullPointer;
    };
    if out.is_null() {
        return OccStatus::NullPointer;
    }
    match ProbabilityVector::from_counts(counts) {
        Ok(p) => {
            unsafe { *out = entropy_shannon(&p).nats() };
            OccStatus::Ok
        }
        Err(_) => OccStatus::InvalidArgument,
    }
}

/// Runs a MaxProb sweep and returns an opaque result handle.
///
/// `g` is only read for `DIDegenerate`. `max_space = 0` selects the
/// default cap (10^7 realizations).
///
/// # Safety
/// `out` must be valid; the handle must be released with
/// [`occ_maxprob_free`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_run(
    statistic: OccStatistic,
    n: u64,
    s: u64,
    g: u64,
    max_space: u64,
    out: *mut *mut OccMaxProb,
) -> OccStatus {
    if out.is_null() {
        return OccStatus::NullPointer;
    }
    if exact::guard(n, exact::DEFAULT_MAX_N).is_err() {
        return OccStatus::LimitExceeded;
    }
    let limits = if max_space == 0 {
        SearchLimits::default()
    } else {
        SearchLimits {
            max_realizations: max_space,
        }
    };
    let handle = match statistic {
        OccStatistic::Multinomial => match maxprob_multinomial(n, s, &limits) {
            Ok(r) => OccMaxProb {
                maxima: r
                    .maxima
                    .iter()
                    .map(|m| m.realization.slots().to_vec())
                    .collect(),
                weight: r.max_weight().to_string(),
                probability: r.maxima[0].probability,
                entropy: r.maxima[0].entropy_exact.nats(),
                total_weight: r.total_weight.to_string(),
            },
            Err(e) => return search_status(e),
        },
        OccStatistic::DI | OccStatistic::DIDegenerate => {
            let result = if matches!(statistic, OccStatistic::DI) {
                maxprob_di(n, s, &limits)
            } else {
                match DegenerateSpec::new(g) {
                    Ok(spec) => maxprob_di_degenerate(n, s, spec, &limits),
                    Err(_) => return OccStatus::InvalidArgument,
                }
            };
            match result {
                Ok(r) => OccMaxProb {
                    maxima: r
                        .maxima
                        .iter()
                        .map(|m| m.realization.parts().to_vec())
                        .collect(),
                    weight: r.max_weight().to_string(),
                    probability: r.maxima[0].probability,
                    entropy: r.maxima[0].entropy_exact.nats(),
                    total_weight: r.total_weight.to_string(),
                },
                Err(e) => return search_status(e),
            }
        }
    };
    unsafe { *out = Box::into_raw(Box::new(handle)) };
    OccStatus::Ok
}

fn search_status(e: SearchError) -> OccStatus {
    match e {
        SearchError::SearchSpaceTooLarge { .. } => OccStatus::LimitExceeded,
        SearchError::EmptySystem => OccStatus::InvalidArgument,
    }
}

/// Number of argmax realizations in the handle.
///
/// # Safety
/// `handle` must be a live pointer from [`occ_maxprob_run`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_maxima_count(handle: *const OccMaxProb) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.maxima.len()
}

/// Shared weight of the argmax realizations, as a decimal string.
///
/// # Safety
/// As [`occ_maxprob_maxima_count`]; string freed via [`occ_string_free`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_weight(
    handle: *const OccMaxProb,
    out: *mut *mut c_char,
) -> OccStatus {
    if handle.is_null() {
        return OccStatus::NullPointer;
    }
    write_string(out, unsafe { &*handle }.weight.clone())
}

/// Ensemble total weight (`B(N,s)`, `s^N`, or the degenerate total).
///
/// # Safety
/// As [`occ_maxprob_weight`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_total_weight(
    handle: *const OccMaxProb,
    out: *mut *mut c_char,
) -> OccStatus {
    if handle.is_null() {
        return OccStatus::NullPointer;
    }
    write_string(out, unsafe { &*handle }.total_weight.clone())
}

/// Probability of each argmax realization. NaN on a null handle.
///
/// # Safety
/// As [`occ_maxprob_maxima_count`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_probability(handle: *const OccMaxProb) -> f64 {
    if handle.is_null() {
        return f64::NAN;
    }
    unsafe { &*handle }.probability
}

/// Exact entropy `(1/N) ln W` of each argmax realization. NaN on null.
///
/// # Safety
/// As [`occ_maxprob_maxima_count`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_entropy(handle: *const OccMaxProb) -> f64 {
    if handle.is_null() {
        return f64::NAN;
    }
    unsafe { &*handle }.entropy
}

/// Number of occupancy entries in realization `index` (canonical parts
/// for D:I, `s` slots for multinomial). Zero if out of range.
///
/// # Safety
/// As [`occ_maxprob_maxima_count`].
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_realization_len(
    handle: *const OccMaxProb,
    index: usize,
) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.maxima.get(index).map_or(0, Vec::len)
}

/// Copies realization `index` into `buf[0..buf_len]`.
///
/// # Safety
/// `buf` must hold at least `buf_len` writable u64 slots, and `buf_len`
/// must cover [`occ_maxprob_realization_len`] for the index.
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_realization(
    handle: *const OccMaxProb,
    index: usize,
    buf: *mut u64,
    buf_len: usize,
) -> OccStatus {
    if handle.is_null() || buf.is_null() {
        return OccStatus::NullPointer;
    }
    let Some(parts) = unsafe { &*handle }.maxima.get(index) else {
        return OccStatus::OutOfRange;
    };
    if buf_len < parts.len() {
        return OccStatus::OutOfRange;
    }
    unsafe { std::ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len()) };
    OccStatus::Ok
}

/// Releases a MaxProb handle. Null is a no-op.
///
/// # Safety
/// `handle` must come from [`occ_maxprob_run`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn occ_maxprob_free(handle: *mut OccMaxProb) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Releases a string allocated by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from an occ_* out-parameter and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn occ_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
