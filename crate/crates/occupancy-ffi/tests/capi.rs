//! Exercises the C surface exactly as a foreign caller would: through the
//! exported extern "C" symbols, status codes, and manual memory release.

use std::ffi::{c_char, CStr};
use std::ptr;

use occupancy_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { occ_string_free(p) };
    s
}

#[test]
fn stirling_and_bell_values() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { occ_stirling2(7, 4, &mut out) }, OccStatus::Ok);
    assert_eq!(take_string(out), "350");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { occ_stirling2(4, 9, &mut out) }, OccStatus::Ok);
    assert_eq!(take_string(out), "0");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_bell_incomplete(10, 3, &mut out) },
        OccStatus::Ok
    );
    assert_eq!(take_string(out), "9842");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_stirling2(1_000_000, 2, &mut out) },
        OccStatus::LimitExceeded
    );
    assert_eq!(
        unsafe { occ_stirling2(5, 2, ptr::null_mut()) },
        OccStatus::NullPointer
    );
}

#[test]
fn weights_across_the_boundary() {
    let parts = [2u64, 1, 2];
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_weight_di(parts.as_ptr(), parts.len(), &mut out) },
        OccStatus::Ok
    );
    assert_eq!(take_string(out), "15");

    let slots = [3u64, 3, 4];
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_weight_multinomial(slots.as_ptr(), slots.len(), &mut out) },
        OccStatus::Ok
    );
    assert_eq!(take_string(out), "4200");

    let parts = [5u64, 3, 2];
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_weight_di_degenerate(parts.as_ptr(), parts.len(), 2, &mut out) },
        OccStatus::Ok
    );
    assert_eq!(take_string(out), (2520u64 * 16 * 4 * 2).to_string());

    // g = 0 is invalid; zero occupancies are an empty realization
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { occ_weight_di_degenerate(parts.as_ptr(), parts.len(), 0, &mut out) },
        OccStatus::InvalidArgument
    );
    let zeros = [0u64, 0];
    assert_eq!(
        unsafe { occ_weight_di(zeros.as_ptr(), zeros.len(), &mut out) },
        OccStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { occ_weight_di(ptr::null(), 3, &mut out) },
        OccStatus::NullPointer
    );
}

#[test]
fn entropies_across_the_boundary() {
    let parts = [2u64, 2, 1];
    let mut h = 0.0f64;
    assert_eq!(
        unsafe { occ_entropy_di(parts.as_ptr(), parts.len(), &mut h) },
        OccStatus::Ok
    );
    assert!((h - 0.541610).abs() < 1e-6);

    let single = [2u64];
    assert_eq!(
        unsafe { occ_entropy_di_degenerate(single.as_ptr(), 1, 2, &mut h) },
        OccStatus::Ok
    );
    assert!((h - 0.346574).abs() < 1e-6);

    let counts = [1u64, 1, 1];
    assert_eq!(
        unsafe { occ_entropy_shannon(counts.as_ptr(), counts.len(), &mut h) },
        OccStatus::Ok
    );
    assert!((h - 1.098612).abs() < 1e-6);
}

#[test]
fn maxprob_handle_lifecycle() {
    let mut handle: *mut OccMaxProb = ptr::null_mut();
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::DI, 10, 3, 0, 0, &mut handle) },
        OccStatus::Ok
    );
    assert!(!handle.is_null());
    assert_eq!(unsafe { occ_maxprob_maxima_count(handle) }, 1);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { occ_maxprob_weight(handle, &mut out) }, OccStatus::Ok);
    assert_eq!(take_string(out), "2520");
    assert_eq!(
        unsafe { occ_maxprob_total_weight(handle, &mut out) },
        OccStatus::Ok
    );
    assert_eq!(take_string(out), "9842");
    assert!((unsafe { occ_maxprob_probability(handle) } - 0.256046).abs() < 1e-6);
    assert!((unsafe { occ_maxprob_entropy(handle) } - 0.783201).abs() < 1e-6);

    let len = unsafe { occ_maxprob_realization_len(handle, 0) };
    assert_eq!(len, 3);
    let mut buf = vec![0u64; len];
    assert_eq!(
        unsafe { occ_maxprob_realization(handle, 0, buf.as_mut_ptr(), buf.len()) },
        OccStatus::Ok
    );
    assert_eq!(buf, vec![5, 3, 2]);
    assert_eq!(
        unsafe { occ_maxprob_realization(handle, 9, buf.as_mut_ptr(), buf.len()) },
        OccStatus::OutOfRange
    );
    unsafe { occ_maxprob_free(handle) };
    unsafe { occ_maxprob_free(ptr::null_mut()) };
}

#[test]
fn maxprob_multinomial_permutations() {
    let mut handle: *mut OccMaxProb = ptr::null_mut();
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::Multinomial, 10, 3, 0, 0, &mut handle) },
        OccStatus::Ok
    );
    assert_eq!(unsafe { occ_maxprob_maxima_count(handle) }, 3);
    let len = unsafe { occ_maxprob_realization_len(handle, 0) };
    assert_eq!(len, 3); // s slots for the ordered statistic
    let mut buf = vec![0u64; len];
    assert_eq!(
        unsafe { occ_maxprob_realization(handle, 0, buf.as_mut_ptr(), buf.len()) },
        OccStatus::Ok
    );
    assert_eq!(buf, vec![3, 3, 4]);
    unsafe { occ_maxprob_free(handle) };
}

#[test]
fn maxprob_limits_and_errors() {
    let mut handle: *mut OccMaxProb = ptr::null_mut();
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::DI, 50, 50, 0, 100, &mut handle) },
        OccStatus::LimitExceeded
    );
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::DI, 0, 3, 0, 0, &mut handle) },
        OccStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::DIDegenerate, 4, 4, 0, 0, &mut handle) },
        OccStatus::InvalidArgument
    );
    // degenerate g=1 equals plain DI
    assert_eq!(
        unsafe { occ_maxprob_run(OccStatistic::DIDegenerate, 10, 10, 1, 0, &mut handle) },
        OccStatus::Ok
    );
    assert_eq!(unsafe { occ_maxprob_maxima_count(handle) }, 4);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { occ_maxprob_weight(handle, &mut out) }, OccStatus::Ok);
    assert_eq!(take_string(out), "12600");
    unsafe { occ_maxprob_free(handle) };
}

#[test]
fn generated_header_exists_and_exports_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("occupancy.h");
    let text = std::fs::read_to_string(&header).expect("header generated at build time");
    for symbol in [
        "occ_stirling2",
        "occ_bell_incomplete",
        "occ_weight_di",
        "occ_weight_di_degenerate",
        "occ_weight_multinomial",
        "occ_entropy_di",
        "occ_entropy_shannon",
        "occ_maxprob_run",
        "occ_maxprob_free",
        "occ_string_free",
        "typedef struct OccMaxProb OccMaxProb",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }
}
