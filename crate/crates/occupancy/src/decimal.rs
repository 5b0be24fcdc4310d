//! Exact-to-decimal rendering. Counts and probabilities stay exact until
//! this boundary; rounding is half-even everywhere.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::exact::BigCount;

/// Threshold above which table output switches to scientific notation,
/// matching the source tables (12600 prints exact, 3.63E+06 does not).
pub const SCI_THRESHOLD: u64 = 1_000_000;

/// Scientific notation with `sig` significant digits, e.g. `5.55E+12`.
/// Exponents are zero-padded to two digits.
pub fn sci(value: &BigCount, sig: usize) -> String {
    assert!(sig >= 1);
    if value.is_zero() {
        return format!("{}E+00", pad_mantissa("0", sig));
    }
    let digits = value.to_string();
    let mut exponent = digits.len() as i64 - 1;
    let mut mantissa = round_digits_half_even(&digits, sig);
    if mantissa.len() > sig {
        // rounding overflowed 999.. -> 1000..
        mantissa.truncate(sig);
        exponent += 1;
    }
    format!("{}E+{:02}", pad_mantissa(&mantissa, sig), exponent)
}

/// Exact decimal string below [`SCI_THRESHOLD`], 3-digit scientific
/// notation at or above it.
pub fn count_paper_style(value: &BigCount) -> String {
    if *value < BigUint::from(SCI_THRESHOLD) {
        value.to_string()
    } else {
        sci(value, 3)
    }
}

/// `num / den` as a fixed-point decimal with `dp` digits after the point,
/// rounded half-even on the exact rational value.
pub fn ratio_fixed(num: &BigCount, den: &BigCount, dp: usize) -> String {
    assert!(!den.is_zero());
    let scaled = num * BigUint::from(10u32).pow(dp as u32);
    let q = div_round_half_even(&scaled, den);
    let digits = q.to_string();
    if dp == 0 {
        return digits;
    }
    if digits.len() <= dp {
        format!("0.{:0>width$}", digits, width = dp)
    } else {
        let (int, frac) = digits.split_at(digits.len() - dp);
        format!("{int}.{frac}")
    }
}

/// `num / den` (with `num <= den`) in scientific notation with `sig`
/// significant digits, e.g. `3.629E-04`.
pub fn ratio_sci(num: &BigCount, den: &BigCount, sig: usize) -> String {
    assert!(!den.is_zero() && sig >= 1);
    if num.is_zero() {
        return format!("{}E+00", pad_mantissa("0", sig));
    }
    debug_assert!(num <= den);
    // smallest t with num * 10^t >= den locates the first significant digit
    let mut t = 0u32;
    let mut probe = num.clone();
    while probe < *den {
        probe *= 10u32;
        t += 1;
    }
    let scaled = num * BigUint::from(10u32).pow(t + sig as u32 - 1);
    let q = div_round_half_even(&scaled, den);
    let digits = q.to_string();
    let mut exponent = -(t as i64);
    if digits.len() > sig {
        exponent += 1;
    }
    let mantissa: String = digits.chars().take(sig).collect();
    let sign = if exponent < 0 { '-' } else { '+' };
    format!(
        "{}E{}{:02}",
        pad_mantissa(&mantissa, sig),
        sign,
        exponent.abs()
    )
}

/// Probability rendering used in tables: fixed `dp` decimals for values
/// at least 1e-3, 4-significant-digit scientific notation below.
pub fn probability_paper_style(num: &BigCount, den: &BigCount, dp: usize) -> String {
    if num * BigUint::from(1000u32) >= *den {
        ratio_fixed(num, den, dp)
    } else {
        ratio_sci(num, den, 4)
    }
}

/// Correctly-rounded `f64` of the exact ratio `num / den`, accurate to the
/// usual 2^-53 regardless of operand magnitudes.
pub fn ratio_f64(num: &BigCount, den: &BigCount) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = 64 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    q.to_f64().expect("~64-bit quotient") * (2f64).powi(-shift as i32)
}

fn pad_mantissa(digits: &str, sig: usize) -> String {
    let padded: String = digits
        .chars()
        .chain(std::iter::repeat('0'))
        .take(sig)
        .collect();
    if sig == 1 {
        padded
    } else {
        format!("{}.{}", &padded[..1], &padded[1..])
    }
}

/// First `sig` digits of a decimal string, rounding half-even against the
/// discarded tail. May return `sig + 1` digits on carry overflow.
fn round_digits_half_even(digits: &str, sig: usize) -> String {
    if digits.len() <= sig {
        return digits.to_string();
    }
    let (head, tail) = digits.split_at(sig);
    let mut head: Vec<u8> = head.bytes().map(|b| b - b'0').collect();
    let half = tail_versus_half(tail);
    let round_up = match half {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => head[sig - 1] % 2 == 1,
    };
    if round_up {
        let mut i = sig;
        loop {
            if i == 0 {
                head.insert(0, 1);
                break;
            }
            i -= 1;
            if head[i] == 9 {
                head[i] = 0;
            } else {
                head[i] += 1;
                break;
            }
        }
    }
    head.into_iter().map(|d| (d + b'0') as char).collect()
}

/// Compares the discarded tail against exactly one half (5000...).
fn tail_versus_half(tail: &str) -> std::cmp::Ordering {
    let mut bytes = tail.bytes();
    let first = bytes.next().unwrap_or(b'0');
    match first.cmp(&b'5') {
        std::cmp::Ordering::Equal => {
            if bytes.all(|b| b == b'0') {
                std::cmp::Ordering::Equal
            } else {
                std::cmp::Ordering::Greater
            }
        }
        other => other,
    }
}

fn div_round_half_even(num: &BigCount, den: &BigCount) -> BigCount {
    let q = num / den;
    let r = num - &q * den;
    let twice = &r * 2u32;
    if twice > *den || (twice == *den && (&q % 2u32) == BigUint::from(1u32)) {
        q + 1u32
    } else {
        q
    }
}
