//! Cross-module combinatorial identities: the closed-form weights tie out
//! against Stirling/Bell numbers and against each other.

use occupancy::exact::{bell_incomplete, stirling2, BigCount};
use occupancy::oracle::count_set_partitions_by_shape;
use occupancy::realization::{compositions_iter, partitions_iter, Realization};
use occupancy::weights::{
    weight_di, weight_di_alternate, weight_di_degenerate, weight_multinomial, DegenerateSpec,
};

/// Summing W_DI over partitions with exactly k parts gives {N, k}.
#[test]
fn di_weights_sum_to_stirling_numbers() {
    for n in 1..=14u64 {
        let mut by_k: Vec<BigCount> = vec![BigCount::from(0u8); n as usize + 1];
        for r in partitions_iter(n, n) {
            by_k[r.filled_states() as usize] += weight_di(&r);
        }
        for k in 1..=n {
            assert_eq!(by_k[k as usize], stirling2(n, k), "N={n} k={k}");
        }
    }
}

/// Summing W_DI over partitions with at most s parts gives B(N, s).
#[test]
fn di_weights_total_to_incomplete_bell() {
    for n in 1..=12u64 {
        for s in 1..=6u64 {
            let total: BigCount = partitions_iter(n, s.min(n)).map(|r| weight_di(&r)).sum();
            assert_eq!(total, bell_incomplete(n, s), "N={n} s={s}");
        }
    }
}

/// Summing W_mult over all ordered compositions gives s^N.
#[test]
fn multinomial_weights_total_to_power() {
    for n in 1..=12u64 {
        for s in 1..=6u64 {
            let total: BigCount = compositions_iter(n, s).map(|o| weight_multinomial(&o)).sum();
            assert_eq!(total, BigCount::from(s).pow(n as u32), "N={n} s={s}");
        }
    }
}

/// The filling-chain form and the repetitivity-quotient form agree on
/// every partition.
#[test]
fn di_weight_chain_equals_repetitivity_form() {
    for n in 1..=15u64 {
        for r in partitions_iter(n, n) {
            let alt = weight_di_alternate(&r.repetitivity(), n).unwrap();
            assert_eq!(weight_di(&r), alt, "N={n} {r}");
        }
    }
}

/// Bell row sums equal the count of set partitions enumerated by the
/// oracle (which never touches the recurrence).
#[test]
fn bell_row_sums_match_oracle_counts() {
    for n in 1..=11u64 {
        let total: BigCount = count_set_partitions_by_shape(n, n)
            .unwrap()
            .values()
            .cloned()
            .sum();
        assert_eq!(total, bell_incomplete(n, n), "N={n}");
    }
}

/// Viewing the same partition with extra empty states changes nothing.
#[test]
fn weights_ignore_zero_padding() {
    for n in 1..=10u64 {
        for r in partitions_iter(n, n) {
            let wide = r.with_slots(n + 5).unwrap();
            assert_eq!(weight_di(&r), weight_di(&wide));
            let spec = DegenerateSpec::new(2).unwrap();
            assert_eq!(
                weight_di_degenerate(&r, spec),
                weight_di_degenerate(&wide, spec)
            );
        }
    }
}

/// A realization parsed at any padding weighs the same as its canonical
/// form.
#[test]
fn parsed_realizations_weigh_canonically() {
    let a: Realization = "{3,1,1}".parse().unwrap();
    let b: Realization = "{1,3,0,1,0}".parse().unwrap();
    assert_eq!(a, b);
    assert_eq!(weight_di(&a), BigCount::from(10u8));
    assert_eq!(weight_di(&b), BigCount::from(10u8));
}
