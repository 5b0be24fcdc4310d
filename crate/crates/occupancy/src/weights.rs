//! Exact statistical weights: how many distinct microscopic configurations
//! produce a given realization.
//!
//! Three statistics are covered:
//!
//! - [`weight_multinomial`]: distinguishable states, `W = N! / prod n_i!`;
//! - [`weight_di`]: indistinguishable states — the multinomial weight
//!   divided by `prod_j r_j!` to cancel permutations of equally-filled
//!   states ([`weight_di_alternate`] is the equivalent closed form written
//!   purely in repetitivities, kept as an independent second route);
//! - [`weight_di_degenerate`]: indistinguishable states that each contain
//!   `g` indistinguishable sub-states; the non-degenerate weight picks up
//!   a factor `B(n_i, min(n_i, g))` per filled state for the ways to split
//!   its contents among sub-states.
//!
//! Weights are evaluated by multiplying binomial coefficients along the
//! successive filling of states (never by forming huge factorial
//! quotients), so intermediates stay modest. The brute-force enumeration
//! checks for all three formulas live in [`crate::oracle`].

use thiserror::Error;

use crate::exact::{bell_incomplete, binomial, factorial, BigCount};
use crate::realization::{OrderedOccupancy, Realization, RepetitivityVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("degeneracy must be at least 1")]
    ZeroDegeneracy,
    #[error("repetitivities total {actual} entities but n_total is {expected}")]
    SumMismatch { expected: u64, actual: u64 },
}

/// Equal degeneracy of every state: each state holds `g >= 1`
/// indistinguishable sub-states. `g = 1` reproduces the non-degenerate
/// statistic exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateSpec {
    g: u64,
}

impl DegenerateSpec {
    pub fn new(g: u64) -> Result<Self, WeightError> {
        if g == 0 {
            return Err(WeightError::ZeroDegeneracy);
        }
        Ok(Self { g })
    }

    pub fn g(&self) -> u64 {
        self.g
    }
}

/// Multinomial weight `N! / prod n_i!` of an ordered occupancy.
pub fn weight_multinomial(occ: &OrderedOccupancy) -> BigCount {
    filling_chain(occ.n_total(), occ.slots())
}

/// Weight of a D:I realization: the number of ways to distribute
/// `N` distinguishable entities over indistinguishable states so that the
/// occupancy multiset comes out as `r`.
///
/// Computed as the successive-filling chain divided by `prod_j r_j!`.
/// Zero padding cannot change the value (empty states contribute neither
/// a chain factor nor a repetitivity).
pub fn weight_di(r: &Realization) -> BigCount {
    let mut w = filling_chain(r.n_total(), r.parts());
    for (_, rep) in r.repetitivity().iter() {
        w /= factorial(rep);
    }
    w
}

/// The same D:I weight from repetitivities alone:
/// `N! / prod_j (j!)^{r_j} r_j!`.
///
/// Deliberately evaluated via the factorial quotient rather than the
/// filling chain, so it is an algebraically independent route for
/// equivalence testing. Errors when `sum_j j * r_j != n_total`.
pub fn weight_di_alternate(
    rep: &RepetitivityVector,
    n_total: u64,
) -> Result<BigCount, WeightError> {
    let actual = rep.weighted_total();
    if actual != n_total {
        return Err(WeightError::SumMismatch {
            expected: n_total,
            actual,
        });
    }
    let mut w = factorial(n_total);
    for (j, r) in rep.iter() {
        w /= factorial(j).pow(r as u32);
        w /= factorial(r);
    }
    Ok(w)
}

/// Weight of a D:I realization with equally degenerate states: the
/// non-degenerate weight times `B(n_i, min(n_i, g))` for each filled
/// state. Unfilled states contribute a factor `B(0, 0) = 1`.
pub fn weight_di_degenerate(r: &Realization, spec: DegenerateSpec) -> BigCount {
    let mut w = weight_di(r);
    for (j, rep) in r.repetitivity().iter() {
        let fills = bell_incomplete(j, spec.g().min(j));
        w *= fills.pow(rep as u32);
    }
    w
}

/// Sweep-oriented variant taking a precomputed table of per-state filling
/// counts `bells[j] = B(j, min(j, g))` for `j <= n_total`.
pub(crate) fn weight_di_degenerate_cached(r: &Realization, bells: &[BigCount]) -> BigCount {
    let mut w = weight_di(r);
    for (j, rep) in r.repetitivity().iter() {
        w *= bells[j as usize].pow(rep as u32);
    }
    w
}

/// The product of binomial coefficients from filling states one at a time:
/// `C(N, p_1) C(N - p_1, p_2) ...`, i.e. the multinomial coefficient.
fn filling_chain(n_total: u64, parts: &[u64]) -> BigCount {
    let mut acc = BigCount::from(1u8);
    let mut remaining = n_total;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::partitions_iter;
    use proptest::prelude::*;

    fn real(parts: &[u64]) -> Realization {
        Realization::canonicalize(parts, parts.len() as u64).unwrap()
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn multinomial_weight_values() {
        let occ = OrderedOccupancy::new(vec![3, 3, 4]).unwrap();
        assert_eq!(weight_multinomial(&occ), big(4200));

        let occ = OrderedOccupancy::new(vec![10, 10, 10]).unwrap();
        assert_eq!(weight_multinomial(&occ).to_string(), "5550996791340");

        let occ = OrderedOccupancy::new(vec![9, 0, 0, 0]).unwrap();
        assert_eq!(weight_multinomial(&occ), big(1));
    }

    #[test]
    fn di_weight_values() {
        assert_eq!(weight_di(&real(&[3, 1, 1])), big(10));
        assert_eq!(weight_di(&real(&[2, 2, 1])), big(15));
        assert_eq!(weight_di(&real(&[9])), big(1));
        assert_eq!(weight_di(&real(&[5, 3, 2])), big(2520));
        // {2,1,...,1} with N-1 parts has weight C(N,2)
        for n in 3..=12u64 {
            let mut parts = vec![1u64; (n - 1) as usize];
            parts[0] = 2;
            assert_eq!(weight_di(&real(&parts)), binomial(n, 2));
        }
    }

    #[test]
    fn di_alternate_values() {
        let rep = RepetitivityVector::from_counts([(2, 2), (1, 1)]).unwrap();
        assert_eq!(weight_di_alternate(&rep, 5).unwrap(), big(15));

        let rep = RepetitivityVector::from_counts([(3, 1), (1, 2)]).unwrap();
        assert_eq!(weight_di_alternate(&rep, 5).unwrap(), big(10));

        let rep = RepetitivityVector::from_counts([(1, 7)]).unwrap();
        assert_eq!(weight_di_alternate(&rep, 7).unwrap(), big(1));

        let rep = RepetitivityVector::from_counts([(2, 1)]).unwrap();
        assert_eq!(
            weight_di_alternate(&rep, 5),
            Err(WeightError::SumMismatch {
                expected: 5,
                actual: 2
            })
        );
    }

    #[test]
    fn degenerate_weight_values() {
        let g1 = DegenerateSpec::new(1).unwrap();
        let g2 = DegenerateSpec::new(2).unwrap();
        assert_eq!(weight_di_degenerate(&real(&[2, 2, 1]), g1), big(15));
        assert_eq!(weight_di_degenerate(&real(&[2]), g2), big(2));
        // 2520 * B(5,2) * B(3,2) * B(2,2) = 2520 * 16 * 4 * 2
        assert_eq!(
            weight_di_degenerate(&real(&[5, 3, 2]), g2),
            big(2520 * 16 * 4 * 2)
        );
        assert!(DegenerateSpec::new(0).is_err());
    }

    #[test]
    fn degenerate_reduces_at_g1_and_grows_with_g() {
        let g1 = DegenerateSpec::new(1).unwrap();
        for n in 1..=12u64 {
            for r in partitions_iter(n, n) {
                assert_eq!(weight_di_degenerate(&r, g1), weight_di(&r));
                let max_part = r.parts()[0];
                let mut last = BigCount::from(0u8);
                for g in 1..=max_part + 2 {
                    let w = weight_di_degenerate(&r, DegenerateSpec::new(g).unwrap());
                    assert!(w >= last, "not monotone at {r} g={g}");
                    last = w;
                }
                // constant once g covers the largest part
                let saturated =
                    weight_di_degenerate(&r, DegenerateSpec::new(max_part).unwrap());
                assert_eq!(last, saturated);
            }
        }
    }

    #[test]
    fn zero_padding_invariance() {
        let a = real(&[4, 2, 1]);
        for s in 3..=10u64 {
            let padded = a.with_slots(s).unwrap();
            assert_eq!(weight_di(&padded), weight_di(&a));
            assert_eq!(
                weight_di_degenerate(&padded, DegenerateSpec::new(3).unwrap()),
                weight_di_degenerate(&a, DegenerateSpec::new(3).unwrap())
            );
        }
    }

    proptest! {
        /// Eq-by-two-routes: filling-chain weight equals the pure
        /// repetitivity quotient on arbitrary partitions.
        #[test]
        fn chain_equals_repetitivity_quotient(parts in proptest::collection::vec(1u64..9, 1..9)) {
            let r = real(&parts);
            let alt = weight_di_alternate(&r.repetitivity(), r.n_total()).unwrap();
            prop_assert_eq!(weight_di(&r), alt);
        }

        /// W_mult = W_DI * prod_j r_j! for the same occupancy multiset.
        #[test]
        fn multinomial_vs_di_factor(parts in proptest::collection::vec(1u64..9, 1..8)) {
            let r = real(&parts);
            let occ = OrderedOccupancy::new(r.parts().to_vec()).unwrap();
            let mut scaled = weight_di(&r);
            for (_, rep) in r.repetitivity().iter() {
                scaled *= factorial(rep);
            }
            prop_assert_eq!(weight_multinomial(&occ), scaled);
        }
    }
}
