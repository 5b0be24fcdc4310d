//! Exact unbounded-integer combinatorial primitives: factorials, binomial
//! and multinomial coefficients, Stirling numbers of the second kind, and
//! (incomplete) Bell numbers.
//!
//! Floating point is deliberately absent from this module. Weights reach
//! magnitudes like 7.4e44 at desk scale and must stay exact internally;
//! approximate rendering happens in [`crate::decimal`] and logarithms in
//! [`crate::entropy`].

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact non-negative configuration count. Arithmetic on counts never
/// rounds; conversion to floating point is confined to the output layers.
pub type BigCount = BigUint;

/// Default guard on inputs that drive table sizes or loop lengths.
/// The source material lives at `N <= 50`; 5000 leaves two orders of
/// headroom while keeping accidental `stirling 10^9 2` out of memory.
pub const DEFAULT_MAX_N: u64 = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("input {requested} exceeds the configured guard N_max = {limit}")]
    LimitExceeded { requested: u64, limit: u64 },
    #[error("parts sum to {actual} but n_total is {expected}")]
    SumMismatch { expected: u64, actual: u64 },
}

/// Rejects inputs beyond a caller-chosen guard (see [`DEFAULT_MAX_N`]).
pub fn guard(n: u64, limit: u64) -> Result<(), ExactError> {
    if n > limit {
        Err(ExactError::LimitExceeded {
            requested: n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `n!` as an exact count. `factorial(0) == 1`.
pub fn factorial(n: u64) -> BigCount {
    let mut acc = BigCount::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
///
/// Computed multiplicatively, dividing at each step (each intermediate is
/// itself a binomial coefficient, so every division is exact).
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Multinomial coefficient `n_total! / prod(parts[i]!)`.
///
/// Evaluated as the chain `C(n, p_1) C(n-p_1, p_2) ...` so intermediates
/// stay small. Errors with [`ExactError::SumMismatch`] when the parts do
/// not sum to `n_total`.
pub fn multinomial(n_total: u64, parts: &[u64]) -> Result<BigCount, ExactError> {
    let sum: u64 = parts.iter().sum();
    if sum != n_total {
        return Err(ExactError::SumMismatch {
            expected: n_total,
            actual: sum,
        });
    }
    let mut acc = BigCount::one();
    let mut remaining = n_total;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

/// Stirling number of the second kind `{n, k}`: set partitions of `n`
/// distinguishable items into exactly `k` non-empty unlabeled blocks.
///
/// Zero when `k > n` or (`k == 0`, `n > 0`); `{0, 0} == 1` by convention.
/// Runs the triangular recurrence with two rolling rows, O(n k) time and
/// O(k) memory; build a [`StirlingTable`] instead when many entries of the
/// same triangle are needed.
pub fn stirling2(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    if n == 0 {
        return BigCount::one(); // {0,0}
    }
    if k == 0 {
        return BigCount::zero();
    }
    let k = k as usize;
    // prev[j] = {m-1, j}, filled left to right for j = 1..=min(m-1, k)
    let mut prev: Vec<BigCount> = vec![BigCount::zero(); k + 1];
    prev[1] = BigCount::one(); // {1,1}
    for m in 2..=n {
        let hi = (m as usize).min(k);
        let mut cur = vec![BigCount::zero(); k + 1];
        for j in 1..=hi {
            // {m, j} = {m-1, j-1} + j * {m-1, j}
            cur[j] = &prev[j - 1] + &prev[j] * j as u64;
        }
        prev = cur;
    }
    prev[k].clone()
}

/// Incomplete Bell number `B(n, s) = sum_{k=1..min(s,n)} {n, k}`: set
/// partitions of `n` items into at most `s` unlabeled blocks. Equals the
/// ordinary Bell number for `s >= n`; `B(0, s) == 1` by the same empty
/// convention as `{0, 0}`.
pub fn bell_incomplete(n: u64, s: u64) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    if s == 0 {
        return BigCount::zero();
    }
    let cap = s.min(n) as usize;
    let mut prev: Vec<BigCount> = vec![BigCount::zero(); cap + 1];
    prev[1] = BigCount::one();
    for m in 2..=n {
        let hi = (m as usize).min(cap);
        let mut cur = vec![BigCount::zero(); cap + 1];
        for j in 1..=hi {
            cur[j] = &prev[j - 1] + &prev[j] * j as u64;
        }
        prev = cur;
    }
    prev[1..].iter().sum()
}

/// Memoized triangle of Stirling numbers of the second kind up to a fixed
/// `max_n`. Immutable once built, so one table can be shared freely across
/// threads during enumeration sweeps.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    max_n: u64,
    // rows[n][k] = {n, k}, 0 <= k <= n; rows[0] = [1] holds {0,0}.
    rows: Vec<Vec<BigCount>>,
}

impl StirlingTable {
    /// Builds the triangle for all `n <= max_n` under [`DEFAULT_MAX_N`].
    pub fn new(max_n: u64) -> Result<Self, ExactError> {
        Self::with_limit(max_n, DEFAULT_MAX_N)
    }

    /// As [`StirlingTable::new`] with an explicit guard.
    pub fn with_limit(max_n: u64, limit: u64) -> Result<Self, ExactError> {
        guard(max_n, limit)?;
        let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![BigCount::one()]);
        for n in 1..=max_n as usize {
            let mut row = vec![BigCount::zero(); n + 1];
            row[n] = BigCount::one();
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k] * k as u64;
            }
            rows.push(row);
        }
        Ok(Self { max_n, rows })
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    /// `{n, k}` from the table; zero for `k > n`.
    ///
    /// Panics if `n > max_n` (the table is fixed-size by design).
    pub fn entry(&self, n: u64, k: u64) -> &BigCount {
        static ZERO: std::sync::OnceLock<BigCount> = std::sync::OnceLock::new();
        let row = &self.rows[n as usize];
        if k as usize >= row.len() {
            ZERO.get_or_init(BigCount::zero)
        } else {
            &row[k as usize]
        }
    }

    /// The entries `{n, 1} ..= {n, n}`.
    pub fn row(&self, n: u64) -> &[BigCount] {
        &self.rows[n as usize][1..]
    }

    /// `B(n, s)` summed from the memoized row.
    pub fn bell_incomplete(&self, n: u64, s: u64) -> BigCount {
        if n == 0 {
            return BigCount::one();
        }
        let hi = (s.min(n)) as usize;
        self.rows[n as usize][1..=hi].iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn factorial_base_cases() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(5), big(120));
        // frozen from a direct-product oracle
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(4, 9), big(0));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(5, &[2, 2, 1]).unwrap(), big(30));
        assert_eq!(multinomial(10, &[3, 3, 4]).unwrap(), big(4200));
        assert_eq!(multinomial(5, &[5, 0, 0]).unwrap(), big(1));
    }

    #[test]
    fn multinomial_sum_mismatch() {
        assert_eq!(
            multinomial(6, &[2, 2, 1]),
            Err(ExactError::SumMismatch {
                expected: 6,
                actual: 5
            })
        );
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(5, 3), big(25));
        assert_eq!(stirling2(7, 4), big(350));
        assert_eq!(stirling2(6, 1), big(1));
        assert_eq!(stirling2(6, 6), big(1));
        assert_eq!(stirling2(4, 9), big(0));
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(3, 0), big(0));
    }

    #[test]
    fn stirling_recurrence_consistency() {
        for n in 2..=25u64 {
            for k in 2..n {
                let lhs = stirling2(n, k);
                let rhs = stirling2(n - 1, k - 1) + stirling2(n - 1, k) * k;
                assert_eq!(lhs, rhs, "recurrence failed at ({n}, {k})");
            }
        }
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell_incomplete(5, 5), big(52));
        assert_eq!(bell_incomplete(10, 3), big(9842));
        assert_eq!(bell_incomplete(7, 1), big(1));
        assert_eq!(bell_incomplete(0, 3), big(1));
        assert_eq!(bell_incomplete(3, 0), big(0));
    }

    #[test]
    fn bell_monotone_in_s_and_saturates() {
        for n in 1..=15u64 {
            let mut last = BigCount::zero();
            for s in 1..=n {
                let b = bell_incomplete(n, s);
                assert!(b >= last);
                last = b;
            }
            assert_eq!(bell_incomplete(n, n + 7), last);
        }
    }

    #[test]
    fn table_matches_free_functions() {
        let table = StirlingTable::new(20).unwrap();
        for n in 0..=20u64 {
            for k in 0..=n + 2 {
                assert_eq!(*table.entry(n, k.min(n + 1)), stirling2(n, k.min(n + 1)));
            }
            if n >= 1 {
                assert_eq!(table.bell_incomplete(n, 3), bell_incomplete(n, 3));
                assert_eq!(table.bell_incomplete(n, n), bell_incomplete(n, n));
            }
        }
        let want: Vec<BigCount> = [1u64, 63, 301, 350, 140, 21, 1]
            .iter()
            .map(|&v| big(v))
            .collect();
        assert_eq!(table.row(7), want.as_slice());
    }

    #[test]
    fn table_guard() {
        assert!(matches!(
            StirlingTable::with_limit(100, 50),
            Err(ExactError::LimitExceeded {
                requested: 100,
                limit: 50
            })
        ));
        assert!(StirlingTable::with_limit(50, 50).is_ok());
    }

    proptest! {
        #[test]
        fn multinomial_permutation_invariant(mut parts in proptest::collection::vec(0u64..6, 1..6)) {
            let n: u64 = parts.iter().sum();
            let a = multinomial(n, &parts).unwrap();
            parts.reverse();
            let b = multinomial(n, &parts).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn binomial_symmetry(n in 0u64..40, k in 0u64..40) {
            if k <= n {
                prop_assert_eq!(binomial(n, k), binomial(n, n - k));
            } else {
                prop_assert_eq!(binomial(n, k), BigCount::zero());
            }
        }
    }
}
