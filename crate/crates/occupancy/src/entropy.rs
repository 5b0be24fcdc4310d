//! Combinatorial entropy functions.
//!
//! The central definition is the dimensionless per-entity entropy
//! `H = (1/N) ln W` with `W` an exact statistical weight. Exact
//! ("non-asymptotic") entropies evaluate that definition directly; the
//! asymptotic forms are the Shannon function and its degenerate
//! Maxwell-Boltzmann-like generalisation `-sum p_i ln(p_i / gamma_i)`.
//!
//! `ln` of an exact count is taken from the integer's bit length plus a
//! high-order mantissa ([`ln_big`]), never by narrowing the full integer
//! to a float, so weights at any magnitude keep at least 12 significant
//! digits in the logarithm.

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{stirling2, BigCount};
use crate::realization::Realization;
use crate::weights::{weight_di, weight_di_degenerate, DegenerateSpec};

/// Probability sum slack accepted by [`ProbabilityVector::new`].
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntropyError {
    #[error("weight must be positive to take a logarithm")]
    ZeroWeight,
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(f64),
    #[error("probability vector is empty")]
    EmptyDistribution,
    #[error("{probs} probabilities but {gammas} degeneracy entries")]
    LengthMismatch { probs: usize, gammas: usize },
}

/// Dimensionless entropy per entity, in natural-log units.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyValue {
    nats: f64,
}

impl EntropyValue {
    pub fn nats(self) -> f64 {
        self.nats
    }
}

impl std::fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.nats.fmt(f)
    }
}

/// A normalized discrete distribution. Construction checks every entry is
/// a probability and the total is 1 within [`NORMALIZATION_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self, EntropyError> {
        if probs.is_empty() {
            return Err(EntropyError::EmptyDistribution);
        }
        for &p in &probs {
            if !(0.0..=1.0 + NORMALIZATION_TOLERANCE).contains(&p) || p.is_nan() {
                return Err(EntropyError::InvalidProbability(p));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(EntropyError::NotNormalized(sum));
        }
        Ok(Self { probs })
    }

    /// Empirical distribution `p_i = n_i / N` from occupancy counts.
    pub fn from_counts(counts: &[u64]) -> Result<Self, EntropyError> {
        let n: u64 = counts.iter().sum();
        if n == 0 || counts.is_empty() {
            return Err(EntropyError::EmptyDistribution);
        }
        Ok(Self {
            probs: counts.iter().map(|&c| c as f64 / n as f64).collect(),
        })
    }

    /// State probabilities of a realization's filled states.
    pub fn from_realization(r: &Realization) -> Self {
        Self {
            probs: r
                .parts()
                .iter()
                .map(|&p| p as f64 / r.n_total() as f64)
                .collect(),
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Natural logarithm of an exact count, accurate to full `f64` precision
/// at any magnitude. Values below 2^900 convert directly; larger values
/// are split into a 64-bit-wide mantissa and a power of two.
pub fn ln_big(value: &BigCount) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = value.bits();
    if bits <= 900 {
        value.to_f64().expect("fits f64 range").ln()
    } else {
        let shift = bits - 64;
        let mantissa = (value >> shift).to_f64().expect("64-bit mantissa");
        mantissa.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `ln n!` as a float, by direct summation.
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// `H = (1/N) ln W` for an exact weight.
pub fn entropy_from_weight(w: &BigCount, n_total: u64) -> Result<EntropyValue, EntropyError> {
    if w.is_zero() {
        return Err(EntropyError::ZeroWeight);
    }
    Ok(EntropyValue {
        nats: ln_big(w) / n_total as f64,
    })
}

/// Exact (non-asymptotic) D:I entropy: `(1/N) ln W_DI`.
pub fn entropy_exact_di(r: &Realization) -> EntropyValue {
    entropy_from_weight(&weight_di(r), r.n_total()).expect("W_DI >= 1")
}

/// The same entropy assembled term by term:
/// `(1/N) ln N! - (1/N) sum_i ln n_i! - (1/N) sum_j ln r_j!`.
///
/// A second route to [`entropy_exact_di`] through float logarithms of
/// factorials instead of one logarithm of the exact weight; the two agree
/// to well below 1e-10 at desk scale.
pub fn entropy_exact_di_expanded(r: &Realization) -> EntropyValue {
    let n = r.n_total() as f64;
    let mut nats = ln_factorial(r.n_total());
    for &p in r.parts() {
        nats -= ln_factorial(p);
    }
    for (_, rep) in r.repetitivity().iter() {
        nats -= ln_factorial(rep);
    }
    EntropyValue { nats: nats / n }
}

/// Shannon entropy `-sum p_i ln p_i`, with `0 ln 0 = 0`.
pub fn entropy_shannon(p: &ProbabilityVector) -> EntropyValue {
    EntropyValue {
        nats: -p
            .probs()
            .iter()
            .filter(|&&q| q > 0.0)
            .map(|&q| q * q.ln())
            .sum::<f64>(),
    }
}

/// Exact entropy of the equally degenerate D:I statistic:
/// `(1/N) ln W_DI(g)`.
pub fn entropy_exact_di_degenerate(r: &Realization, spec: DegenerateSpec) -> EntropyValue {
    entropy_from_weight(&weight_di_degenerate(r, spec), r.n_total()).expect("W >= 1")
}

/// Term-by-term form of the degenerate exact entropy; adds
/// `(1/N) sum_i ln B(n_i, min(n_i, g))` to the non-degenerate expansion.
pub fn entropy_exact_di_degenerate_expanded(r: &Realization, spec: DegenerateSpec) -> EntropyValue {
    let n = r.n_total() as f64;
    let mut nats = entropy_exact_di_expanded(r).nats() * n;
    for &p in r.parts() {
        nats += ln_big(&crate::exact::bell_incomplete(p, spec.g().min(p)));
    }
    EntropyValue { nats: nats / n }
}

/// The number of filled sub-states `gamma` maximizing `{n, gamma}` over
/// `1..=min(g, n)`; ties break toward the smaller `gamma`.
pub fn gamma_sharp(n: u64, g: u64) -> u64 {
    let mut best = 1u64;
    let mut best_val = stirling2(n, 1);
    for gamma in 2..=g.min(n) {
        let v = stirling2(n, gamma);
        if v > best_val {
            best_val = v;
            best = gamma;
        }
    }
    best
}

/// Asymptotic degenerate entropy `-sum p_i ln(p_i / gamma_i)` with
/// `0 ln 0 = 0`; reduces to Shannon when every `gamma_i = 1`.
pub fn entropy_asymptotic_degenerate(
    p: &ProbabilityVector,
    gammas: &[u64],
) -> Result<EntropyValue, EntropyError> {
    scaled_shannon(p, gammas)
}

/// Degenerate Maxwell-Boltzmann entropy `-sum p_i ln(p_i / g_i)`.
pub fn entropy_mb_degenerate(
    p: &ProbabilityVector,
    degeneracies: &[u64],
) -> Result<EntropyValue, EntropyError> {
    scaled_shannon(p, degeneracies)
}

fn scaled_shannon(p: &ProbabilityVector, scales: &[u64]) -> Result<EntropyValue, EntropyError> {
    if p.probs().len() != scales.len() {
        return Err(EntropyError::LengthMismatch {
            probs: p.probs().len(),
            gammas: scales.len(),
        });
    }
    let nats = -p
        .probs()
        .iter()
        .zip(scales)
        .filter(|(&q, _)| q > 0.0)
        .map(|(&q, &s)| q * (q / s as f64).ln())
        .sum::<f64>();
    Ok(EntropyValue { nats })
}

/// Log-scale Jordan approximation `ln {n, a} ~ n ln a - ln a!`, used as a
/// convergence diagnostic against `ln stirling2(n, a)`.
pub fn jordan_stirling_approx(n: u64, a: u64) -> f64 {
    n as f64 * (a as f64).ln() - ln_factorial(a)
}

/// Shannon entropy of the realization's state probabilities minus its
/// exact D:I entropy. Tends to zero when all states fill (`k = s`) and
/// `N >> s`; stays finite otherwise.
pub fn shannon_gap(r: &Realization) -> f64 {
    entropy_shannon(&ProbabilityVector::from_realization(r)).nats() - entropy_exact_di(r).nats()
}

/// The finite-size term `(1/N) ln k!` dropped by the Shannon limit of the
/// exact D:I entropy. Exposed for inspection rather than silently erased.
pub fn shannon_limit_correction(r: &Realization) -> f64 {
    ln_factorial(r.filled_states()) / r.n_total() as f64
}

/// Per-state finite-size terms `(1/N) ln gamma_i!` appearing in the
/// degenerate limit. One value per entry of `gammas`; no summation over
/// states is implied.
pub fn jordan_limit_corrections(n_total: u64, gammas: &[u64]) -> Vec<f64> {
    gammas
        .iter()
        .map(|&g| ln_factorial(g) / n_total as f64)
        .collect()
}
