//! Exact occupancy statistics: how many ways can `N` distinguishable balls
//! land in `s` indistinguishable boxes, and what does that do to entropy?
//!
//! The crate computes, in exact unbounded-integer arithmetic:
//!
//! - statistical weights of occupancy realizations for three statistics:
//!   the multinomial (distinguishable boxes), the D:I statistic
//!   (distinguishable balls, indistinguishable boxes), and its equally
//!   degenerate variant (`g` indistinguishable sub-states per box);
//! - combinatorial entropies `H = (1/N) ln W`, both exact (non-asymptotic)
//!   and in their asymptotic Shannon / degenerate Maxwell-Boltzmann forms;
//! - most-probable (MaxProb) realizations by exhaustive, optionally
//!   parallel, enumeration of the realization space.
//!
//! Every closed-form weight is cross-validated against brute-force
//! enumeration oracles in [`oracle`], which count configurations directly
//! (set partitions as restricted growth strings, ball-to-box functions,
//! two-level set partitions) without going through any formula.
//!
//! Counts are [`exact::BigCount`] (arbitrary precision, never rounded);
//! probabilities are formed as exact integer ratios and only rendered to
//! decimal at the output boundary ([`decimal`]).
//!
//! ```
//! use occupancy::realization::Realization;
//! use occupancy::weights::weight_di;
//!
//! // Five balls in boxes of sizes 2, 2, 1: 15 distinct ways.
//! let r = Realization::canonicalize(&[2, 1, 2], 3).unwrap();
//! assert_eq!(weight_di(&r).to_string(), "15");
//! ```

#![forbid(unsafe_code)]

pub mod decimal;
pub mod entropy;
pub mod exact;
pub mod maxprob;
pub mod oracle;
pub mod realization;
pub mod weights;

pub use exact::BigCount;
pub use realization::{OrderedOccupancy, Realization, RepetitivityVector};
pub use weights::DegenerateSpec;
