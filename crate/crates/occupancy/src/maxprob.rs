//! Exhaustive MaxProb search: enumerate every realization of `(N, s[, g])`,
//! weigh each one exactly, and report the most probable realization(s)
//! and full distribution tables.
//!
//! The D:I statistics are swept over integer partitions. The multinomial
//! statistic is also swept over partitions — its weight only depends on
//! the occupancy multiset — and the winning class is expanded into its
//! distinct orderings afterwards, which is what makes rows like
//! `N = s = 50` (about 5e28 ordered compositions, 2e5 partitions)
//! tractable. Full multinomial distribution tables do enumerate ordered
//! compositions literally and are capped accordingly.
//!
//! Sweeps run in parallel over disjoint subranges keyed by the leading
//! (largest) part; merging is associative, and results are canonically
//! sorted at the end, so output order is deterministic.

use rayon::prelude::*;
use thiserror::Error;

use crate::decimal::ratio_f64;
use crate::entropy::{entropy_from_weight, EntropyValue};
use crate::exact::{bell_incomplete, BigCount};
use crate::realization::{
    bounded_partitions, composition_count, compositions_iter, partition_count, OrderedOccupancy,
    Realization,
};
use crate::weights::{
    weight_di, weight_di_degenerate_cached, weight_multinomial, DegenerateSpec,
};

/// Default cap on the number of realizations a sweep may touch.
pub const DEFAULT_MAX_REALIZATIONS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_realizations: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_realizations: DEFAULT_MAX_REALIZATIONS,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search space of {realizations} realizations exceeds cap {cap}")]
    SearchSpaceTooLarge { realizations: BigCount, cap: u64 },
    #[error("need at least one entity and one state")]
    EmptySystem,
}

/// Which statistic weighs the realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// Distinguishable entities, distinguishable states.
    Multinomial,
    /// Distinguishable entities, indistinguishable states.
    DI,
    /// D:I with `g` indistinguishable sub-states per state.
    DIDegenerate(DegenerateSpec),
}

/// One realization with its exact weight, probability, and entropy.
#[derive(Debug, Clone)]
pub struct RealizationReport<R> {
    pub realization: R,
    pub weight: BigCount,
    pub probability: f64,
    pub entropy_exact: EntropyValue,
    pub is_max: bool,
}

/// Outcome of a MaxProb sweep: every argmax realization (all sharing one
/// weight) plus the ensemble total weight.
#[derive(Debug, Clone)]
pub struct MaxProbResult<R> {
    pub n_total: u64,
    pub s_slots: u64,
    pub g: Option<u64>,
    pub maxima: Vec<RealizationReport<R>>,
    pub total_weight: BigCount,
}

impl<R> MaxProbResult<R> {
    /// The shared weight of the argmax realizations.
    pub fn max_weight(&self) -> &BigCount {
        &self.maxima[0].weight
    }
}

/// A full distribution table for either kind of realization.
#[derive(Debug, Clone)]
pub enum Distribution {
    Unordered(Vec<RealizationReport<Realization>>),
    Ordered(Vec<RealizationReport<OrderedOccupancy>>),
}

/// MaxProb for the D:I statistic: argmax of `weight_di` over partitions
/// of `n_total` into at most `s` parts; total weight is `B(N, s)`.
pub fn maxprob_di(
    n_total: u64,
    s: u64,
    limits: &SearchLimits,
) -> Result<MaxProbResult<Realization>, SearchError> {
    check_system(n_total, s)?;
    check_partition_space(n_total, s, limits)?;
    let (total, max_w, argmax) = sweep_partitions(n_total, s.min(n_total), |parts| {
        weight_di(&Realization::from_canonical_parts(parts.to_vec(), s))
    });
    Ok(assemble_di_result(n_total, s, None, total, max_w, argmax))
}

/// MaxProb for the equally degenerate D:I statistic.
pub fn maxprob_di_degenerate(
    n_total: u64,
    s: u64,
    spec: DegenerateSpec,
    limits: &SearchLimits,
) -> Result<MaxProbResult<Realization>, SearchError> {
    check_system(n_total, s)?;
    check_partition_space(n_total, s, limits)?;
    let bells = bell_table(n_total, spec.g());
    let (total, max_w, argmax) = sweep_partitions(n_total, s.min(n_total), |parts| {
        weight_di_degenerate_cached(&Realization::from_canonical_parts(parts.to_vec(), s), &bells)
    });
    Ok(assemble_di_result(
        n_total,
        s,
        Some(spec.g()),
        total,
        max_w,
        argmax,
    ))
}

/// MaxProb for the multinomial statistic: argmax of `W_mult` over all
/// `s^N` ordered compositions, with every maximizing ordering listed.
///
/// The sweep itself runs over occupancy multisets (the weight is
/// permutation-invariant); the cap applies to that partition space and to
/// the number of maxima expanded at the end. Total weight is `s^N`.
pub fn maxprob_multinomial(
    n_total: u64,
    s: u64,
    limits: &SearchLimits,
) -> Result<MaxProbResult<OrderedOccupancy>, SearchError> {
    check_system(n_total, s)?;
    check_partition_space(n_total, s, limits)?;
    let (_, max_w, argmax) = sweep_partitions(n_total, s.min(n_total), |parts| {
        multinomial_of_parts(n_total, parts)
    });
    let total = BigCount::from(s).pow(n_total as u32);

    // how many distinct orderings the winners expand to, before building them
    let mut expanded: BigCount = BigCount::from(0u8);
    for parts in &argmax {
        expanded += ordering_count(parts, s);
    }
    if expanded > BigCount::from(limits.max_realizations) {
        return Err(SearchError::SearchSpaceTooLarge {
            realizations: expanded,
            cap: limits.max_realizations,
        });
    }

    let mut maxima = Vec::new();
    for parts in &argmax {
        let mut slots = parts.clone();
        slots.resize(s as usize, 0);
        slots.sort_unstable();
        loop {
            maxima.push(report(
                OrderedOccupancy::new(slots.clone()).expect("s >= 1"),
                max_w.clone(),
                &total,
                n_total,
            ));
            if !next_permutation(&mut slots) {
                break;
            }
        }
    }
    maxima.sort_by(|a, b| a.realization.cmp(&b.realization));
    Ok(MaxProbResult {
        n_total,
        s_slots: s,
        g: None,
        maxima,
        total_weight: total,
    })
}

/// Full distribution of the D:I statistic: one report per partition,
/// probabilities summing to 1, sorted by descending weight then canonical
/// realization order.
pub fn distribution_di(
    n_total: u64,
    s: u64,
    limits: &SearchLimits,
) -> Result<Vec<RealizationReport<Realization>>, SearchError> {
    check_system(n_total, s)?;
    check_partition_space(n_total, s, limits)?;
    distribution_over_partitions(n_total, s, |r| weight_di(r))
}

/// Full distribution of the equally degenerate D:I statistic.
pub fn distribution_di_degenerate(
    n_total: u64,
    s: u64,
    spec: DegenerateSpec,
    limits: &SearchLimits,
) -> Result<Vec<RealizationReport<Realization>>, SearchError> {
    check_system(n_total, s)?;
    check_partition_space(n_total, s, limits)?;
    let bells = bell_table(n_total, spec.g());
    distribution_over_partitions(n_total, s, |r| weight_di_degenerate_cached(r, &bells))
}

/// Full multinomial distribution: one report per ordered composition
/// (enumerated literally, capped by `C(N+s-1, s-1)`), total weight `s^N`.
pub fn distribution_multinomial(
    n_total: u64,
    s: u64,
    limits: &SearchLimits,
) -> Result<Vec<RealizationReport<OrderedOccupancy>>, SearchError> {
    check_system(n_total, s)?;
    let space = composition_count(n_total, s);
    if space > BigCount::from(limits.max_realizations) {
        return Err(SearchError::SearchSpaceTooLarge {
            realizations: space,
            cap: limits.max_realizations,
        });
    }
    let weighted: Vec<(OrderedOccupancy, BigCount)> = compositions_iter(n_total, s)
        .map(|occ| {
            let w = weight_multinomial(&occ);
            (occ, w)
        })
        .collect();
    let total: BigCount = weighted.iter().map(|(_, w)| w.clone()).sum();
    let max_w = weighted.iter().map(|(_, w)| w).max().cloned().unwrap();
    let mut rows: Vec<RealizationReport<OrderedOccupancy>> = weighted
        .into_iter()
        .map(|(occ, w)| {
            let is_max = w == max_w;
            let mut rep = report(occ, w, &total, n_total);
            rep.is_max = is_max;
            rep
        })
        .collect();
    rows.sort_by(|a, b| {
        b.weight
            .cmp(&a.weight)
            .then_with(|| a.realization.cmp(&b.realization))
    });
    Ok(rows)
}

/// Dispatch on [`Statistic`]; the typed functions above are the direct API.
pub fn distribution_table(
    n_total: u64,
    s: u64,
    statistic: Statistic,
    limits: &SearchLimits,
) -> Result<Distribution, SearchError> {
    Ok(match statistic {
        Statistic::Multinomial => {
            Distribution::Ordered(distribution_multinomial(n_total, s, limits)?)
        }
        Statistic::DI => Distribution::Unordered(distribution_di(n_total, s, limits)?),
        Statistic::DIDegenerate(spec) => {
            Distribution::Unordered(distribution_di_degenerate(n_total, s, spec, limits)?)
        }
    })
}

fn check_system(n_total: u64, s: u64) -> Result<(), SearchError> {
    if n_total == 0 || s == 0 {
        return Err(SearchError::EmptySystem);
    }
    Ok(())
}

fn check_partition_space(n_total: u64, s: u64, limits: &SearchLimits) -> Result<(), SearchError> {
    let space = partition_count(n_total, s.min(n_total));
    if space > BigCount::from(limits.max_realizations) {
        return Err(SearchError::SearchSpaceTooLarge {
            realizations: space,
            cap: limits.max_realizations,
        });
    }
    Ok(())
}

/// `B(j, min(j, g))` for every occupancy `j <= n`, indexed by `j`.
fn bell_table(n: u64, g: u64) -> Vec<BigCount> {
    (0..=n).map(|j| bell_incomplete(j, g.min(j))).collect()
}

/// Parallel sweep over all partitions of `n` into at most `max_parts`
/// parts, split by leading part. Returns (total weight, max weight, all
/// argmax part vectors).
fn sweep_partitions<W>(n: u64, max_parts: u64, weight_of: W) -> (BigCount, BigCount, Vec<Vec<u64>>)
where
    W: Fn(&[u64]) -> BigCount + Sync,
{
    type Acc = (BigCount, BigCount, Vec<Vec<u64>>);
    let merge = |mut a: Acc, mut b: Acc| -> Acc {
        a.0 += b.0;
        match a.1.cmp(&b.1) {
            std::cmp::Ordering::Less => (a.0, b.1, b.2),
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Equal => {
                a.2.append(&mut b.2);
                a
            }
        }
    };
    (1..=n)
        .into_par_iter()
        .filter(|&lead| n - lead <= lead.saturating_mul(max_parts.saturating_sub(1)))
        .map(|lead| {
            let mut total = BigCount::from(0u8);
            let mut max_w = BigCount::from(0u8);
            let mut argmax: Vec<Vec<u64>> = Vec::new();
            let mut parts = vec![lead];
            for tail in bounded_partitions(n - lead, lead, max_parts - 1) {
                parts.truncate(1);
                parts.extend_from_slice(&tail);
                let w = weight_of(&parts);
                total += &w;
                match w.cmp(&max_w) {
                    std::cmp::Ordering::Greater => {
                        max_w = w;
                        argmax.clear();
                        argmax.push(parts.clone());
                    }
                    std::cmp::Ordering::Equal => argmax.push(parts.clone()),
                    std::cmp::Ordering::Less => {}
                }
            }
            (total, max_w, argmax)
        })
        .reduce(|| (BigCount::from(0u8), BigCount::from(0u8), Vec::new()), merge)
}

fn assemble_di_result(
    n_total: u64,
    s: u64,
    g: Option<u64>,
    total: BigCount,
    max_w: BigCount,
    mut argmax: Vec<Vec<u64>>,
) -> MaxProbResult<Realization> {
    argmax.sort();
    let maxima = argmax
        .into_iter()
        .map(|parts| {
            report(
                Realization::from_canonical_parts(parts, s),
                max_w.clone(),
                &total,
                n_total,
            )
        })
        .collect();
    MaxProbResult {
        n_total,
        s_slots: s,
        g,
        maxima,
        total_weight: total,
    }
}

fn distribution_over_partitions<W>(
    n_total: u64,
    s: u64,
    weight_of: W,
) -> Result<Vec<RealizationReport<Realization>>, SearchError>
where
    W: Fn(&Realization) -> BigCount,
{
    let weighted: Vec<(Realization, BigCount)> = bounded_partitions(n_total, n_total, s.min(n_total))
        .map(|parts| {
            let r = Realization::from_canonical_parts(parts, s);
            let w = weight_of(&r);
            (r, w)
        })
        .collect();
    let total: BigCount = weighted.iter().map(|(_, w)| w.clone()).sum();
    let max_w = weighted.iter().map(|(_, w)| w).max().cloned().unwrap();
    let mut rows: Vec<RealizationReport<Realization>> = weighted
        .into_iter()
        .map(|(r, w)| {
            let is_max = w == max_w;
            let mut rep = report(r, w, &total, n_total);
            rep.is_max = is_max;
            rep
        })
        .collect();
    rows.sort_by(|a, b| {
        b.weight
            .cmp(&a.weight)
            .then_with(|| a.realization.cmp(&b.realization))
    });
    Ok(rows)
}

fn report<R>(realization: R, weight: BigCount, total: &BigCount, n_total: u64) -> RealizationReport<R> {
    let probability = ratio_f64(&weight, total);
    let entropy_exact = entropy_from_weight(&weight, n_total).expect("weights are positive");
    RealizationReport {
        realization,
        weight,
        probability,
        entropy_exact,
        is_max: true,
    }
}

/// Multinomial weight of a padded-by-zeros parts vector (zero slots
/// contribute unit factors, so only the positive parts matter).
fn multinomial_of_parts(n_total: u64, parts: &[u64]) -> BigCount {
    let mut acc = BigCount::from(1u8);
    let mut remaining = n_total;
    for &p in parts {
        acc *= crate::exact::binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Number of distinct orderings of `parts` padded with zeros to `s` slots:
/// `s! / prod_v (multiplicity of v)!`, zeros included. Evaluated as a
/// binomial chain so a large `s` with few distinct values stays cheap.
fn ordering_count(parts: &[u64], s: u64) -> BigCount {
    let mut mult = std::collections::BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0u64) += 1;
    }
    let zeros = s - parts.len() as u64;
    if zeros > 0 {
        *mult.entry(0).or_insert(0) += zeros;
    }
    let mut acc = BigCount::from(1u8);
    let mut remaining = s;
    for (_, m) in mult {
        acc *= crate::exact::binomial(remaining, m);
        remaining -= m;
    }
    acc
}

/// Lexicographic next-permutation over a slot vector; `false` when the
/// current permutation is the last.
fn next_permutation(slots: &mut [u64]) -> bool {
    if slots.len() < 2 {
        return false;
    }
    let mut i = slots.len() - 1;
    while i > 0 && slots[i - 1] >= slots[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = slots.len() - 1;
    while slots[j] <= slots[i - 1] {
        j -= 1;
    }
    slots.swap(i - 1, j);
    slots[i..].reverse();
    true
}
