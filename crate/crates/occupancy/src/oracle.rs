//! Brute-force enumeration oracles.
//!
//! Everything here counts configurations directly, one at a time, with no
//! recourse to the closed-form weights or to Stirling/Bell numbers: set
//! partitions are walked as restricted growth strings, ball-to-box
//! functions as base-`s` odometers, and degenerate configurations as
//! two-level set partitions. The counts are grouped by realization so the
//! production formulas can be checked shape by shape.
//!
//! Oracles are intentionally naive and intentionally capped: a partial
//! enumeration would validate nothing, so oversized inputs are errors,
//! never truncations.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::BigCount;
use crate::realization::{OrderedOccupancy, Realization};

/// Hard cap on `n` for set-partition enumeration (Bell(14) ~ 1.9e8).
pub const MAX_SET_PARTITION_N: u64 = 14;
/// Hard cap on `n` for two-level enumeration.
pub const MAX_TWO_LEVEL_N: u64 = 10;
/// Hard cap on the number of enumerated functions `s^n`.
pub const MAX_FUNCTIONS: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle space too large: {what} = {requested} exceeds cap {cap}")]
    OracleTooLarge {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
}

/// Canonical encoding of a set partition of `{0, .., n-1}`: element `t`
/// carries the index of its block, and a block index never exceeds one
/// plus the largest index used before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedGrowthString {
    codes: Vec<u32>,
}

impl RestrictedGrowthString {
    pub fn codes(&self) -> &[u32] {
        &self.codes
    }

    /// Sizes of the partition's blocks, sorted non-increasing.
    pub fn block_sizes(&self) -> Vec<u64> {
        let blocks = self.codes.iter().max().map_or(0, |&m| m + 1) as usize;
        let mut sizes = vec![0u64; blocks];
        for &c in &self.codes {
            sizes[c as usize] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Enumerates every restricted growth string of length `n` with at most
/// `max_blocks` distinct codes, in lexicographic order.
pub struct RgsIter {
    codes: Vec<u32>,
    // prefix_max[t] = max(codes[0..t]); prefix_max[0] is unused
    prefix_max: Vec<u32>,
    max_blocks: u32,
    started: bool,
    done: bool,
}

pub fn rgs_iter(n: u64, max_blocks: u64) -> RgsIter {
    let n = n as usize;
    RgsIter {
        codes: vec![0; n],
        prefix_max: vec![0; n],
        max_blocks: max_blocks.min(u32::MAX as u64) as u32,
        started: false,
        done: n == 0 || max_blocks == 0,
    }
}

impl Iterator for RgsIter {
    type Item = RestrictedGrowthString;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(RestrictedGrowthString {
                codes: self.codes.clone(),
            });
        }
        let n = self.codes.len();
        for t in (1..n).rev() {
            // codes[t] may rise to min(prefix_max + 1, max_blocks - 1)
            if self.codes[t] <= self.prefix_max[t] && self.codes[t] + 1 <= self.max_blocks - 1 {
                self.codes[t] += 1;
                for u in t + 1..n {
                    self.prefix_max[u] = self.prefix_max[u - 1].max(self.codes[u - 1]);
                    self.codes[u] = 0;
                }
                return Some(RestrictedGrowthString {
                    codes: self.codes.clone(),
                });
            }
        }
        self.done = true;
        None
    }
}

/// Counts set partitions of `n` distinguishable items into at most
/// `max_blocks` unlabeled blocks, grouped by block-size multiset.
///
/// This enumerates the very objects the D:I weight claims to count, so
/// the map must equal `weight_di` per shape and total `B(n, max_blocks)`.
pub fn count_set_partitions_by_shape(
    n_total: u64,
    max_blocks: u64,
) -> Result<BTreeMap<Realization, BigCount>, OracleError> {
    if n_total > MAX_SET_PARTITION_N {
        return Err(OracleError::OracleTooLarge {
            what: "set-partition n",
            requested: n_total,
            cap: MAX_SET_PARTITION_N,
        });
    }
    let mut by_shape = BTreeMap::new();
    for rgs in rgs_iter(n_total, max_blocks) {
        let shape = Realization::from_canonical_parts(rgs.block_sizes(), max_blocks);
        *by_shape.entry(shape).or_insert_with(|| BigCount::from(0u8)) += 1u32;
    }
    Ok(by_shape)
}

/// Counts all `s^n` functions from `n` distinguishable balls to `s`
/// distinguishable boxes, grouped by ordered occupancy.
pub fn count_functions_by_occupancy(
    n_total: u64,
    s: u64,
) -> Result<BTreeMap<OrderedOccupancy, BigCount>, OracleError> {
    let space = (s as u128).checked_pow(n_total as u32);
    match space {
        Some(sp) if sp <= MAX_FUNCTIONS as u128 => {}
        _ => {
            return Err(OracleError::OracleTooLarge {
                what: "function space s^n",
                requested: space.map_or(u64::MAX, |sp| sp.min(u64::MAX as u128) as u64),
                cap: MAX_FUNCTIONS,
            })
        }
    }
    let mut by_occ = BTreeMap::new();
    let mut assignment = vec![0u64; n_total as usize];
    loop {
        let mut slots = vec![0u64; s as usize];
        for &b in &assignment {
            slots[b as usize] += 1;
        }
        let occ = OrderedOccupancy::new(slots).expect("s >= 1");
        *by_occ.entry(occ).or_insert_with(|| BigCount::from(0u8)) += 1u32;
        // odometer
        let mut t = assignment.len();
        loop {
            if t == 0 {
                return Ok(by_occ);
            }
            t -= 1;
            assignment[t] += 1;
            if assignment[t] < s {
                break;
            }
            assignment[t] = 0;
        }
    }
}

/// Counts two-level configurations: a set partition of the balls into at
/// most `s` unlabeled states, each state's contents further partitioned
/// into at most `g` unlabeled sub-states. Grouped by state-size multiset.
///
/// The inner counts are themselves obtained by enumeration (cached per
/// block size within one call), keeping the oracle formula-free.
pub fn count_two_level_by_shape(
    n_total: u64,
    s: u64,
    g: u64,
) -> Result<BTreeMap<Realization, BigCount>, OracleError> {
    if n_total > MAX_TWO_LEVEL_N {
        return Err(OracleError::OracleTooLarge {
            what: "two-level n",
            requested: n_total,
            cap: MAX_TWO_LEVEL_N,
        });
    }
    let mut inner_cache: Vec<Option<BigCount>> = vec![None; n_total as usize + 1];
    let mut inner = |m: u64| -> BigCount {
        if let Some(v) = &inner_cache[m as usize] {
            return v.clone();
        }
        let count = BigCount::from(rgs_iter(m, g).count() as u64);
        inner_cache[m as usize] = Some(count.clone());
        count
    };
    let mut by_shape = BTreeMap::new();
    for rgs in rgs_iter(n_total, s) {
        let sizes = rgs.block_sizes();
        let mut ways = BigCount::from(1u8);
        for &sz in &sizes {
            ways *= inner(sz);
        }
        let shape = Realization::from_canonical_parts(sizes, s);
        *by_shape.entry(shape).or_insert_with(|| BigCount::from(0u8)) += ways;
    }
    Ok(by_shape)
}
