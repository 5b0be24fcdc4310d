//! Canonical representations of occupancy realizations and exhaustive
//! iterators over realization spaces.
//!
//! Three views of "how many balls sit in each box":
//!
//! - [`Realization`]: the unordered multiset `{n_i}` used when boxes are
//!   indistinguishable. Stored canonically: zeros stripped, parts sorted
//!   non-increasing. `{2,2,1}`, `{2,1,2}` and `{2,2,1,0}` are all the same
//!   realization.
//! - [`OrderedOccupancy`]: the ordered vector `[n_i]` used when boxes are
//!   distinguishable; `[2,2,1]` and `[2,1,2]` are different realizations.
//! - [`RepetitivityVector`]: for each positive occupancy `j`, how many
//!   boxes hold exactly `j` balls. Zeros (empty boxes) are not counted.
//!
//! The iterators enumerate integer partitions with a bounded number of
//! parts and weak compositions into a fixed number of slots, each exactly
//! once in a documented deterministic order, so sweeps are reproducible
//! and can be split into disjoint subranges by leading part.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{binomial, BigCount};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("realization has no entities (all occupancies zero)")]
    EmptyRealization,
    #[error("{nonzero} non-empty states do not fit in {s_slots} slots")]
    TooManySlots { nonzero: usize, s_slots: u64 },
    #[error("repetitivity keys must be positive occupancies")]
    ZeroPart,
    #[error("ordered occupancy needs at least one slot")]
    NoSlots,
    #[error("cannot parse {0:?} as a realization")]
    Parse(String),
}

/// Unordered occupancy multiset `{n_i}`: the canonical description of a
/// realization when states are indistinguishable.
///
/// Equality, ordering, and hashing consider only the canonical parts; the
/// slot count `s_slots` is carried as context (zero padding is physically
/// meaningless, so `{2}` at `s = 1` equals `{2,0}` at `s = 2`). Ordering
/// is lexicographic on the non-increasing parts vector, which matches the
/// listing order used for maxima tables.
#[derive(Debug, Clone)]
pub struct Realization {
    n_total: u64,
    parts: Vec<u64>,
    s_slots: u64,
}

impl Realization {
    /// Canonicalizes a raw occupancy vector: strips zeros, sorts the rest
    /// non-increasing. `raw` may contain any number of zero entries; only
    /// the non-empty states count against `s_slots`.
    pub fn canonicalize(raw: &[u64], s_slots: u64) -> Result<Self, RealizationError> {
        let mut parts: Vec<u64> = raw.iter().copied().filter(|&x| x > 0).collect();
        if parts.is_empty() {
            return Err(RealizationError::EmptyRealization);
        }
        if parts.len() as u64 > s_slots {
            return Err(RealizationError::TooManySlots {
                nonzero: parts.len(),
                s_slots,
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n_total = parts.iter().sum();
        Ok(Self {
            n_total,
            parts,
            s_slots,
        })
    }

    /// Constructs from parts already sorted non-increasing with no zeros.
    pub(crate) fn from_canonical_parts(parts: Vec<u64>, s_slots: u64) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(*parts.last().unwrap() > 0);
        debug_assert!(parts.len() as u64 <= s_slots);
        let n_total = parts.iter().sum();
        Self {
            n_total,
            parts,
            s_slots,
        }
    }

    /// Total number of entities `N`.
    pub fn n_total(&self) -> u64 {
        self.n_total
    }

    /// The non-zero occupancies, sorted non-increasing.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of available states `s` (filled or not).
    pub fn s_slots(&self) -> u64 {
        self.s_slots
    }

    /// Number of filled states `k = |parts|`.
    pub fn filled_states(&self) -> u64 {
        self.parts.len() as u64
    }

    /// The same partition viewed with a different slot count.
    pub fn with_slots(&self, s_slots: u64) -> Result<Self, RealizationError> {
        if self.parts.len() as u64 > s_slots {
            return Err(RealizationError::TooManySlots {
                nonzero: self.parts.len(),
                s_slots,
            });
        }
        Ok(Self {
            n_total: self.n_total,
            parts: self.parts.clone(),
            s_slots,
        })
    }

    /// Parts padded with zeros out to `s_slots`, as an ordered vector.
    pub fn padded_slots(&self) -> Vec<u64> {
        let mut slots = self.parts.clone();
        slots.resize(self.s_slots as usize, 0);
        slots
    }

    /// Counts the repetitivity `r_j` of each occupancy value `j`.
    pub fn repetitivity(&self) -> RepetitivityVector {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        RepetitivityVector { counts }
    }
}

impl PartialEq for Realization {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Realization {}

impl Hash for Realization {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Realization {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Realization {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Realization {
    type Err = RealizationError;

    /// Parses the brace form `{2,2,1}` (whitespace tolerated). The slot
    /// count is taken from the number of listed entries, zeros included,
    /// so `{2,0,0}` parses as `{2}` with `s = 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| RealizationError::Parse(s.to_string()))?;
        let raw = parse_u64_list(inner).ok_or_else(|| RealizationError::Parse(s.to_string()))?;
        Self::canonicalize(&raw, raw.len() as u64)
    }
}

/// Ordered occupancy vector `[n_i]`: one entry per distinguishable state,
/// order significant, zeros significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedOccupancy {
    slots: Vec<u64>,
}

impl OrderedOccupancy {
    pub fn new(slots: Vec<u64>) -> Result<Self, RealizationError> {
        if slots.is_empty() {
            return Err(RealizationError::NoSlots);
        }
        Ok(Self { slots })
    }

    pub fn slots(&self) -> &[u64] {
        &self.slots
    }

    pub fn n_total(&self) -> u64 {
        self.slots.iter().sum()
    }

    pub fn s(&self) -> u64 {
        self.slots.len() as u64
    }

    /// Forgets the ordering, keeping the occupancy multiset.
    pub fn to_realization(&self) -> Result<Realization, RealizationError> {
        Realization::canonicalize(&self.slots, self.s())
    }
}

impl fmt::Display for OrderedOccupancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for OrderedOccupancy {
    type Err = RealizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| RealizationError::Parse(s.to_string()))?;
        let slots = parse_u64_list(inner).ok_or_else(|| RealizationError::Parse(s.to_string()))?;
        Self::new(slots)
    }
}

fn parse_u64_list(inner: &str) -> Option<Vec<u64>> {
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| tok.trim().parse::<u64>().ok())
        .collect()
}

/// Repetitivity vector: `counts[j] = r_j`, the number of states holding
/// exactly `j > 0` entities. Empty states are never counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitivityVector {
    counts: BTreeMap<u64, u64>,
}

impl RepetitivityVector {
    /// Builds from explicit `(j, r_j)` pairs; entries with `r_j = 0` are
    /// dropped, a key `j = 0` is rejected.
    pub fn from_counts(
        counts: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, RealizationError> {
        let mut map = BTreeMap::new();
        for (j, r) in counts {
            if r == 0 {
                continue;
            }
            if j == 0 {
                return Err(RealizationError::ZeroPart);
            }
            *map.entry(j).or_insert(0) += r;
        }
        Ok(Self { counts: map })
    }

    /// `r_j`, zero when `j` does not occur.
    pub fn count_of(&self, j: u64) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// `(j, r_j)` pairs in increasing `j`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&j, &r)| (j, r))
    }

    /// `sum_j r_j`, the number of filled states `k`.
    pub fn filled_states(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `sum_j j * r_j`, the total entity count `N`.
    pub fn weighted_total(&self) -> u64 {
        self.counts.iter().map(|(&j, &r)| j * r).sum()
    }
}

/// Iterator over integer partitions of `n` with every part `<= max_part`
/// and at most `max_parts` parts, in descending lexicographic order.
///
/// Yields raw part vectors; `n = 0` yields the single empty partition.
/// The bounds make the iterator splittable: partitions with leading part
/// `L` are exactly `[L]` prepended to `bounded_partitions(n - L, L,
/// max_parts - 1)`.
#[derive(Debug, Clone)]
pub struct BoundedPartitions {
    n: u64,
    max_parts: u64,
    current: Option<Vec<u64>>,
    started: bool,
}

/// See [`BoundedPartitions`].
pub fn bounded_partitions(n: u64, max_part: u64, max_parts: u64) -> BoundedPartitions {
    let first = greedy_fill(n, max_part, max_parts);
    BoundedPartitions {
        n,
        max_parts,
        current: first,
        started: false,
    }
}

/// Largest (in descending-lex order) partition of `n` with parts
/// `<= max_part` and at most `max_parts` parts, if one exists.
fn greedy_fill(mut n: u64, max_part: u64, max_parts: u64) -> Option<Vec<u64>> {
    if n > max_part.saturating_mul(max_parts) {
        return None;
    }
    let mut parts = Vec::new();
    while n > 0 {
        let x = max_part.min(n);
        parts.push(x);
        n -= x;
    }
    Some(parts)
}

impl Iterator for BoundedPartitions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return self.current.clone();
        }
        let cur = self.current.as_mut()?;
        // Find the deepest position whose part can shrink by one while the
        // tail can still absorb the remainder within the slot budget.
        let mut prefix: u64 = cur.iter().sum();
        for i in (0..cur.len()).rev() {
            prefix -= cur[i];
            let v = cur[i] - 1;
            if v == 0 {
                continue;
            }
            let rest = self.n - prefix - v;
            let slots_left = self.max_parts - i as u64 - 1;
            if rest <= v.saturating_mul(slots_left) {
                cur.truncate(i);
                cur.push(v);
                let mut rem = rest;
                while rem > 0 {
                    let x = v.min(rem);
                    cur.push(x);
                    rem -= x;
                }
                return self.current.clone();
            }
        }
        self.current = None;
        None
    }
}

/// All partitions of `n_total` into at most `max_parts` parts as canonical
/// [`Realization`]s (with `s_slots = max_parts`), in descending
/// lexicographic order: `(5, 3)` yields `{5}, {4,1}, {3,2}, {3,1,1},
/// {2,2,1}`.
pub fn partitions_iter(n_total: u64, max_parts: u64) -> impl Iterator<Item = Realization> {
    let effective = if n_total == 0 { None } else { Some(()) };
    effective
        .into_iter()
        .flat_map(move |_| bounded_partitions(n_total, n_total, max_parts))
        .map(move |parts| Realization::from_canonical_parts(parts, max_parts))
}

/// Iterator over weak compositions of `n` into exactly `s` ordered slots,
/// first slot descending (reverse lexicographic): `(2, 3)` yields
/// `[2,0,0], [1,1,0], [1,0,1], [0,2,0], [0,1,1], [0,0,2]`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
    started: bool,
}

/// See [`Compositions`]. Total yield count is `C(n + s - 1, s - 1)`.
pub fn compositions_iter(n_total: u64, s: u64) -> Compositions {
    let current = if s == 0 {
        None
    } else {
        let mut slots = vec![0u64; s as usize];
        slots[0] = n_total;
        Some(slots)
    };
    Compositions {
        current,
        started: false,
    }
}

impl Iterator for Compositions {
    type Item = OrderedOccupancy;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return self
                .current
                .clone()
                .map(|slots| OrderedOccupancy { slots });
        }
        let cur = self.current.as_mut()?;
        let s = cur.len();
        // Advance the rightmost non-final slot holding anything: move one
        // unit past it and sweep everything to its right back up.
        let mut moved = false;
        for i in (0..s - 1).rev() {
            if cur[i] > 0 {
                let tail: u64 = cur[i + 1..].iter().sum();
                cur[i] -= 1;
                for v in cur[i + 1..].iter_mut() {
                    *v = 0;
                }
                cur[i + 1] = tail + 1;
                moved = true;
                break;
            }
        }
        if !moved {
            self.current = None;
            return None;
        }
        self.current
            .clone()
            .map(|slots| OrderedOccupancy { slots })
    }
}

/// Number of partitions of `n` into at most `max_parts` parts, counted by
/// the conjugate form (parts of size `<= max_parts`).
pub fn partition_count(n: u64, max_parts: u64) -> BigCount {
    use num_traits::{One, Zero};
    let n = n as usize;
    let mut dp: Vec<BigCount> = vec![BigCount::zero(); n + 1];
    dp[0] = BigCount::one();
    for size in 1..=(max_parts as usize).min(n) {
        for j in size..=n {
            let add = dp[j - size].clone();
            dp[j] += add;
        }
    }
    dp[n].clone()
}

/// Number of weak compositions of `n` into `s` slots: `C(n+s-1, s-1)`.
pub fn composition_count(n: u64, s: u64) -> BigCount {
    if s == 0 {
        return BigCount::from(u8::from(n == 0));
    }
    binomial(n + s - 1, s - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonicalize_examples() {
        let r = Realization::canonicalize(&[2, 1, 2], 3).unwrap();
        assert_eq!(r.parts(), &[2, 2, 1]);
        assert_eq!(r.n_total(), 5);

        let r = Realization::canonicalize(&[5, 0, 0], 3).unwrap();
        assert_eq!(r.parts(), &[5]);
        assert_eq!(r.filled_states(), 1);

        let r = Realization::canonicalize(&[1, 1, 1, 1, 1], 5).unwrap();
        assert_eq!(r.parts(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn canonicalize_errors() {
        assert_eq!(
            Realization::canonicalize(&[0, 0], 2),
            Err(RealizationError::EmptyRealization)
        );
        assert_eq!(
            Realization::canonicalize(&[1, 1, 1], 2),
            Err(RealizationError::TooManySlots {
                nonzero: 3,
                s_slots: 2
            })
        );
    }

    #[test]
    fn zero_padding_is_identity() {
        let a = Realization::canonicalize(&[2, 2, 1], 3).unwrap();
        let b = Realization::canonicalize(&[2, 2, 1, 0, 0], 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.with_slots(9).unwrap(), a);
    }

    #[test]
    fn repetitivity_examples() {
        let r = Realization::canonicalize(&[2, 2, 1], 3).unwrap();
        let rep = r.repetitivity();
        assert_eq!(rep.count_of(1), 1);
        assert_eq!(rep.count_of(2), 2);
        assert_eq!(rep.count_of(3), 0);

        let r = Realization::canonicalize(&[7], 1).unwrap();
        assert_eq!(r.repetitivity().count_of(7), 1);

        let r = Realization::canonicalize(&[1; 5], 5).unwrap();
        assert_eq!(r.repetitivity().count_of(1), 5);
    }

    #[test]
    fn repetitivity_from_counts_validates() {
        assert!(RepetitivityVector::from_counts([(0, 1)]).is_err());
        let rep = RepetitivityVector::from_counts([(2, 2), (1, 1), (9, 0)]).unwrap();
        assert_eq!(rep.filled_states(), 3);
        assert_eq!(rep.weighted_total(), 5);
        assert_eq!(rep.count_of(9), 0);
    }

    #[test]
    fn partitions_5_3_exact_sequence() {
        let got: Vec<Vec<u64>> = partitions_iter(5, 3).map(|r| r.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1]
            ]
        );
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_iter(10, 10).count(), 42);
        assert_eq!(partitions_iter(7, 1).count(), 1);
        assert_eq!(partition_count(10, 10), BigCount::from(42u32));
        assert_eq!(partition_count(5, 3), BigCount::from(5u32));
        assert_eq!(partition_count(50, 50), BigCount::from(204226u32));
    }

    /// Brute-force recursive enumeration, independent of the iterator.
    fn brute_partitions(n: u64, max_part: u64, max_parts: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        if max_parts == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        for first in (1..=max_part.min(n)).rev() {
            for rest in brute_partitions(n - first, first, max_parts - 1) {
                let mut p = vec![first];
                p.extend(rest);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn partitions_match_brute_force() {
        for n in 1..=20u64 {
            for m in [1, 2, 3, n.div_ceil(2), n] {
                let got: Vec<Vec<u64>> = bounded_partitions(n, n, m).collect();
                let want = brute_partitions(n, n, m);
                assert_eq!(got, want, "mismatch at n={n} max_parts={m}");
                let mut dedup = got.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), got.len(), "duplicates at n={n} m={m}");
            }
        }
    }

    #[test]
    fn bounded_partitions_respect_max_part() {
        let got: Vec<Vec<u64>> = bounded_partitions(6, 2, 6).collect();
        assert_eq!(got, vec![vec![2, 2, 2], vec![2, 2, 1, 1], vec![2, 1, 1, 1, 1], vec![1; 6]]);
        assert_eq!(bounded_partitions(10, 2, 3).count(), 0);
        assert_eq!(bounded_partitions(0, 5, 5).collect::<Vec<_>>(), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn compositions_2_3_exact_sequence() {
        let got: Vec<Vec<u64>> = compositions_iter(2, 3).map(|o| o.slots().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn composition_counts_match_stars_and_bars() {
        for n in 0..=12u64 {
            for s in 1..=6u64 {
                let got = compositions_iter(n, s).count();
                assert_eq!(BigCount::from(got), composition_count(n, s), "n={n} s={s}");
            }
        }
        let single: Vec<_> = compositions_iter(7, 1).collect();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].slots(), &[7]);
        assert_eq!(compositions_iter(0, 3).count(), 1);
    }

    #[test]
    fn display_and_parse() {
        let r: Realization = "{2, 1, 2}".parse().unwrap();
        assert_eq!(r.to_string(), "{2,2,1}");
        assert_eq!(r.s_slots(), 3);
        let o: OrderedOccupancy = "[2,1,2]".parse().unwrap();
        assert_eq!(o.to_string(), "[2,1,2]");
        assert_eq!(o.to_realization().unwrap(), r);
        let padded: Realization = "{2,0,0}".parse().unwrap();
        assert_eq!(padded.parts(), &[2]);
        assert_eq!(padded.s_slots(), 3);
        assert!("{}".parse::<Realization>().is_err());
        assert!("2,2,1".parse::<Realization>().is_err());
        assert!("{a,b}".parse::<Realization>().is_err());
    }

    proptest! {
        #[test]
        fn canonicalize_round_trip(
            parts in proptest::collection::vec(1u64..9, 1..7),
            pad in 0usize..4,
            seed in any::<u64>(),
        ) {
            let mut canon = parts.clone();
            canon.sort_unstable_by(|a, b| b.cmp(a));
            let s = (parts.len() + pad) as u64;
            let reference = Realization::canonicalize(&canon, s).unwrap();

            // shuffled + zero-padded copy
            let mut raw = parts.clone();
            raw.extend(std::iter::repeat(0).take(pad));
            let mut state = seed;
            for i in (1..raw.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                raw.swap(i, j);
            }
            let got = Realization::canonicalize(&raw, s).unwrap();
            prop_assert_eq!(&got, &reference);
            prop_assert_eq!(got.to_string(), reference.to_string());
        }

        #[test]
        fn repetitivity_invariants(parts in proptest::collection::vec(1u64..9, 1..8)) {
            let s = parts.len() as u64;
            let r = Realization::canonicalize(&parts, s).unwrap();
            let rep = r.repetitivity();
            prop_assert_eq!(rep.weighted_total(), r.n_total());
            prop_assert_eq!(rep.filled_states(), r.filled_states());
        }
    }
}
