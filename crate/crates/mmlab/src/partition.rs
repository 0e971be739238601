//! Feedback partitions of the candidate set and their scalar scores.
//!
//! For a candidate guess, grouping the remaining consistent codes by the
//! feedback they would return partitions that set. One-ply strategies rank
//! guesses by features of this partition: entropy, number of non-empty
//! parts, expected part size, and worst (largest) part size.

use std::collections::BTreeMap;

use crate::code::{feedback, Code, Feedback};
use crate::error::{Error, Result};

/// Non-empty partition cells for one candidate guess.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    counts: BTreeMap<Feedback, u64>,
    total: u64,
}

impl PartitionTable {
    /// Builds a table from raw cell counts; zero counts are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (Feedback, u64)>) -> Result<Self> {
        let counts: BTreeMap<Feedback, u64> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        if counts.is_empty() {
            return Err(Error::Contradiction);
        }
        let total = counts.values().sum();
        Ok(PartitionTable { counts, total })
    }

    pub fn counts(&self) -> &BTreeMap<Feedback, u64> {
        &self.counts
    }

    pub fn count(&self, fb: Feedback) -> u64 {
        self.counts.get(&fb).copied().unwrap_or(0)
    }

    /// Size of the partitioned set; always the sum of the cell counts.
    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Scalar features of a partition, one per selection heuristic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GuessScore {
    /// Shannon entropy of the cell distribution, in bits.
    pub entropy: f64,
    /// Number of non-empty cells.
    pub nonempty_parts: u64,
    /// Probability-weighted mean cell size: sum of c_i^2 / total.
    pub expected_size: f64,
    /// Largest cell size.
    pub worst_size: u64,
}

/// Splits `consistent_set` by the feedback each member would return to
/// `guess`. Errors on an empty set: the game state is already contradictory.
pub fn partition(guess: &Code, consistent_set: &[Code]) -> Result<PartitionTable> {
    if consistent_set.is_empty() {
        return Err(Error::Contradiction);
    }
    let mut counts: BTreeMap<Feedback, u64> = BTreeMap::new();
    for candidate in consistent_set {
        let fb = feedback(guess, candidate)?;
        *counts.entry(fb).or_insert(0) += 1;
    }
    Ok(PartitionTable {
        counts,
        total: consistent_set.len() as u64,
    })
}

/// Derives every heuristic score from one partition table.
pub fn score(table: &PartitionTable) -> GuessScore {
    let total = table.total as f64;
    let mut entropy = 0.0;
    let mut expected = 0.0;
    let mut worst = 0u64;
    for &count in table.counts.values() {
        let p = count as f64 / total;
        entropy += p * (1.0 / p).log2();
        expected += count as f64 * p;
        worst = worst.max(count);
    }
    GuessScore {
        entropy,
        nonempty_parts: table.counts.len() as u64,
        expected_size: expected,
        worst_size: worst,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{enumerate_space, Alphabet, Code};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn fb(black: u16, white: u16) -> Feedback {
        Feedback::new(black, white)
    }

    #[test]
    fn first_guess_partition_of_full_space() {
        let a = Alphabet::new(6, 4).unwrap();
        let all = enumerate_space(&a).unwrap();
        let guess = Code::parse("AABB", &a).unwrap();
        let table = partition(&guess, &all).unwrap();
        // Codes avoiding both A and B: 4^4 of them answer 0b0w.
        assert_eq!(table.count(fb(0, 0)), 256);
        // Only AABB itself answers 4b0w.
        assert_eq!(table.count(fb(4, 0)), 1);
        assert_eq!(table.total(), 1296);
        assert_eq!(table.counts().values().sum::<u64>(), 1296);
    }

    #[test]
    fn two_symbol_guess_partition_is_exact() {
        // All nine outcomes of guess AB over the kappa=3, ell=2 space,
        // recounted by hand from the feedback rule.
        let a = Alphabet::new(3, 2).unwrap();
        let all = enumerate_space(&a).unwrap();
        let guess = Code::parse("AB", &a).unwrap();
        let table = partition(&guess, &all).unwrap();
        let expected: Vec<(Feedback, u64)> = vec![
            (fb(0, 0), 1), // CC
            (fb(0, 1), 2), // BC, CA
            (fb(0, 2), 1), // BA
            (fb(1, 0), 4), // AA, AC, BB, CB
            (fb(2, 0), 1), // AB
        ];
        assert_eq!(
            table.counts().iter().map(|(&f, &c)| (f, c)).collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn partition_of_empty_set_is_contradiction() {
        let a = Alphabet::new(3, 2).unwrap();
        let guess = Code::parse("AB", &a).unwrap();
        assert!(matches!(partition(&guess, &[]), Err(Error::Contradiction)));
    }

    #[test]
    fn score_uniform_four_way_split() {
        let cells = (0..4).map(|w| (fb(0, w), 1));
        let s = score(&PartitionTable::from_counts(cells).unwrap());
        assert_relative_eq!(s.entropy, 2.0);
        assert_eq!(s.nonempty_parts, 4);
        assert_eq!(s.worst_size, 1);
        assert_relative_eq!(s.expected_size, 1.0);
    }

    #[test]
    fn score_degenerate_partition() {
        let s = score(&PartitionTable::from_counts([(fb(0, 0), 4)]).unwrap());
        assert_relative_eq!(s.entropy, 0.0);
        assert_eq!(s.nonempty_parts, 1);
        assert_eq!(s.worst_size, 4);
        assert_relative_eq!(s.expected_size, 4.0);
    }

    #[test]
    fn score_skewed_partition() {
        // {2,1,1}: entropy 0.5*1 + 0.25*2 + 0.25*2 = 1.5 bits,
        // expected size (4+1+1)/4 = 1.5.
        let cells = [(fb(0, 0), 2), (fb(0, 1), 1), (fb(1, 0), 1)];
        let s = score(&PartitionTable::from_counts(cells).unwrap());
        assert_relative_eq!(s.entropy, 1.5);
        assert_eq!(s.nonempty_parts, 3);
        assert_eq!(s.worst_size, 2);
        assert_relative_eq!(s.expected_size, 1.5);
    }

    #[test]
    fn consistent_guess_hits_own_singleton() {
        let a = Alphabet::new(3, 2).unwrap();
        let all = enumerate_space(&a).unwrap();
        for guess in &all {
            let table = partition(guess, &all).unwrap();
            assert_eq!(table.count(fb(2, 0)), 1);
        }
    }

    proptest! {
        #[test]
        fn score_invariants(cells in proptest::collection::vec(1u64..40, 1..12)) {
            let counts = cells
                .iter()
                .enumerate()
                .map(|(i, &c)| (fb(i as u16 / 5, i as u16 % 5), c));
            let table = PartitionTable::from_counts(counts).unwrap();
            let s = score(&table);
            let parts = table.counts().len() as f64;

            prop_assert!(s.entropy >= -1e-12);
            prop_assert!(s.entropy <= parts.log2() + 1e-12);
            prop_assert!(s.worst_size >= 1 && s.worst_size <= table.total());
            prop_assert!(s.expected_size >= 1.0 - 1e-12);
            prop_assert!(s.expected_size <= s.worst_size as f64 + 1e-12);
            // Jensen: expected size is at least the uniform-split size.
            prop_assert!(s.expected_size >= table.total() as f64 / parts - 1e-9);
        }

        #[test]
        fn rescaling_counts_preserves_shape(
            cells in proptest::collection::vec(1u64..20, 1..10),
            scale in 2u64..6,
        ) {
            let base = PartitionTable::from_counts(
                cells.iter().enumerate().map(|(i, &c)| (fb(i as u16 / 5, i as u16 % 5), c)),
            )
            .unwrap();
            let scaled = PartitionTable::from_counts(
                cells.iter().enumerate().map(|(i, &c)| (fb(i as u16 / 5, i as u16 % 5), c * scale)),
            )
            .unwrap();
            let (s0, s1) = (score(&base), score(&scaled));
            // Entropy and part count are scale-free; the size scores scale
            // linearly, so every argmax/argmin is unchanged.
            prop_assert!((s0.entropy - s1.entropy).abs() < 1e-9);
            prop_assert_eq!(s0.nonempty_parts, s1.nonempty_parts);
            prop_assert_eq!(s0.worst_size * scale, s1.worst_size);
            prop_assert!((s0.expected_size * scale as f64 - s1.expected_size).abs() < 1e-6);
        }
    }
}
