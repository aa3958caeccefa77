//! Lazy enumeration of partition lattices and their intervals.
//!
//! Partitions are produced as restricted growth strings in lexicographic
//! order. The same backtracking walker handles `P(n)`, `NC(n)` and any
//! interval `[σ, π]` of either lattice.

use alloc::vec::Vec;

use super::{joins_without_crossing, SetPartition};
use crate::error::{Error, Result};
use crate::limits;

/// Streams the partitions `τ` with `lower ≤ τ ≤ upper`, optionally restricted
/// to noncrossing `τ`.
#[derive(Clone, Debug)]
pub struct PartitionStream {
    n: usize,
    lower: Option<Vec<usize>>,
    upper: Option<Vec<usize>>,
    noncrossing: bool,
    labels: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionStream {
    fn new(n: usize, lower: Option<Vec<usize>>, upper: Option<Vec<usize>>, noncrossing: bool) -> Self {
        PartitionStream {
            n,
            lower,
            upper,
            noncrossing,
            labels: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn valid(&self, label: usize) -> bool {
        let i = self.labels.len();
        let used = self.labels.iter().max().map_or(0, |m| m + 1);
        if label > used {
            return false;
        }
        if let Some(lower) = &self.lower {
            if let Some(mate) = (0..i).find(|&j| lower[j] == lower[i]) {
                return self.labels[mate] == label && self.compatible(label);
            }
        }
        label == used || self.compatible(label)
    }

    fn compatible(&self, label: usize) -> bool {
        let i = self.labels.len();
        if let Some(upper) = &self.upper {
            let first = self.labels.iter().position(|&l| l == label).unwrap();
            if upper[first] != upper[i] {
                return false;
            }
        }
        !self.noncrossing || joins_without_crossing(&self.labels, label)
    }

    fn next_label_from(&self, start: usize) -> Option<usize> {
        let used = self.labels.iter().max().map_or(0, |m| m + 1);
        (start..=used).find(|&l| self.valid(l))
    }

    /// Moves the deepest position to its next valid label, popping exhausted
    /// positions. Returns false once the whole tree is exhausted.
    fn bump(&mut self) -> bool {
        while let Some(last) = self.labels.pop() {
            if let Some(l) = self.next_label_from(last + 1) {
                self.labels.push(l);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.labels.len() < self.n {
            match self.next_label_from(0) {
                Some(l) => self.labels.push(l),
                None => {
                    if !self.bump() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for PartitionStream {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.bump() && self.fill()
        } else {
            self.started = true;
            self.fill()
        };
        if ok {
            Some(SetPartition::from_labels(&self.labels))
        } else {
            self.done = true;
            None
        }
    }
}

/// Every partition of `{1..n}`, `n ≤ 12`.
pub fn enumerate_all(n: usize) -> Result<PartitionStream> {
    limits::check("enumerate_all", n, limits::ALL_PARTITIONS_CAP)?;
    Ok(PartitionStream::new(n, None, None, false))
}

/// Every noncrossing partition of `{1..n}`, `n ≤ 14`.
pub fn enumerate_noncrossing(n: usize) -> Result<PartitionStream> {
    limits::check("enumerate_noncrossing", n, limits::NONCROSSING_CAP)?;
    Ok(PartitionStream::new(n, None, None, true))
}

/// Noncrossing `σ ≤ π`. `π` itself may be crossing.
pub fn noncrossing_refinements(pi: &SetPartition) -> Result<PartitionStream> {
    limits::check("noncrossing_refinements", pi.n(), limits::NONCROSSING_CAP)?;
    Ok(PartitionStream::new(pi.n(), None, Some(pi.labels()), true))
}

/// Noncrossing `σ ≥ π`. `π` itself may be crossing.
pub fn noncrossing_coarsenings(pi: &SetPartition) -> Result<PartitionStream> {
    limits::check("noncrossing_coarsenings", pi.n(), limits::NONCROSSING_CAP)?;
    Ok(PartitionStream::new(pi.n(), Some(pi.labels()), None, true))
}

/// The interval `[lower, upper]` of `P(n)` (or of `NC(n)` when `noncrossing`).
pub fn interval(lower: &SetPartition, upper: &SetPartition, noncrossing: bool) -> Result<PartitionStream> {
    if !lower.leq(upper)? {
        return Err(Error::NotRefinement);
    }
    let (what, cap) = if noncrossing {
        ("noncrossing interval", limits::NONCROSSING_CAP)
    } else {
        ("partition interval", limits::ALL_PARTITIONS_CAP)
    };
    limits::check(what, lower.n(), cap)?;
    Ok(PartitionStream::new(lower.n(), Some(lower.labels()), Some(upper.labels()), noncrossing))
}

/// The `2^(n-1)` interval partitions, ordered like their growth strings.
#[derive(Clone, Debug)]
pub struct IntervalPartitions {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for IntervalPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        if self.n == 0 {
            return Some(SetPartition::empty());
        }
        // Bit `n - 2 - i` set means a cut between elements `i + 1` and `i + 2`.
        let mut labels = Vec::with_capacity(self.n);
        let mut label = 0;
        labels.push(0);
        for i in 0..self.n - 1 {
            if mask >> (self.n - 2 - i) & 1 == 1 {
                label += 1;
            }
            labels.push(label);
        }
        Some(SetPartition::from_labels(&labels))
    }
}

pub fn enumerate_interval(n: usize) -> Result<IntervalPartitions> {
    limits::check("enumerate_interval", n, limits::INTERVAL_CAP)?;
    if n > 64 {
        return Err(Error::CapExceeded { what: "enumerate_interval", n, cap: 64 });
    }
    let end = if n == 0 { 1 } else { 1u64 << (n - 1) };
    Ok(IntervalPartitions { n, next: 0, end })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
    const CATALAN: [usize; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];

    #[test]
    fn bell_counts() {
        for (n, &b) in BELL.iter().enumerate() {
            assert_eq!(enumerate_all(n).unwrap().count(), b);
        }
    }

    #[test]
    fn catalan_counts() {
        for (n, &c) in CATALAN.iter().enumerate() {
            assert_eq!(enumerate_noncrossing(n).unwrap().count(), c);
        }
    }

    #[test]
    fn interval_counts_and_shapes() {
        assert_eq!(enumerate_interval(0).unwrap().count(), 1);
        assert_eq!(enumerate_interval(1).unwrap().count(), 1);
        assert_eq!(enumerate_interval(5).unwrap().count(), 16);
        let three: Vec<_> = enumerate_interval(3).unwrap().map(|p| alloc::format!("{p}")).collect();
        assert_eq!(three, vec!["1 2 3", "1 2|3", "1|2 3", "1|2|3"]);
        for n in 1..=10 {
            let all: Vec<_> = enumerate_interval(n).unwrap().collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|p| p.is_interval()));
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_all(13), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_noncrossing(15), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_interval(31), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn restricted_growth_order_and_uniqueness() {
        let all: Vec<_> = enumerate_all(6).unwrap().collect();
        let labels: Vec<_> = all.iter().map(|p| p.labels()).collect();
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let nc: Vec<_> = enumerate_noncrossing(6).unwrap().collect();
        let filtered: Vec<_> = all.into_iter().filter(|p| p.is_noncrossing()).collect();
        assert_eq!(nc, filtered);
    }

    #[test]
    fn refinements_and_coarsenings_match_filters() {
        for n in 0..=6 {
            let all: Vec<_> = enumerate_all(n).unwrap().collect();
            for pi in &all {
                let refs: BTreeSet<_> = noncrossing_refinements(pi).unwrap().collect();
                let coars: BTreeSet<_> = noncrossing_coarsenings(pi).unwrap().collect();
                for s in &all {
                    let nc = s.is_noncrossing();
                    assert_eq!(refs.contains(s), nc && s.leq(pi).unwrap());
                    assert_eq!(coars.contains(s), nc && pi.leq(s).unwrap());
                }
            }
        }
    }

    #[test]
    fn intervals_match_filters() {
        let all: Vec<_> = enumerate_all(5).unwrap().collect();
        for lo in &all {
            for hi in &all {
                if !lo.leq(hi).unwrap() {
                    assert_eq!(interval(lo, hi, false).err(), Some(Error::NotRefinement));
                    continue;
                }
                let got: Vec<_> = interval(lo, hi, false).unwrap().collect();
                let want: Vec<_> = all
                    .iter()
                    .filter(|s| lo.leq(s).unwrap() && s.leq(hi).unwrap())
                    .cloned()
                    .collect();
                assert_eq!(got, want);
                let got_nc: Vec<_> = interval(lo, hi, true).unwrap().collect();
                let want_nc: Vec<_> = want.into_iter().filter(|s| s.is_noncrossing()).collect();
                assert_eq!(got_nc, want_nc);
            }
        }
    }
}
