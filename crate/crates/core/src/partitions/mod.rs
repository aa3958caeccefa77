//! Set partitions of `{1..n}` and the lattices `P(n)`, `NC(n)`, `Int(n)`.
//!
//! A [`SetPartition`] is always stored canonically: blocks sorted by their
//! minimum, elements ascending inside each block. All indices are 1-based.

mod enumerate;
mod mobius;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;

pub use enumerate::{
    enumerate_all, enumerate_interval, enumerate_noncrossing, interval, noncrossing_coarsenings,
    noncrossing_refinements, IntervalPartitions, PartitionStream,
};
pub use mobius::{mobius, mobius_interval, mobius_nc, mobius_p, Lattice};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Whether a block of a noncrossing partition is straddled by another block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockRole {
    Inner,
    Outer,
}

/// Inner/outer tags for the blocks of a noncrossing partition, in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRoleLabeling {
    pub partition: SetPartition,
    pub roles: Vec<BlockRole>,
    pub inner_count: usize,
    pub outer_count: usize,
}

impl SetPartition {
    /// The unique partition of the empty set.
    pub fn empty() -> Self {
        SetPartition { n: 0, blocks: Vec::new() }
    }

    /// `0̂_n`: all singletons.
    pub fn discrete(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// `1̂_n`: a single block (empty for `n = 0`).
    pub fn full(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![(1..=n).collect()] };
        SetPartition { n, blocks }
    }

    /// Builds a partition from arbitrary blocks, checking that they are
    /// disjoint, non-empty and cover `1..=n` exactly.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &e in &block {
                if e == 0 || e > n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                if seen[e] {
                    return Err(Error::DuplicateElement(e));
                }
                seen[e] = true;
            }
            block.sort_unstable();
            out.push(block);
        }
        if let Some(missing) = (1..=n).find(|&i| !seen[i]) {
            return Err(Error::Parse(format!("element {missing} is not covered")));
        }
        out.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks: out })
    }

    /// Builds a partition from a per-element label (`labels[i]` is the block
    /// tag of element `i + 1`); any tag values may be used.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut index: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match index.iter().find(|(tag, _)| *tag == l) {
                Some(&(_, b)) => blocks[b].push(i + 1),
                None => {
                    index.push((l, blocks.len()));
                    blocks.push(vec![i + 1]);
                }
            }
        }
        SetPartition { n, blocks }
    }

    /// Parses the canonical text form, e.g. `"1 5 8|2 7|3|4 6"`.
    ///
    /// `n` defaults to the largest element. An explicit `n` larger than that
    /// appends trailing singletons; elements missing below the largest listed
    /// element are always rejected.
    pub fn parse_with_size(text: &str, n: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let mut blocks = Vec::new();
        if !text.is_empty() {
            for part in text.split('|') {
                let mut block = Vec::new();
                for tok in part.split_whitespace() {
                    let v: i64 = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))?;
                    if v <= 0 {
                        return Err(Error::Parse(format!("non-positive element {v}")));
                    }
                    block.push(v as usize);
                }
                if block.is_empty() {
                    return Err(Error::Parse("empty block".into()));
                }
                blocks.push(block);
            }
        }
        let max = blocks.iter().flatten().copied().max().unwrap_or(0);
        let mut seen = vec![false; max + 1];
        for &e in blocks.iter().flatten() {
            if seen[e] {
                return Err(Error::DuplicateElement(e));
            }
            seen[e] = true;
        }
        if let Some(gap) = (1..=max).find(|&i| !seen[i]) {
            return Err(Error::Parse(format!("element {gap} is missing")));
        }
        let n = match n {
            Some(n) if n < max => return Err(Error::ElementOutOfRange { element: max, n }),
            Some(n) => n,
            None => max,
        };
        blocks.extend((max + 1..=n).map(|i| vec![i]));
        SetPartition::from_blocks(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `|π|`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `labels()[i]` is the index of the block holding element `i + 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = b;
            }
        }
        labels
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Vec::len)
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() <= 1
    }

    pub fn is_interval(&self) -> bool {
        self.blocks.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let labels = self.labels();
        for block in &self.blocks {
            for w in block.windows(2) {
                let (a, b) = (w[0], w[1]);
                for c in a + 1..b {
                    let other = &self.blocks[labels[c - 1]];
                    if other[0] < a || other[other.len() - 1] > b {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn same_size(&self, other: &SetPartition) -> Result<()> {
        if self.n != other.n {
            Err(Error::SizeMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        self.same_size(other)?;
        let labels = other.labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&e| labels[e - 1] == labels[b[0] - 1])))
    }

    /// Common refinement: nonempty blockwise intersections.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.same_size(other)?;
        let (a, b) = (self.labels(), other.labels());
        let pairs: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x * self.n.max(1) + y).collect();
        Ok(SetPartition::from_labels(&pairs))
    }

    /// Join in `P(n)`: transitive closure of the union. May be crossing even
    /// for noncrossing inputs.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        self.same_size(other)?;
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for block in self.blocks.iter().chain(&other.blocks) {
            for &e in &block[1..] {
                let (r1, r2) = (find(&mut parent, block[0] - 1), find(&mut parent, e - 1));
                if r1 != r2 {
                    parent[r1.max(r2)] = r1.min(r2);
                }
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|i| find(&mut parent, i)).collect();
        Ok(SetPartition::from_labels(&labels))
    }

    /// `π^op`: the partition read right to left.
    pub fn opposite(&self) -> SetPartition {
        let n = self.n;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| n + 1 - e).collect())
            .collect();
        SetPartition::from_blocks(n, blocks).expect("reversal preserves validity")
    }

    /// Replaces point `i` by `sizes[i-1]` consecutive points in the same block.
    pub fn expand(&self, sizes: &[usize]) -> Result<SetPartition> {
        if sizes.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "expansion vector has length {} but the partition has n = {}",
                sizes.len(),
                self.n
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument("expansion sizes must be at least 1".into()));
        }
        let labels = self.labels();
        let expanded: Vec<usize> = labels
            .iter()
            .zip(sizes)
            .flat_map(|(&l, &u)| core::iter::repeat_n(l, u))
            .collect();
        Ok(SetPartition::from_labels(&expanded))
    }

    /// The `k`-thickening `π^k`.
    pub fn thicken(&self, k: usize) -> Result<SetPartition> {
        if k == 0 {
            return Err(Error::InvalidArgument("thickening factor must be at least 1".into()));
        }
        self.expand(&vec![k; self.n])
    }

    /// `π + σ`: `σ` shifted to follow `π`.
    pub fn direct_sum(&self, other: &SetPartition) -> SetPartition {
        let shift = self.n;
        let mut blocks = self.blocks.clone();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|b| b.iter().map(|&e| e + shift).collect::<Vec<_>>()),
        );
        SetPartition { n: self.n + other.n, blocks }
    }

    /// `m π = π + π + ... + π`.
    pub fn repeat(&self, m: usize) -> SetPartition {
        (0..m).fold(SetPartition::empty(), |acc, _| acc.direct_sum(self))
    }

    fn straddles(outer: &[usize], inner: &[usize]) -> bool {
        let k = inner[0];
        outer[0] < k && outer[outer.len() - 1] > k && outer.iter().any(|&e| e < k)
            && outer.iter().any(|&e| e > k)
    }

    fn require_noncrossing(&self) -> Result<()> {
        if self.is_noncrossing() {
            Ok(())
        } else {
            Err(Error::Crossing)
        }
    }

    pub fn classify_blocks(&self) -> Result<BlockRoleLabeling> {
        self.require_noncrossing()?;
        let roles: Vec<BlockRole> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let inner = self
                    .blocks
                    .iter()
                    .enumerate()
                    .any(|(j, c)| j != i && Self::straddles(c, b));
                if inner {
                    BlockRole::Inner
                } else {
                    BlockRole::Outer
                }
            })
            .collect();
        let inner_count = roles.iter().filter(|r| **r == BlockRole::Inner).count();
        Ok(BlockRoleLabeling {
            partition: self.clone(),
            outer_count: roles.len() - inner_count,
            inner_count,
            roles,
        })
    }

    pub fn has_inner_singleton(&self) -> Result<bool> {
        let labeling = self.classify_blocks()?;
        Ok(self
            .blocks
            .iter()
            .zip(&labeling.roles)
            .any(|(b, r)| *r == BlockRole::Inner && b.len() == 1))
    }

    /// Height order on blocks: `above[i][j]` iff block `i` straddles block `j`.
    pub(crate) fn straddle_matrix(&self) -> Vec<Vec<bool>> {
        let k = self.blocks.len();
        let mut m = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                m[i][j] = i != j && Self::straddles(&self.blocks[i], &self.blocks[j]);
            }
        }
        m
    }

    /// Kreweras complement with the barred points placed to the right:
    /// `1 1̄ 2 2̄ ... n n̄`. Computed as the cycles of `π⁻¹ γ` where
    /// `γ = (1 2 ... n)` and each block is read as an increasing cycle.
    pub fn kreweras(&self) -> Result<SetPartition> {
        self.require_noncrossing()?;
        let n = self.n;
        let mut inv = vec![0; n];
        for b in &self.blocks {
            for (idx, &e) in b.iter().enumerate() {
                let next = b[(idx + 1) % b.len()];
                inv[next - 1] = e - 1;
            }
        }
        let perm: Vec<usize> = (0..n).map(|i| inv[(i + 1) % n]).collect();
        let mut labels = vec![usize::MAX; n];
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while labels[x] == usize::MAX {
                labels[x] = start;
                x = perm[x];
            }
        }
        Ok(SetPartition::from_labels(&labels))
    }

    /// `c(π)`: the fewest extra blocks needed to refine `π` into a
    /// noncrossing partition. Branch and bound over noncrossing refinements.
    pub fn crossing_number(&self) -> Result<usize> {
        limits::check("crossing_number", self.n, limits::CROSSING_NUMBER_CAP)?;
        if self.is_noncrossing() {
            return Ok(0);
        }
        let upper = self.labels();
        let mut labels = Vec::with_capacity(self.n);
        let mut best = self.n;
        min_nc_refinement(&upper, &mut labels, 0, &mut best);
        Ok(best - self.blocks.len())
    }

    /// `c(π)` by scanning every noncrossing refinement.
    pub fn crossing_number_exhaustive(&self) -> Result<usize> {
        let best = noncrossing_refinements(self)?
            .map(|s| s.block_count())
            .min()
            .unwrap_or(0);
        Ok(best - self.blocks.len())
    }
}

/// Appending a new element to block `label` keeps the prefix noncrossing iff
/// no element strictly between the block's last element and the new one
/// belongs to a block that started before that last element.
pub(crate) fn joins_without_crossing(labels: &[usize], label: usize) -> bool {
    let i = labels.len();
    let Some(last) = (0..i).rev().find(|&j| labels[j] == label) else {
        return true;
    };
    (last + 1..i).all(|c| {
        let first = labels.iter().position(|&l| l == labels[c]).unwrap();
        first > last
    })
}

fn min_nc_refinement(upper: &[usize], labels: &mut Vec<usize>, used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    let i = labels.len();
    if i == upper.len() {
        *best = used;
        return;
    }
    for l in 0..used {
        let first = labels.iter().position(|&x| x == l).unwrap();
        if upper[first] == upper[i] && joins_without_crossing(labels, l) {
            labels.push(l);
            min_nc_refinement(upper, labels, used, best);
            labels.pop();
        }
    }
    labels.push(used);
    min_nc_refinement(upper, labels, used + 1, best);
    labels.pop();
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str("|")?;
            }
            for (ei, e) in b.iter().enumerate() {
                if ei > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::parse_with_size(s, None)
    }
}

/// Canonical text of a partition; same as `Display`.
pub fn render(p: &SetPartition) -> String {
    format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_paper_example() {
        let pi = p("1 5 8|2 7|3|4 6");
        assert_eq!(pi.n(), 8);
        assert_eq!(pi.blocks(), &[vec![1, 5, 8], vec![2, 7], vec![3], vec![4, 6]]);
        assert_eq!(render(&pi), "1 5 8|2 7|3|4 6");
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(render(&p("4 2|3 1")), "1 3|2 4");
        assert_eq!(p("1"), SetPartition::discrete(1));
        assert_eq!(p("1"), SetPartition::full(1));
        assert_eq!(p(""), SetPartition::empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!("1 2|2".parse::<SetPartition>(), Err(Error::DuplicateElement(2)));
        assert!(matches!("1|3".parse::<SetPartition>(), Err(Error::Parse(_))));
        assert!(matches!("0 1".parse::<SetPartition>(), Err(Error::Parse(_))));
        assert!(matches!("-1".parse::<SetPartition>(), Err(Error::Parse(_))));
        assert!(matches!("1||2".parse::<SetPartition>(), Err(Error::Parse(_))));
        assert!(SetPartition::parse_with_size("1 2", Some(1)).is_err());
    }

    #[test]
    fn parse_trailing_singletons() {
        let pi = SetPartition::parse_with_size("1 2", Some(4)).unwrap();
        assert_eq!(render(&pi), "1 2|3|4");
    }

    #[test]
    fn noncrossing_examples() {
        assert!(!p("1 3|2 4").is_noncrossing());
        assert!(SetPartition::full(6).is_noncrossing());
        assert!(SetPartition::discrete(6).is_noncrossing());
        // 2 ~ 7 and 4 ~ 6 nest, but 1 ~ 5 crosses 2 ~ 7.
        assert!(!p("1 5 8|2 7|3|4 6").is_noncrossing());
        assert!(p("1 4|2 3").is_noncrossing());
        assert!(p("1 6|2 3|4 5").is_noncrossing());
    }

    #[test]
    fn noncrossing_matches_quadruple_scan() {
        for n in 0..=7 {
            for pi in enumerate_all(n).unwrap() {
                let l = pi.labels();
                let mut crossing = false;
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            for d in c + 1..n {
                                if l[a] == l[c] && l[b] == l[d] && l[a] != l[b] {
                                    crossing = true;
                                }
                            }
                        }
                    }
                }
                assert_eq!(pi.is_noncrossing(), !crossing, "{pi}");
            }
        }
    }

    #[test]
    fn lattice_operation_examples() {
        let full = SetPartition::full(4);
        let cross = p("1 3|2 4");
        assert_eq!(full.meet(&cross).unwrap(), cross);
        assert_eq!(SetPartition::discrete(4).join(&cross).unwrap(), cross);
        assert_eq!(p("1 2|3").meet(&p("1|2 3")).unwrap(), SetPartition::discrete(3));
        assert_eq!(p("1 2|3").join(&p("1|2 3")).unwrap(), SetPartition::full(3));
        assert_eq!(
            p("1 2|3").leq(&p("1 2|3 4")),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
        assert!(cross.leq(&full).unwrap());
        assert!(!full.leq(&cross).unwrap());
    }

    #[test]
    fn join_of_noncrossing_may_cross() {
        let j = p("1 3|2|4").join(&p("1|2 4|3")).unwrap();
        assert_eq!(j, p("1 3|2 4"));
        assert!(!j.is_noncrossing());
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(p("1 2|3").opposite(), p("1|2 3"));
        assert_eq!(SetPartition::full(5).opposite(), SetPartition::full(5));
        assert_eq!(SetPartition::discrete(5).opposite(), SetPartition::discrete(5));
        let pi = p("1 5 8|2 7|3|4 6");
        assert_eq!(pi.opposite().opposite(), pi);
    }

    #[test]
    fn thicken_and_expand() {
        assert_eq!(p("1 2").thicken(2).unwrap(), SetPartition::full(4));
        let pi = p("1 3|2");
        assert_eq!(pi.thicken(1).unwrap(), pi);
        assert_eq!(p("1|2").expand(&[2, 1]).unwrap(), p("1 2|3"));
        assert_eq!(pi.thicken(2).unwrap(), p("1 2 5 6|3 4"));
        assert!(pi.expand(&[1, 1]).is_err());
        assert!(pi.expand(&[1, 0, 1]).is_err());
        assert!(pi.thicken(0).is_err());
    }

    #[test]
    fn direct_sums() {
        let s = SetPartition::full(2).direct_sum(&SetPartition::discrete(1));
        assert_eq!(s, p("1 2|3"));
        let pi = p("1 3|2");
        assert_eq!(pi.direct_sum(&SetPartition::empty()), pi);
        assert_eq!(SetPartition::full(1).repeat(2), SetPartition::discrete(2));
        assert_eq!(p("1 2").repeat(3), p("1 2|3 4|5 6"));
    }

    #[test]
    fn block_roles() {
        let l = p("1 3|2").classify_blocks().unwrap();
        assert_eq!(l.roles, vec![BlockRole::Outer, BlockRole::Inner]);
        assert_eq!((l.inner_count, l.outer_count), (1, 1));
        let l = SetPartition::discrete(5).classify_blocks().unwrap();
        assert_eq!((l.inner_count, l.outer_count), (0, 5));
        let l = p("1 2|3|4 5 6").classify_blocks().unwrap();
        assert_eq!((l.inner_count, l.outer_count), (0, 3));
        assert_eq!(p("1 3|2 4").classify_blocks(), Err(Error::Crossing));
    }

    #[test]
    fn interval_partitions_have_no_inner_blocks() {
        for pi in enumerate_interval(7).unwrap() {
            let l = pi.classify_blocks().unwrap();
            assert_eq!(l.inner_count, 0);
            assert_eq!(l.outer_count, pi.block_count());
        }
    }

    #[test]
    fn inner_singletons() {
        assert!(p("1 3|2").has_inner_singleton().unwrap());
        assert!(!SetPartition::discrete(4).has_inner_singleton().unwrap());
        assert!(!p("1 4|2 3").has_inner_singleton().unwrap());
        assert_eq!(p("1 3|2 4").has_inner_singleton(), Err(Error::Crossing));
    }

    #[test]
    fn kreweras_examples() {
        for n in 1..=6 {
            assert_eq!(SetPartition::discrete(n).kreweras().unwrap(), SetPartition::full(n));
            assert_eq!(SetPartition::full(n).kreweras().unwrap(), SetPartition::discrete(n));
        }
        assert_eq!(p("1 2|3").kreweras().unwrap(), p("1|2 3"));
        assert_eq!(SetPartition::empty().kreweras().unwrap(), SetPartition::empty());
        assert_eq!(p("1 3|2 4").kreweras(), Err(Error::Crossing));
    }

    /// Largest noncrossing partition of the barred points compatible with `π`
    /// on the interleaving `1 1̄ 2 2̄ ...`, found by brute force.
    fn kreweras_by_interleaving(pi: &SetPartition) -> SetPartition {
        let n = pi.n();
        let mut best: Option<SetPartition> = None;
        for k in enumerate_noncrossing(n).unwrap() {
            let mut labels = vec![0; 2 * n];
            for (i, l) in pi.labels().into_iter().enumerate() {
                labels[2 * i] = l;
            }
            for (i, l) in k.labels().into_iter().enumerate() {
                labels[2 * i + 1] = n + l;
            }
            if !SetPartition::from_labels(&labels).is_noncrossing() {
                continue;
            }
            best = match best {
                Some(b) if k.block_count() >= b.block_count() => Some(b),
                _ => Some(k),
            };
        }
        best.unwrap()
    }

    #[test]
    fn kreweras_matches_interleaving_definition() {
        for n in 1..=6 {
            for pi in enumerate_noncrossing(n).unwrap() {
                assert_eq!(pi.kreweras().unwrap(), kreweras_by_interleaving(&pi), "{pi}");
            }
        }
    }

    #[test]
    fn crossing_numbers() {
        assert_eq!(p("1 3|2 4").crossing_number().unwrap(), 1);
        assert_eq!(p("1 3 5|2 4 6").crossing_number().unwrap(), 2);
        assert_eq!(p("1 4|2 3").crossing_number().unwrap(), 0);
        assert_eq!(p("1 3 5|2 4 6").crossing_number_exhaustive().unwrap(), 2);
        assert!(matches!(
            SetPartition::full(15).crossing_number(),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn crossing_number_matches_exhaustive_search() {
        for n in 0..=7 {
            for pi in enumerate_all(n).unwrap() {
                assert_eq!(
                    pi.crossing_number().unwrap(),
                    pi.crossing_number_exhaustive().unwrap(),
                    "{pi}"
                );
            }
        }
    }
}
