//! Weighted sums over noncrossing partitions.
//!
//! For a word `w = (w_1, ..., w_n)` of positive integers and a weight sequence
//! `κ`, [`NoncrossingSum::eval`] returns
//!
//! ```text
//! Σ_{π ∈ NC(n)} Π_{B ∈ π} κ(Σ_{j ∈ B} w_j)
//! ```
//!
//! without enumerating `NC(n)`: the block containing the first letter splits
//! the rest of the word into independent noncrossing gaps. Results for every
//! sub-word are memoized, so evaluating many related words (all the words of
//! a polynomial product, say) shares the work.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::Rational;

#[derive(Clone, Debug)]
pub struct NoncrossingSum {
    weights: Vec<Rational>,
    closed: BTreeMap<Vec<usize>, Rational>,
    open: BTreeMap<(Vec<usize>, usize), Rational>,
}

impl NoncrossingSum {
    /// `weights[k]` is `κ(k)`; index 0 is never read.
    pub fn new(weights: Vec<Rational>) -> Self {
        NoncrossingSum { weights, closed: BTreeMap::new(), open: BTreeMap::new() }
    }

    pub fn max_weight(&self) -> usize {
        self.weights.len().saturating_sub(1)
    }

    pub fn eval(&mut self, word: &[usize]) -> Result<Rational> {
        let total: usize = word.iter().sum();
        if total > self.max_weight() {
            return Err(Error::Truncated { needed: total, available: self.max_weight() });
        }
        Ok(self.closed_sum(word))
    }

    fn closed_sum(&mut self, word: &[usize]) -> Rational {
        if word.is_empty() {
            return Rational::one();
        }
        if let Some(v) = self.closed.get(word) {
            return v.clone();
        }
        let v = self.open_sum(&word[1..], word[0]);
        self.closed.insert(word.to_vec(), v.clone());
        v
    }

    /// Sum over noncrossing partitions of `rest` together with an open block
    /// sitting to its left that has accumulated weight `acc` and may still
    /// absorb letters of `rest`.
    fn open_sum(&mut self, rest: &[usize], acc: usize) -> Rational {
        let key = (rest.to_vec(), acc);
        if let Some(v) = self.open.get(&key) {
            return v.clone();
        }
        let mut total = Rational::zero();
        let close = self.weights[acc].clone();
        if !close.is_zero() {
            total += close * self.closed_sum(rest);
        }
        for q in 0..rest.len() {
            let gap = self.closed_sum(&rest[..q]);
            if gap.is_zero() {
                continue;
            }
            total += gap * self.open_sum(&rest[q + 1..], acc + rest[q]);
        }
        self.open.insert(key, total.clone());
        total
    }
}
