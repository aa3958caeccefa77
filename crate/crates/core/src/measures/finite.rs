//! The exact finite-`N` sums behind `St_π`.
//!
//! Splitting `A` into `N` equal pieces `A_1, …, A_N`, the sum of
//! `X_{i_1}^{k_1} ⋯ X_{i_n}^{k_n}` over index tuples whose kernel is exactly
//! `π` has expectation `(N)_{|π|} Σ_{σ ∈ NC, σ ≤ π^{(k)}} N^{-|σ|} R_σ(X)`,
//! where `π^{(k)}` replaces position `j` by a run of `k_j` equivalent points.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentInN, ProcessModel};
use crate::error::{Error, Result};
use crate::limits;
use crate::num::{falling_factorial, Rational};
use crate::partitions::{noncrossing_refinements, SetPartition};

/// `sums[j] = Σ R_σ` over noncrossing `σ ≤ π^{(k)}` with `j` blocks.
fn refinement_sums(pi: &SetPartition, k: &[usize], process: &ProcessModel) -> Result<Vec<Rational>> {
    if k.len() != pi.n() {
        return Err(Error::SizeMismatch { left: pi.n(), right: k.len() });
    }
    if k.contains(&0) {
        return Err(Error::InvalidArgument("multiplicities must be positive".into()));
    }
    let total: usize = k.iter().sum();
    limits::check("finite_n_expectation", total, limits::NONCROSSING_CAP)?;
    let expanded = pi.expand(k)?;
    let weights = process.weights(total)?;
    let mut sums = vec![Rational::zero(); total + 1];
    for sigma in noncrossing_refinements(&expanded)? {
        let mut term = Rational::one();
        for size in sigma.block_sizes() {
            term *= &weights[size];
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            sums[sigma.block_count()] += term;
        }
    }
    Ok(sums)
}

/// The finite-`N` expectation as an exact Laurent polynomial in `N`.
pub fn finite_n_laurent(pi: &SetPartition, k: &[usize], process: &ProcessModel) -> Result<LaurentInN> {
    let sums = refinement_sums(pi, k, process)?;
    let mut inner = LaurentInN::zero();
    for (j, s) in sums.into_iter().enumerate() {
        inner.add_term(-(j as i64), s);
    }
    let mut falling = LaurentInN::one();
    for c in 0..pi.block_count() as i64 {
        falling = &falling * &LaurentInN::shifted_n(c);
    }
    Ok(&falling * &inner)
}

/// The finite-`N` expectation at a concrete `N`. Zero when `N < |π|`, since
/// no index tuple then has kernel `π`.
pub fn finite_n_expectation(pi: &SetPartition, k: &[usize], process: &ProcessModel, big_n: u64) -> Result<Rational> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let sums = refinement_sums(pi, k, process)?;
    let falling = falling_factorial(big_n, pi.block_count());
    if falling.is_zero() {
        return Ok(Rational::zero());
    }
    let n = BigInt::from(big_n);
    let mut total = Rational::zero();
    let mut power = Rational::one();
    for s in sums {
        total += &s / &power;
        power *= &n;
    }
    Ok(total * Rational::from_integer(falling))
}

/// Leading exponent of the free Poisson (`t = 1`) finite-`N` expectation
/// compared with the crossing number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingOrder {
    /// `None` when the expression vanishes identically.
    pub max_exponent: Option<i64>,
    pub crossing_number: usize,
}

impl VanishingOrder {
    pub fn holds(&self) -> bool {
        match self.max_exponent {
            None => true,
            Some(e) => e <= -(self.crossing_number as i64),
        }
    }
}

pub fn vanishing_order(pi: &SetPartition) -> Result<VanishingOrder> {
    let process = ProcessModel::free_poisson(Rational::one())?;
    let ones = vec![1; pi.n()];
    let laurent = finite_n_laurent(pi, &ones, &process)?;
    Ok(VanishingOrder { max_exponent: laurent.max_exponent(), crossing_number: pi.crossing_number()? })
}

/// Whether the finite-`N` expectation decays at least like `N^{-c(π)}`.
pub fn vanishing_order_check(pi: &SetPartition) -> Result<bool> {
    Ok(vanishing_order(pi)?.holds())
}
