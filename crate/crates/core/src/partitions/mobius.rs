//! Möbius functions of `P(n)` and `NC(n)` by inversion of the zeta function.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{interval, SetPartition};
use crate::error::{Error, Result};
use crate::num::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    All,
    NonCrossing,
}

/// `μ(σ, τ)` for every `τ` in `[σ, π]`, in growth-string order of `τ`.
///
/// Uses `μ(σ, σ) = 1` and `μ(σ, τ) = -Σ_{σ ≤ ρ < τ} μ(σ, ρ)`, processing the
/// interval from the finest element upward so each value is computed once.
pub fn mobius_interval(
    sigma: &SetPartition,
    pi: &SetPartition,
    lattice: Lattice,
) -> Result<Vec<(SetPartition, Rational)>> {
    let nc = lattice == Lattice::NonCrossing;
    if nc && !(sigma.is_noncrossing() && pi.is_noncrossing()) {
        return Err(Error::Crossing);
    }
    let elems: Vec<SetPartition> = interval(sigma, pi, nc)?.collect();
    let labels: Vec<Vec<usize>> = elems.iter().map(SetPartition::labels).collect();
    // Coarser partitions have fewer blocks; process by decreasing block count.
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(elems[i].block_count()));
    let leq = |a: usize, b: usize| {
        elems[a]
            .blocks()
            .iter()
            .all(|blk| blk.iter().all(|&e| labels[b][e - 1] == labels[b][blk[0] - 1]))
    };
    let mut mu: Vec<Option<Rational>> = alloc::vec![None; elems.len()];
    for (pos, &t) in order.iter().enumerate() {
        let value = if pos == 0 {
            Rational::one()
        } else {
            let mut acc = Rational::zero();
            for &r in &order[..pos] {
                if elems[r].block_count() > elems[t].block_count() && leq(r, t) {
                    acc -= mu[r].as_ref().unwrap();
                }
            }
            acc
        };
        mu[t] = Some(value);
    }
    Ok(elems.into_iter().zip(mu.into_iter().map(Option::unwrap)).collect())
}

pub fn mobius(sigma: &SetPartition, pi: &SetPartition, lattice: Lattice) -> Result<Rational> {
    let table = mobius_interval(sigma, pi, lattice)?;
    Ok(table
        .into_iter()
        .find(|(t, _)| t == pi)
        .map(|(_, m)| m)
        .expect("upper end lies in its own interval"))
}

pub fn mobius_nc(sigma: &SetPartition, pi: &SetPartition) -> Result<Rational> {
    mobius(sigma, pi, Lattice::NonCrossing)
}

pub fn mobius_p(sigma: &SetPartition, pi: &SetPartition) -> Result<Rational> {
    mobius(sigma, pi, Lattice::All)
}
