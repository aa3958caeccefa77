//! Products `ψ_{|B_1|} ψ_{|B_2|} ⋯` of stochastic measures, expanded over `St_σ`.

use num_traits::Zero;

use super::{pr_expectation, st_expectation, Combination, ProcessModel};
use crate::error::Result;
use crate::limits;
use crate::num::{binomial, sign, Rational};
use crate::partitions::{enumerate_noncrossing, mobius_interval, noncrossing_refinements, Lattice, SetPartition};

/// The noncrossing `σ` with `σ ∧ π = 0̂`: no block of `σ` meets a block of
/// `π` twice.
pub fn ito_expand(pi: &SetPartition) -> Result<alloc::vec::Vec<SetPartition>> {
    limits::check("ito_expand", pi.n(), limits::NONCROSSING_CAP)?;
    let labels = pi.labels();
    let mut out = alloc::vec::Vec::new();
    for sigma in enumerate_noncrossing(pi.n())? {
        let separated = sigma.blocks().iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(i, &x)| b[..i].iter().all(|&y| labels[x - 1] != labels[y - 1]))
        });
        if separated {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// `φ(Π_{B ∈ π} ψ_{|B|})` as the sum of `φ(St_σ)` over [`ito_expand`].
pub fn ito_expectation(pi: &SetPartition, process: &ProcessModel) -> Result<Rational> {
    let mut total = Rational::zero();
    for sigma in ito_expand(pi)? {
        total += st_expectation(&sigma, process)?;
    }
    Ok(total)
}

/// `Σ_{σ ≤ π} μ(0̂, σ) Pr_σ` over the stated lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusExpansion {
    pub lattice: Lattice,
    pub terms: Combination,
}

impl MobiusExpansion {
    pub fn expectation(&self, process: &ProcessModel) -> Result<Rational> {
        self.terms.evaluate(|sigma| pr_expectation(sigma, process))
    }
}

/// The Möbius form of the product, over `NC(k)` when `π` is noncrossing and
/// over `P(k)` otherwise. For crossing `π` the `NC(k)` sum misses the
/// contribution of `St_σ` for every noncrossing `σ` whose meet with `π` is a
/// nontrivial crossing partition, so only the `P(k)` form equals the product.
pub fn ito_mobius_expand(pi: &SetPartition) -> Result<MobiusExpansion> {
    let lattice = if pi.is_noncrossing() { Lattice::NonCrossing } else { Lattice::All };
    ito_mobius_expand_in(pi, lattice)
}

/// [`ito_mobius_expand`] with the lattice chosen by the caller. For crossing
/// `π` and [`Lattice::NonCrossing`] the sum runs over noncrossing `σ ≤ π`.
pub fn ito_mobius_expand_in(pi: &SetPartition, lattice: Lattice) -> Result<MobiusExpansion> {
    let bottom = SetPartition::discrete(pi.n());
    let mut terms = Combination::default();
    match lattice {
        Lattice::All => {
            limits::check("ito_mobius_expand", pi.n(), limits::ALL_PARTITIONS_CAP)?;
            for (sigma, mu) in mobius_interval(&bottom, pi, Lattice::All)? {
                terms.add(mu, sigma);
            }
        }
        Lattice::NonCrossing if pi.is_noncrossing() => {
            limits::check("ito_mobius_expand", pi.n(), limits::NONCROSSING_CAP)?;
            for (sigma, mu) in mobius_interval(&bottom, pi, Lattice::NonCrossing)? {
                terms.add(mu, sigma);
            }
        }
        Lattice::NonCrossing => {
            // [0̂, σ] in NC(k) is the product of NC(|B|) over the blocks of σ.
            for sigma in noncrossing_refinements(pi)? {
                let mu = sigma.block_sizes().map(block_mobius).product();
                terms.add(mu, sigma);
            }
        }
    }
    Ok(MobiusExpansion { lattice, terms })
}

/// `φ` of [`ito_mobius_expand`].
pub fn ito_mobius_expectation(pi: &SetPartition, process: &ProcessModel) -> Result<Rational> {
    ito_mobius_expand(pi)?.expectation(process)
}

/// `μ_NC(0̂_s, 1̂_s) = (-1)^{s-1} C_{s-1}`.
fn block_mobius(s: usize) -> Rational {
    let m = s - 1;
    let catalan = binomial(2 * m, m) / num_bigint::BigInt::from(m + 1);
    sign(m % 2 == 1) * Rational::from_integer(catalan)
}
