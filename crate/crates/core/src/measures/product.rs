//! Closed forms for `Pr_π` of the free Brownian motion and free Poisson process.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{pr_expectation, ProcessModel};
use crate::error::{Error, Result};
use crate::num::{pow, Rational};
use crate::partitions::{noncrossing_coarsenings, BlockRole, SetPartition};
use crate::transforms::{moments_from_cumulants, CumulantSeq};

/// `Pr_π(A)` for the free Brownian motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrownianProduct {
    /// `π` has an inner singleton and every noncrossing `σ ≥ π` has an inner
    /// singleton or a block of three or more, so every `St_σ` vanishes.
    InnerSingletonZero,
    /// `π` has an inner singleton but some coarsening merges its inner
    /// singletons into pairs without creating a new one, e.g. `1 4|2|3`.
    /// No closed form is claimed.
    Uncovered,
    /// `X^x_power · |A|^time_power · 0^zero_power`.
    Monomial { x_power: usize, time_power: usize, zero_power: usize },
}

impl BrownianProduct {
    pub fn is_zero(&self) -> bool {
        match self {
            BrownianProduct::InnerSingletonZero => true,
            BrownianProduct::Monomial { zero_power, .. } => *zero_power > 0,
            BrownianProduct::Uncovered => false,
        }
    }

    /// `φ` of the closed form for a free Brownian motion at time `t`.
    pub fn expectation(&self, t: &Rational) -> Result<Option<Rational>> {
        match self {
            BrownianProduct::Uncovered => Ok(None),
            BrownianProduct::InnerSingletonZero => Ok(Some(Rational::zero())),
            BrownianProduct::Monomial { zero_power, .. } if *zero_power > 0 => Ok(Some(Rational::zero())),
            BrownianProduct::Monomial { x_power, time_power, .. } => {
                let mut r = alloc::vec![Rational::zero(); (*x_power).max(2)];
                r[1] = t.clone();
                let m = moments_from_cumulants(&CumulantSeq::new(r)).get_or_one(*x_power)?;
                Ok(Some(m * pow(t, *time_power)))
            }
        }
    }
}

pub fn brownian_product_measure(pi: &SetPartition) -> Result<BrownianProduct> {
    if pi.has_inner_singleton()? {
        for sigma in noncrossing_coarsenings(pi)? {
            if !sigma.has_inner_singleton()? && sigma.block_sizes().all(|s| s <= 2) {
                return Ok(BrownianProduct::Uncovered);
            }
        }
        return Ok(BrownianProduct::InnerSingletonZero);
    }
    let (mut x_power, mut time_power, mut zero_power) = (0, 0, 0);
    for size in pi.block_sizes() {
        match size {
            1 => x_power += 1,
            2 => time_power += 1,
            _ => zero_power += 1,
        }
    }
    Ok(BrownianProduct::Monomial { x_power, time_power, zero_power })
}

/// Checks the hypothesis of the free Poisson closed form: whenever inner
/// blocks `U` and `V` are both covered by a block `W` and `U` lies entirely to
/// the left of `V`, some element of `W` sits strictly between them.
pub fn poisson_separation_predicate(pi: &SetPartition) -> Result<bool> {
    let roles = pi.classify_blocks()?;
    let above = pi.straddle_matrix();
    let blocks = pi.blocks();
    let k = blocks.len();
    let covers = |w: usize, u: usize| above[w][u] && !(0..k).any(|c| above[w][c] && above[c][u]);
    for w in 0..k {
        let covered: Vec<usize> = (0..k)
            .filter(|&u| roles.roles[u] == BlockRole::Inner && covers(w, u))
            .collect();
        for &u in &covered {
            for &v in &covered {
                let (u_max, v_min) = (*blocks[u].last().unwrap(), blocks[v][0]);
                if u_max < v_min && !blocks[w].iter().any(|&x| u_max < x && x < v_min) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Pr_π(A)` for the free Poisson process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoissonProduct {
    /// `X^outer · (1 + |A|)^inner`.
    Closed { outer: usize, inner: usize },
    /// The separation hypothesis fails; no closed form is claimed.
    NotCovered,
}

impl PoissonProduct {
    /// `φ` of the closed form for a free Poisson process at time `t`.
    pub fn expectation(&self, t: &Rational) -> Option<Rational> {
        match self {
            PoissonProduct::Closed { outer, inner } => {
                let r = CumulantSeq::new(alloc::vec![t.clone(); (*outer).max(1)]);
                let m = moments_from_cumulants(&r).get_or_one(*outer).ok()?;
                Some(m * pow(&(Rational::one() + t), *inner))
            }
            PoissonProduct::NotCovered => None,
        }
    }
}

pub fn poisson_product_measure(pi: &SetPartition) -> Result<PoissonProduct> {
    if !pi.is_noncrossing() {
        return Err(Error::Crossing);
    }
    if !poisson_separation_predicate(pi)? {
        return Ok(PoissonProduct::NotCovered);
    }
    let roles = pi.classify_blocks()?;
    Ok(PoissonProduct::Closed { outer: roles.outer_count, inner: roles.inner_count })
}

/// Compares the closed form with `φ(Pr_π)` computed from cumulants.
pub fn poisson_product_check(pi: &SetPartition, t: &Rational) -> Result<Option<bool>> {
    let closed = poisson_product_measure(pi)?;
    let Some(value) = closed.expectation(t) else {
        return Ok(None);
    };
    Ok(Some(value == pr_expectation(pi, &ProcessModel::free_poisson(t.clone())?)?))
}
