//! Free moment/cumulant calculus.
//!
//! Moments and free cumulants are related by `m_n = Σ_{σ ∈ NC(n)} R_σ`.
//! [`moments_from_cumulants`] evaluates that sum directly; the inverse
//! direction solves the equivalent functional equation
//! `m_n = Σ_s r_s [z^{n-s}] M(z)^s` order by order.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncsum::NoncrossingSum;
use crate::num::Rational;
use crate::partitions::{enumerate_noncrossing, SetPartition};
use crate::series::SeriesQ;

/// Moments `m_1..m_L`; `m_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq(Vec<Rational>);

/// Free cumulants `r_1..r_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantSeq(Vec<Rational>);

macro_rules! sequence_impl {
    ($ty:ident, $what:literal) => {
        impl $ty {
            pub fn new(values: Vec<Rational>) -> Self {
                $ty(values)
            }

            /// Truncation order `L`.
            pub fn order(&self) -> usize {
                self.0.len()
            }

            pub fn values(&self) -> &[Rational] {
                &self.0
            }

            pub fn into_values(self) -> Vec<Rational> {
                self.0
            }

            #[doc = concat!("The ", $what, " of order `n` (1-based).")]
            pub fn get(&self, n: usize) -> Result<Rational> {
                if n == 0 || n > self.0.len() {
                    return Err(Error::Truncated { needed: n, available: self.0.len() });
                }
                Ok(self.0[n - 1].clone())
            }

            pub fn truncate(&self, order: usize) -> Self {
                $ty(self.0.iter().take(order).cloned().collect())
            }
        }
    };
}

sequence_impl!(MomentSeq, "moment");
sequence_impl!(CumulantSeq, "free cumulant");

impl MomentSeq {
    /// `m_n` with the convention `m_0 = 1`.
    pub fn get_or_one(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            Ok(Rational::one())
        } else {
            self.get(n)
        }
    }
}

/// Cumulants add under free additive convolution.
impl Add for &CumulantSeq {
    type Output = CumulantSeq;

    fn add(self, rhs: &CumulantSeq) -> CumulantSeq {
        CumulantSeq(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub fn moments_from_cumulants(r: &CumulantSeq) -> MomentSeq {
    let mut weights = Vec::with_capacity(r.order() + 1);
    weights.push(Rational::zero());
    weights.extend(r.values().iter().cloned());
    let mut nc = NoncrossingSum::new(weights);
    MomentSeq(
        (1..=r.order())
            .map(|n| nc.eval(&vec![1; n]).expect("word weight equals its length"))
            .collect(),
    )
}

pub fn cumulants_from_moments(m: &MomentSeq) -> CumulantSeq {
    let order = m.order();
    let mut series = vec![Rational::one()];
    series.extend(m.values().iter().cloned());
    let big_m = SeriesQ::new(series);
    // powers[s] = M(z)^s
    let mut powers = vec![SeriesQ::one(order)];
    for s in 1..order {
        let next = &powers[s - 1] * &big_m;
        powers.push(next);
    }
    let mut r: Vec<Rational> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut value = m.0[n - 1].clone();
        for s in 1..n {
            value -= &r[s - 1] * powers[s].coeff(n - s);
        }
        r.push(value);
    }
    CumulantSeq(r)
}

fn block_product(pi: &SetPartition, pick: impl Fn(usize) -> Result<Rational>) -> Result<Rational> {
    let mut acc = Rational::one();
    for size in pi.block_sizes() {
        acc *= pick(size)?;
    }
    Ok(acc)
}

/// `M_π = Π_{B ∈ π} m_{|B|}`.
pub fn m_pi(pi: &SetPartition, m: &MomentSeq) -> Result<Rational> {
    block_product(pi, |k| m.get(k))
}

/// `R_π = Π_{B ∈ π} r_{|B|}`; defined for crossing `π` as well.
pub fn r_pi(pi: &SetPartition, r: &CumulantSeq) -> Result<Rational> {
    block_product(pi, |k| r.get(k))
}

/// `φ(x_1 y_1 ⋯ x_n y_n)` for `{x_i}` free from `{y_i}`, with all `x_i`
/// distributed like `x` and all `y_i` like `y`:
/// `Σ_{π ∈ NC(n)} R_{K(π)}(x) M_π(y)`.
pub fn alternating_moment(x: &CumulantSeq, y: &MomentSeq, n: usize) -> Result<Rational> {
    let available = x.order().min(y.order());
    if n > available {
        return Err(Error::Truncated { needed: n, available });
    }
    let mut total = Rational::zero();
    for pi in enumerate_noncrossing(n)? {
        let k = pi.kreweras()?;
        total += r_pi(&k, x)? * m_pi(&pi, y)?;
    }
    Ok(total)
}

/// Cumulants of the time-`t` marginal of a free convolution semigroup.
pub fn scale_time(r: &CumulantSeq, t: &Rational) -> CumulantSeq {
    CumulantSeq(r.0.iter().map(|c| c * t).collect())
}

/// Cumulants of `Z - φ(Z)`.
pub fn center(r: &CumulantSeq) -> CumulantSeq {
    let mut out = r.clone();
    if let Some(first) = out.0.first_mut() {
        *first = Rational::zero();
    }
    out
}

/// `R(z) = Σ_{n ≥ 1} r_n z^{n-1}`, of order `L - 1`.
pub fn r_series(r: &CumulantSeq) -> SeriesQ {
    SeriesQ::new(r.0.clone())
}

pub fn cumulants_from_r_series(big_r: &SeriesQ) -> CumulantSeq {
    CumulantSeq(big_r.coeffs().to_vec())
}

/// `S(w) = α^{-1}(w) / w` with `α(z) = z R(z)`.
pub fn s_from_r(big_r: &SeriesQ) -> Result<SeriesQ> {
    if big_r.coeff(0).is_zero() {
        return Err(Error::ZeroLinearCoefficient);
    }
    big_r.shift_up().reversion()?.shift_down()
}

/// Inverse of [`s_from_r`].
pub fn r_from_s(big_s: &SeriesQ) -> Result<SeriesQ> {
    if big_s.coeff(0).is_zero() {
        return Err(Error::ZeroLinearCoefficient);
    }
    big_s.shift_up().reversion()?.shift_down()
}

/// Free cumulants of `y = s x s` for a standard semicircular `s` free from
/// `x`: `r_n(y) = m_n(x)`, the free compound Poisson law with jump
/// distribution that of `x`.
pub fn sandwich_transform(x_moments: &MomentSeq) -> CumulantSeq {
    CumulantSeq(x_moments.0.clone())
}
