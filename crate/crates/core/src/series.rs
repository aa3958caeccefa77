//! Truncated formal power series with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::Rational;

/// `Σ_{k=0}^{L} c_k z^k`, exact modulo `z^{L+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rational>,
}

impl SeriesQ {
    /// Coefficients `c_0..c_L`; the order is `coeffs.len() - 1`. An empty
    /// vector is treated as the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        SeriesQ { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesQ { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `1 / (1 - a z)` truncated.
    pub fn geometric(ratio: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = Rational::one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p *= ratio;
        }
        SeriesQ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesQ::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SeriesQ { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `z`; the order grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        SeriesQ { coeffs }
    }

    /// Division by `z`; requires a vanishing constant term. The order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("cannot divide by z: nonzero constant term".into()));
        }
        Ok(SeriesQ::new(self.coeffs[1..].to_vec()))
    }

    /// Multiplicative inverse; requires `c_0 ≠ 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InvalidArgument("series with zero constant term is not invertible".into()));
        }
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for k in 1..out.len() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// `self(inner(z))`; `inner` must have zero constant term. The result has
    /// the smaller of the two orders.
    pub fn compose(&self, inner: &SeriesQ) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("inner series must have zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = SeriesQ::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `self(g(w)) = w`, solved one coefficient
    /// at a time. Requires `c_0 = 0` and `c_1 ≠ 0`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("series to invert must vanish at 0".into()));
        }
        let a1 = self.coeff(1);
        if a1.is_zero() {
            return Err(Error::ZeroLinearCoefficient);
        }
        let order = self.order();
        let mut g = SeriesQ::zero(order);
        if order >= 1 {
            g.coeffs[1] = a1.recip();
        }
        for k in 2..=order {
            // With g_k still zero, the z^k coefficient of f(g) is
            // c + a1 g_k, so g_k = -c / a1.
            let c = self.truncate(k).compose(&g.truncate(k))?.coeff(k);
            g.coeffs[k] = -c / &a1;
        }
        Ok(g)
    }
}

impl<'a> Add<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;

    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;

    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ { coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;

    fn neg(self) -> SeriesQ {
        SeriesQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;

    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SeriesQ { coeffs: out }
    }
}

impl fmt::Display for SeriesQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
