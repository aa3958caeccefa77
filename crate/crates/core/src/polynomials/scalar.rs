use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::TPoly;
use crate::num::Rational;

/// A polynomial in one commuting symbol `X` with coefficients in `ℚ[t]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScalarPolynomial {
    coeffs: Vec<TPoly>,
}

impl ScalarPolynomial {
    pub fn new(mut coeffs: Vec<TPoly>) -> Self {
        while coeffs.last().is_some_and(TPoly::is_zero) {
            coeffs.pop();
        }
        ScalarPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TPoly::one())
    }

    pub fn constant(c: TPoly) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![TPoly::zero(), TPoly::one()])
    }

    /// `c X^k`.
    pub fn monomial(k: usize, c: TPoly) -> Self {
        let mut coeffs = vec![TPoly::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Coefficients in `t`-free form: `Σ c_k X^k`.
    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs.into_iter().map(TPoly::constant).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^k`.
    pub fn coeff(&self, k: usize) -> TPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes a value for `t`.
    pub fn eval_t(&self, t: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| TPoly::constant(c.eval(t))).collect())
    }

    /// Coefficients in `X` when no `t` remains.
    pub fn constant_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(TPoly::as_constant).collect()
    }
}

impl Add for &ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn add(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPolynomial::new((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn sub(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPolynomial::new((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn neg(self) -> ScalarPolynomial {
        ScalarPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn mul(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPolynomial::zero();
        }
        let mut out = vec![TPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ScalarPolynomial::new(out)
    }
}

/// Writes a coefficient from `ℚ[t]` in front of a monomial. Multi-term
/// coefficients are parenthesized; `±1` in front of a non-empty monomial is
/// elided.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &TPoly, monomial: &str) -> fmt::Result {
    let single = c.coeffs().iter().filter(|a| !a.is_zero()).count() == 1;
    let lead = c.coeffs().iter().rev().find(|a| !a.is_zero()).cloned().unwrap_or_else(Rational::zero);
    if single {
        let negative = lead.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if monomial.is_empty() {
            write!(f, "{magnitude}")
        } else if magnitude.is_one() {
            f.write_str(monomial)
        } else {
            write!(f, "{magnitude}*{monomial}")
        }
    } else {
        if !first {
            f.write_str(" + ")?;
        }
        if monomial.is_empty() {
            write!(f, "({c})")
        } else {
            write!(f, "({c})*{monomial}")
        }
    }
}

impl fmt::Display for ScalarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => alloc::string::String::new(),
                1 => "X".into(),
                _ => alloc::format!("X^{k}"),
            };
            write_term(f, first, c, &monomial)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let x = ScalarPolynomial::x();
        let t = ScalarPolynomial::constant(TPoly::t());
        let p = &(&x - &t).pow(2) - &x;
        assert_eq!(p.to_string(), "X^2 + (-2*t - 1)*X + t^2");
        assert_eq!(p.eval_t(&int(1)).constant_coeffs(), Some(vec![int(1), int(-3), int(1)]));
        assert_eq!((&x - &x).to_string(), "0");
        assert_eq!((-&x).to_string(), "-X");
        assert_eq!(ScalarPolynomial::constant(TPoly::constant(int(-3))).to_string(), "-3");
    }
}
