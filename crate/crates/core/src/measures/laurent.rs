use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::num::Rational;

/// A finite Laurent polynomial `Σ_e c_e N^e` in the refinement parameter `N`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentInN {
    terms: BTreeMap<i64, Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    Finite(Rational),
    /// Some coefficient of a positive power of `N` is nonzero.
    Divergent,
}

impl LaurentInN {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(exponent: i64, coeff: Rational) -> Self {
        let mut l = Self::zero();
        l.add_term(exponent, coeff);
        l
    }

    /// `N - c`.
    pub fn shifted_n(c: i64) -> Self {
        let mut l = Self::monomial(1, Rational::one());
        l.add_term(0, Rational::from_integer((-c).into()));
        l
    }

    pub fn add_term(&mut self, exponent: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms, ascending by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn limit_at_infinity(&self) -> Limit {
        match self.max_exponent() {
            Some(e) if e > 0 => Limit::Divergent,
            _ => Limit::Finite(self.coeff(0)),
        }
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        let inv = n.recip();
        self.terms
            .iter()
            .map(|(&e, c)| {
                let base = if e >= 0 { n } else { &inv };
                c * crate::num::pow(base, e.unsigned_abs() as usize)
            })
            .sum()
    }
}

impl Add for &LaurentInN {
    type Output = LaurentInN;

    fn add(self, rhs: &LaurentInN) -> LaurentInN {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &LaurentInN {
    type Output = LaurentInN;

    fn mul(self, rhs: &LaurentInN) -> LaurentInN {
        let mut out = LaurentInN::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})N^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    #[test]
    fn arithmetic_and_limits() {
        let a = &LaurentInN::shifted_n(0) * &LaurentInN::shifted_n(1); // N^2 - N
        assert_eq!(a.max_exponent(), Some(2));
        assert_eq!(a.limit_at_infinity(), Limit::Divergent);
        let b = &LaurentInN::monomial(-2, int(3)) + &LaurentInN::one();
        assert_eq!(b.limit_at_infinity(), Limit::Finite(int(1)));
        let c = &a * &b; // 3 - 3/N + N^2 - N
        assert_eq!(c.coeff(0), int(3));
        assert_eq!(c.coeff(-1), int(-3));
        assert_eq!(c.eval(&int(3)), int(3) - crate::num::ratio(1, 1) + int(6));
        let d = &b + &LaurentInN::monomial(0, int(-1));
        assert_eq!(d, LaurentInN::monomial(-2, int(3)));
        assert!((&d + &LaurentInN::monomial(-2, int(-3))).is_zero());
        assert_eq!(LaurentInN::zero().max_exponent(), None);
        assert_eq!(LaurentInN::zero().limit_at_infinity(), Limit::Finite(int(0)));
    }
}
