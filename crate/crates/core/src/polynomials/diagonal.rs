use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::write_term;
use super::{ScalarPolynomial, TPoly};
use crate::error::Result;
use crate::measures::{ProcessModel, WordMoments};
use crate::num::Rational;

/// A noncommutative polynomial in the diagonal measures `Δ_1, Δ_2, …` with
/// coefficients in `ℚ[t]`. The word `[k_1, …, k_m]` stands for
/// `Δ_{k_1} ⋯ Δ_{k_m}`; the empty word is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiagonalPolynomial {
    terms: BTreeMap<Vec<usize>, TPoly>,
}

impl DiagonalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TPoly::one())
    }

    pub fn constant(c: TPoly) -> Self {
        Self::term(Vec::new(), c)
    }

    /// `Δ_k`; `Δ_0` is the unit.
    pub fn delta(k: usize) -> Self {
        let word = if k == 0 { Vec::new() } else { vec![k] };
        Self::term(word, TPoly::one())
    }

    pub fn term(word: Vec<usize>, c: TPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(word, c);
        out
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: TPoly) {
        debug_assert!(word.iter().all(|&k| k > 0));
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&word) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Words in lexicographic order with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &TPoly)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coeff(&self, word: &[usize]) -> TPoly {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Largest `Σ k_j` over the words present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Substitutes a value for `t`.
    pub fn eval_t(&self, t: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), TPoly::constant(a.eval(t)));
        }
        out
    }

    /// The image in a commutative quotient: each `Δ_k` is replaced by
    /// `image(k)` and words become ordinary products.
    pub fn reduce_commutative(&self, mut image: impl FnMut(usize) -> ScalarPolynomial) -> ScalarPolynomial {
        let mut cache: BTreeMap<usize, ScalarPolynomial> = BTreeMap::new();
        let mut out = ScalarPolynomial::zero();
        for (w, c) in &self.terms {
            let mut prod = ScalarPolynomial::constant(c.clone());
            for &k in w {
                let img = cache.entry(k).or_insert_with(|| image(k));
                prod = &prod * img;
            }
            out = &out + &prod;
        }
        out
    }

    /// `φ` of the polynomial for the given process, with `t` read as the
    /// expectation `φ(X)` of the process.
    pub fn expectation(&self, process: &ProcessModel) -> Result<Rational> {
        let mut moments = WordMoments::new(process, self.degree())?;
        self.expectation_with(process, &mut moments)
    }

    /// [`Self::expectation`] reusing a moment evaluator across calls.
    pub fn expectation_with(&self, process: &ProcessModel, moments: &mut WordMoments) -> Result<Rational> {
        let t = process.expectation()?;
        let mut total = Rational::zero();
        for (w, c) in &self.terms {
            let c = c.eval(&t);
            if !c.is_zero() {
                total += c * moments.moment(w)?;
            }
        }
        Ok(total)
    }
}

impl Add for &DiagonalPolynomial {
    type Output = DiagonalPolynomial;
    fn add(self, rhs: &DiagonalPolynomial) -> DiagonalPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiagonalPolynomial {
    type Output = DiagonalPolynomial;
    fn sub(self, rhs: &DiagonalPolynomial) -> DiagonalPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &DiagonalPolynomial {
    type Output = DiagonalPolynomial;
    fn neg(self) -> DiagonalPolynomial {
        DiagonalPolynomial { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &DiagonalPolynomial {
    type Output = DiagonalPolynomial;
    fn mul(self, rhs: &DiagonalPolynomial) -> DiagonalPolynomial {
        let mut out = DiagonalPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }
}

/// `D1*D1*D2` style rendering of a word; the empty word renders as nothing.
pub fn render_word(word: &[usize]) -> String {
    let mut s = String::new();
    for (i, k) in word.iter().enumerate() {
        if i > 0 {
            s.push('*');
        }
        s.push('D');
        s.push_str(&alloc::format!("{k}"));
    }
    s
}

impl fmt::Display for DiagonalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.terms {
            write_term(f, first, c, &render_word(w))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
