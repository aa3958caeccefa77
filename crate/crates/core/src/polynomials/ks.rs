//! The free Kailath–Segall recursion and its centered and compound forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::{DiagonalPolynomial, ScalarPolynomial, TPoly};
use crate::error::{Error, Result};
use crate::limits;
use crate::num::{binomial, sign, Rational};
use crate::transforms::MomentSeq;

/// The two index forms of the general recursion; they differ only in
/// whether the inner sum runs over `q` (index of `ψ_q`) or `m` (power of `t`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KsForm {
    QIndex,
    MIndex,
}

fn signed(odd: bool, c: Rational) -> TPoly {
    TPoly::constant(sign(odd) * c)
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `ψ_0, …, ψ_n` for a general process,
/// `ψ_n = Δ_1 ψ_{n-1} + Σ_{j=2}^n (-1)^{j-1} Σ_{q=0}^{n-j} C(n-q-2, j-2) t^{n-j-q} Δ_j ψ_q`.
pub fn ks_general_sequence(n: usize, form: KsForm) -> Result<Vec<DiagonalPolynomial>> {
    limits::check("ks_general", n, limits::KS_CAP)?;
    let mut psi = vec![DiagonalPolynomial::one()];
    for k in 1..=n {
        let mut next = &DiagonalPolynomial::delta(1) * &psi[k - 1];
        for j in 2..=k {
            let delta = DiagonalPolynomial::delta(j);
            for i in 0..=k - j {
                let (q, c) = match form {
                    KsForm::QIndex => (i, binom(k - i - 2, j - 2)),
                    KsForm::MIndex => (k - j - i, binom(i + j - 2, j - 2)),
                };
                let coeff = &signed(j % 2 == 0, c) * &TPoly::t().pow(k - j - q);
                next = &next + &(&delta * &psi[q]).scale(&coeff);
            }
        }
        psi.push(next);
    }
    Ok(psi)
}

/// `ψ_n` of a general process as a polynomial in `Δ_1, …, Δ_n` and `t = φ(X)`.
pub fn ks_general(n: usize) -> Result<DiagonalPolynomial> {
    ks_general_with(n, KsForm::QIndex)
}

pub fn ks_general_with(n: usize, form: KsForm) -> Result<DiagonalPolynomial> {
    Ok(ks_general_sequence(n, form)?.pop().unwrap())
}

/// `ψ_0, …, ψ_n` of a centered process, `ψ_n = Σ_{j=1}^n (-1)^{j-1} Δ_j ψ_{n-j}`.
pub fn ks_centered_sequence(n: usize) -> Result<Vec<DiagonalPolynomial>> {
    limits::check("ks_centered", n, limits::KS_CAP)?;
    let mut psi = vec![DiagonalPolynomial::one()];
    for k in 1..=n {
        let mut next = DiagonalPolynomial::zero();
        for j in 1..=k {
            let term = &DiagonalPolynomial::delta(j) * &psi[k - j];
            next = &next + &term.scale(&signed(j % 2 == 0, Rational::one()));
        }
        psi.push(next);
    }
    Ok(psi)
}

pub fn ks_centered(n: usize) -> Result<DiagonalPolynomial> {
    Ok(ks_centered_sequence(n)?.pop().unwrap())
}

/// `ψ_n = Σ_k (-1)^{n-k} Σ_{j_1 + ⋯ + j_k = n} Δ_{j_1} ⋯ Δ_{j_k}`, summed
/// directly over compositions of `n`.
pub fn ks_centered_compositions(n: usize) -> Result<DiagonalPolynomial> {
    limits::check("ks_centered", n, limits::KS_CAP)?;
    let mut out = DiagonalPolynomial::zero();
    if n == 0 {
        return Ok(DiagonalPolynomial::one());
    }
    // Bit i of `cuts` set means a part ends after position i + 1.
    for cuts in 0u32..(1 << (n - 1)) {
        let mut word = Vec::new();
        let mut len = 1;
        for i in 0..n - 1 {
            if cuts & (1 << i) != 0 {
                word.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        word.push(len);
        let odd = (n - word.len()) % 2 == 1;
        out.add_term(word, signed(odd, Rational::one()));
    }
    Ok(out)
}

/// Images `ψ_0, …, ψ_n` of the centered recursion in a commutative quotient
/// where `Δ_j ↦ image(j)`. The recursion is applied after the quotient map,
/// which is a ring homomorphism, so no noncommutative words are formed.
pub fn ks_centered_image(n: usize, mut image: impl FnMut(usize) -> ScalarPolynomial) -> Vec<ScalarPolynomial> {
    let deltas: Vec<ScalarPolynomial> = (0..=n).map(|j| if j == 0 { ScalarPolynomial::one() } else { image(j) }).collect();
    let mut psi = vec![ScalarPolynomial::one()];
    for k in 1..=n {
        let mut next = ScalarPolynomial::zero();
        for j in 1..=k {
            let term = &deltas[j] * &psi[k - j];
            next = if j % 2 == 1 { &next + &term } else { &next - &term };
        }
        psi.push(next);
    }
    psi
}

/// `α(n, m) = Δ_n ψ_m`, with `Δ_0 = 1`.
pub fn alpha(n: usize, m: usize) -> Result<DiagonalPolynomial> {
    limits::check("alpha", n + m, limits::KS_CAP)?;
    Ok(&DiagonalPolynomial::delta(n) * &ks_general(m)?)
}

/// `β(n, m) = St_{1̂_n + 0̂_m}`, obtained from `α` by
/// `β(n, m) = α(n, m) - Σ_{l=0}^{m-1} t^{m-1-l} β(n+1, l)` with
/// `β(n, 0) = Δ_n` and `β(0, m) = β(1, m-1)`.
pub fn beta(n: usize, m: usize) -> Result<DiagonalPolynomial> {
    limits::check("beta", n + m, limits::KS_CAP)?;
    let psi = ks_general_sequence(m, KsForm::QIndex)?;
    let mut memo = BTreeMap::new();
    Ok(beta_memo(n, m, &psi, &mut memo))
}

fn beta_memo(
    n: usize,
    m: usize,
    psi: &[DiagonalPolynomial],
    memo: &mut BTreeMap<(usize, usize), DiagonalPolynomial>,
) -> DiagonalPolynomial {
    if let Some(v) = memo.get(&(n, m)) {
        return v.clone();
    }
    let value = match (n, m) {
        (0, 0) => DiagonalPolynomial::one(),
        (0, m) => beta_memo(1, m - 1, psi, memo),
        (n, 0) => DiagonalPolynomial::delta(n),
        (n, m) => {
            let mut acc = &DiagonalPolynomial::delta(n) * &psi[m];
            for l in 0..m {
                let inner = beta_memo(n + 1, l, psi, memo);
                acc = &acc - &inner.scale(&TPoly::t().pow(m - 1 - l));
            }
            acc
        }
    };
    memo.insert((n, m), value.clone());
    value
}

/// `ψ_n` for a free compound Poisson process `X = s e s`, from
/// `ψ_n = X ψ_{n-1} - Σ_{q=0}^{n-2} s (t - e)^{n-q-2} e² s ψ_q` with
/// `s e^k s = Δ_k` and the binomial expansion of `(t - e)^m`.
///
/// `t` stays symbolic; it stands for `φ(X)`. The generator must carry
/// moments up to order `n`, one per diagonal measure used.
pub fn compound_ks(n: usize, generator: &MomentSeq) -> Result<DiagonalPolynomial> {
    limits::check("compound_ks", n, limits::COMPOUND_KS_CAP)?;
    if generator.order() < n {
        return Err(Error::Truncated { needed: n, available: generator.order() });
    }
    let mut psi = vec![DiagonalPolynomial::one()];
    for k in 1..=n {
        let mut next = &DiagonalPolynomial::delta(1) * &psi[k - 1];
        for q in 0..k.saturating_sub(1) {
            let m = k - q - 2;
            let mut sandwich = DiagonalPolynomial::zero();
            for j in 0..=m {
                let c = &signed(j % 2 == 1, binom(m, j)) * &TPoly::t().pow(m - j);
                sandwich.add_term(vec![j + 2], c);
            }
            next = &next - &(&sandwich * &psi[q]);
        }
        psi.push(next);
    }
    Ok(psi.pop().unwrap())
}
