//! Scalar specializations of the stochastic measures `ψ_n`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{ks_centered_image, ks_general, ScalarPolynomial, TPoly};
use crate::error::Result;
use crate::limits;
use crate::num::{binomial, sign, Rational};

fn x() -> ScalarPolynomial {
    ScalarPolynomial::x()
}

fn t() -> ScalarPolynomial {
    ScalarPolynomial::constant(TPoly::t())
}

fn three_term(
    n: usize,
    first: ScalarPolynomial,
    mut step: impl FnMut(&ScalarPolynomial, &ScalarPolynomial) -> ScalarPolynomial,
) -> ScalarPolynomial {
    let mut prev = ScalarPolynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = first;
    for _ in 1..n {
        let next = step(&cur, &prev);
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `ψ_n` of the free Brownian motion: the centered recursion under
/// `Δ_1 ↦ X`, `Δ_2 ↦ t`, `Δ_k ↦ 0` for `k ≥ 3`.
pub fn specialize_brownian(n: usize) -> Result<ScalarPolynomial> {
    limits::check("specialize_brownian", n, limits::SCALAR_FAMILY_CAP)?;
    Ok(ks_centered_image(n, brownian_diagonal).pop().unwrap())
}

pub(crate) fn brownian_diagonal(k: usize) -> ScalarPolynomial {
    match k {
        1 => x(),
        2 => t(),
        _ => ScalarPolynomial::zero(),
    }
}

/// `ψ_n = X ψ_{n-1} - t ψ_{n-2}`.
pub fn chebyshev_recursion(n: usize) -> Result<ScalarPolynomial> {
    limits::check("chebyshev_recursion", n, limits::SCALAR_FAMILY_CAP)?;
    Ok(three_term(n, x(), |cur, prev| &(&x() * cur) - &(&t() * prev)))
}

/// `Σ_{j=0}^{⌊n/2⌋} (-1)^j C(n-j, j) t^j X^{n-2j}`.
pub fn chebyshev_closed_form(n: usize) -> Result<ScalarPolynomial> {
    limits::check("chebyshev_closed_form", n, limits::SCALAR_FAMILY_CAP)?;
    let mut out = ScalarPolynomial::zero();
    for j in 0..=n / 2 {
        let c = sign(j % 2 == 1) * Rational::from_integer(binomial(n - j, j));
        out = &out + &ScalarPolynomial::monomial(n - 2 * j, TPoly::monomial(j, c));
    }
    Ok(out)
}

/// `ψ_n` of the (uncentered) free Poisson process from
/// `X ψ_n = ψ_{n+1} + (1 - t) ψ_n + t X ψ_{n-1}`, `ψ_0 = 1`, `ψ_1 = X`.
pub fn specialize_poisson(n: usize) -> Result<ScalarPolynomial> {
    limits::check("specialize_poisson", n, limits::SCALAR_FAMILY_CAP)?;
    let shift = &x() + &(&t() - &ScalarPolynomial::one());
    Ok(three_term(n, x(), |cur, prev| &(&shift * cur) - &(&(&t() * &x()) * prev)))
}

/// The general `ψ_n` with every diagonal measure replaced by `X`, reduced
/// commutatively.
pub fn poisson_by_substitution(n: usize) -> Result<ScalarPolynomial> {
    Ok(ks_general(n)?.reduce_commutative(|_| x()))
}

/// Free Poisson-Charlier polynomials in the uncentered variable `X` from
/// `X ψ_n = ψ_{n+1} + (1 + t) ψ_n + t ψ_{n-1}`, `ψ_0 = 1`, `ψ_1 = X - t`.
pub fn poisson_charlier(n: usize) -> Result<ScalarPolynomial> {
    limits::check("poisson_charlier", n, limits::SCALAR_FAMILY_CAP)?;
    let shift = &x() - &(&t() + &ScalarPolynomial::one());
    Ok(three_term(n, &x() - &t(), |cur, prev| &(&shift * cur) - &(&t() * prev)))
}

/// Closed form from the composition sum with `Δ_1 = X - t`, `Δ_k = X`:
/// a composition with `i` parts equal to 1 and `k` parts of size at least 2
/// contributes `(-1)^{n-k-i} (X-t)^i X^k`, and there are
/// `C(i+k, i) C(n-i-k-1, k-1)` of them, so
/// `ψ_n = (X-t)^n + Σ_{i=0}^{n-2} (X-t)^i Σ_{k=1}^{⌊(n-i)/2⌋} C(i+k, i) C(n-i-k-1, k-1) (-1)^{n-k-i} X^k`.
pub fn poisson_charlier_explicit(n: usize) -> Result<ScalarPolynomial> {
    limits::check("poisson_charlier", n, limits::SCALAR_FAMILY_CAP)?;
    let centered = &x() - &t();
    let mut out = centered.pow(n);
    for i in 0..n.saturating_sub(1) {
        let mut inner = ScalarPolynomial::zero();
        for k in 1..=(n - i) / 2 {
            let count = binomial(i + k, i) * binomial(n - i - k - 1, k - 1);
            let c = sign((n - k - i) % 2 == 1) * Rational::from_integer(count);
            inner = &inner + &ScalarPolynomial::monomial(k, TPoly::constant(c));
        }
        out = &out + &(&centered.pow(i) * &inner);
    }
    Ok(out)
}

/// The centered recursion under the compensated free Poisson diagonals
/// `Δ_1 ↦ X - t`, `Δ_k ↦ X` for `k ≥ 2`.
pub fn poisson_charlier_by_substitution(n: usize) -> Result<ScalarPolynomial> {
    limits::check("poisson_charlier", n, limits::SCALAR_FAMILY_CAP)?;
    Ok(ks_centered_image(n, compensated_poisson_diagonal).pop().unwrap())
}

pub(crate) fn compensated_poisson_diagonal(k: usize) -> ScalarPolynomial {
    if k == 1 {
        &x() - &t()
    } else {
        x()
    }
}

/// Monic Chebyshev polynomial of the second kind, `y T_n = T_{n+1} + T_{n-1}`,
/// as coefficients of `y^0, y^1, …`.
pub fn monic_chebyshev(n: usize) -> Vec<Rational> {
    let mut prev = vec![Rational::one()];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![Rational::zero(), Rational::one()];
    for _ in 1..n {
        let mut next = vec![Rational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_{2n}(√x)`: the even polynomial `T_{2n}` read as a polynomial in `x = y²`.
pub fn chebyshev_even_in_square(n: usize) -> ScalarPolynomial {
    let t2n = monic_chebyshev(2 * n);
    debug_assert!(t2n.iter().skip(1).step_by(2).all(Zero::is_zero));
    ScalarPolynomial::from_rationals(t2n.into_iter().step_by(2).collect())
}
