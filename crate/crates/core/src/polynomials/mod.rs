//! Stochastic measures `ψ_n` as polynomials in the diagonal measures.
//!
//! [`DiagonalPolynomial`] is the free algebra on `Δ_1, Δ_2, …` over `ℚ[t]`;
//! the general, centered and compound-Poisson recursions produce `ψ_n` there.
//! Scalar families live in [`ScalarPolynomial`] and are obtained by explicit
//! commutative reduction. Inner products evaluate words through the process
//! moments of [`crate::measures`].

mod diagonal;
mod families;
mod ks;
mod scalar;
mod tpoly;

use alloc::vec::Vec;

use crate::error::Result;
use crate::measures::{ProcessModel, WordMoments};
use crate::num::Rational;

pub use diagonal::{render_word, DiagonalPolynomial};
pub use families::{
    chebyshev_closed_form, chebyshev_even_in_square, chebyshev_recursion, monic_chebyshev, poisson_by_substitution,
    poisson_charlier, poisson_charlier_by_substitution, poisson_charlier_explicit, specialize_brownian,
    specialize_poisson,
};
pub use ks::{
    alpha, beta, compound_ks, ks_centered, ks_centered_compositions, ks_centered_image, ks_centered_sequence,
    ks_general, ks_general_sequence, ks_general_with, KsForm,
};
pub use scalar::ScalarPolynomial;
pub use tpoly::TPoly;

/// `φ(p q)` for the process, with `t` read as `φ(X)`.
pub fn inner_product(p: &DiagonalPolynomial, q: &DiagonalPolynomial, process: &ProcessModel) -> Result<Rational> {
    (p * q).expectation(process)
}

/// `[φ(ψ_i ψ_j)]` for `ψ_0, …, ψ_n`, sharing one moment evaluator.
pub fn gram_matrix(psi: &[DiagonalPolynomial], process: &ProcessModel) -> Result<Vec<Vec<Rational>>> {
    let degree = psi.iter().map(DiagonalPolynomial::degree).max().unwrap_or(0);
    let mut moments = WordMoments::new(process, 2 * degree)?;
    psi.iter()
        .map(|p| psi.iter().map(|q| (p * q).expectation_with(process, &mut moments)).collect())
        .collect()
}

#[cfg(test)]
mod tests;
