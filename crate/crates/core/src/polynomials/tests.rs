use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::*;
use crate::measures::{finite_n_laurent, Limit};
use crate::num::{int, pow, ratio};
use crate::partitions::{enumerate_all, SetPartition};
use crate::transforms::{CumulantSeq, MomentSeq};

fn d(word: &[usize]) -> DiagonalPolynomial {
    DiagonalPolynomial::term(word.to_vec(), TPoly::one())
}

fn poly(terms: &[(&[usize], i64)]) -> DiagonalPolynomial {
    let mut out = DiagonalPolynomial::zero();
    for (w, c) in terms {
        out.add_term(w.to_vec(), TPoly::constant(int(*c)));
    }
    out
}

fn scalar(coeffs: &[TPoly]) -> ScalarPolynomial {
    ScalarPolynomial::new(coeffs.to_vec())
}

fn tc(c: i64) -> TPoly {
    TPoly::constant(int(c))
}

fn tm(k: usize, c: i64) -> TPoly {
    TPoly::monomial(k, int(c))
}

#[test]
fn general_examples() {
    assert_eq!(ks_general(0).unwrap(), DiagonalPolynomial::one());
    assert_eq!(ks_general(1).unwrap(), d(&[1]));
    assert_eq!(ks_general(2).unwrap(), poly(&[(&[1, 1], 1), (&[2], -1)]));
    let mut psi3 = poly(&[(&[1, 1, 1], 1), (&[1, 2], -1), (&[2, 1], -1), (&[3], 1)]);
    psi3.add_term(vec![2], tm(1, -1));
    assert_eq!(ks_general(3).unwrap(), psi3);
}

#[test]
fn general_forms_agree() {
    for n in 0..=10 {
        assert_eq!(ks_general_with(n, KsForm::QIndex).unwrap(), ks_general_with(n, KsForm::MIndex).unwrap());
    }
}

#[test]
fn centered_examples_and_forms() {
    assert_eq!(ks_centered(1).unwrap(), d(&[1]));
    assert_eq!(ks_centered(2).unwrap(), poly(&[(&[1, 1], 1), (&[2], -1)]));
    assert_eq!(ks_centered(3).unwrap(), poly(&[(&[1, 1, 1], 1), (&[1, 2], -1), (&[2, 1], -1), (&[3], 1)]));
    for n in 0..=10 {
        let rec = ks_centered(n).unwrap();
        assert_eq!(rec, ks_centered_compositions(n).unwrap());
        assert_eq!(ks_general(n).unwrap().eval_t(&Rational::zero()), rec);
        assert_eq!(rec.len(), if n == 0 { 1 } else { 1 << (n - 1) });
    }
}

#[test]
fn alpha_beta() {
    for n in 1..6 {
        assert_eq!(alpha(n, 0).unwrap(), DiagonalPolynomial::delta(n));
        assert_eq!(beta(n, 0).unwrap(), DiagonalPolynomial::delta(n));
        assert_eq!(alpha(0, n).unwrap(), ks_general(n).unwrap());
        assert_eq!(beta(0, n).unwrap(), beta(1, n - 1).unwrap());
    }
    assert_eq!(alpha(1, 1).unwrap(), d(&[1, 1]));
    assert_eq!(beta(1, 1).unwrap(), ks_general(2).unwrap());
    for total in 0..=10 {
        for n in 0..=total {
            let m = total - n;
            assert_eq!(beta(0, total).unwrap(), ks_general(total).unwrap());
            if n >= 1 && m >= 1 {
                let mut rhs = beta(n, m).unwrap();
                for l in 0..m {
                    rhs = &rhs + &beta(n + 1, l).unwrap().scale(&TPoly::t().pow(m - 1 - l));
                }
                assert_eq!(alpha(n, m).unwrap(), rhs, "α({n}, {m})");
            }
        }
    }
}

fn uncentered_battery() -> Vec<ProcessModel> {
    let custom = CumulantSeq::new((1..=14).map(|k| ratio(k as i64 % 4 + 1, 2)).collect());
    let generator = MomentSeq::new((1..=14).map(|k| ratio(1, k as i64)).collect());
    vec![
        ProcessModel::free_poisson(ratio(3, 2)).unwrap(),
        ProcessModel::custom(custom, ratio(2, 3)).unwrap(),
        ProcessModel::compound_poisson(generator, int(2)).unwrap(),
    ]
}

#[test]
fn beta_expectations_are_stochastic_measure_expectations() {
    for process in uncentered_battery() {
        let r1 = process.cumulant_at(1).unwrap();
        for n in 0..=5 {
            for m in 0..=5 {
                let expected = if n == 0 { Rational::one() } else { process.cumulant_at(n).unwrap() } * pow(&r1, m);
                assert_eq!(beta(n, m).unwrap().expectation(&process).unwrap(), expected, "β({n}, {m})");
            }
        }
    }
}

/// `φ(St_π Δ_{w_1} ⋯ Δ_{w_r})` from the finite-`N` sums: split the index
/// tuple by its kernel `ρ`, whose restriction to the first `n` positions is `π`.
fn st_times_word_by_oracle(pi: &SetPartition, word: &[usize], process: &ProcessModel) -> Rational {
    let n = pi.n();
    let mut k = vec![1; n];
    k.extend_from_slice(word);
    let mut total = Rational::zero();
    for rho in enumerate_all(n + word.len()).unwrap() {
        let labels = rho.labels();
        if SetPartition::from_labels(&labels[..n]) != *pi {
            continue;
        }
        match finite_n_laurent(&rho, &k, process).unwrap().limit_at_infinity() {
            Limit::Finite(v) => total += v,
            Limit::Divergent => panic!("divergent"),
        }
    }
    total
}

#[test]
fn stochastic_measures_match_finite_n_sums() {
    let words: [&[usize]; 6] = [&[], &[1], &[2], &[1, 1], &[3], &[2, 1]];
    let mut processes = uncentered_battery();
    processes.push(ProcessModel::semicircular(int(2)).unwrap());
    for process in &processes {
        for n in 0..=4 {
            let psi = ks_general(n).unwrap();
            let pi = SetPartition::discrete(n);
            for w in words {
                let lhs = (&psi * &d(w)).expectation(process).unwrap();
                assert_eq!(lhs, st_times_word_by_oracle(&pi, w, process), "ψ_{n} {w:?}");
            }
        }
        for (n, m) in [(2, 1), (1, 2), (2, 2), (3, 1)] {
            let b = beta(n, m).unwrap();
            let pi = SetPartition::full(n).direct_sum(&SetPartition::discrete(m));
            for w in &words[..4] {
                let lhs = (&b * &d(w)).expectation(process).unwrap();
                assert_eq!(lhs, st_times_word_by_oracle(&pi, w, process), "β({n}, {m}) {w:?}");
            }
        }
    }
}

#[test]
fn first_moments_of_psi() {
    // φ(St_{0̂_n}) = r_1^n.
    for process in uncentered_battery() {
        let r1 = process.cumulant_at(1).unwrap();
        for n in 0..=8 {
            assert_eq!(ks_general(n).unwrap().expectation(&process).unwrap(), pow(&r1, n));
        }
    }
}

#[test]
fn brownian_is_chebyshev() {
    assert_eq!(specialize_brownian(2).unwrap(), scalar(&[tm(1, -1), tc(0), tc(1)]));
    assert_eq!(specialize_brownian(3).unwrap(), scalar(&[tc(0), tm(1, -2), tc(0), tc(1)]));
    assert_eq!(specialize_brownian(4).unwrap(), scalar(&[tm(2, 1), tc(0), tm(1, -3), tc(0), tc(1)]));
    for n in 0..=20 {
        let s = specialize_brownian(n).unwrap();
        assert_eq!(s, chebyshev_recursion(n).unwrap());
        assert_eq!(s, chebyshev_closed_form(n).unwrap());
    }
    for n in 0..=10 {
        let literal = ks_centered(n).unwrap().reduce_commutative(families::brownian_diagonal);
        assert_eq!(literal, specialize_brownian(n).unwrap());
    }
}

#[test]
fn poisson_recursion_matches_substitution() {
    assert_eq!(specialize_poisson(1).unwrap(), ScalarPolynomial::x());
    assert_eq!(specialize_poisson(2).unwrap(), scalar(&[tc(0), tc(-1), tc(1)]));
    // X³ - 2X² + (1 - t) X
    let psi3 = scalar(&[tc(0), TPoly::new(vec![int(1), int(-1)]), tc(-2), tc(1)]);
    assert_eq!(specialize_poisson(3).unwrap(), psi3);
    for n in 0..=8 {
        assert_eq!(specialize_poisson(n).unwrap(), poisson_by_substitution(n).unwrap());
    }
}

#[test]
fn poisson_charlier_routes() {
    assert_eq!(poisson_charlier(1).unwrap(), scalar(&[tm(1, -1), tc(1)]));
    let psi2 = scalar(&[tm(2, 1), TPoly::new(vec![int(-1), int(-2)]), tc(1)]);
    assert_eq!(poisson_charlier(2).unwrap(), psi2);
    for n in 0..=12 {
        let rec = poisson_charlier(n).unwrap();
        assert_eq!(rec, poisson_charlier_explicit(n).unwrap(), "n = {n}");
        assert_eq!(rec, poisson_charlier_by_substitution(n).unwrap());
    }
    for n in 0..=8 {
        let literal = ks_centered(n).unwrap().reduce_commutative(families::compensated_poisson_diagonal);
        assert_eq!(literal, poisson_charlier(n).unwrap());
    }
    // X³ - (3t + 2) X² + (3t² + 2t + 1) X - t³
    let psi3 = scalar(&[tm(3, -1), TPoly::new(vec![int(1), int(2), int(3)]), TPoly::new(vec![int(-2), int(-3)]), tc(1)]);
    assert_eq!(poisson_charlier(3).unwrap(), psi3);
    assert_eq!(monic_chebyshev(4), vec![int(1), int(0), int(-3), int(0), int(1)]);
    for n in 0..=8 {
        assert_eq!(poisson_charlier(n).unwrap().eval_t(&int(1)), chebyshev_even_in_square(n));
    }
}

#[test]
fn compound_recursion() {
    let generator = MomentSeq::new((1..=10).map(|k| ratio(1, k as i64 + 1)).collect());
    assert_eq!(compound_ks(1, &generator).unwrap(), d(&[1]));
    assert_eq!(compound_ks(2, &generator).unwrap(), poly(&[(&[1, 1], 1), (&[2], -1)]));
    for n in 0..=8 {
        assert_eq!(compound_ks(n, &generator).unwrap(), ks_general(n).unwrap());
    }
    assert!(matches!(compound_ks(9, &generator.truncate(5)), Err(crate::Error::Truncated { .. })));
}

fn centered_battery(t: &Rational) -> Vec<ProcessModel> {
    let generator = MomentSeq::new(
        core::iter::once(Rational::zero()).chain((0..13).map(|k| pow(&ratio(1, 2), k))).collect(),
    );
    vec![
        ProcessModel::semicircular(t.clone()).unwrap().centered(),
        ProcessModel::free_poisson(t.clone()).unwrap().centered(),
        ProcessModel::compound_poisson(generator, t.clone()).unwrap().centered(),
    ]
}

#[test]
fn orthogonality_examples() {
    let t = ratio(5, 2);
    let psi1 = ks_centered(1).unwrap();
    let psi2 = ks_centered(2).unwrap();
    for process in centered_battery(&t) {
        let r2 = process.cumulant_at(2).unwrap();
        assert_eq!(inner_product(&psi1, &psi1, &process).unwrap(), r2);
        assert!(inner_product(&psi2, &psi1, &process).unwrap().is_zero());
        assert_eq!(inner_product(&psi2, &psi2, &process).unwrap(), &r2 * &r2);
    }
}

#[test]
fn gram_matrices_are_diagonal() {
    for t in [int(1), ratio(1, 2), int(3)] {
        for process in centered_battery(&t) {
            let psi = ks_centered_sequence(5).unwrap();
            let gram = gram_matrix(&psi, &process).unwrap();
            let r2 = process.cumulant_at(2).unwrap();
            for (i, row) in gram.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let expected = if i == j { pow(&r2, i) } else { Rational::zero() };
                    assert_eq!(*v, expected, "({i}, {j})");
                }
            }
        }
    }
}

#[test]
fn uncentered_orthogonality_uses_the_mean() {
    // For uncentered processes the general ψ_n (with t = φ(X)) are still orthogonal.
    for process in uncentered_battery() {
        let psi = ks_general_sequence(4, KsForm::QIndex).unwrap();
        let gram = gram_matrix(&psi, &process).unwrap();
        let r2 = process.cumulant_at(2).unwrap();
        let r1 = process.cumulant_at(1).unwrap();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j && (i == 0 || j == 0) {
                    assert_eq!(*v, pow(&r1, i.max(j)));
                }
                if i == j && i > 0 {
                    assert!(!v.is_zero() || r2.is_zero());
                }
            }
        }
    }
}

/// The closed form without the count `C(i+k, i)` of ways to interleave the
/// parts equal to 1 with the longer parts.
fn poisson_charlier_without_interleavings(n: usize) -> ScalarPolynomial {
    let x = ScalarPolynomial::x();
    let centered = &x - &ScalarPolynomial::constant(TPoly::t());
    let mut out = centered.pow(n);
    for i in 0..n.saturating_sub(1) {
        let mut inner = ScalarPolynomial::zero();
        for k in 1..=(n - i) / 2 {
            let c = crate::num::sign((n - k - i) % 2 == 1)
                * Rational::from_integer(crate::num::binomial(n - i - k - 1, k - 1));
            inner = &inner + &ScalarPolynomial::monomial(k, TPoly::constant(c));
        }
        out = &out + &(&centered.pow(i) * &inner);
    }
    out
}

#[test]
fn interleaving_count_matters_from_degree_three() {
    for n in 0..=2 {
        assert_eq!(poisson_charlier_without_interleavings(n), poisson_charlier(n).unwrap());
    }
    for n in 3..=6 {
        let wrong = poisson_charlier_without_interleavings(n).eval_t(&int(1));
        assert_ne!(wrong, chebyshev_even_in_square(n));
        assert_ne!(poisson_charlier_without_interleavings(n), poisson_charlier(n).unwrap());
    }
}
