//! Verification suites behind `verify`.

use nc_freecalc_core::measures::{finite_n_laurent, st_expectation, vanishing_order, Limit, ProcessModel};
use nc_freecalc_core::num::{binomial, int, Rational};
use nc_freecalc_core::partitions::{enumerate_all, enumerate_interval, enumerate_noncrossing, mobius, Lattice};
use nc_freecalc_core::polynomials::{
    alpha, beta, chebyshev_closed_form, chebyshev_even_in_square, chebyshev_recursion, gram_matrix, ks_centered,
    ks_centered_sequence, ks_general, ks_general_with, poisson_charlier, poisson_charlier_explicit,
    specialize_brownian, KsForm, TPoly,
};
use nc_freecalc_core::{limits, SetPartition};
use serde_json::{json, Value};

use crate::args::{Suite, VerifyArgs};
use crate::commands::{name, power, zero, CmdResult, ProcessSpec};
use crate::render::{aligned, rational, record, Report, Table};
use crate::CliError;

type Outcome = Result<(), String>;

struct Check {
    name: &'static str,
    outcome: Outcome,
    detail: Option<Value>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub(crate) fn run(a: &VerifyArgs) -> CmdResult {
    let spec = ProcessSpec {
        kind: a.process,
        t: &a.t,
        centered: true,
        generator: a.generator.as_deref(),
        cumulants: a.cumulants.as_deref(),
    };
    let model = spec.build()?;
    let suites: &[Suite] = match a.suite {
        Suite::All => &[Suite::Orthogonality, Suite::Mobius, Suite::Vanishing, Suite::KsConsistency],
        ref one => std::slice::from_ref(one),
    };
    let mut checks = Vec::new();
    for suite in suites {
        match suite {
            Suite::Orthogonality => checks.push(orthogonality(&model, a.max_n.unwrap_or(6))?),
            Suite::Mobius => mobius_suite(a.max_n.unwrap_or(7), &mut checks)?,
            Suite::Vanishing => checks.push(vanishing(&spec, a.max_n.unwrap_or(6))?),
            Suite::KsConsistency => ks_consistency(a.max_n.unwrap_or(10), &mut checks)?,
            Suite::All => unreachable!(),
        }
    }
    let inputs = json!({"suite": name(&a.suite), "process": spec.describe(&model), "max_n": a.max_n});
    let passed = checks.iter().all(|c| c.outcome.is_ok());
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for c in &checks {
        let mut value = json!({"check": c.name, "passed": c.outcome.is_ok()});
        if let Err(msg) = &c.outcome {
            value["failure"] = json!(msg);
        }
        if let Some(d) = &c.detail {
            value["detail"] = d.clone();
        }
        records.push(record("verify", inputs.clone(), value));
        let status = if c.outcome.is_ok() { "PASS" } else { "FAIL" };
        rows.push(vec![c.name.to_string(), status.to_string(), c.outcome.clone().err().unwrap_or_default()]);
    }
    let header = ["check", "status", "failure"].map(String::from).to_vec();
    let mut text = aligned(&header, &rows);
    for c in &checks {
        if let Some(gram) = c.detail.as_ref().and_then(|d| d.get("gram")) {
            text.push('\n');
            text.push_str(&gram_text_from_json(gram));
        }
    }
    Ok((Report { records, table: Some(Table { header, rows }), text: Some(text) }, passed))
}

/// JSON for a Gram matrix plus whether it equals `diag(r_2^n)`.
pub(crate) fn gram_value(gram: &[Vec<Rational>], model: &ProcessModel) -> Result<(Value, bool), CliError> {
    let r2 = model.cumulant_at(2)?;
    let passed = gram.iter().enumerate().all(|(n, row)| {
        row.iter().enumerate().all(|(m, v)| *v == if n == m { power(&r2, n) } else { zero() })
    });
    let matrix: Vec<Vec<Value>> = gram.iter().map(|row| row.iter().map(rational).collect()).collect();
    Ok((json!({"gram": matrix, "r2": rational(&r2), "orthogonal": passed}), passed))
}

pub(crate) fn gram_text(gram: &[Vec<Rational>]) -> String {
    let rows: Vec<Vec<String>> = gram.iter().map(|row| row.iter().map(Rational::to_string).collect()).collect();
    let header: Vec<String> = (0..gram.len()).map(|m| format!("ψ_{m}")).collect();
    aligned(&header, &rows)
}

fn gram_text_from_json(gram: &Value) -> String {
    let rows: Vec<Vec<String>> = gram
        .as_array()
        .into_iter()
        .flatten()
        .map(|row| row.as_array().into_iter().flatten().map(crate::render::cell).collect())
        .collect();
    let header: Vec<String> = (0..rows.len()).map(|m| format!("ψ_{m}")).collect();
    aligned(&header, &rows)
}

fn orthogonality(model: &ProcessModel, max_n: usize) -> Result<Check, CliError> {
    let psi = ks_centered_sequence(max_n)?;
    let gram = gram_matrix(&psi, model)?;
    let (detail, passed) = gram_value(&gram, model)?;
    let outcome = ensure(passed, || "Gram matrix is not diag(r_2^n)".into());
    Ok(Check { name: "gram matrix equals diag(r_2^n)", outcome, detail: Some(detail) })
}

fn catalan(n: usize) -> Rational {
    Rational::from_integer(binomial(2 * n, n)) / int(n as i64 + 1)
}

fn factorial(n: usize) -> Rational {
    (1..=n).map(|k| int(k as i64)).product()
}

fn mobius_suite(max_n: usize, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let mut counts = Ok(());
    let mut closed = Ok(());
    let mut kreweras = Ok(());
    for n in 1..=max_n {
        if counts.is_ok() {
            let nc = enumerate_noncrossing(n)?.count();
            let int_count = enumerate_interval(n)?.count();
            counts = ensure(Rational::from_integer(nc.into()) == catalan(n), || format!("|NC({n})| = {nc}"))
                .and_then(|_| ensure(int_count == 1 << (n - 1), || format!("|Int({n})| = {int_count}")));
        }
        if closed.is_ok() {
            let (bottom, top) = (SetPartition::discrete(n), SetPartition::full(n));
            let sign = if n % 2 == 1 { int(1) } else { int(-1) };
            let p = mobius(&bottom, &top, Lattice::All)?;
            let nc = mobius(&bottom, &top, Lattice::NonCrossing)?;
            closed = ensure(p == &sign * factorial(n - 1), || format!("μ_P(0̂_{n}, 1̂_{n}) = {p}"))
                .and_then(|_| ensure(nc == &sign * catalan(n - 1), || format!("μ_NC(0̂_{n}, 1̂_{n}) = {nc}")));
        }
        if kreweras.is_ok() {
            for pi in enumerate_noncrossing(n)? {
                let k = pi.kreweras()?;
                if k.block_count() + pi.block_count() != n + 1 {
                    kreweras = Err(format!("|K(π)| + |π| ≠ n + 1 for {pi}"));
                    break;
                }
            }
        }
    }
    checks.push(Check { name: "lattice counts", outcome: counts, detail: None });
    checks.push(Check { name: "mobius closed forms", outcome: closed, detail: None });
    checks.push(Check { name: "kreweras block counts", outcome: kreweras, detail: None });
    Ok(())
}

fn vanishing(spec: &ProcessSpec<'_>, max_n: usize) -> Result<Check, CliError> {
    let model = ProcessSpec { centered: false, ..*spec }.build()?;
    let mut outcome = Ok(());
    'outer: for n in 0..=max_n {
        for pi in enumerate_all(n)? {
            let order = vanishing_order(&pi)?;
            if !order.holds() {
                outcome = Err(format!("{pi}: top exponent {:?}, c = {}", order.max_exponent, order.crossing_number));
                break 'outer;
            }
            let limit = finite_n_laurent(&pi, &vec![1; n], &model)?.limit_at_infinity();
            let expected = if pi.is_noncrossing() { st_expectation(&pi, &model)? } else { zero() };
            if limit != Limit::Finite(expected.clone()) {
                outcome = Err(format!("{pi}: limit {limit:?}, expected {expected}"));
                break 'outer;
            }
        }
    }
    Ok(Check { name: "finite-N limits and crossing decay", outcome, detail: None })
}

fn ks_consistency(max_n: usize, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let mut forms = Ok(());
    for n in 0..=max_n {
        let q = ks_general_with(n, KsForm::QIndex)?;
        if q != ks_general_with(n, KsForm::MIndex)? {
            forms = Err(format!("index forms differ at n = {n}"));
            break;
        }
        if q.eval_t(&zero()) != ks_centered(n)? {
            forms = Err(format!("t = 0 reduction fails at n = {n}"));
            break;
        }
    }
    checks.push(Check { name: "index forms and t = 0 reduction", outcome: forms, detail: None });

    let mut identity = Ok(());
    'outer: for total in 0..=max_n {
        if beta(0, total)? != ks_general(total)? {
            identity = Err(format!("β(0, {total}) ≠ ψ_{total}"));
            break;
        }
        for n in 1..total {
            let m = total - n;
            let mut rhs = beta(n, m)?;
            for l in 0..m {
                rhs = &rhs + &beta(n + 1, l)?.scale(&TPoly::t().pow(m - 1 - l));
            }
            if alpha(n, m)? != rhs {
                identity = Err(format!("α/β identity fails at ({n}, {m})"));
                break 'outer;
            }
        }
    }
    checks.push(Check { name: "alpha/beta identity", outcome: identity, detail: None });

    let mut cheb = Ok(());
    let scalar_cap = limits::effective(limits::SCALAR_FAMILY_CAP);
    for n in 0..=(2 * max_n).min(scalar_cap) {
        let s = specialize_brownian(n)?;
        if s != chebyshev_closed_form(n)? || s != chebyshev_recursion(n)? {
            cheb = Err(format!("Chebyshev routes differ at n = {n}"));
            break;
        }
    }
    checks.push(Check { name: "chebyshev routes", outcome: cheb, detail: None });

    let mut charlier = Ok(());
    for n in 0..=(max_n + 2).min(scalar_cap) {
        if poisson_charlier(n)? != poisson_charlier_explicit(n)? {
            charlier = Err(format!("Poisson-Charlier routes differ at n = {n}"));
            break;
        }
        if n <= 8 && poisson_charlier(n)?.eval_t(&int(1)) != chebyshev_even_in_square(n) {
            charlier = Err(format!("T_{}(√x) differs at n = {n}", 2 * n));
            break;
        }
    }
    checks.push(Check { name: "poisson-charlier routes", outcome: charlier, detail: None });
    Ok(())
}
