use std::str::FromStr;

use clap::ValueEnum;
use nc_freecalc_core::measures::{
    brownian_product_measure, delta_word_moment, diagonal_cumulant, finite_n_expectation, finite_n_laurent,
    inner_singleton_vanishing, ito_expand, ito_expectation, ito_mobius_expand, ito_mobius_expand_in,
    multiplicativity_check, poisson_product_check, poisson_product_measure, poisson_separation_predicate,
    pr_expectation, pr_from_st, sandwich_limit, st_expectation, st_from_pr, vanishing_order, BrownianProduct,
    PoissonProduct, ProcessModel,
};
use nc_freecalc_core::num::parse_rational;
use nc_freecalc_core::partitions::{
    enumerate_all, enumerate_interval, enumerate_noncrossing, mobius, BlockRole, Lattice,
};
use nc_freecalc_core::polynomials::{
    alpha, beta, compound_ks, gram_matrix, ks_centered, ks_centered_compositions, ks_centered_sequence, ks_general,
    ks_general_sequence, poisson_charlier, KsForm, specialize_brownian, specialize_poisson, DiagonalPolynomial,
    ScalarPolynomial,
};
use nc_freecalc_core::transforms::{
    alternating_moment, center, cumulants_from_moments, cumulants_from_r_series, m_pi, moments_from_cumulants,
    r_from_s, r_pi, r_series, s_from_r, sandwich_transform, scale_time, CumulantSeq, MomentSeq,
};
use nc_freecalc_core::series::SeriesQ;
use nc_freecalc_core::{Rational, SetPartition};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::args::*;
use crate::render::{self, aligned, partition, rational, rationals, record, Report, Table};
use crate::{usage, verify, CliError};

pub(crate) type CmdResult = Result<(Report, bool), CliError>;

pub(crate) fn name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

pub(crate) fn parse_partition(text: &str) -> Result<SetPartition, CliError> {
    Ok(SetPartition::from_str(text)?)
}

pub(crate) fn parse_rationals(text: &str) -> Result<Vec<Rational>, CliError> {
    tokens(text).map(|s| Ok(parse_rational(s)?)).collect()
}

pub(crate) fn parse_rational_arg(text: &str) -> Result<Rational, CliError> {
    Ok(parse_rational(text)?)
}

fn parse_usizes(text: &str) -> Result<Vec<usize>, CliError> {
    tokens(text)
        .map(|s| s.parse().map_err(|_| usage(format!("not a non-negative integer: {s:?}"))))
        .collect()
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty())
}

/// `"n"` or the inclusive range `"a..b"`.
fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || usage(format!("expected \"n\" or \"a..b\", got {text:?}"));
    match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

pub(crate) struct ProcessSpec<'a> {
    pub kind: ProcessArg,
    pub t: &'a str,
    pub centered: bool,
    pub generator: Option<&'a str>,
    pub cumulants: Option<&'a str>,
}

impl<'a> From<&'a ProcessOpts> for ProcessSpec<'a> {
    fn from(o: &'a ProcessOpts) -> Self {
        ProcessSpec {
            kind: o.process,
            t: &o.t,
            centered: o.centered,
            generator: o.generator.as_deref(),
            cumulants: o.cumulants.as_deref(),
        }
    }
}

impl ProcessSpec<'_> {
    pub fn build(&self) -> Result<ProcessModel, CliError> {
        let t = parse_rational_arg(self.t)?;
        let model = match self.kind {
            ProcessArg::Semicircular => ProcessModel::semicircular(t)?,
            ProcessArg::Poisson => ProcessModel::free_poisson(t)?,
            ProcessArg::Compound => {
                let g = self.generator.ok_or_else(|| usage("--process compound needs --generator"))?;
                ProcessModel::compound_poisson(MomentSeq::new(parse_rationals(g)?), t)?
            }
            ProcessArg::Custom => {
                let c = self.cumulants.ok_or_else(|| usage("--process custom needs --cumulants"))?;
                ProcessModel::custom(CumulantSeq::new(parse_rationals(c)?), t)?
            }
        };
        Ok(if self.centered { model.centered() } else { model })
    }

    pub fn describe(&self, model: &ProcessModel) -> Value {
        let mut v = json!({
            "kind": name(&self.kind),
            "t": rational(model.t()),
            "centered": model.is_centered(),
        });
        match self.kind {
            ProcessArg::Compound => v["generator"] = rationals(&parse_rationals(self.generator.unwrap_or("")).unwrap_or_default()),
            ProcessArg::Custom => v["cumulants"] = rationals(&parse_rationals(self.cumulants.unwrap_or("")).unwrap_or_default()),
            _ => {}
        }
        v
    }
}

fn ok(report: Report) -> CmdResult {
    Ok((report, true))
}

fn single(command: &str, inputs: Value, value: Value) -> CmdResult {
    ok(Report::single(command, inputs, value))
}

pub(crate) fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Partitions(cmd) => partitions(cmd),
        Command::Transform(cmd) => transform(cmd),
        Command::St(a) => partition_process("st", a, st_expectation),
        Command::Pr(a) => partition_process("pr", a, pr_expectation),
        Command::Multiplicativity(a) => {
            let (pi, spec, model) = partition_and_process(a)?;
            let holds = multiplicativity_check(&pi, &model)?;
            single("multiplicativity", json!({"partition": partition(&pi), "process": spec.describe(&model)}), json!(holds))
        }
        Command::InnerSingleton(a) => partition_process("inner-singleton", a, inner_singleton_vanishing),
        Command::Tables(a) => tables(a),
        Command::Product(a) => product(a),
        Command::Ito(a) => ito(a),
        Command::FiniteN(a) => finite_n(a),
        Command::Vanishing(a) => {
            let pi = parse_partition(&a.partition)?;
            let v = vanishing_order(&pi)?;
            single(
                "vanishing",
                json!({"partition": partition(&pi)}),
                json!({"max_exponent": v.max_exponent, "crossing_number": v.crossing_number, "holds": v.holds()}),
            )
        }
        Command::Diagonal(a) => diagonal(a),
        Command::Sandwich(a) => sandwich(a),
        Command::Polys(a) => polys(a),
        Command::Verify(a) => verify::run(a),
    }
}

fn partition_and_process(a: &PartitionProcess) -> Result<(SetPartition, ProcessSpec<'_>, ProcessModel), CliError> {
    let pi = parse_partition(&a.partition)?;
    let spec = ProcessSpec::from(&a.process);
    let model = spec.build()?;
    Ok((pi, spec, model))
}

fn partition_process(
    command: &str,
    a: &PartitionProcess,
    f: impl Fn(&SetPartition, &ProcessModel) -> nc_freecalc_core::Result<Rational>,
) -> CmdResult {
    let (pi, spec, model) = partition_and_process(a)?;
    let value = f(&pi, &model)?;
    single(command, json!({"partition": partition(&pi), "process": spec.describe(&model)}), rational(&value))
}

fn partitions(cmd: &PartitionsCmd) -> CmdResult {
    match cmd {
        PartitionsCmd::Enumerate { n, kind } => {
            let list: Vec<SetPartition> = match kind {
                Family::All => enumerate_all(*n)?.collect(),
                Family::Noncrossing => enumerate_noncrossing(*n)?.collect(),
                Family::Interval => enumerate_interval(*n)?.collect(),
            };
            let inputs = json!({"n": n, "kind": name(kind)});
            let records = list.iter().map(|p| record("partitions enumerate", inputs.clone(), partition(p))).collect();
            let rows: Vec<Vec<String>> =
                list.iter().map(|p| vec![p.to_string(), p.block_count().to_string()]).collect();
            let text = list.iter().map(|p| format!("{p}\n")).collect();
            ok(Report {
                records,
                table: Some(Table { header: vec!["partition".into(), "blocks".into()], rows }),
                text: Some(text),
            })
        }
        PartitionsCmd::Info { partition: text, size, thicken, expand } => {
            let pi = SetPartition::parse_with_size(text, *size)?;
            let mut value = json!({
                "canonical": pi.to_string(),
                "n": pi.n(),
                "blocks": partition(&pi),
                "block_count": pi.block_count(),
                "noncrossing": pi.is_noncrossing(),
                "interval": pi.is_interval(),
                "crossing_number": pi.crossing_number()?,
                "opposite": partition(&pi.opposite()),
            });
            if pi.is_noncrossing() {
                let roles = pi.classify_blocks()?;
                value["roles"] = roles
                    .roles
                    .iter()
                    .map(|r| match r {
                        BlockRole::Inner => "inner",
                        BlockRole::Outer => "outer",
                    })
                    .collect();
                value["inner_singleton"] = json!(pi.has_inner_singleton()?);
                value["kreweras"] = partition(&pi.kreweras()?);
            }
            if let Some(k) = thicken {
                value["thicken"] = partition(&pi.thicken(*k)?);
            }
            if let Some(u) = expand {
                value["expand"] = partition(&pi.expand(&parse_usizes(u)?)?);
            }
            let inputs = json!({"partition": text, "size": size, "thicken": thicken, "expand": expand});
            single("partitions info", inputs, value)
        }
        PartitionsCmd::Lattice { sigma, pi } => {
            let (s, p) = (parse_partition(sigma)?, parse_partition(pi)?);
            let value = json!({
                "sigma_leq_pi": s.leq(&p)?,
                "pi_leq_sigma": p.leq(&s)?,
                "meet": partition(&s.meet(&p)?),
                "join": partition(&s.join(&p)?),
                "direct_sum": partition(&s.direct_sum(&p)),
            });
            single("partitions lattice", json!({"sigma": partition(&s), "pi": partition(&p)}), value)
        }
        PartitionsCmd::Mobius { sigma, pi, lattice } => {
            let (s, p) = (parse_partition(sigma)?, parse_partition(pi)?);
            let l = match lattice {
                LatticeArg::Nc => Lattice::NonCrossing,
                LatticeArg::All => Lattice::All,
            };
            let value = mobius(&s, &p, l)?;
            let inputs = json!({"sigma": partition(&s), "pi": partition(&p), "lattice": name(lattice)});
            single("partitions mobius", inputs, rational(&value))
        }
        PartitionsCmd::Kreweras { partition: text } => {
            let pi = parse_partition(text)?;
            single("partitions kreweras", json!({"partition": partition(&pi)}), partition(&pi.kreweras()?))
        }
        PartitionsCmd::Crossing { partition: text } => {
            let pi = parse_partition(text)?;
            single("partitions crossing", json!({"partition": partition(&pi)}), json!(pi.crossing_number()?))
        }
    }
}

fn transform(cmd: &TransformCmd) -> CmdResult {
    match cmd {
        TransformCmd::M2c { values } => {
            let m = MomentSeq::new(parse_rationals(values)?);
            let r = cumulants_from_moments(&m);
            single("transform m2c", json!({"moments": rationals(m.values())}), rationals(r.values()))
        }
        TransformCmd::C2m { values } => {
            let r = CumulantSeq::new(parse_rationals(values)?);
            let m = moments_from_cumulants(&r);
            single("transform c2m", json!({"cumulants": rationals(r.values())}), rationals(m.values()))
        }
        TransformCmd::AltMoment { x_cumulants, y_moments, n } => {
            let x = CumulantSeq::new(parse_rationals(x_cumulants)?);
            let y = MomentSeq::new(parse_rationals(y_moments)?);
            let value = alternating_moment(&x, &y, *n)?;
            let inputs = json!({"x_cumulants": rationals(x.values()), "y_moments": rationals(y.values()), "n": n});
            single("transform alt-moment", inputs, rational(&value))
        }
        TransformCmd::STransform { values, inverse } => {
            let v = parse_rationals(values)?;
            let inputs = json!({"values": rationals(&v), "inverse": inverse});
            let out = if *inverse {
                cumulants_from_r_series(&r_from_s(&SeriesQ::new(v))?).into_values()
            } else {
                s_from_r(&r_series(&CumulantSeq::new(v)))?.coeffs().to_vec()
            };
            single("transform s-transform", inputs, rationals(&out))
        }
        TransformCmd::BlockProduct { partition: text, values, of } => {
            let pi = parse_partition(text)?;
            let v = parse_rationals(values)?;
            let value = match of {
                SeqKind::Moments => m_pi(&pi, &MomentSeq::new(v.clone()))?,
                SeqKind::Cumulants => r_pi(&pi, &CumulantSeq::new(v.clone()))?,
            };
            let inputs = json!({"partition": partition(&pi), "values": rationals(&v), "of": name(of)});
            single("transform block-product", inputs, rational(&value))
        }
        TransformCmd::Scale { values, t } => {
            let r = CumulantSeq::new(parse_rationals(values)?);
            let t = parse_rational_arg(t)?;
            let out = scale_time(&r, &t);
            single("transform scale", json!({"cumulants": rationals(r.values()), "t": rational(&t)}), rationals(out.values()))
        }
        TransformCmd::Center { values } => {
            let r = CumulantSeq::new(parse_rationals(values)?);
            single("transform center", json!({"cumulants": rationals(r.values())}), rationals(center(&r).values()))
        }
        TransformCmd::Sandwich { values } => {
            let m = MomentSeq::new(parse_rationals(values)?);
            let out = sandwich_transform(&m);
            single("transform sandwich", json!({"moments": rationals(m.values())}), rationals(out.values()))
        }
    }
}

fn tables(a: &TablesArgs) -> CmdResult {
    let pi = parse_partition(&a.partition)?;
    let combination = match a.direction {
        Direction::StToPr => pr_from_st(&pi)?,
        Direction::PrToSt => st_from_pr(&pi)?,
    };
    let inputs = json!({"partition": partition(&pi), "direction": name(&a.direction)});
    let rows: Vec<Vec<String>> =
        combination.terms().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect();
    let header = vec!["partition".to_string(), "coefficient".to_string()];
    ok(Report {
        records: vec![record("tables", inputs, render::combination(&combination))],
        text: Some(aligned(&header, &rows)),
        table: Some(Table { header, rows }),
    })
}

fn product(a: &ProductArgs) -> CmdResult {
    let pi = parse_partition(&a.partition)?;
    let t = a.t.as_deref().map(parse_rational_arg).transpose()?;
    let mut inputs = json!({"partition": partition(&pi), "process": name(&a.process)});
    if let Some(t) = &t {
        inputs["t"] = rational(t);
    }
    let mut value = match a.process {
        ProcessArg::Semicircular => {
            let form = brownian_product_measure(&pi)?;
            let mut v = match &form {
                BrownianProduct::InnerSingletonZero => json!({"form": "inner-singleton-zero"}),
                BrownianProduct::Uncovered => json!({"form": "uncovered"}),
                BrownianProduct::Monomial { x_power, time_power, zero_power } => json!({
                    "form": "monomial",
                    "x_power": x_power,
                    "time_power": time_power,
                    "zero_power": zero_power,
                }),
            };
            v["zero"] = json!(form.is_zero());
            if let Some(t) = &t {
                v["expectation"] = form.expectation(t)?.as_ref().map_or(Value::Null, rational);
            }
            v
        }
        ProcessArg::Poisson => {
            let form = poisson_product_measure(&pi)?;
            let mut v = match &form {
                PoissonProduct::Closed { outer, inner } => json!({"form": "closed", "outer": outer, "inner": inner}),
                PoissonProduct::NotCovered => json!({"form": "not-covered"}),
            };
            v["separated"] = json!(poisson_separation_predicate(&pi)?);
            if let Some(t) = &t {
                v["expectation"] = form.expectation(t).as_ref().map_or(Value::Null, rational);
                v["matches_direct_sum"] = json!(poisson_product_check(&pi, t)?);
            }
            v
        }
        other => return Err(usage(format!("product has closed forms only for semicircular and poisson, not {}", name(&other)))),
    };
    if let Some(t) = &t {
        let model = match a.process {
            ProcessArg::Semicircular => ProcessModel::semicircular(t.clone())?,
            _ => ProcessModel::free_poisson(t.clone())?,
        };
        value["direct"] = rational(&pr_expectation(&pi, &model)?);
    }
    single("product", inputs, value)
}

fn ito(a: &ItoArgs) -> CmdResult {
    let pi = parse_partition(&a.partition)?;
    let spec = ProcessSpec::from(&a.process);
    let model = spec.build()?;
    let expansion = ito_expand(&pi)?;
    let mobius_form = match a.lattice {
        None => ito_mobius_expand(&pi)?,
        Some(LatticeArg::Nc) => ito_mobius_expand_in(&pi, Lattice::NonCrossing)?,
        Some(LatticeArg::All) => ito_mobius_expand_in(&pi, Lattice::All)?,
    };
    let lattice_name = match mobius_form.lattice {
        Lattice::NonCrossing => "nc",
        Lattice::All => "all",
    };
    let value = json!({
        "expansion": expansion.iter().map(partition).collect::<Vec<_>>(),
        "expectation": rational(&ito_expectation(&pi, &model)?),
        "mobius": {
            "lattice": lattice_name,
            "terms": render::combination(&mobius_form.terms),
            "expectation": rational(&mobius_form.expectation(&model)?),
        },
    });
    let mut inputs = json!({"partition": partition(&pi), "process": spec.describe(&model)});
    if let Some(l) = &a.lattice {
        inputs["lattice"] = json!(name(l));
    }
    single("ito", inputs, value)
}

fn finite_n(a: &FiniteNArgs) -> CmdResult {
    let pi = parse_partition(&a.partition)?;
    let k = match &a.k {
        Some(text) => parse_usizes(text)?,
        None => vec![1; pi.n()],
    };
    let spec = ProcessSpec::from(&a.process);
    let model = spec.build()?;
    let mut inputs = json!({"partition": partition(&pi), "k": k, "process": spec.describe(&model)});
    let value = match a.big_n {
        Some(n) => {
            inputs["n"] = json!(n);
            rational(&finite_n_expectation(&pi, &k, &model, n)?)
        }
        None => {
            let laurent = finite_n_laurent(&pi, &k, &model)?;
            json!({"laurent": render::laurent(&laurent), "limit": render::limit(&laurent.limit_at_infinity())})
        }
    };
    single("finite-n", inputs, value)
}

fn diagonal(a: &DiagonalArgs) -> CmdResult {
    let spec = ProcessSpec::from(&a.process);
    let model = spec.build()?;
    match &a.word {
        Some(w) => {
            let word = parse_usizes(w)?;
            let value = delta_word_moment(&word, &model)?;
            single("diagonal", json!({"word": word, "process": spec.describe(&model)}), rational(&value))
        }
        None => {
            let value = diagonal_cumulant(a.n, a.k, &model)?;
            single("diagonal", json!({"n": a.n, "k": a.k, "process": spec.describe(&model)}), rational(&value))
        }
    }
}

fn sandwich(a: &SandwichArgs) -> CmdResult {
    let powers = parse_usizes(&a.powers)?;
    let z = parse_rationals(&a.z)?;
    let spec = ProcessSpec::from(&a.process);
    let model = spec.build()?;
    let limit = sandwich_limit(&powers, &z)?;
    let value = json!({
        "coefficient": rational(&limit.coefficient),
        "diagonal": limit.diagonal,
        "expectation": rational(&limit.expectation(&model)?),
    });
    let inputs = json!({"powers": powers, "z": rationals(&z), "process": spec.describe(&model)});
    single("sandwich", inputs, value)
}

enum Poly {
    Diagonal(DiagonalPolynomial),
    Scalar(ScalarPolynomial),
}

impl Poly {
    fn eval_t(self, t: &Rational) -> Poly {
        match self {
            Poly::Diagonal(p) => Poly::Diagonal(p.eval_t(t)),
            Poly::Scalar(p) => Poly::Scalar(p.eval_t(t)),
        }
    }

    fn display(&self) -> String {
        match self {
            Poly::Diagonal(p) => p.to_string(),
            Poly::Scalar(p) => p.to_string(),
        }
    }

    fn terms(&self) -> Value {
        match self {
            Poly::Diagonal(p) => render::diagonal_terms(p),
            Poly::Scalar(p) => render::scalar_terms(p),
        }
    }

    fn rows(&self) -> Vec<(String, String)> {
        match self {
            Poly::Diagonal(p) => p.terms().map(|(w, c)| (render::word_label(w), c.to_string())).collect(),
            Poly::Scalar(p) => p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let monomial = match k {
                        0 => "1".to_string(),
                        1 => "X".to_string(),
                        k => format!("X^{k}"),
                    };
                    (monomial, c.to_string())
                })
                .collect(),
        }
    }
}

fn generator_arg(text: Option<&str>) -> Result<MomentSeq, CliError> {
    let g = text.ok_or_else(|| usage("the compound family needs --generator"))?;
    Ok(MomentSeq::new(parse_rationals(g)?))
}

fn family_poly(a: &PolysArgs, n: usize) -> Result<Poly, CliError> {
    Ok(match a.family {
        PolyFamily::General => Poly::Diagonal(ks_general(n)?),
        PolyFamily::Centered => Poly::Diagonal(ks_centered(n)?),
        PolyFamily::CenteredCompositions => Poly::Diagonal(ks_centered_compositions(n)?),
        PolyFamily::Alpha => Poly::Diagonal(alpha(n, a.m)?),
        PolyFamily::Beta => Poly::Diagonal(beta(n, a.m)?),
        PolyFamily::Compound => Poly::Diagonal(compound_ks(n, &generator_arg(a.generator.as_deref())?)?),
        PolyFamily::Brownian => Poly::Scalar(specialize_brownian(n)?),
        PolyFamily::Poisson => Poly::Scalar(specialize_poisson(n)?),
        PolyFamily::PoissonCharlier => Poly::Scalar(poisson_charlier(n)?),
    })
}

fn polys(a: &PolysArgs) -> CmdResult {
    let range = parse_range(&a.n)?;
    let t = a.t.as_deref().map(parse_rational_arg).transpose()?;
    let family = name(&a.family);
    let indexed = matches!(a.family, PolyFamily::Alpha | PolyFamily::Beta);
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut text_rows = Vec::new();
    for n in range.clone() {
        let mut poly = family_poly(a, n)?;
        if let Some(t) = &t {
            poly = poly.eval_t(t);
        }
        let mut inputs = json!({"family": family, "n": n});
        if indexed {
            inputs["m"] = json!(a.m);
        }
        if let Some(t) = &t {
            inputs["t"] = rational(t);
        }
        if let Some(g) = &a.generator {
            inputs["generator"] = rationals(&parse_rationals(g)?);
        }
        let shown = poly.display();
        records.push(record("polys", inputs, json!({"polynomial": shown, "terms": poly.terms()})));
        for (monomial, coeff) in poly.rows() {
            rows.push(vec![family.clone(), n.to_string(), monomial, coeff]);
        }
        text_rows.push(vec![n.to_string(), shown]);
    }
    let mut text = aligned(&["n".to_string(), "polynomial".to_string()], &text_rows);
    let mut passed = true;
    if a.check_orthogonality {
        let (gram_record, gram_ok, gram_text) = polys_gram(a, *range.end(), t.as_ref())?;
        records.push(gram_record);
        text.push('\n');
        text.push_str(&gram_text);
        passed = gram_ok;
    }
    let header = ["family", "n", "monomial", "coefficient"].map(String::from).to_vec();
    Ok((Report { records, table: Some(Table { header, rows }), text: Some(text) }, passed))
}

/// Gram matrix of `ψ_0, …, ψ_max` for the centered process matching the
/// family; `t` in `ψ_n` reads as `φ(X) = 0`.
fn polys_gram(a: &PolysArgs, max: usize, t: Option<&Rational>) -> Result<(Value, bool, String), CliError> {
    let t_text = t.map_or_else(|| "1".to_string(), Rational::to_string);
    let (kind, psi) = match a.family {
        PolyFamily::General => (a.process, ks_general_sequence(max, KsForm::QIndex)?),
        PolyFamily::Centered | PolyFamily::CenteredCompositions => (a.process, ks_centered_sequence(max)?),
        PolyFamily::Compound => (ProcessArg::Compound, ks_general_sequence(max, KsForm::QIndex)?),
        PolyFamily::Brownian => (ProcessArg::Semicircular, ks_centered_sequence(max)?),
        PolyFamily::Poisson => (ProcessArg::Poisson, ks_general_sequence(max, KsForm::QIndex)?),
        PolyFamily::PoissonCharlier => (ProcessArg::Poisson, ks_centered_sequence(max)?),
        PolyFamily::Alpha | PolyFamily::Beta => {
            return Err(usage("--check-orthogonality applies to ψ_n families, not alpha or beta"))
        }
    };
    let spec = ProcessSpec {
        kind,
        t: &t_text,
        centered: true,
        generator: a.generator.as_deref(),
        cumulants: a.cumulants.as_deref(),
    };
    let model = spec.build()?;
    let gram = gram_matrix(&psi, &model)?;
    let (value, passed) = verify::gram_value(&gram, &model)?;
    let text = verify::gram_text(&gram);
    let inputs = json!({"family": name(&a.family), "n": max, "process": spec.describe(&model)});
    Ok((record("polys gram", inputs, value), passed, text))
}

pub(crate) fn power(base: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * base)
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}
