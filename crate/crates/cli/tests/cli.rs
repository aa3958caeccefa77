use std::collections::BTreeSet;
use std::process::Command;

use nc_freecalc::registry::ENTRIES;
use nc_freecalc::{run_with_cap, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_with_cap(std::iter::once("nc-freecalc").chain(args.iter().copied()), None)
}

fn records(out: &Outcome) -> Vec<Value> {
    out.stdout.lines().map(|l| serde_json::from_str(l).expect("each line is JSON")).collect()
}

fn single(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let mut recs = records(&out);
    assert_eq!(recs.len(), 1);
    recs.pop().unwrap()
}

#[test]
fn kreweras_example() {
    let rec = single(&["partitions", "kreweras", "1 2|3"]);
    assert_eq!(rec["value"], serde_json::json!([[1], [2, 3]]));
    assert_eq!(rec["command"], "partitions kreweras");
    assert_eq!(rec["exact"], true);
}

#[test]
fn orthogonality_example() {
    let rec = single(&["verify", "orthogonality", "--process", "poisson", "--t", "1", "--max-n", "5"]);
    assert_eq!(rec["value"]["passed"], true);
    let gram = rec["value"]["detail"]["gram"].as_array().unwrap();
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(v, if i == j { "1" } else { "0" });
        }
    }
}

#[test]
fn orthogonality_norms_scale_with_time() {
    let rec = single(&["verify", "orthogonality", "--process", "semicircular", "--t", "3", "--max-n", "3"]);
    let gram = &rec["value"]["detail"]["gram"];
    assert_eq!(gram[3][3], "27");
    assert_eq!(gram[2][1], "0");
}

#[test]
fn finite_n_symbolic_example() {
    let rec = single(&["finite-n", "1 3|2 4", "--process", "poisson", "--t", "1", "--symbolic"]);
    let laurent = rec["value"]["laurent"].as_object().unwrap();
    assert_eq!(laurent["-1"], "2");
    assert_eq!(laurent["-2"], "-1");
    assert_eq!(laurent["-3"], "-1");
    assert!(laurent.keys().all(|e| e.parse::<i64>().unwrap() < 0));
    assert_eq!(rec["value"]["limit"], "0");
}

#[test]
fn finite_n_at_a_given_n() {
    // (N)_2 (N^-4 + 2 N^-3) at N = 2.
    let rec = single(&["finite-n", "1 3|2 4", "--process", "poisson", "--n", "2"]);
    assert_eq!(rec["value"], "5/8");
}

#[test]
fn rationals_are_exact_strings() {
    let rec = single(&["transform", "scale", "1,2,3", "--t", "2/6"]);
    assert_eq!(rec["value"], serde_json::json!(["1/3", "2/3", "1"]));
    let rec = single(&["transform", "s-transform", "1,1,1,1,1,1,1,1"]);
    assert_eq!(rec["value"], serde_json::json!(["1", "-1", "1", "-1", "1", "-1", "1", "-1"]));
}

#[test]
fn enumerate_streams_one_record_per_partition() {
    let out = run(&["partitions", "enumerate", "5"]);
    assert_eq!(out.code, 0);
    assert_eq!(records(&out).len(), 42);
    let out = run(&["partitions", "enumerate", "5", "--kind", "interval"]);
    assert_eq!(records(&out).len(), 16);
}

#[test]
fn st_and_pr_on_a_crossing_partition() {
    assert_eq!(single(&["st", "1 3|2 4", "--process", "poisson"])["value"], "0");
    let pr = single(&["pr", "1 3|2 4", "--process", "poisson", "--t", "2"]);
    assert_ne!(pr["value"], "0");
}

#[test]
fn ito_forms_agree() {
    for pi in ["1 3|2 4", "1 2|3", "1 4|2 5|3"] {
        let rec = single(&["ito", pi, "--process", "custom", "--cumulants", "1,-2,3,1/2,5", "--t", "3/2"]);
        assert_eq!(rec["value"]["expectation"], rec["value"]["mobius"]["expectation"], "{pi}");
    }
}

#[test]
fn polys_tables_in_every_format() {
    let json = run(&["polys", "brownian", "--n", "0..3"]);
    let recs = records(&json);
    assert_eq!(recs.len(), 4);
    assert_eq!(recs[3]["value"]["polynomial"], "X^3 - 2*t*X");

    let csv = run(&["--format", "csv", "polys", "brownian", "--n", "3", "--t", "1/2"]);
    assert_eq!(csv.code, 0);
    let mut reader = csv::Reader::from_reader(csv.stdout.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["family", "n", "monomial", "coefficient"]);
    let rows: Vec<Vec<String>> = reader.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    assert_eq!(rows, vec![vec!["brownian", "3", "X", "-1"], vec!["brownian", "3", "X^3", "1"]]);

    let text = run(&["--format", "text", "polys", "poisson-charlier", "--n", "1..2"]);
    assert_eq!(text.stdout, "n  polynomial\n1  X - t\n2  X^2 + (-2*t - 1)*X + t^2\n");
}

#[test]
fn polys_gram_matrix() {
    let out = run(&["polys", "compound", "--n", "0..4", "--generator", "1,1/2,1/4,1/8,1/16,1/32,1/64,1/128", "--t", "3", "--check-orthogonality"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let gram = records(&out).pop().unwrap();
    assert_eq!(gram["command"], "polys gram");
    assert_eq!(gram["value"]["orthogonal"], true);
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "all", "--max-n", "5"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(records(&out).iter().all(|r| r["value"]["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).code, 1);
    assert_eq!(run(&["partitions", "kreweras", "1 2|4"]).code, 1);
    assert_eq!(run(&["partitions", "kreweras", "1 3|2 4"]).code, 1);
    assert_eq!(run(&["st", "1 2", "--t", "1/0"]).code, 1);
    assert_eq!(run(&["st", "1 2", "--t", "x"]).code, 1);
    assert_eq!(run(&["partitions", "enumerate", "13", "--kind", "all"]).code, 2);
    assert_eq!(run(&["polys", "brownian", "--n", "21"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("finite-n"));
    let err = run(&["partitions", "mobius", "1 3|2 4", "1 2 3 4"]);
    assert_eq!(err.code, 1);
    assert!(err.stdout.is_empty() && err.stderr.starts_with("error:"));
}

#[test]
fn invalid_cap_override_is_an_argument_error() {
    let out = run_with_cap(["nc-freecalc", "partitions", "kreweras", "1"], Some("lots"));
    assert_eq!(out.code, 1);
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["partitions", "enumerate", "6", "--kind", "all"],
        &["tables", "1 3|2 4"],
        &["ito", "1 3|2 4|5", "--process", "poisson", "--t", "2/3"],
        &["--format", "csv", "polys", "general", "--n", "0..6"],
        &["--format", "text", "verify", "mobius", "--max-n", "5"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn json_keys_are_sorted() {
    let rec = run(&["partitions", "info", "1 5|2 4|3"]).stdout;
    let positions: Vec<usize> = ["\"block_count\"", "\"blocks\"", "\"canonical\"", "\"crossing_number\""]
        .iter().map(|k| rec.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

const LIBRARY_OPS: &[&str] = &[
    "parse_partition",
    "enumerate_all",
    "enumerate_noncrossing",
    "enumerate_interval",
    "is_noncrossing",
    "leq",
    "meet",
    "join",
    "opposite",
    "thicken",
    "expand",
    "direct_sum",
    "classify_blocks",
    "crossing_number",
    "has_inner_singleton",
    "kreweras",
    "mobius_nc",
    "mobius_p",
    "moments_from_cumulants",
    "cumulants_from_moments",
    "m_pi",
    "r_pi",
    "alternating_moment",
    "scale_time",
    "center",
    "r_series",
    "s_from_r",
    "r_from_s",
    "sandwich_transform",
    "st_expectation",
    "pr_expectation",
    "st_from_pr",
    "pr_from_st",
    "multiplicativity_check",
    "diagonal_cumulant",
    "delta_word_moment",
    "finite_n_expectation",
    "finite_n_laurent",
    "vanishing_order_check",
    "inner_singleton_vanishing",
    "brownian_product_measure",
    "poisson_separation_predicate",
    "poisson_product_measure",
    "ito_expand",
    "ito_expectation",
    "ito_mobius_expand",
    "sandwich_limit",
    "ks_general",
    "ks_centered",
    "alpha",
    "beta",
    "specialize_brownian",
    "specialize_poisson",
    "poisson_charlier",
    "compound_ks",
    "inner_product",
];

#[test]
fn registry_covers_every_library_operation() {
    let covered: BTreeSet<&str> = ENTRIES.iter().flat_map(|e| e.ops.iter().copied()).collect();
    let missing: Vec<&str> = LIBRARY_OPS.iter().copied().filter(|op| !covered.contains(op)).collect();
    assert!(missing.is_empty(), "unreachable: {missing:?}");
}

#[test]
fn registry_examples_run() {
    for entry in ENTRIES {
        let words: Vec<&str> = entry.path.split(' ').collect();
        assert_eq!(&entry.example[..words.len()], &words[..], "{}", entry.path);
        let out = run(entry.example);
        assert_eq!(out.code, 0, "{}: {}", entry.path, out.stderr);
        let recs = records(&out);
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| r["command"].as_str().unwrap().starts_with(entry.path)));
    }
}

#[test]
fn binary_reads_cap_override_from_environment() {
    let bin = env!("CARGO_BIN_EXE_nc-freecalc");
    let capped = Command::new(bin).args(["polys", "brownian", "--n", "21"]).env_remove("NC_FREECALC_CAP_OVERRIDE").output().unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(capped.stdout.is_empty());

    let raised = Command::new(bin).args(["polys", "brownian", "--n", "21"]).env("NC_FREECALC_CAP_OVERRIDE", "21").output().unwrap();
    assert_eq!(raised.status.code(), Some(0));
    let rec: Value = serde_json::from_slice(&raised.stdout).unwrap();
    assert_eq!(rec["value"]["terms"].as_array().unwrap().len(), 11);

    let bad = Command::new(bin).args(["partitions", "kreweras", "1"]).env("NC_FREECALC_CAP_OVERRIDE", "-3").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
