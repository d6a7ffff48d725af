use std::io::Write;

use gassmann_cli::{render_table, run, CommandResult, EXIT_CAP, EXIT_NEGATIVE, EXIT_USAGE};
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let r = run(&argv);
    assert!(r.stderr.is_empty(), "{}", r.stderr);
    let parsed: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(Some(&parsed), r.payload.as_ref());
    (r.exit_code, parsed)
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

/// Every scalar leaf of a JSON value, rendered as it would be in a table.
fn leaves(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(o) => o.values().for_each(|x| leaves(x, out)),
        Value::Array(a) => a.iter().for_each(|x| leaves(x, out)),
        Value::String(s) => out.push(s.clone()),
        Value::Null => {}
        other => out.push(other.to_string()),
    }
}

#[test]
fn fano_pair_is_almost_conjugate_but_not_conjugate() {
    let (code, v) = json(&[
        "gassmann",
        "check",
        "--group",
        "gl3_2",
        "--h1",
        "point_stab",
        "--h2",
        "line_stab",
    ]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["gassmann"], true);
    assert_eq!(v["conjugate"], false);
    assert_eq!(v["witness"], Value::Null);
    assert_eq!(v["profiles"]["h1"], v["profiles"]["h2"]);
}

#[test]
fn conjugate_subgroups_are_a_positive_finding() {
    let (code, v) = json(&[
        "gassmann",
        "check",
        "--group",
        "sym:4",
        "--h1",
        "point_stab",
        "--h2",
        "point_stab",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["gassmann"], true);
    assert_eq!(v["conjugate"], true);
}

#[test]
fn decomposition_of_two_in_the_septic_field() {
    let (code, v) = json(&["nf", "decomposition", "--poly", "x^7-7*x+3", "--prime", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["type"], serde_json::json!([7]));
    assert_eq!(v["ramified"], false);
    assert_eq!(v["polynomial"], "x^7 - 7*x + 3");
    let (_, v) = json(&["nf", "decomposition", "--poly", "x^7-7*x+3", "--prime", "7"]);
    assert_eq!(v["ramified"], true);
    assert_eq!(v["type"], Value::Null);
}

#[test]
fn excluded_prime_examples() {
    let (code, v) = json(&["excluded-prime", "13"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["excluded"].clone(), v["q"].clone(), v["k"].clone()),
        (true.into(), 3.into(), 3.into())
    );
    let (code, v) = json(&["excluded-prime", "17"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["excluded"], false);
    let (code, v) = json(&["excluded-prime", "11"]);
    assert_eq!(code, 0);
    assert_eq!(v["reason"], "eleven");
    assert_eq!(run(["excluded-prime", "15"]).exit_code, EXIT_USAGE);
}

#[test]
fn payloads_carry_the_header_and_are_deterministic() {
    let invocations: &[&[&str]] = &[
        &["group", "info", "--group", "psl2_11"],
        &["group", "classes", "--group", "gl3_2"],
        &["group", "subgroups", "--group", "sym:4"],
        &["gassmann", "enumerate", "--group", "gl3_2", "--index", "7"],
        &["gassmann", "solitary", "--group", "sym:4", "--h1", "point_stab"],
        &["criterion", "scan", "--group", "sym:5"],
        &["structure", "blocks", "--group", "dihedral:6"],
        &["structure", "closure-report", "--group", "sym:5", "--ell", "5"],
        &["nf", "density", "--poly", "x^2+1", "--bound", "2000"],
        &["nf", "signature", "--poly", "x^7-7*x+3"],
        &[
            "nf",
            "compare",
            "--poly",
            "x^3-2",
            "--poly",
            "x^3-3*x+1",
            "--bound",
            "500",
        ],
        &[
            "nf",
            "chebotarev",
            "--group",
            "sym:3",
            "--poly",
            "x^3-2",
            "--bound",
            "2000",
        ],
    ];
    for args in invocations {
        let mut with_json = vec!["--json"];
        with_json.extend_from_slice(args);
        let a = run(&with_json);
        let b = run(&with_json);
        assert!(a.exit_code <= 1, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let v = a.payload.unwrap();
        for key in ["tool_version", "command", "inputs_echo"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
        assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
        // the table shows only values present in the payload
        let table = run(*args);
        assert_eq!(table.stdout, render_table(table.payload.as_ref().unwrap()));
        let mut values = Vec::new();
        leaves(&v, &mut values);
        for line in table.stdout.lines().skip(1) {
            for word in line.split_whitespace().map(|w| w.trim_matches(|c| "[],=".contains(c))) {
                if word.is_empty()
                    || word == "\u{2248}"
                    || word.contains('/')
                    || word.contains('(')
                    || word.contains('{')
                {
                    continue;
                }
                if word.parse::<f64>().is_ok() || word == "true" || word == "false" {
                    let found = values.iter().any(|x| x == word || x.contains(word));
                    assert!(found, "{args:?}: `{word}` in the table but not in the payload");
                }
            }
        }
    }
}

#[test]
fn table_rendering_examples() {
    let r = run(["group", "classes", "--group", "gl3_2"]);
    let header = r.stdout.lines().find(|l| l.starts_with("order")).unwrap();
    assert!(header
        .split_whitespace()
        .take(3)
        .eq(["order", "size", "representative"]));
    let r = run(["gassmann", "enumerate", "--group", "sym:4", "--index", "6"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.contains("no nontrivial Gassmann triples found"));
    let r = run(["nf", "density", "--poly", "x^2+1", "--bound", "2000"]);
    let v = r.payload.unwrap();
    let line = format!(
        "inert {}/{} \u{2248} {}",
        v["inert"]["num"],
        v["inert"]["den"],
        v["inert"]["decimal"].as_str().unwrap()
    );
    assert!(r.stdout.contains(&line), "{}", r.stdout);
}

#[test]
fn gassmann_enumerate_reports_the_fano_pair() {
    let (code, v) = json(&["gassmann", "enumerate", "--group", "gl3_2", "--index", "7"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let triples = v["triples"].as_array().unwrap();
    assert_eq!(triples.len(), 1);
    assert_eq!(triples[0]["class_sizes"], serde_json::json!([7, 7]));
}

#[test]
fn criterion_scan_outcomes() {
    let (code, v) = json(&["criterion", "scan", "--group", "sym:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"]["condition"], "i");
    let (code, v) = json(&["criterion", "scan", "--group", "psl2_11", "--h1", "a5_1"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["degree"], 11);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn group_and_polynomial_files() {
    let group = temp_file("# dihedral of order 8\ndegree 4\n(1 2 3 4)\n(2 4)  # reflection\n");
    let path = group.path().to_str().unwrap();
    let (_, v) = json(&["group", "info", "--group", path]);
    assert_eq!(v["order"], 8);
    let (_, v) = json(&["structure", "blocks", "--group", path]);
    assert_eq!(v["primitive"], false);
    assert_eq!(v["systems"][0]["blocks"], "{1,3} {2,4}");

    let sub = temp_file("degree 4\n(1 3)\n");
    let sub2 = temp_file("degree 4\n(2 4)\n");
    let (code, v) = json(&[
        "gassmann",
        "check",
        "--group",
        path,
        "--h1",
        sub.path().to_str().unwrap(),
        "--h2",
        sub2.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["conjugate"], true);

    let poly = temp_file("x^7 + 14*x^4 - 42*x^2 - 21*x + 9\n");
    let spec = format!("@{}", poly.path().to_str().unwrap());
    let (_, v) = json(&["nf", "signature", "--poly", &spec]);
    assert_eq!(
        (v["real_places"].clone(), v["complex_places"].clone()),
        (3.into(), 2.into())
    );
    assert_eq!(v["inputs_echo"]["poly"], spec.as_str());
}

#[test]
fn compare_reports_the_first_disagreement() {
    let (code, v) = json(&[
        "nf",
        "compare",
        "--poly",
        "x^3-2",
        "--poly",
        "x^3-3*x+1",
        "--bound",
        "500",
    ]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["agree"], false);
    assert!(v["first_disagreement"]["prime"].as_u64().is_some());
    let (code, v) = json(&[
        "nf",
        "compare",
        "--poly",
        "x^2+1",
        "--poly",
        "x^2+4*x+5",
        "--bound",
        "500",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
}

#[test]
fn chebotarev_flags_a_wrong_group() {
    let (code, v) = json(&[
        "nf",
        "chebotarev",
        "--group",
        "cyclic:3",
        "--poly",
        "x^3-2",
        "--bound",
        "5000",
    ]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["consistent"], false);
    assert!(v["unexplained"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([1, 2])));
}

fn assert_error(r: &CommandResult, code: i32) {
    assert_eq!(r.exit_code, code, "stdout: {} stderr: {}", r.stdout, r.stderr);
    assert!(r.payload.is_none());
    assert!(!r.stderr.is_empty());
}

#[test]
fn bad_input_gives_usage_errors() {
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["group", "info"],
        &["group", "info", "--group", "sym:0"],
        &["group", "info", "--group", "dihedral:2"],
        &["group", "info", "--group", "/no/such/file/at/all"],
        &[
            "gassmann",
            "check",
            "--group",
            "gl3_2",
            "--h1",
            "point_stab",
            "--h2",
            "nope",
        ],
        &["gassmann", "enumerate", "--group", "sym:4", "--index", "5"],
        &["gassmann", "enumerate", "--group", "sym:4", "--index", "0"],
        &["group", "subgroups", "--group", "sym:4", "--index", "0"],
        &["criterion", "scan", "--group", "cyclic:4", "--h1", "missing"],
        &["structure", "closure-report", "--group", "sym:4", "--ell", "5"],
        &["nf", "decomposition", "--poly", "2*x^2+1", "--prime", "3"],
        &["nf", "decomposition", "--poly", "x^2+1", "--prime", "4"],
        &["nf", "decomposition", "--poly", "x^2+y", "--prime", "3"],
        &["nf", "decomposition", "--poly", "x^2+1.5", "--prime", "3"],
        &["nf", "density", "--poly", "x^2+1", "--bound", "10"],
        &["nf", "density", "--poly", "x^2+1", "--bound", "1000000000000"],
        &["nf", "signature", "--poly", "x^2+2*x+1"],
        &["nf", "signature", "--poly", "@/no/such/poly"],
        &["nf", "compare", "--poly", "x^2+1", "--bound", "500"],
        &["nf", "compare", "--poly", "x^2+1", "--poly", "x^3+2", "--bound", "500"],
        &["--json", "--table", "excluded-prime", "7"],
        &["excluded-prime", "1"],
        &["excluded-prime", "-3"],
    ];
    for args in cases {
        assert_error(&run(*args), EXIT_USAGE);
    }
    let bad_group = temp_file("degree 3\n(1 2 4)\n");
    assert_error(
        &run(["group", "info", "--group", bad_group.path().to_str().unwrap()]),
        EXIT_USAGE,
    );
    let empty = temp_file("# nothing here\n");
    assert_error(
        &run(["group", "info", "--group", empty.path().to_str().unwrap()]),
        EXIT_USAGE,
    );
}

#[test]
fn caps_give_exit_three() {
    assert_error(&run(["group", "info", "--group", "sym:6", "--cap", "100"]), EXIT_CAP);
    assert_error(
        &run(["group", "subgroups", "--group", "sym:5", "--cap", "20"]),
        EXIT_CAP,
    );
}

#[test]
fn help_and_version_exit_zero() {
    let r = run(["--help"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.contains("gassmann") && r.stdout.contains("excluded-prime"));
    let r = run(["--version"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.contains(env!("CARGO_PKG_VERSION")));
}
