//! End-to-end checks of the command-line contract through the real binary.

use std::process::Command;

use newton_subres::cli::parse_poly;
use newton_subres::poly::PowerPoly;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_newton-subres"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn reorders_inputs_and_reports_the_permutation() {
    let (code, stdout, _) = run(&["gcd", "x-1", "(x-1)*(x-2)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("order = 2,1"), "stdout: {stdout}");
    assert!(stdout.contains("gcd = -x + 1"));

    // ties keep input order: no note printed
    let (code, stdout, _) = run(&["gcd", "x-1", "x-2"]);
    assert_eq!(code, 0);
    assert!(!stdout.contains("note:"), "stdout: {stdout}");
}

#[test]
fn json_coefficients_reproduce_the_plain_polynomial() {
    let args_tail = ["--delta", "1", "--knots", "1,2", "(x-1)*(x-2)", "x-1"];
    let mut plain_args = vec!["sres"];
    plain_args.extend_from_slice(&args_tail);
    let (code, plain, _) = run(&plain_args);
    assert_eq!(code, 0);
    let s_line = plain
        .lines()
        .find_map(|l| l.strip_prefix("S = "))
        .expect("S line");

    let mut json_args = vec!["sres", "--format", "json"];
    json_args.extend_from_slice(&args_tail);
    let (code, json, _) = run(&json_args);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(json.trim()).expect("valid json");
    let coeffs: Vec<_> = value["power_coeffs"]
        .as_array()
        .expect("array")
        .iter()
        .map(|v| v.as_str().expect("string").parse().expect("rational"))
        .collect();
    let rebuilt = PowerPoly::new(coeffs);
    assert_eq!(rebuilt.to_string(), s_line);
    // and the leading field matches the newton coefficient of B_eps
    let eps = value["eps"].as_u64().expect("eps") as usize;
    let newton = value["newton_coeffs"].as_array().expect("array");
    assert_eq!(newton.len(), eps + 1);
    assert_eq!(value["leading"], newton[eps]);
}

#[test]
fn selftest_is_deterministic_for_a_fixed_seed() {
    let (code_a, out_a, _) = run(&["selftest", "--seed", "7", "--instances", "4"]);
    let (code_b, out_b, _) = run(&["selftest", "--seed", "7", "--instances", "4"]);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(out_a, out_b);
    assert!(out_a.contains("result: PASS"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, stderr) = run(&["sres", "--delta", "3", "x^2-1", "x+1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("exceeds d0"));

    let (code, _, stderr) = run(&["sres", "--delta", "1", "x^2 + y", "x"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown identifier"));

    let (code, _, stderr) = run(&["sres", "--delta", "1", "--knots", "1", "x^2-1", "x+1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("knot vector"));

    let (code, _, stderr) = run(&["companion", "--knots", "roots", "x^2+1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("roots"));

    let (code, _, _) = run(&["sres", "x"]);
    assert_eq!(code, 2);
}

#[test]
fn parser_is_reachable_as_a_library_surface() {
    // The CLI grammar is part of the public contract.
    assert_eq!(
        parse_poly("(x-1)*(x-2)").unwrap(),
        parse_poly("x^2 - 3*x + 2").unwrap()
    );
    let err = parse_poly("x^2 - 3*x + ").unwrap_err();
    assert_eq!(err.offset, 12);
}

#[test]
fn bench_emits_well_formed_csv() {
    let (code, stdout, _) = run(&["bench", "--count", "1", "--seed", "1"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("strategy,d0,t,delta,wall_ns,max_coeff_bits")
    );
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 6, "row: {line}");
        assert!(["zeros", "roots", "random"].contains(&fields[0]));
        fields[1].parse::<usize>().unwrap();
        fields[2].parse::<usize>().unwrap();
        fields[4].parse::<u128>().unwrap();
        fields[5].parse::<u64>().unwrap();
        rows += 1;
    }
    assert!(rows > 0);
}

#[test]
fn hyphen_leading_inputs_are_accepted() {
    // negative knots and leading-minus polynomials must not be read as flags
    let (code, stdout, _) = run(&["sres", "--delta", "1", "--knots", "-4,1", "x^2-1", "-x+1"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("S = x - 1"), "stdout: {stdout}");

    let (code, stdout, _) = run(&["convert", "--knots", "-1,-2", "-x^2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("knots = -1, -2"), "stdout: {stdout}");

    let (code, _, _) = run(&["icdeg", "-x^2+1", "-x-1"]);
    assert_eq!(code, 0);
}
