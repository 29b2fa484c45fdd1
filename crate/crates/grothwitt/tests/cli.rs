//! The command-line surface: payload formats, exit codes, determinism.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_grothwitt"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

const P1_F2: &str = r#"{"builtin":"p1","field":{"p":2,"n":1,"modulus":[0,1]}}"#;
const CUBIC_F2: &str = r#"{"field":{"p":2,"n":1,"modulus":[0,1]},"genus":1,"smooth_model":true,
  "terms":[{"coeff":[1],"exps":[0,2,1]},{"coeff":[1],"exps":[0,1,2]},{"coeff":[1],"exps":[3,0,0]}]}"#;

#[test]
fn witt_payloads() {
    let (out, _, code) = run(&["witt", "mul", "--a", "-2", "--b", "-3"]);
    assert_eq!((out.as_str(), code), ("-6\n", 0));

    let (out, _, code) = run(&["witt", "add", "--a", "1/2,0", "--b", "-1/2,0"]);
    assert_eq!((out.as_str(), code), ("0,-1/4\n", 0));

    // JSON array form of the same series.
    let (out, _, code) = run(&["witt", "add", "--a", r#"["1/2","0"]"#, "--b", r#"["-1/2","0"]"#]);
    assert_eq!((out.as_str(), code), ("0,-1/4\n", 0));

    let (out, _, code) = run(&["witt", "ghost", "--a", "-1,0,0,0"]);
    assert_eq!((out.as_str(), code), ("1,1,1,1\n", 0));

    let (out, _, code) = run(&["witt", "frob", "--a", "-1,0,0,0", "--m", "2"]);
    assert_eq!((out.as_str(), code), ("-1,0\n", 0));

    let (out, _, code) = run(&["witt", "versch", "--a", "-3,0,0,0", "--m", "2"]);
    assert_eq!((out.as_str(), code), ("0,-3,0,0\n", 0));
}

#[test]
fn witt_rejects_bad_rationals() {
    let (_, err, code) = run(&["witt", "ghost", "--a", "1,zebra"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot parse rational"));
}

#[test]
fn measure_round_trip() {
    let (measure, _, code) = run(&["measure", "of", "--curve", P1_F2]);
    assert_eq!(code, 0);
    assert_eq!(
        measure.trim(),
        r#"{"T":[{"num":["-1"],"den":[]},{"num":[],"den":[]},{"num":["-2"],"den":[]}]}"#
    );

    // The printed payload is accepted unchanged by consuming commands.
    let (ghost, _, code) = run(&["measure", "ghost", "--input", measure.trim(), "--nu", "3"]);
    assert_eq!((ghost.as_str(), code), ("1,0,8\n", 0));

    let (spread, _, code) = run(&["measure", "versch", "--input", measure.trim(), "--m", "2"]);
    assert_eq!(code, 0);
    let (back, _, code) = run(&["measure", "frob", "--input", spread.trim(), "--m", "2"]);
    assert_eq!(code, 0);
    // F_2 V_2 doubles the class in the Witt ring: ghosts double.
    let (g1, _, _) = run(&["measure", "ghost", "--input", measure.trim(), "--nu", "2"]);
    let (g2, _, _) = run(&["measure", "ghost", "--input", back.trim(), "--nu", "2"]);
    assert_eq!(g1.trim(), "1,0,4");
    assert_eq!(g2.trim(), "2,0,8");

    let (square, _, code) = run(&["measure", "mul", "--a", measure.trim(), "--b", measure.trim()]);
    assert_eq!(code, 0);
    let (gs, _, _) = run(&["measure", "ghost", "--input", square.trim(), "--nu", "1"]);
    // ghost(P^1) at nu = 1 is 1 + 2T; its square is 1 + 4T + 4T^2.
    assert_eq!(gs.trim(), "1,0,4,0,4");
}

#[test]
fn zeta_counts_and_numerator() {
    let (out, _, code) = run(&["zeta", "count", "--curve", P1_F2, "--ext", "3"]);
    assert_eq!((out.as_str(), code), ("9\n", 0));

    let (out, _, code) = run(&["zeta", "compute", "--curve", CUBIC_F2]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"q":"2","genus":1,"counts":["3","9"],"numerator":["0","2"]}"#
    );

    // Budget small enough to cut off affine enumeration.
    let (_, err, code) = run(&["zeta", "count", "--curve", CUBIC_F2, "--ext", "4", "--budget", "3"]);
    assert_eq!(code, 3);
    assert!(err.contains("budget"));
}

#[test]
fn k0s_payloads() {
    let (out, _, code) = run(&["k0s", "mul", "--a", r#"{"2":1}"#, "--b", r#"{"terms":{"3":1}}"#]);
    assert_eq!((out.as_str(), code), ("{\"terms\":{\"6\":\"1\"}}\n", 0));

    let (out, _, code) = run(&["k0s", "psi", "--elem", r#"{"2":1}"#, "--n", "3"]);
    assert_eq!((out.as_str(), code), ("0\n", 0));
    let (out, _, code) = run(&["k0s", "psi", "--elem", r#"{"2":1}"#, "--n", "4"]);
    assert_eq!((out.as_str(), code), ("2\n", 0));

    let (out, _, code) = run(&["k0s", "zerodiv", "--nu", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let (prod, _, code) = run(&["k0s", "mul", "--a", lines[0], "--b", lines[1]]);
    assert_eq!((prod.as_str(), code), ("{\"terms\":{}}\n", 0));
}

#[test]
fn indep_verdicts() {
    let lattice = r#"{"rank":4,"reps":[[[0,1,0,0],[1,-1,0,0]],[[0,0,1,0],[1,0,-1,0]],[[0,0,0,1],[1,0,0,-1]]]}"#;
    let (out, _, code) = run(&["indep", "lattice", "--input", lattice]);
    assert_eq!((out.as_str(), code), ("dims 0,2,3,4\nGeometricallyIndependent\n", 0));

    let (out, _, code) = run(&[
        "indep", "two-curves", "--q", "4", "--p1", "1,4,4", "--p2", "", "--mmax", "120",
        "--horizon", "50",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("BecomesSpecialBoth m=2\n"));
    assert!(out.contains("vanishes: true"));

    // Tail-only form of the same numerator classifies identically.
    let (tail_form, _, _) = run(&[
        "indep", "two-curves", "--q", "4", "--p1", "4,4", "--p2", "", "--mmax", "120",
        "--horizon", "50",
    ]);
    assert_eq!(out, tail_form);

    let (out, _, code) = run(&["indep", "two-curves", "--q", "2", "--p1", "-1,2", "--p2", ""]);
    assert_eq!(code, 0);
    assert!(out.starts_with("IndependentCertified\n"));
}

#[test]
fn skolem_payloads() {
    let etale2 = r#"{"T":[{"num":["0","-1"],"den":[]}]}"#;
    let (out, _, code) = run(&["skolem", "goodset", "--input", etale2, "--horizon", "50"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"finite":[],"modulus":2,"residues":[1],"horizon":50}"#
    );

    let measures = r#"[{"T":[{"num":["0","-1"],"den":[]}]}]"#;
    let factors = r#"[{"vars":1,"terms":[{"exps":[1],"coeff":"1"}]},{"vars":1,"terms":[{"exps":[1],"coeff":"1"},{"exps":[0],"coeff":"-2"}]}]"#;
    let (out, _, code) = run(&[
        "skolem", "localize", "--measures", measures, "--factors", factors, "--horizon", "60",
    ]);
    assert_eq!((out.as_str(), code), ("modulus: 2\nfactor: 1 (T1 - 2)\n", 0));
}

#[test]
fn dh_payloads() {
    let (out, _, code) = run(&["dh", "sigma", "--p", "3", "--a", "2", "--t", "7"]);
    assert_eq!((out.as_str(), code), ("3\n", 0));

    let (out, _, code) = run(&["dh", "val", "--p", "3", "--a", "2", "--t", "1"]);
    assert_eq!((out.as_str(), code), ("1/2\n", 0));

    let (out, _, code) = run(&["dh", "threshold", "--p", "2", "--horizon", "50"]);
    assert_eq!((out.as_str(), code), ("threshold: 3\nfailures: 1,2\n", 0));

    let (out, _, code) = run(&["dh", "matrix", "--p", "2", "--n", "3", "--gamma", "3"]);
    assert_eq!((out.as_str(), code), ("X: [[1,2],[2,1]]\na: 1\ndet: -3\n", 0));

    // gamma in p^Z has digit sum 1 and is rejected as an argument.
    let (_, _, code) = run(&["dh", "matrix", "--p", "2", "--n", "3", "--gamma", "2"]);
    assert_eq!(code, 2);

    let (out, _, code) = run(&["dh", "jacobi", "--p", "2", "--a", "2", "--t", "1", "--j", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let re: f64 = lines[0]
        .strip_prefix("re = ")
        .and_then(|s| s.split(" +- ").next())
        .expect("re line shape")
        .parse()
        .expect("re parses");
    assert!((re + 2.0).abs() < 1e-6, "re = {re}");
}

#[test]
fn deterministic_stdout() {
    let args = [
        "indep",
        "jacobi",
        "--input",
        r#"{"vars":3,"root_order":2,"chars":[
            [{"root_exponent":0,"exps":[1,0,0]},{"root_exponent":0,"exps":[0,1,0]},
             {"root_exponent":0,"exps":[0,0,1]},{"root_exponent":0,"exps":[1,1,-1]}],
            [{"root_exponent":0,"exps":[1,0,0]},{"root_exponent":0,"exps":[0,1,0]},
             {"root_exponent":1,"exps":[0,0,1]},{"root_exponent":1,"exps":[1,1,-1]}]]}"#,
        "--budget",
        "100",
        "--seed",
        "7",
    ];
    let (first, _, code) = run(&args);
    assert_eq!(code, 0);
    assert!(first.starts_with("IndependentCertified divisor=2 point="));
    let (second, _, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn config_precedence() {
    // Environment overrides the default horizon.
    let etale2 = r#"{"T":[{"num":["0","-1"],"den":[]}]}"#;
    let (out, _, code) = run_with_env(
        &["skolem", "goodset", "--input", etale2],
        &[("GROTHWITT_HORIZON", "30")],
    );
    assert_eq!(code, 0);
    assert!(out.contains("\"horizon\":30"));

    // A flag overrides the environment.
    let (out, _, code) = run_with_env(
        &["skolem", "goodset", "--input", etale2, "--horizon", "40"],
        &[("GROTHWITT_HORIZON", "30")],
    );
    assert_eq!(code, 0);
    assert!(out.contains("\"horizon\":40"));
}

#[test]
fn verify_subset_passes() {
    let (out, _, code) = run(&["verify", "--suite", "c04,c05"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("pass c04"));
    assert!(lines[1].starts_with("pass c05"));

    let (_, err, code) = run(&["verify", "--suite", "c99"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown criterion"));
}

#[test]
fn unknown_subcommand_usage() {
    let (_, err, code) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}
