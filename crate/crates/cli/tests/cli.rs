use std::path::PathBuf;
use std::process::Command;

use deltamat_cli::fixtures;
use deltamat_cli::format::{parse, serialize};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["deltamat".to_string()];
    for a in args {
        argv.push(if a.contains('.') && !a.contains(' ') { fixture(a) } else { a.to_string() });
    }
    deltamat_cli::run(&argv)
}

#[test]
fn golden_outputs() {
    assert_eq!(
        run(&["upoly", "--method", "compare", "dex.dm"]),
        (0, "equal: u^3 + 6*u^2 + 3*u*v + 9*u + v^2 + 4*v + 3".into())
    );
    let (code, text) = run(&["complex", "dex.dm"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().next(), Some("f-vector: 1 6 6; pure: no"));
    let (code, text) = run(&["validate", "bad.dm"]);
    assert_eq!(code, 1);
    assert!(text.starts_with("FAIL: edge direction support 3 between "), "{text}");
    assert_eq!(run(&["interlace", "swap.gf2"]), (0, "2*v + 2".into()));
    assert_eq!(run(&["rank", "dex.dm", "1 2"]), (0, "g: 0\nh: 1".into()));
}

#[test]
fn info_and_minors() {
    let (code, text) = run(&["info", "dco.dm"]);
    assert_eq!(code, 0);
    assert!(text.contains("coloops: 1") && text.contains("loops: -"), "{text}");
    assert_eq!(run(&["minor", "dex.dm", "--contract", "1"]), (0, "n 2\nfeasible -1 -2".into()));
    assert_eq!(run(&["minor", "dex.dm", "--delete", "1"]), (0, "n 2\nfeasible 1 -2\nfeasible -1 2".into()));
    assert_eq!(run(&["product", "dco.dm", "dloop.dm"]), (0, "n 2\nfeasible 1 -2".into()));
    assert_eq!(run(&["twist", "dco.dm", "--perm", "-1"]), (0, "n 1\nfeasible -1".into()));
    assert_eq!(run(&["from-gf2", "swap.gf2"]), (0, "n 2\nfeasible 1 2\nfeasible -1 -2".into()));
}

#[test]
fn closed_form_discrepancy_is_reported() {
    let (code, text) = run(&["closed-form", "--uniform", "1,1", "--mode", "independents", "--compare"]);
    assert_eq!(code, 1);
    assert!(text.contains("U(1,1): formula u + 4 vs direct u + 2"), "{text}");
    let (code, _) = run(&["closed-form", "--compare"]);
    assert_eq!(code, 0);
}

#[test]
fn envelopes() {
    assert_eq!(run(&["envelope", "u12.dm", "--check", "u12-envelope.mat"]).0, 0);
    assert_eq!(run(&["envelope", "u12.dm", "--check", "u12.mat"]).0, 2);
    let (code, text) = run(&["envelope", "dco.dm", "--search"]);
    assert_eq!((code, text.as_str()), (0, "found\nground signed 1\nbasis 1"));
}

#[test]
fn property_failures_exit_one() {
    assert_eq!(run(&["lorentzian", "--poly", "w1^2 + w2^2"]).0, 1);
    assert_eq!(run(&["validate", "--method", "polytope", "bad.dm"]).0, 1);
    assert_eq!(run(&["axioms-g", "bad.dm"]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["upoly"]).0, 2);
    assert_eq!(run(&["upoly", "missing-file.dm"]).0, 2);
    assert_eq!(run(&["rank", "dex.dm", "1 -1"]).0, 2);
    assert_eq!(run(&["upoly", "u12.mat"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = std::env::temp_dir().join(format!("deltamat-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.dm");
    std::fs::write(&path, "n 2\nfeasible 1 2\nfeasible 1 -1\n").unwrap();
    let (code, text) = deltamat_cli::run(&["deltamat".into(), "info".into(), path.to_string_lossy().into()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 2);
    assert_eq!(text, "parse error: line 3: inadmissible set (contains both 1 and -1)");
}

#[test]
fn guard_limit_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_deltamat"))
        .args(["upoly", &fixture("dex.dm")])
        .env("DELTAMAT_GUARD_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard limit 2"));
    let out = Command::new(env!("CARGO_BIN_EXE_deltamat")).args(["upoly", &fixture("dex.dm")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "u^3 + 6*u^2 + 3*u*v + 9*u + v^2 + 4*v + 3\n");
}

#[test]
fn fixtures_round_trip() {
    for (name, text) in fixtures::ALL {
        let doc = parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc, "{name}");
    }
}

#[test]
fn rank_table_output_parses_back() {
    let (code, text) = run(&["rank-table", "dex.dm"]);
    assert_eq!(code, 0);
    let table = match parse(&text).unwrap() {
        deltamat_cli::format::InputDocument::RankTable(t) => t,
        other => panic!("unexpected {}", other.kind()),
    };
    assert_eq!(table.ground_size(), 3);
    assert_eq!(table.len(), 27);
}

#[test]
fn scans_are_reproducible_and_clean() {
    let a = run(&["scan", "--random", "30", "--size", "5", "--seed", "3"]);
    let b = run(&["--threads", "2", "scan", "--random", "30", "--size", "5", "--seed", "3"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0, "{}", a.1);
    assert!(a.1.ends_with("identity failures: 0; conjecture failures: 0"), "{}", a.1);
    let c = run(&["scan", "--random", "6", "--size", "6", "--seed", "1", "--dist", "gf2"]);
    assert_eq!(c.0, 0, "{}", c.1);
}
