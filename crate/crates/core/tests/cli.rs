use std::path::{Path, PathBuf};
use std::process::Command;

use lamd::cli::{
    run_command_with, CommandOutput, Report, EXIT_INPUT, EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE,
};
use tempfile::TempDir;

fn run(args: &[&str]) -> CommandOutput {
    run_command_with(std::iter::once("lamd").chain(args.iter().copied()), None)
}

fn catalog_file(dir: &TempDir, name: &str, m: Option<&str>) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let p = path.to_str().unwrap();
    let out = match m {
        Some(m) => run(&["catalog", name, "--m", m, "-o", p]),
        None => run(&["catalog", name, "-o", p]),
    };
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn md_prints_verdict_and_trace() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "s5_45", None);
    let out = run(&["md", s(&f)]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stdout.starts_with("Verified: MD_4(5)\n"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("principal 4-Pfaffians: c^2 + d^2"));
    assert!(out.stdout.contains("refined ideal:"));
}

#[test]
fn orbit_dimension_of_a_functional() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "s5_45", None);
    let out = run(&["orbit", s(&f), "--functional", "0,0,0,0,1"]);
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "dim Ω_F = 4\n"));
    let out = run(&["orbit", s(&f), "--functional", "-1/2,3,0,0,0"]);
    assert_eq!(out.stdout, "dim Ω_F = 0\n");
    let out = run(&["orbit", s(&f), "--functional", "1,2"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn heisenberg_classification_with_isomorphism() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "heisenberg", Some("2"));
    let out = run(&["classify", s(&f)]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("heisenberg(2)\n"));
    assert!(out.stdout.contains("isomorphism"));
    assert!(out.stdout.contains("[1, 0, 0, 0, 0]"));
}

#[test]
fn reports_in_both_formats() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "s5_45", None);
    let md = run(&["report", s(&f)]);
    assert_eq!(md.code, EXIT_OK);
    for row in [
        "| G¹ dim | 3 |",
        "| G² dim | 1 |",
        "| verdict | Verified k=4 |",
    ] {
        assert!(md.stdout.contains(row), "{row}");
    }
    assert_eq!(run(&["report", s(&f)]).stdout, md.stdout);

    let json = run(&["report", s(&f), "--format", "json"]);
    let report: Report = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(report.verdict.k, Some(4));
    assert_eq!(report.derived_series, vec![5, 3, 1, 0]);
    assert_eq!(
        serde_json::to_string_pretty(&report).unwrap() + "\n",
        json.stdout
    );

    let ab = catalog_file(&dir, "abelian", Some("3"));
    assert!(run(&["report", s(&ab)])
        .stdout
        .contains("Commutative; all orbits trivial"));
}

#[test]
fn refutation_report_shows_both_ranks() {
    let dir = TempDir::new().unwrap();
    let doc = r#"{"name": "aff_r_sq", "dim": 4, "basis": ["x1", "y1", "x2", "y2"],
        "brackets": {"x1,y1": {"y1": "1"}, "x2,y2": {"y2": "1"}}}"#;
    let f = write(&dir, "aff2.json", doc);
    let out = run(&["report", s(&f)]);
    assert!(out.stdout.contains("(0, 1, 0, 0) rank 2"), "{}", out.stdout);
    assert!(out.stdout.contains("(0, 1, 0, 1) rank 4"));
    let md = run(&["md", s(&f)]);
    assert_eq!(md.code, EXIT_OK);
    assert!(md.stdout.starts_with("Refuted: orbit dimensions 2 and 4"));
}

#[test]
fn invalid_documents_exit_with_input_error() {
    let dir = TempDir::new().unwrap();
    let mirrored = write(
        &dir,
        "m.json",
        r#"{"name":"t","dim":3,"basis":["x","y","z"],"brackets":{"x,y":{"z":"1"},"y,x":{"z":"-1"}}}"#,
    );
    let out = run(&["validate", s(&mirrored)]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("mirrors"));

    let jacobi = write(
        &dir,
        "j.json",
        r#"{"name":"t","dim":3,"basis":["x","y","z"],"brackets":{"x,y":{"z":"1"},"y,z":{"x":"1"},"z,x":{"z":"-1"}}}"#,
    );
    let out = run(&["md", s(&jacobi)]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(
        out.stderr.contains("Jacobi violation at (x, y, z)"),
        "{}",
        out.stderr
    );

    let out = run(&["info", s(&dir.path().join("missing.json"))]);
    assert_eq!(out.code, EXIT_INPUT);
    assert_eq!(run(&["catalog", "nonesuch"]).code, EXIT_INPUT);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["md"]).code, EXIT_USAGE);
    assert_eq!(
        run(&["quotient", "x.json", "--ideal", "derived3"]).code,
        EXIT_USAGE
    );
    let help = run(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("classify"));
}

#[test]
fn grid_bound_flag_and_environment() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "s5_45", None);
    let with = |args: &[&str], env: Option<&str>| {
        run_command_with(std::iter::once("lamd").chain(args.iter().copied()), env)
    };
    assert_eq!(with(&["md", s(&f)], Some("1")).code, EXIT_OK);
    assert_eq!(
        with(&["md", s(&f), "--grid-bound", "2"], Some("junk")).code,
        EXIT_USAGE
    );
    assert_eq!(
        with(&["md", s(&f), "--grid-bound", "0"], None).code,
        EXIT_OK
    );
}

#[test]
fn undecided_exit_code() {
    // bound 0 leaves only the origin, so the non-MD witness is out of reach
    let dir = TempDir::new().unwrap();
    let doc = r#"{"name": "aff_r_sq", "dim": 4, "basis": ["x1", "y1", "x2", "y2"],
        "brackets": {"x1,y1": {"y1": "1"}, "x2,y2": {"y2": "1"}}}"#;
    let f = write(&dir, "aff2.json", doc);
    let out = run_command_with(["lamd", "md", s(&f), "--grid-bound", "0"], None);
    assert_eq!(out.code, EXIT_UNDECIDED, "{}", out.stdout);
    assert!(out.stdout.starts_with("Undecided"));
}

#[test]
fn other_subcommands() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "s5_45", None);
    let info = run(&["info", s(&f)]);
    assert!(info
        .stdout
        .contains("derived series: G⁰=5, G¹=3, G²=1, G³=0"));
    let k = run(&["kirillov", s(&f), "--symbolic"]);
    assert!(k.stdout.contains("generic orbit dim: 4"));
    assert!(k.stdout.contains("[-2*e, 0, 0, 0, 0]"));
    let q = run(&["quotient", s(&f), "--ideal", "derived2"]);
    assert!(q.stdout.contains("(dim 4)"));
    assert_eq!(run(&["decompose", s(&f)]).code, EXIT_INPUT);

    let aff = catalog_file(&dir, "aff_c", None);
    let d = run(&["decompose", s(&aff)]);
    assert_eq!(d.code, EXIT_OK, "{}", d.stderr);
    assert!(d.stdout.contains("dim L = 2, dim G¹ = 2"));
    let q = run(&["quotient", s(&aff), "--ideal", "derived1"]);
    assert!(q.stdout.contains("abelian"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lamd");
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "heisenberg", Some("1"));
    let ok = Command::new(bin).args(["md", s(&f)]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("Verified: MD_2(3)"));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(64));
}
