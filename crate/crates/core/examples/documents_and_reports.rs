//! Algebra documents and pipeline reports, as used by the command-line tool.

use lamd::cli::{
    build_report, emit_report, parse_algebra_str, run_command_with, AlgebraDocument, ReportFormat,
};
use lamd::kirillov::MdOptions;
use lamd::lie::catalog::heisenberg;

fn main() {
    let text = AlgebraDocument::from_algebra("h3", &heisenberg(1).unwrap()).to_json();
    println!("{text}");
    let (name, g) = parse_algebra_str(&text).expect("round trip");
    let report = build_report(&name, &g, &MdOptions::default());
    print!("{}", emit_report(&report, ReportFormat::Markdown));

    let broken = r#"{"name": "t", "dim": 2, "basis": ["x", "y"], "brackets": {"x,y": {"y": "1"}, "y,x": {"y": "-1"}}}"#;
    println!("\n{}", parse_algebra_str(broken).unwrap_err());

    let out = run_command_with(["lamd", "catalog", "aff_r"], None);
    print!("exit {}: {}", out.code, out.stdout);
}
