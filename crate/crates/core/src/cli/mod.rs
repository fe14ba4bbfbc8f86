//! Command-line front end: document ingestion, dispatch and reports.
//!
//! Exit codes: `0` for a decisive answer, `2` for an undecided MD verdict,
//! `1` for bad input and `64` for usage errors.

mod document;
mod report;

pub use document::{
    parse_algebra_file, parse_algebra_str, AlgebraDocument, BracketMap, DocumentError,
};
pub use report::{
    build_report, emit_report, CertificateRecord, ClassificationRecord, OrbitRecord, Report,
    ReportFormat, RoundRecord, StructureRecord, VerdictRecord, WitnessRecord,
};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::kirillov::{
    generic_orbit_dim, kirillov_numeric, kirillov_symbolic, md_check_with, orbit_dim, MdOptions,
    MdVerdict, Refutation, DEFAULT_GRID_BOUND,
};
use crate::lie::catalog::{catalog, CatalogName};
use crate::lie::{DualFunctional, LieAlgebra};
use crate::linalg::{parse_rational, Matrix};
use crate::poly::default_var_names;
use crate::structure::{classify_codim1, semidirect_decomposition, solvability_step};
use report::{functional_text, superscript};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the witness grid bound.
pub const GRID_BOUND_VAR: &str = "LAMD_GRID_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "lamd",
    version,
    about = "Exact coadjoint-orbit analysis of real solvable Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdealChoice {
    Derived1,
    Derived2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatChoice {
    Md,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the structure constants against the Lie axioms.
    Validate { file: PathBuf },
    /// Bracket table, derived series and center.
    Info { file: PathBuf },
    /// Kirillov form at a generic functional, or symbolically.
    Kirillov {
        file: PathBuf,
        #[arg(long)]
        symbolic: bool,
    },
    /// Dimension of the orbit through one functional.
    Orbit {
        file: PathBuf,
        /// Comma-separated rational coordinates, e.g. "0,0,1/2".
        #[arg(long, allow_hyphen_values = true)]
        functional: String,
    },
    /// Decide the MD property.
    Md {
        file: PathBuf,
        #[arg(long)]
        grid_bound: Option<u64>,
    },
    /// Place an algebra with codimension-one orbits in the catalog.
    Classify { file: PathBuf },
    /// Split a 1-step algebra as an abelian complement acting on G¹.
    Decompose { file: PathBuf },
    /// Quotient by G¹ or G².
    Quotient {
        file: PathBuf,
        #[arg(long, value_enum)]
        ideal: IdealChoice,
    },
    /// Emit a catalog algebra as a document.
    Catalog {
        name: String,
        /// Size parameter (m for heisenberg, dimension for abelian).
        #[arg(long)]
        m: Option<usize>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Full pipeline report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatChoice,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs one invocation (`argv[0]` is the program name), reading the grid
/// bound override from the environment.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(GRID_BOUND_VAR).ok();
    run_command_with(argv, env.as_deref())
}

/// As [`run_command`] with an explicit value for `LAMD_GRID_BOUND`.
pub fn run_command_with<I, T>(argv: I, grid_env: Option<&str>) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutput::ok(text)
            };
        }
    };
    let env_bound = match grid_env.map(str::trim).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => match s.parse::<u64>() {
            Ok(b) => Some(b),
            Err(_) => {
                return CommandOutput::fail(
                    EXIT_USAGE,
                    format!("{GRID_BOUND_VAR}={s:?} is not a count"),
                )
            }
        },
    };
    let opts = |flag: Option<u64>| MdOptions {
        grid_bound: flag.or(env_bound).unwrap_or(DEFAULT_GRID_BOUND),
        ..MdOptions::default()
    };
    match cli.command {
        Command::Validate { file } => with_algebra(&file, |name, g| {
            CommandOutput::ok(format!("valid: {name} (dim {})\n", g.dim()))
        }),
        Command::Info { file } => with_algebra(&file, |name, g| CommandOutput::ok(info(name, g))),
        Command::Kirillov { file, symbolic } => {
            with_algebra(&file, |_, g| CommandOutput::ok(kirillov(g, symbolic)))
        }
        Command::Orbit { file, functional } => with_algebra(&file, |_, g| orbit(g, &functional)),
        Command::Md { file, grid_bound } => with_algebra(&file, |_, g| md(g, &opts(grid_bound))),
        Command::Classify { file } => with_algebra(&file, |_, g| classify(g, &opts(None))),
        Command::Decompose { file } => with_algebra(&file, |_, g| decompose(g)),
        Command::Quotient { file, ideal } => {
            with_algebra(&file, |name, g| quotient(name, g, ideal))
        }
        Command::Catalog { name, m, output } => emit_catalog(&name, m, output.as_deref()),
        Command::Report { file, format } => with_algebra(&file, |name, g| {
            let fmt = match format {
                FormatChoice::Md => ReportFormat::Markdown,
                FormatChoice::Json => ReportFormat::Json,
            };
            let r = build_report(name, g, &opts(None));
            let code = if r.verdict.kind == "undecided" {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            };
            CommandOutput::with_code(code, emit_report(&r, fmt))
        }),
    }
}

fn with_algebra(path: &Path, f: impl FnOnce(&str, &LieAlgebra) -> CommandOutput) -> CommandOutput {
    match parse_algebra_file(path) {
        Ok((name, g)) => f(&name, &g),
        Err(e) => CommandOutput::fail(EXIT_INPUT, e),
    }
}

fn matrix_lines(m: &Matrix, indent: &str) -> String {
    m.row_vectors()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("{indent}[{}]\n", cells.join(", "))
        })
        .collect()
}

fn info(name: &str, g: &LieAlgebra) -> String {
    let series: Vec<String> = g
        .derived_series()
        .iter()
        .enumerate()
        .map(|(i, w)| format!("G{}={}", superscript(i), w.dim()))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "name: {name}");
    let _ = writeln!(out, "dim: {}", g.dim());
    let _ = writeln!(out, "basis: {}", g.labels().join(", "));
    let _ = writeln!(out, "brackets: {}", g.bracket_table());
    let _ = writeln!(out, "derived series: {}", series.join(", "));
    let _ = writeln!(out, "center dim: {}", g.center().dim());
    let _ = writeln!(out, "solvability step: {}", solvability_step(g));
    out
}

fn kirillov(g: &LieAlgebra, symbolic: bool) -> String {
    let orbit = generic_orbit_dim(g);
    let mut out = format!(
        "generic orbit dim: {}\nrank certificate: {}\n",
        orbit.k,
        functional_text(&orbit.certificate)
    );
    if symbolic {
        let names = default_var_names(g.dim());
        let _ = writeln!(out, "B_F in coordinates ({}):", names.join(", "));
        let b = kirillov_symbolic(g);
        let m = b.matrix();
        for i in 0..m.rows() {
            let cells: Vec<String> = (0..m.cols())
                .map(|j| m.get(i, j).display_with(&names))
                .collect();
            let _ = writeln!(out, "  [{}]", cells.join(", "));
        }
    } else {
        let _ = writeln!(out, "B_F at the certificate:");
        out.push_str(&matrix_lines(
            &kirillov_numeric(g, &orbit.certificate),
            "  ",
        ));
    }
    out
}

fn parse_functional(g: &LieAlgebra, text: &str) -> Result<DualFunctional, String> {
    let coords = text
        .split(',')
        .map(|s| {
            parse_rational(s.trim())
                .map_err(|e| format!("functional coordinate {:?}: {e}", s.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != g.dim() {
        return Err(format!(
            "functional has {} coordinates, algebra has dimension {}",
            coords.len(),
            g.dim()
        ));
    }
    Ok(DualFunctional(coords))
}

fn orbit(g: &LieAlgebra, text: &str) -> CommandOutput {
    match parse_functional(g, text) {
        Ok(f) => CommandOutput::ok(format!("dim Ω_F = {}\n", orbit_dim(g, &f))),
        Err(e) => CommandOutput::fail(EXIT_INPUT, e),
    }
}

fn md(g: &LieAlgebra, opts: &MdOptions) -> CommandOutput {
    let n = g.dim();
    let verdict = md_check_with(g, opts);
    let mut out = String::new();
    match &verdict {
        MdVerdict::Commutative => out.push_str("Commutative: all orbits trivial\n"),
        MdVerdict::Verified { k, certificate: c } => {
            let names = &c.variables;
            let _ = writeln!(out, "Verified: MD_{k}({n})");
            let _ = writeln!(out, "adapted basis (columns):");
            out.push_str(&matrix_lines(&c.adapted_basis, "  "));
            let _ = writeln!(out, "variables on G¹: {}", names.join(", "));
            let pf: Vec<String> = c.pfaffians.iter().map(|p| p.display_with(names)).collect();
            let _ = writeln!(out, "principal {k}-Pfaffians: {}", pf.join(", "));
            for (i, round) in c.rounds.iter().enumerate() {
                let basis: Vec<String> =
                    round.basis.iter().map(|p| p.display_with(names)).collect();
                let ext: Vec<String> = round
                    .extracted
                    .iter()
                    .map(|p| p.display_with(names))
                    .collect();
                let _ = writeln!(
                    out,
                    "round {}: basis ({}) adjoined [{}]",
                    i + 1,
                    basis.join(", "),
                    ext.join(", ")
                );
            }
            let refined: Vec<String> = c.refined.iter().map(|p| p.display_with(names)).collect();
            let _ = writeln!(out, "refined ideal: ({})", refined.join(", "));
            for (x, m) in names.iter().zip(&c.membership) {
                let how = match m {
                    crate::kirillov::Membership::Ideal => "in the ideal",
                    crate::kirillov::Membership::Radical => "in the radical",
                };
                let _ = writeln!(out, "  {x}: {how}");
            }
        }
        MdVerdict::Refuted(Refutation::DerivedObstruction) => {
            out.push_str("Refuted: [G², G²] ≠ 0\n");
        }
        MdVerdict::Refuted(Refutation::Witness {
            low,
            low_rank,
            high,
            high_rank,
        }) => {
            let _ = writeln!(out, "Refuted: orbit dimensions {low_rank} and {high_rank}");
            let _ = writeln!(
                out,
                "  F = {} has dim Ω_F = {low_rank}",
                functional_text(low)
            );
            let _ = writeln!(
                out,
                "  F = {} has dim Ω_F = {high_rank}",
                functional_text(high)
            );
        }
        MdVerdict::NotSolvable => {
            out.push_str("NotSolvable: the derived series does not reach zero\n")
        }
        MdVerdict::Undecided { k, reason } => {
            let k = k.map_or("unknown".to_string(), |k| k.to_string());
            let _ = writeln!(out, "Undecided: {reason} (k = {k})");
        }
    }
    let code = if verdict.is_undecided() {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    CommandOutput::with_code(code, out)
}

fn classify(g: &LieAlgebra, opts: &MdOptions) -> CommandOutput {
    let c = classify_codim1(g, opts);
    let mut out = format!("{}\n", c.label);
    if let Some(p) = &c.isomorphism {
        let _ = writeln!(out, "isomorphism (columns are the catalog basis):");
        out.push_str(&matrix_lines(p, "  "));
    }
    let undecided = matches!(&c.label, crate::structure::ClassLabel::NotInClass(r) if r.starts_with("md verdict Undecided"));
    CommandOutput::with_code(if undecided { EXIT_UNDECIDED } else { EXIT_OK }, out)
}

fn decompose(g: &LieAlgebra) -> CommandOutput {
    let d = match semidirect_decomposition(g) {
        Ok(d) => d,
        Err(e) => return CommandOutput::fail(EXIT_INPUT, e),
    };
    let mut out = format!(
        "G = L ⊕ G¹ with dim L = {}, dim G¹ = {}\n",
        d.complement.len(),
        d.ideal.len()
    );
    let _ = writeln!(out, "complement:");
    for (i, v) in d.complement.iter().enumerate() {
        let _ = writeln!(out, "  u{} = {}", i + 1, g.format_vector(v));
    }
    let _ = writeln!(out, "ideal:");
    for (i, v) in d.ideal.iter().enumerate() {
        let _ = writeln!(out, "  v{} = {}", i + 1, g.format_vector(v));
    }
    for (i, r) in d.rho.iter().enumerate() {
        let _ = writeln!(out, "rho(u{}):", i + 1);
        out.push_str(&matrix_lines(r, "  "));
    }
    CommandOutput::ok(out)
}

fn quotient(name: &str, g: &LieAlgebra, ideal: IdealChoice) -> CommandOutput {
    let i = match ideal {
        IdealChoice::Derived1 => 1,
        IdealChoice::Derived2 => 2,
    };
    let w = g.derived(i);
    let (q, proj) = match g.quotient(&w) {
        Ok(x) => x,
        Err(e) => return CommandOutput::fail(EXIT_INPUT, e),
    };
    let mut out = format!("{name}/G{} (dim {})\n", superscript(i), q.dim());
    let _ = writeln!(out, "basis: {}", q.labels().join(", "));
    let _ = writeln!(out, "brackets: {}", q.bracket_table());
    let _ = writeln!(out, "projection:");
    out.push_str(&matrix_lines(&proj, "  "));
    CommandOutput::ok(out)
}

fn emit_catalog(name: &str, m: Option<usize>, output: Option<&Path>) -> CommandOutput {
    let g = match name.parse::<CatalogName>().and_then(|c| catalog(c, m)) {
        Ok(g) => g,
        Err(e) => return CommandOutput::fail(EXIT_INPUT, e),
    };
    let label = match m {
        Some(m) => format!("{name}_{m}"),
        None => name.to_string(),
    };
    let text = AlgebraDocument::from_algebra(&label, &g).to_json() + "\n";
    match output {
        None => CommandOutput::ok(text),
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => CommandOutput::ok(format!("wrote {}\n", path.display())),
            Err(e) => {
                CommandOutput::fail(EXIT_INPUT, format!("cannot write {}: {e}", path.display()))
            }
        },
    }
}
