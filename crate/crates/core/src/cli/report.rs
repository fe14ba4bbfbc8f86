use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::document::AlgebraDocument;
use crate::kirillov::{
    generic_orbit_dim, md_check_with, MdOptions, MdVerdict, Membership, Refutation,
};
use crate::lie::{DualFunctional, LieAlgebra};
use crate::linalg::{format_rational, Matrix, Rational};
use crate::poly::MultiPoly;
use crate::structure::{classify_codim1, structure_report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub k: usize,
    pub certificate: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub basis: Vec<String>,
    pub extracted: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub adapted_basis: Vec<Vec<String>>,
    pub variables: Vec<String>,
    pub pfaffians: Vec<String>,
    pub rounds: Vec<RoundRecord>,
    pub refined: Vec<String>,
    pub membership: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub low: Vec<String>,
    pub low_rank: usize,
    pub high: Vec<String>,
    pub high_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub kind: String,
    pub k: Option<usize>,
    pub summary: String,
    pub certificate: Option<CertificateRecord>,
    pub witness: Option<WitnessRecord>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureRecord {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub k: usize,
    pub r: usize,
    pub center_dim: usize,
    pub decomposable: bool,
    pub step: String,
    pub rank_bounds: Option<bool>,
    pub inequality_chain: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub label: String,
    pub isomorphism: Option<Vec<Vec<String>>>,
}

/// Everything the `report` command prints; all rationals are strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: AlgebraDocument,
    pub validation: String,
    pub derived_series: Vec<usize>,
    pub center_dim: usize,
    pub generic_orbit: OrbitRecord,
    pub verdict: VerdictRecord,
    pub structure: StructureRecord,
    pub classification: ClassificationRecord,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| strings(r)).collect()
}

fn polys(ps: &[MultiPoly], names: &[String]) -> Vec<String> {
    ps.iter().map(|p| p.display_with(names)).collect()
}

pub(crate) fn verdict_record(v: &MdVerdict) -> VerdictRecord {
    let (kind, k) = v.kind();
    let mut rec = VerdictRecord {
        kind: kind.to_string(),
        k,
        summary: v.summary(),
        certificate: None,
        witness: None,
        reason: None,
    };
    match v {
        MdVerdict::Verified { certificate: c, .. } => {
            let names = &c.variables;
            rec.certificate = Some(CertificateRecord {
                adapted_basis: matrix_strings(&c.adapted_basis),
                variables: names.clone(),
                pfaffians: polys(&c.pfaffians, names),
                rounds: c
                    .rounds
                    .iter()
                    .map(|r| RoundRecord {
                        basis: polys(&r.basis, names),
                        extracted: polys(&r.extracted, names),
                    })
                    .collect(),
                refined: polys(&c.refined, names),
                membership: names
                    .iter()
                    .zip(&c.membership)
                    .map(|(x, m)| {
                        let how = match m {
                            Membership::Ideal => "ideal",
                            Membership::Radical => "radical",
                        };
                        format!("{x}: {how}")
                    })
                    .collect(),
            });
        }
        MdVerdict::Refuted(Refutation::Witness {
            low,
            low_rank,
            high,
            high_rank,
        }) => {
            rec.witness = Some(WitnessRecord {
                low: strings(low.coords()),
                low_rank: *low_rank,
                high: strings(high.coords()),
                high_rank: *high_rank,
            });
        }
        MdVerdict::Refuted(Refutation::DerivedObstruction) => {
            rec.reason = Some("[G², G²] ≠ 0".into());
        }
        MdVerdict::Undecided { reason, .. } => rec.reason = Some(reason.clone()),
        MdVerdict::Commutative | MdVerdict::NotSolvable => {}
    }
    rec
}

/// Runs the whole pipeline on a validated algebra.
pub fn build_report(name: &str, g: &LieAlgebra, opts: &MdOptions) -> Report {
    let orbit = generic_orbit_dim(g);
    let verdict = md_check_with(g, opts);
    let s = structure_report(g, Some(&verdict));
    let class = classify_codim1(g, opts);
    Report {
        algebra: AlgebraDocument::from_algebra(name, g),
        validation: "ok".into(),
        derived_series: g.derived_series().iter().map(|w| w.dim()).collect(),
        center_dim: g.center().dim(),
        generic_orbit: OrbitRecord {
            k: orbit.k,
            certificate: strings(orbit.certificate.coords()),
        },
        verdict: verdict_record(&verdict),
        structure: StructureRecord {
            inequality_chain: s.inequality_chain(),
            n: s.n,
            m: s.m,
            p: s.p,
            k: s.k,
            r: s.r,
            center_dim: s.center_dim,
            decomposable: s.decomposable,
            step: s.step.to_string(),
            rank_bounds: s.rank_bounds,
        },
        classification: ClassificationRecord {
            label: class.label.to_string(),
            isomorphism: class.isomorphism.as_ref().map(matrix_strings),
        },
    }
}

pub(crate) fn superscript(i: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    i.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn table(out: &mut String, title: &str, rows: &[(String, String)]) {
    let _ = writeln!(out, "\n## {title}\n\n| field | value |\n|---|---|");
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {} |", v.replace('|', "\\|"));
    }
}

fn markdown(r: &Report) -> String {
    let row = |k: &str, v: String| (k.to_string(), v);
    let mut out = format!("# Report: {}\n", r.algebra.name);
    let brackets: Vec<String> = r
        .algebra
        .brackets
        .0
        .iter()
        .map(|(key, comps)| {
            let rhs: Vec<String> = comps
                .iter()
                .map(|(l, v)| match v.as_str().unwrap_or_default() {
                    "1" => l.clone(),
                    "-1" => format!("-{l}"),
                    c => format!("{c}*{l}"),
                })
                .collect();
            format!(
                "[{}] = {}",
                key.replace(',', ", "),
                rhs.join(" + ").replace("+ -", "- ")
            )
        })
        .collect();
    table(
        &mut out,
        "Algebra",
        &[
            row("dim", r.algebra.dim.to_string()),
            row("basis", r.algebra.basis.join(", ")),
            row(
                "brackets",
                if brackets.is_empty() {
                    "abelian".into()
                } else {
                    brackets.join("; ")
                },
            ),
            row("validation", r.validation.clone()),
        ],
    );

    let mut series: Vec<(String, String)> = r
        .derived_series
        .iter()
        .enumerate()
        .map(|(i, d)| (format!("G{} dim", superscript(i)), d.to_string()))
        .collect();
    series.push(row("center dim", r.center_dim.to_string()));
    table(&mut out, "Derived series", &series);

    let v = &r.verdict;
    let mut rows = vec![
        row("generic orbit dim", r.generic_orbit.k.to_string()),
        row("rank certificate", tuple(&r.generic_orbit.certificate)),
    ];
    rows.push(row(
        "verdict",
        if v.kind == "commutative" {
            "Commutative; all orbits trivial".into()
        } else {
            v.summary.clone()
        },
    ));
    if let Some(c) = &v.certificate {
        rows.push(row("pfaffian variables", c.variables.join(", ")));
        rows.push(row("principal pfaffians", c.pfaffians.join(", ")));
        for (i, round) in c.rounds.iter().enumerate() {
            rows.push((
                format!("refinement round {}", i + 1),
                format!(
                    "({}) adjoined [{}]",
                    round.basis.join(", "),
                    round.extracted.join(", ")
                ),
            ));
        }
        rows.push(row("refined ideal", format!("({})", c.refined.join(", "))));
        rows.push(row("membership", c.membership.join(", ")));
    }
    if let Some(w) = &v.witness {
        rows.push(row(
            "witness",
            format!("{} rank {}", tuple(&w.low), w.low_rank),
        ));
        rows.push(row(
            "witness",
            format!("{} rank {}", tuple(&w.high), w.high_rank),
        ));
    }
    if let Some(reason) = &v.reason {
        rows.push(row("reason", reason.clone()));
    }
    table(&mut out, "Verdict", &rows);

    let s = &r.structure;
    let mut rows = vec![
        row("n", s.n.to_string()),
        row("m = dim G¹", s.m.to_string()),
        row("p = dim G²", s.p.to_string()),
        row("k", s.k.to_string()),
        row("r = dim span ad¹", s.r.to_string()),
        row("step", s.step.clone()),
        row("decomposable", s.decomposable.to_string()),
    ];
    if let Some(ok) = s.rank_bounds {
        rows.push(row(
            "k ≤ 2r ≤ 2(n − m)",
            format!("{} ({ok})", s.inequality_chain),
        ));
    }
    table(&mut out, "Structure", &rows);

    let c = &r.classification;
    let mut rows = vec![row("label", c.label.clone())];
    if let Some(p) = &c.isomorphism {
        let m: Vec<String> = p
            .iter()
            .map(|row| format!("[{}]", row.join(", ")))
            .collect();
        rows.push(row("isomorphism", format!("[{}]", m.join(", "))));
    }
    table(&mut out, "Classification", &rows);
    out
}

pub fn emit_report(r: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Markdown => markdown(r),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports always serialize");
            s.push('\n');
            s
        }
    }
}

/// `(a, b, …)` for a functional.
pub(crate) fn functional_text(f: &DualFunctional) -> String {
    tuple(&strings(f.coords()))
}
