//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lamd::grid::{to_rationals, IntegerGrid};
use lamd::kirillov::{generic_orbit_dim, md_check, orbit_dim, MdOptions, MdVerdict, Refutation};
use lamd::lie::catalog::{abelian, aff_c, aff_c_plus_r, aff_r, aff_r_plus_r, heisenberg, s5_45};
use lamd::lie::{DualFunctional, LieAlgebra};
use lamd::linalg::{det_bareiss, rat, Matrix, Rational, Subspace};
use lamd::poly::{pfaffian, poly_det, PolyMatrix};
use lamd::structure::{
    classify_codim1, nonsingular_combination, span_invertibility, strip_trivial_center,
    structure_report, theorem3_check, ClassLabel, SpanInvertibility,
};
use num_traits::Zero;
use rand::Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_members() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("heisenberg(1)", heisenberg(1).unwrap()),
        ("heisenberg(2)", heisenberg(2).unwrap()),
        ("heisenberg(3)", heisenberg(3).unwrap()),
        ("s5_45", s5_45()),
        ("aff_r", aff_r()),
        ("aff_c", aff_c()),
        ("aff_r_plus_r", aff_r_plus_r()),
        ("aff_c_plus_r", aff_c_plus_r()),
        ("abelian(3)", abelian(3)),
    ]
}

fn catalog_md() -> Check {
    let mut times = Vec::new();
    let cases = (1..=4)
        .map(|m| (format!("heisenberg({m})"), heisenberg(m).unwrap(), 2 * m))
        .chain([("s5_45".to_string(), s5_45(), 4)]);
    for (name, g, k) in cases {
        let start = Instant::now();
        let v = md_check(&g);
        let t = start.elapsed();
        ensure(
            matches!(v, MdVerdict::Verified { k: got, .. } if got == k),
            || format!("{name}: expected Verified k={k}, got {}", v.summary()),
        )?;
        ensure(t < Duration::from_secs(10), || format!("{name} took {t:?}"))?;
        times.push(format!("{name} {:.2}s", t.as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn orbit_stratification() -> Check {
    let g = s5_45();
    let g1 = g.derived(1);
    let mut rng = common::rng(2);
    let (mut generic, mut trivial) = (0, 0);
    ensure(g1.free_indices() == vec![0, 1], || {
        "G¹ is not spanned by y1, y2, z".into()
    })?;
    while generic < 200 {
        let f = common::vector(&mut rng, 5);
        if (2..5).all(|i| f[i].is_zero()) {
            continue;
        }
        let d = orbit_dim(&g, &DualFunctional(f.clone()));
        ensure(d == 4, || format!("F = {f:?} has orbit dimension {d}"))?;
        generic += 1;
    }
    while trivial < 50 {
        let mut f = common::vector(&mut rng, 5);
        for x in &mut f[2..] {
            *x = rat(0);
        }
        let d = orbit_dim(&g, &DualFunctional(f.clone()));
        ensure(d == 0, || {
            format!("F = {f:?} vanishing on G¹ has orbit dimension {d}")
        })?;
        trivial += 1;
    }
    Ok("200 generic functionals of rank 4, 50 of rank 0".into())
}

fn quotient_reduction() -> Check {
    let g = s5_45();
    let (q, _) = g.quotient(&g.derived(2)).map_err(|e| e.to_string())?;
    ensure(q.constants() == aff_c().constants(), || {
        format!(
            "quotient table {} differs from aff_c {}",
            q.bracket_table(),
            aff_c().bracket_table()
        )
    })?;
    let c = theorem3_check(&g, &MdOptions::default()).map_err(|e| e.to_string())?;
    ensure(c.p == 1 && c.n - c.k == 1 && c.bound_ok, || {
        format!("p = {}, n − k = {}", c.p, c.n - c.k)
    })?;
    ensure(
        matches!(c.quotient_verdict, MdVerdict::Verified { k: 4, .. }),
        || format!("quotient verdict {}", c.quotient_verdict.summary()),
    )?;
    Ok(format!(
        "G/G² = {}; p = 1 ≤ n − k = 1; quotient Verified k=4",
        q.bracket_table()
    ))
}

fn trivial_extensions() -> Check {
    let bases = [
        heisenberg(1).unwrap(),
        heisenberg(2).unwrap(),
        heisenberg(3).unwrap(),
        s5_45(),
        aff_r(),
        aff_c(),
    ];
    let mut count = 0;
    for g in &bases {
        let base = md_check(g).kind();
        for r in 1..=3 {
            let ext = LieAlgebra::direct_sum(g, &abelian(r));
            let got = md_check(&ext).kind();
            ensure(got == base, || {
                format!("{} ⊕ ℝ^{r}: {got:?} vs {base:?}", g.bracket_table())
            })?;
            count += 1;
        }
    }
    let s = strip_trivial_center(&aff_c_plus_r());
    ensure(
        s.removed == 1 && s.core.constants() == aff_c().constants(),
        || {
            format!(
                "strip gave removed = {}, core {}",
                s.removed,
                s.core.bracket_table()
            )
        },
    )?;
    Ok(format!(
        "{count} extensions agree; aff_c_plus_r strips to (aff_c, 1)"
    ))
}

fn non_md_refutation() -> Check {
    let g = LieAlgebra::direct_sum(&aff_r(), &aff_r());
    let MdVerdict::Refuted(Refutation::Witness {
        low,
        low_rank,
        high,
        high_rank,
    }) = md_check(&g)
    else {
        return Err("aff_r ⊕ aff_r was not refuted by a witness".into());
    };
    ensure((low_rank, high_rank) == (2, 4), || {
        format!("ranks {low_rank}, {high_rank}")
    })?;
    let (a, b) = (orbit_dim(&g, &low), orbit_dim(&g, &high));
    ensure(0 < a && a < b && (a, b) == (2, 4), || {
        format!("recomputed ranks {a}, {b}")
    })?;
    Ok(format!("F₁ = {low} rank 2, F₂ = {high} rank 4"))
}

fn aff_c_suite() -> Check {
    let g = aff_c();
    let v = md_check(&g);
    let s = structure_report(&g, Some(&v));
    ensure((s.r, s.m, s.n, s.k) == (2, 2, 4, 4), || {
        format!("r, m, n, k = {}, {}, {}, {}", s.r, s.m, s.n, s.k)
    })?;
    ensure(
        s.inequality_chain() == "4 ≤ 4 ≤ 4" && s.rank_bounds == Some(true),
        || format!("chain {} bounds {:?}", s.inequality_chain(), s.rank_bounds),
    )?;
    let span = span_invertibility(&g).map_err(|e| e.to_string())?;
    let SpanInvertibility::Verified {
        det_poly: Some(d),
        real_roots: Some(0),
        ..
    } = &span
    else {
        return Err(format!("span invertibility {span:?}"));
    };
    // D(1, t) must be a nonzero multiple of t² + 1
    let univariate: Vec<Rational> = (0..3)
        .map(|e| {
            let t = rat(e);
            d.evaluate(&[rat(1), t])
        })
        .collect();
    let c = univariate[0].clone();
    ensure(
        !c.is_zero() && univariate == vec![c.clone(), &c * rat(2), &c * rat(5)],
        || format!("D(1, t) at t = 0, 1, 2 is {univariate:?}"),
    )?;
    ensure(!s.decomposable && s.r == s.n - s.m, || {
        "decomposable or r ≠ n − m".into()
    })?;
    Ok("r = 2, m = 2, n = 4, k = 4; 4 ≤ 4 ≤ 4; D(1,t) ∝ t² + 1 with 0 real roots".into())
}

fn lemma_commuting() -> Check {
    let start = Instant::now();
    let mut rng = common::rng(7);
    let (mut full, mut degenerate) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let mats = common::commuting_pair(&mut rng, n);
        let cols: Vec<Vec<Rational>> = mats
            .iter()
            .flat_map(|a| (0..n).map(|j| a.column(j)))
            .collect();
        let images = Subspace::span(n, &cols);
        let det_zero = poly_det(&PolyMatrix::linear_combination(&mats))
            .unwrap()
            .is_zero();
        let res = nonsingular_combination(&mats).map_err(|e| e.to_string())?;
        if images.is_full() {
            full += 1;
            let c = res.as_ref().ok_or("full image sum but no combination")?;
            let combo = mats
                .iter()
                .zip(&c.coeffs)
                .fold(Matrix::zeros(n, n), |acc, (a, x)| &acc + &a.scale(x));
            let d = det_bareiss(&combo);
            ensure(!d.is_zero() && d == c.det, || {
                format!("combination {:?} has det {d}", c.coeffs)
            })?;
        }
        if det_zero {
            degenerate += 1;
            ensure(res.is_none(), || {
                "identically singular family returned a combination".into()
            })?;
        }
        ensure(images.is_full() != det_zero, || {
            "image sum and determinant disagree".into()
        })?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!(
        "{full} full, {degenerate} degenerate families in {:.2}s",
        t.as_secs_f64()
    ))
}

fn pfaffian_identity() -> Check {
    let mut rng = common::rng(8);
    for i in 0..100 {
        let n = 2 + i % 7;
        let b = common::skew(&mut rng, n);
        let det = det_bareiss(&b);
        if n % 2 == 1 {
            ensure(det.is_zero(), || format!("odd skew matrix with det {det}"))?;
            continue;
        }
        let pf = pfaffian(&PolyMatrix::from_matrix(&b, 0)).map_err(|e| e.to_string())?;
        let pf = pf.evaluate(&[]);
        ensure(&pf * &pf == det, || {
            format!("size {n}: pf² = {} but det = {det}", &pf * &pf)
        })?;
    }
    Ok("pf² = det on 100 skew matrices of sizes 2 to 8 (det = 0 for odd sizes)".into())
}

fn classifier_round_trip() -> Check {
    let opts = MdOptions::default();
    let mut rng = common::rng(9);
    let mut seen = Vec::new();
    for (name, g) in catalog_members() {
        let base = classify_codim1(&g, &opts).label;
        let expected = match name {
            "heisenberg(1)" => Some(ClassLabel::Heisenberg(1)),
            "heisenberg(2)" => Some(ClassLabel::Heisenberg(2)),
            "heisenberg(3)" => Some(ClassLabel::Heisenberg(3)),
            "s5_45" => Some(ClassLabel::S545),
            "aff_r_plus_r" => Some(ClassLabel::AffRPlusR),
            "aff_c_plus_r" => Some(ClassLabel::AffCPlusR),
            _ => None,
        };
        match expected {
            Some(e) => ensure(base == e, || format!("{name} classified as {base}"))?,
            None => ensure(matches!(base, ClassLabel::NotInClass(_)), || {
                format!("{name} classified as {base}")
            })?,
        }
        for _ in 0..20 {
            let p = common::nonsingular(&mut rng, g.dim());
            let h = g.change_of_basis(&p).map_err(|e| e.to_string())?;
            let c = classify_codim1(&h, &opts);
            ensure(c.label == base, || {
                format!("{name} under {p}: {} vs {base}", c.label)
            })?;
            if let ClassLabel::Heisenberg(_) = base {
                let iso = c
                    .isomorphism
                    .as_ref()
                    .ok_or("Heisenberg label without isomorphism")?;
                let back = h.change_of_basis(iso).map_err(|e| e.to_string())?;
                ensure(back.constants() == g.constants(), || {
                    format!("{name}: isomorphism does not normalize")
                })?;
            }
        }
        seen.push(base.to_string());
    }
    Ok(format!(
        "stable labels over 20 basis changes: {}",
        seen.join(", ")
    ))
}

fn semidirect(rng: &mut impl Rng, r: usize, m: usize) -> LieAlgebra {
    let rho = common::commuting_family(rng, m, r);
    LieAlgebra::semidirect_sum(r, m, &rho).expect("commuting family")
}

fn case2_probe() -> Check {
    let mut rng = common::rng(10);
    let (mut found, mut tries) = (0, 0);
    let mut outcomes = std::collections::BTreeMap::new();
    while found < 50 {
        tries += 1;
        ensure(tries < 100_000, || "too few admissible instances".into())?;
        let g = semidirect(&mut rng, 2, 3);
        let s = structure_report(&g, None);
        if s.m != 3 || s.r != 2 || s.decomposable || s.step != lamd::structure::Step::One {
            continue;
        }
        found += 1;
        let v = md_check(&g);
        ensure(!matches!(v, MdVerdict::Verified { k: 4, .. }), || {
            format!("Verified k=4 for {}", g.bracket_table())
        })?;
        *outcomes.entry(v.kind().0).or_insert(0) += 1;
    }
    let parts: Vec<String> = outcomes.iter().map(|(k, c)| format!("{k} {c}")).collect();
    Ok(format!(
        "50 instances, none Verified k=4 ({})",
        parts.join(", ")
    ))
}

fn parity() -> Check {
    let mut rng = common::rng(11);
    let mut algebras: Vec<LieAlgebra> = catalog_members().into_iter().map(|(_, g)| g).collect();
    for _ in 0..100 {
        let r = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=3);
        algebras.push(semidirect(&mut rng, r, m));
    }
    let mut evaluations = 0;
    for g in &algebras {
        let k = generic_orbit_dim(g).k;
        ensure(k.is_multiple_of(2), || {
            format!("generic orbit dimension {k}")
        })?;
        let grid = IntegerGrid::bounded(g.dim(), 1)
            .map(|p| to_rationals(&p))
            .take(60);
        let random = (0..20).map(|_| common::vector(&mut rng, g.dim()));
        for f in grid.chain(random) {
            let d = orbit_dim(g, &DualFunctional(f));
            ensure(d.is_multiple_of(2) && d <= k, || {
                format!(
                    "orbit dimension {d} with generic {k} in {}",
                    g.bracket_table()
                )
            })?;
            evaluations += 1;
        }
    }
    Ok(format!(
        "{evaluations} orbit dimensions over {} algebras, all even and ≤ k",
        algebras.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("catalog MD verification", catalog_md),
        ("orbit stratification of s5_45", orbit_stratification),
        ("quotient reduction", quotient_reduction),
        ("trivial extensions", trivial_extensions),
        ("non-MD refutation", non_md_refutation),
        ("aff_c structure suite", aff_c_suite),
        ("commuting families", lemma_commuting),
        ("pfaffian identity", pfaffian_identity),
        ("classifier round-trip", classifier_round_trip),
        ("case 2 exclusion probe", case2_probe),
        ("parity and semicontinuity", parity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
