//! Structure invariants of 1-step algebras: the ad-span rank, the rank
//! inequalities and invertibility of the ad-span.

use lamd::kirillov::md_check;
use lamd::lie::catalog::{aff_c, aff_r};
use lamd::structure::{span_invertibility, structure_report, SpanInvertibility};

fn main() {
    for (name, g) in [("aff_r", aff_r()), ("aff_c", aff_c())] {
        let verdict = md_check(&g);
        let s = structure_report(&g, Some(&verdict));
        println!(
            "{name}: n={} m={} r={} k={} step {}; k ≤ 2r ≤ 2(n − m) reads {} ({:?})",
            s.n,
            s.m,
            s.r,
            s.k,
            s.step,
            s.inequality_chain(),
            s.rank_bounds
        );
        match span_invertibility(&g).expect("1-step") {
            SpanInvertibility::Verified {
                det_poly,
                real_roots,
                ..
            } => {
                let d = det_poly.map(|p| p.display_with(&["s".into(), "t".into()]));
                println!("  every nonzero ad¹ is invertible; det {d:?}, real roots of D(1,t): {real_roots:?}");
            }
            other => println!("  {other:?}"),
        }
    }
}
