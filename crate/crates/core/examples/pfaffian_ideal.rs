//! The polynomial side: Pfaffians, Gröbner bases, real-locus refinement and
//! radical membership.

use lamd::linalg::rat;
use lamd::poly::{
    default_var_names, groebner, pfaffian, radical_member, real_locus_refine, GroebnerBudget,
    MultiPoly, PolyIdeal, PolyMatrix,
};

fn main() {
    let names = default_var_names(5)[2..].to_vec();
    let v = |i| MultiPoly::var(3, i);
    let (c, d, e) = (v(0), v(1), v(2));

    let b = PolyMatrix::from_entries(
        4,
        4,
        3,
        vec![
            MultiPoly::zero(3),
            c.clone(),
            d.clone(),
            e.clone(),
            -&c,
            MultiPoly::zero(3),
            e.clone(),
            MultiPoly::zero(3),
            -&d,
            -&e,
            MultiPoly::zero(3),
            c.clone(),
            -&e,
            MultiPoly::zero(3),
            -&c,
            MultiPoly::zero(3),
        ],
    );
    println!("pf = {}", pfaffian(&b).unwrap().display_with(&names));

    let budget = GroebnerBudget::default();
    let sum_sq = &(&c * &c) + &(&d * &d);
    let ideal = PolyIdeal::new(3, [sum_sq, (&d * &e).scale(&rat(2)), e.pow(2)]);
    let gb = groebner(&ideal, &budget).unwrap();
    let show = |ps: &[MultiPoly]| {
        ps.iter()
            .map(|p| p.display_with(&names))
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("Gröbner basis: {}", show(gb.generators()));

    let refined = real_locus_refine(&ideal, &budget).unwrap();
    for (i, round) in refined.rounds.iter().enumerate() {
        println!("round {}: adjoined {}", i + 1, show(&round.extracted));
    }
    println!("refined: {}", show(refined.output.generators()));
    println!(
        "e in the radical of (e^3): {}",
        radical_member(&e, &PolyIdeal::new(3, [e.pow(3)]), &budget).unwrap()
    );
}
