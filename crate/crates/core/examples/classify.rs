//! Classification of codimension-one MD-algebras, including recovery of the
//! Heisenberg normal form from a scrambled basis.

use lamd::kirillov::MdOptions;
use lamd::lie::catalog::{aff_c, aff_c_plus_r, aff_r_plus_r, heisenberg, s5_45};
use lamd::linalg::Matrix;
use lamd::structure::classify_codim1;

fn main() {
    let opts = MdOptions::default();
    for (name, g) in [
        ("s5_45", s5_45()),
        ("aff_r_plus_r", aff_r_plus_r()),
        ("aff_c_plus_r", aff_c_plus_r()),
        ("aff_c", aff_c()),
    ] {
        println!("{name:<14} → {}", classify_codim1(&g, &opts).label);
    }

    let p = Matrix::from_i64(&[
        &[1, 0, 0, 0, 0],
        &[2, 1, 0, 0, 0],
        &[0, -1, 1, 0, 0],
        &[1, 0, 3, 1, 0],
        &[0, 2, 0, 1, 1],
    ]);
    let scrambled = heisenberg(2).unwrap().change_of_basis(&p).unwrap();
    println!("\nscrambled h5: {}", scrambled.bracket_table());
    let c = classify_codim1(&scrambled, &opts);
    let iso = c.isomorphism.expect("Heisenberg branch returns a basis");
    println!("label {}; basis change {iso}", c.label);
    println!(
        "normalized: {}",
        scrambled.change_of_basis(&iso).unwrap().bracket_table()
    );
}
