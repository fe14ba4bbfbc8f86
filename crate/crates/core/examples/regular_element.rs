//! Nonsingular combinations of commuting matrices, regular elements, and the
//! semidirect splitting they induce.

use lamd::lie::catalog::aff_c;
use lamd::linalg::Matrix;
use lamd::structure::{nonsingular_combination, regular_element, semidirect_decomposition};

fn main() {
    // A = [[1, 1], [0, 1]]; the family {A - I, A² - A} is singular throughout
    let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
    let n = &a - &Matrix::identity(2);
    let singular = [n.clone(), &a.pow(2) - &a];
    let none = nonsingular_combination(&singular).unwrap();
    println!(
        "{{A - I, A² - A}}: nonsingular combination exists: {}",
        none.is_some()
    );
    let family = [n, a.clone()];
    let c = nonsingular_combination(&family)
        .unwrap()
        .expect("A itself is invertible");
    let coeffs: Vec<String> = c.coeffs.iter().map(ToString::to_string).collect();
    println!(
        "{{A - I, A}}: first coefficients ({}) with det {}",
        coeffs.join(", "),
        c.det
    );

    let g = aff_c();
    let reg = regular_element(&g)
        .unwrap()
        .expect("aff_c has a regular element");
    println!("\naff_c regular element {}", g.format_vector(&reg.x));
    let d = semidirect_decomposition(&g).unwrap();
    for (u, rho) in d.complement.iter().zip(&d.rho) {
        println!("  ad¹({}) = {rho}", g.format_vector(u));
    }
    println!("rebuilt from rho: {}", d.reconstruct().bracket_table());
}
