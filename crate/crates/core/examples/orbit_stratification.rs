//! Orbit dimensions of `s5_45`: rank 4 exactly when `F` is nonzero on `G¹`.

use lamd::kirillov::{generic_orbit_dim, kirillov_numeric, orbit_dim};
use lamd::lie::catalog::s5_45;
use lamd::lie::DualFunctional;
use lamd::linalg::{rat, ratio};

fn main() {
    let g = s5_45();
    println!("{}", g.bracket_table());
    println!("G¹ = span of {} vectors", g.derived(1).dim());

    let samples = [
        vec![rat(0), rat(0), rat(0), rat(0), rat(1)],
        vec![rat(0), rat(0), rat(1), rat(0), rat(0)],
        vec![rat(2), ratio(-1, 3), rat(0), ratio(5, 2), rat(0)],
        vec![rat(1), rat(-1), rat(0), rat(0), rat(0)],
        vec![rat(0); 5],
    ];
    for coords in samples {
        let f = DualFunctional(coords);
        println!("F = {f:<22} dim Ω_F = {}", orbit_dim(&g, &f));
    }

    let generic = generic_orbit_dim(&g);
    println!(
        "\ngeneric orbit dimension {} attained at {}",
        generic.k, generic.certificate
    );
    println!("B_F there: {}", kirillov_numeric(&g, &generic.certificate));
}
