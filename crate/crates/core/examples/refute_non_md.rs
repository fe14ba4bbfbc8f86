//! `aff(R) ⊕ aff(R)` has orbits of dimensions 0, 2 and 4, so it is not MD.

use lamd::kirillov::{md_check, orbit_dim, MdVerdict, Refutation};
use lamd::lie::catalog::aff_r;
use lamd::lie::LieAlgebra;

fn main() {
    let g = LieAlgebra::direct_sum(&aff_r(), &aff_r());
    println!("{}", g.bracket_table());
    match md_check(&g) {
        MdVerdict::Refuted(Refutation::Witness {
            low,
            low_rank,
            high,
            high_rank,
        }) => {
            println!(
                "F₁ = {low}: dim {low_rank} (recomputed {})",
                orbit_dim(&g, &low)
            );
            println!(
                "F₂ = {high}: dim {high_rank} (recomputed {})",
                orbit_dim(&g, &high)
            );
        }
        other => println!("unexpected verdict {}", other.summary()),
    }
}
