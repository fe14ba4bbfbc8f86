//! Adding commuting central directions does not change the MD verdict, and
//! they can be split off again.

use lamd::kirillov::md_check;
use lamd::lie::catalog::{abelian, aff_c, heisenberg};
use lamd::lie::LieAlgebra;
use lamd::structure::strip_trivial_center;

fn main() {
    for (name, g) in [("h5", heisenberg(2).unwrap()), ("aff_c", aff_c())] {
        println!("{name}: {}", md_check(&g).summary());
        for r in 1..=2 {
            let ext = LieAlgebra::direct_sum(&g, &abelian(r));
            let stripped = strip_trivial_center(&ext);
            println!(
                "  ⊕ R^{r}: {}; stripping removes {} and recovers the table: {}",
                md_check(&ext).summary(),
                stripped.removed,
                stripped.core.constants() == g.constants()
            );
        }
    }
}
