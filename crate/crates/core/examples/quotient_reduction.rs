//! `s5_45 / G²` is `aff(C)`, and the quotient keeps the MD property.

use lamd::kirillov::MdOptions;
use lamd::lie::catalog::{aff_c, s5_45};
use lamd::structure::theorem3_check;

fn main() {
    let g = s5_45();
    let (q, projection) = g.quotient(&g.derived(2)).expect("G² is an ideal");
    println!("G/G²: {}", q.bracket_table());
    println!("projection: {projection}");
    println!(
        "same table as aff_c: {}",
        q.constants() == aff_c().constants()
    );

    let check = theorem3_check(&g, &MdOptions::default()).expect("s5_45 is MD");
    println!(
        "p = {} ≤ n − k = {}: {}; quotient verdict {}",
        check.p,
        check.n - check.k,
        check.bound_ok,
        check.quotient_verdict.summary()
    );
}
