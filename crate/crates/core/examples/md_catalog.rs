//! Runs the MD decision procedure over the whole catalog and prints the
//! Pfaffian certificate for `s5_45`.

use lamd::kirillov::{md_check, MdVerdict};
use lamd::lie::catalog::{catalog, CatalogName};

fn main() {
    for name in CatalogName::ALL {
        let params: Vec<Option<usize>> = match name {
            CatalogName::Heisenberg => (1..=3).map(Some).collect(),
            CatalogName::Abelian => vec![Some(3)],
            _ => vec![None],
        };
        for p in params {
            let g = catalog(name, p).expect("catalog entry");
            let label = p.map_or(name.to_string(), |p| format!("{name}({p})"));
            println!("{label:<16} dim {}  {}", g.dim(), md_check(&g).summary());
        }
    }

    let g = catalog(CatalogName::S545, None).unwrap();
    if let MdVerdict::Verified { k, certificate } = md_check(&g) {
        let names = &certificate.variables;
        println!(
            "\ns5_45 is MD_{k}({}); principal Pfaffians in {}:",
            g.dim(),
            names.join(", ")
        );
        for p in &certificate.pfaffians {
            println!("  {}", p.display_with(names));
        }
        let refined: Vec<String> = certificate
            .refined
            .iter()
            .map(|p| p.display_with(names))
            .collect();
        println!("refined ideal ({})", refined.join(", "));
    }
}
