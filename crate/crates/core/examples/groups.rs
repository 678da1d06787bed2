//! The built-in groups: subgroups, endomorphisms, automorphisms and the
//! semidirect splitting carried by each idempotent endomorphism.
//!
//! Run with `cargo run --example groups -- D4`.

use trusslab::group::{
    automorphisms, catalog, center, decomposition_from_idempotent, enumerate_endomorphisms, is_idempotent_map,
    normal_subgroups, subgroups,
};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let Some(g) = catalog::by_name(&name) else {
        eprintln!("unknown group {name}");
        std::process::exit(2);
    };
    println!("{} has order {}, abelian: {}", g.name(), g.order(), g.is_abelian());
    println!("element orders: {:?}", g.elements().map(|a| g.element_order(a)).collect::<Vec<_>>());
    println!("center: {:?}", center(&g));
    println!("subgroups: {}", subgroups(&g).unwrap().len());
    println!("normal subgroups: {:?}", normal_subgroups(&g).unwrap());

    let ends = enumerate_endomorphisms(&g);
    println!("|End| = {}, |Aut| = {}", ends.len(), automorphisms(&g).len());
    for e in ends.iter().filter(|e| is_idempotent_map(e)) {
        let d = decomposition_from_idempotent(&g, e).unwrap();
        println!(
            "  e = {:?}: kernel {:?} x image {:?} ({:?})",
            e.images(),
            d.kernel_part,
            d.image_part,
            d.kind
        );
    }
}
