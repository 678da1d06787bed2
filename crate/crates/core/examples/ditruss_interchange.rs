//! Constant-λ ditrusses, their involution, and the correspondence with
//! associative interchange near-rings.

use std::sync::Arc;

use trusslab::enumeration::{enumerate_constant_lambda_ditrusses, enumerate_interchange};
use trusslab::group::{catalog, enumerate_endomorphisms, is_idempotent_map};
use trusslab::transforms::{
    constant_lambda_equivalence, ditruss_involution, ditruss_to_interchange, interchange_to_ditruss,
};

fn main() {
    let g = Arc::new(catalog::d4());
    let ditrusses = enumerate_constant_lambda_ditrusses(&g, true, true).unwrap();
    let near_rings = enumerate_interchange(&g, true, true).unwrap();
    println!(
        "D4: {} image-commuting constant-lambda ditrusses, {} associative interchange near-rings",
        ditrusses.total_count, near_rings.total_count
    );

    let d = &ditrusses.representatives[ditrusses.representatives.len() / 2];
    let f = ditruss_involution(d).unwrap();
    println!("involution record: {}", serde_json::to_string(&f.record).unwrap());
    assert_eq!(ditruss_involution(&f.object).unwrap().object, *d);

    let i = ditruss_to_interchange(d).unwrap();
    let back = interchange_to_ditruss(&i.object).unwrap();
    println!("ditruss -> interchange -> ditruss is the identity: {}", back.object == *d);

    let idem: Vec<_> = enumerate_endomorphisms(&g).into_iter().filter(is_idempotent_map).collect();
    let mut holding = 0;
    for s in &idem {
        for t in &idem {
            let r = constant_lambda_equivalence(&g, s, t).unwrap();
            assert!(r.consistent());
            holding += r.lambda_constant_truss as usize;
        }
    }
    println!("{holding} of {} idempotent pairs give a constant-lambda skew truss", idem.len() * idem.len());
}
