//! Isomorphism testing through canonical forms.

use std::sync::Arc;

use trusslab::canonical::{are_isomorphic, canonical_form, transport, Canonicalizer};
use trusslab::group::{automorphisms, catalog, EndoMap};
use trusslab::ops::make_sum_op;
use trusslab::structures::AlgebraObject;

fn main() {
    let g = Arc::new(catalog::klein_four());
    println!("|Aut(V4)| = {}", Canonicalizer::new(&g).automorphism_count());
    let a = EndoMap::checked(&g, vec![0, 1, 0, 1]).unwrap();
    let b = EndoMap::checked(&g, vec![0, 0, 2, 2]).unwrap();
    let t = AlgebraObject::skew_truss(g.clone(), make_sum_op(&g, &a, &b), a.clone()).unwrap();
    let u = AlgebraObject::skew_truss(g.clone(), make_sum_op(&g, &b, &a), b.clone()).unwrap();
    println!("t and u isomorphic: {}", are_isomorphic(&t, &u).unwrap());
    let c = canonical_form(&t).unwrap();
    println!("canonical sigma {:?}", c.sigma().unwrap().images());
    let orbit: std::collections::BTreeSet<_> =
        automorphisms(&g).iter().map(|phi| transport(&t, phi).unwrap().circ().unwrap().rows()).collect();
    println!("orbit of t under Aut(V4) has {} tables", orbit.len());
}
