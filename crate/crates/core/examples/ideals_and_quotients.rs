//! Ideals, congruences, quotients and the zero-symmetric/constant
//! decomposition.

use std::sync::Arc;

use trusslab::group::{catalog, EndoMap};
use trusslab::ops::{make_sum_op, make_tau_pi2};
use trusslab::structures::AlgebraObject;
use trusslab::substructure::{congruences, ideals, quotient, zero_symmetric_constant_decomposition};

fn main() {
    let g = Arc::new(catalog::d4());
    let sigma = EndoMap::checked(&g, vec![0, 0, 2, 2, 0, 0, 2, 2]).unwrap();
    let tau = EndoMap::checked(&g, vec![0, 1, 0, 1, 1, 0, 1, 0]).unwrap();
    let d = AlgebraObject::ditruss(g.clone(), sigma.clone(), make_sum_op(&g, &sigma, &tau), make_tau_pi2(&g, &tau))
        .unwrap();
    let dec = zero_symmetric_constant_decomposition(&d).unwrap();
    println!("T0 = {:?} (ker tau = {:?})", dec.zero_symmetric, tau.kernel());
    println!("Tc = {:?} (tau(G) = {:?})", dec.constant, tau.image_set());

    let t = AlgebraObject::skew_truss(g.clone(), d.circ().unwrap().clone(), sigma).unwrap();
    let is = ideals(&t).unwrap();
    println!("{} ideals, {} congruences", is.len(), congruences(&t).unwrap().len());
    for i in &is {
        let q = quotient(&t, i).unwrap();
        println!("  T / {:?} has order {} and verifies: {}", i.elements, q.group().order(), q.is_verified());
    }
}
