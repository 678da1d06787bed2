//! Law checks on operation tables, with the first counterexample reported
//! on failure.

use trusslab::group::{catalog, EndoMap};
use trusslab::laws;
use trusslab::ops::{make_projection_ops, make_sigma_pi1, op_sub, BinOpTable};

fn main() {
    let g = catalog::s3();
    let (p1, p2) = make_projection_ops(&g);
    println!("pi1 associative: {}", laws::is_associative(&p1).passed);
    println!("pi2 left distributive: {}", laws::is_left_distributive(&g, &p2).passed);

    // σπ₁ is associative exactly when σ is idempotent.
    let swap = EndoMap::checked(&g, vec![1, 0, 2, 3, 4, 5]).unwrap();
    let r = laws::is_associative(&make_sigma_pi1(&g, &swap));
    println!("sigma = {:?}: associative {}, witness {:?}", swap.images(), r.passed, r.witness);

    // The group operation itself is not left distributive on a nonabelian group.
    let plus = BinOpTable::from_fn(g.order(), |a, b| g.add(a, b));
    let r = laws::is_left_distributive(&g, &plus);
    println!("+ left distributive: {} (witness a, b, c = {:?})", r.passed, r.witness);

    // Pointwise differences: (+) - pi2 is pi1 on any group.
    let diff = op_sub(&g, &plus, &p2).unwrap();
    println!("(+) - pi2 == pi1: {}", diff == p1);
}
