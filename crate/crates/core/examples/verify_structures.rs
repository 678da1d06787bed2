//! Building and checking structures, and reading the consequence reports.

use std::sync::Arc;

use trusslab::group::{catalog, EndoMap};
use trusslab::ops::{make_sigma_pi1, make_zero_op, BinOpTable};
use trusslab::structures::{ditruss_consequences, skew_truss_consequences, AlgebraObject, ClaimStatus};

fn show(title: &str, report: &trusslab::structures::TheoremReport) {
    println!("{title}:");
    for c in &report.claims {
        let mark = match c.status {
            ClaimStatus::Pass => "ok",
            ClaimStatus::Fail => "FAILS",
            ClaimStatus::Skipped => "n/a",
        };
        println!("  {:<45} {mark} {}", c.claim, c.witness.as_ref().map(|w| format!("{w:?}")).unwrap_or_default());
    }
}

fn main() {
    let z2 = Arc::new(catalog::cyclic(2));

    // a∘b = a + b + 1 with σ(a) = a + 1: a skew truss whose σ moves 0 and
    // is not idempotent.
    let circ = BinOpTable::from_fn(2, |a, b| (a + b + 1) % 2);
    let sigma = EndoMap::checked(&z2, vec![1, 0]).unwrap();
    let t = AlgebraObject::skew_truss(z2.clone(), circ, sigma).unwrap();
    println!("verified: {}", t.is_verified());
    show("skew truss a+b+1 on Z2", &skew_truss_consequences(&t).unwrap());

    // (V4, σ, σπ₁, ∘₀) with σ a nonzero idempotent: λ_0 = 0 but σ ≠ 0.
    let v4 = Arc::new(catalog::klein_four());
    let sigma = EndoMap::checked(&v4, vec![0, 0, 2, 2]).unwrap();
    let d = AlgebraObject::ditruss(v4.clone(), sigma.clone(), make_sigma_pi1(&v4, &sigma), make_zero_op(&v4)).unwrap();
    println!("ditruss verified: {}", d.is_verified());
    show("ditruss (sigma, sigma pi1, 0) on V4", &ditruss_consequences(&d).unwrap());

    // A broken object is still built, but does not verify.
    let bad = AlgebraObject::skew_truss(z2.clone(), BinOpTable::from_fn(2, |a, b| (a + b) % 2), EndoMap::zero(&z2)).unwrap();
    for axiom in bad.check().axioms {
        println!("{}: {} {:?}", axiom.law, axiom.passed, axiom.witness);
    }
}
