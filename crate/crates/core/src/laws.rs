//! Exhaustive law checks over operation tables.
//!
//! Every check scans its variables in lexicographic order and reports the
//! first violating tuple, so witnesses are deterministic.

use serde::{Deserialize, Serialize};

use crate::group::{Element, EndoMap, FiniteGroup};
use crate::ops::BinOpTable;

/// Pass/fail evidence for one law, with the first counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Element>>,
}

impl LawReport {
    pub fn new(law: &str, witness: Option<Vec<Element>>) -> Self {
        LawReport {
            law: law.to_string(),
            passed: witness.is_none(),
            witness,
        }
    }

    pub fn pass(law: &str) -> Self {
        Self::new(law, None)
    }
}

pub mod names {
    pub const ASSOCIATIVITY: &str = "associativity";
    pub const LEFT_DISTRIBUTIVITY: &str = "left-distributivity";
    pub const RIGHT_DISTRIBUTIVITY: &str = "right-distributivity";
    pub const LEFT_SKEW_SIGMA_DISTRIBUTIVITY: &str = "left-skew-sigma-distributivity";
    pub const RIGHT_SKEW_TAU_DISTRIBUTIVITY: &str = "right-skew-tau-distributivity";
    pub const LEFT_WEAK_SIGMA_ASSOCIATIVITY: &str = "left-weak-sigma-associativity";
    pub const INTERCHANGE: &str = "interchange";
    pub const DITRUSS_IDENTITY: &str = "ditruss-identity";
}

fn first_pair(n: usize, mut holds: impl FnMut(Element, Element) -> bool) -> Option<Vec<Element>> {
    for a in 0..n {
        for b in 0..n {
            if !holds(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn first_triple(
    n: usize,
    mut holds: impl FnMut(Element, Element, Element) -> bool,
) -> Option<Vec<Element>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// `(a ∗ b) ∗ c = a ∗ (b ∗ c)`.
pub fn is_associative(f: &BinOpTable) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| f.get(f.get(a, b), c) == f.get(a, f.get(b, c)));
    LawReport::new(names::ASSOCIATIVITY, w)
}

/// `a ∗ (b + c) = a ∗ b + a ∗ c`.
pub fn is_left_distributive(g: &FiniteGroup, f: &BinOpTable) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| {
        f.get(a, g.add(b, c)) == g.add(f.get(a, b), f.get(a, c))
    });
    LawReport::new(names::LEFT_DISTRIBUTIVITY, w)
}

/// `(a + b) ∗ c = a ∗ c + b ∗ c`.
pub fn is_right_distributive(g: &FiniteGroup, f: &BinOpTable) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| {
        f.get(g.add(a, b), c) == g.add(f.get(a, c), f.get(b, c))
    });
    LawReport::new(names::RIGHT_DISTRIBUTIVITY, w)
}

/// `a ∘ (b + c) = (a ∘ b) - σ(a) + (a ∘ c)`.
pub fn is_left_skew_sigma_distributive(
    g: &FiniteGroup,
    f: &BinOpTable,
    sigma: &EndoMap,
) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| {
        f.get(a, g.add(b, c)) == g.add3(f.get(a, b), g.neg(sigma.apply(a)), f.get(a, c))
    });
    LawReport::new(names::LEFT_SKEW_SIGMA_DISTRIBUTIVITY, w)
}

/// `(a + b) ∘ c = (a ∘ c) - τ(c) + (b ∘ c)`.
pub fn is_right_skew_tau_distributive(
    g: &FiniteGroup,
    f: &BinOpTable,
    tau: &EndoMap,
) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| {
        f.get(g.add(a, b), c) == g.add3(f.get(a, c), g.neg(tau.apply(c)), f.get(b, c))
    });
    LawReport::new(names::RIGHT_SKEW_TAU_DISTRIBUTIVITY, w)
}

/// `(σ(a) + a · b) · c = a · (b · c)`.
pub fn is_left_weak_sigma_associative(
    g: &FiniteGroup,
    f: &BinOpTable,
    sigma: &EndoMap,
) -> LawReport {
    let w = first_triple(f.order(), |a, b, c| {
        f.get(g.add(sigma.apply(a), f.get(a, b)), c) == f.get(a, f.get(b, c))
    });
    LawReport::new(names::LEFT_WEAK_SIGMA_ASSOCIATIVITY, w)
}

/// `(w + x) ∘ (y + z) = (w ∘ y) + (x ∘ z)`.
pub fn satisfies_interchange(g: &FiniteGroup, f: &BinOpTable) -> LawReport {
    let n = f.order();
    for w in 0..n {
        for x in 0..n {
            let wx = g.add(w, x);
            for y in 0..n {
                for z in 0..n {
                    if f.get(wx, g.add(y, z)) != g.add(f.get(w, y), f.get(x, z)) {
                        return LawReport::new(names::INTERCHANGE, Some(vec![w, x, y, z]));
                    }
                }
            }
        }
    }
    LawReport::pass(names::INTERCHANGE)
}

/// `σ(a) + a · b = a ∘ b`.
pub fn satisfies_ditruss_identity(
    g: &FiniteGroup,
    sigma: &EndoMap,
    circ: &BinOpTable,
    dot: &BinOpTable,
) -> LawReport {
    let w = first_pair(g.order(), |a, b| {
        g.add(sigma.apply(a), dot.get(a, b)) == circ.get(a, b)
    });
    LawReport::new(names::DITRUSS_IDENTITY, w)
}
