//! Mechanical checks of the structural consequences that every skew truss
//! and every ditruss with left-distributive dot must satisfy.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{lambda_family, AlgebraObject, Kind, SigmaFlags, StructureError};
use crate::group::{compose_commute, is_idempotent_map, Element, EndoMap, FiniteGroup};
use crate::laws;
use crate::ops::{first_factor_map, op_sub, BinOpTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The claim's hypothesis does not hold for this object.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Element>>,
}

impl ClaimReport {
    fn from_witness(claim: &str, witness: Option<Vec<Element>>) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            status: if witness.is_none() {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            witness,
        }
    }

    fn from_bool(claim: &str, holds: bool) -> Self {
        Self::from_witness(claim, (!holds).then(Vec::new))
    }

    fn skipped(claim: &str) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            status: ClaimStatus::Skipped,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub name: String,
    pub claims: Vec<ClaimReport>,
    /// No claim failed (skipped claims do not count as failures).
    pub all_passed: bool,
}

impl TheoremReport {
    fn new(name: &str, claims: Vec<ClaimReport>) -> Self {
        let all_passed = claims.iter().all(|c| c.status != ClaimStatus::Fail);
        TheoremReport {
            name: name.to_string(),
            claims,
            all_passed,
        }
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.claim == name)
    }
}

fn first_single(n: usize, mut holds: impl FnMut(Element) -> bool) -> Option<Vec<Element>> {
    (0..n).find(|&a| !holds(a)).map(|a| vec![a])
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

/// Checks, on a verified skew truss: every `λ_a` is an endomorphism;
/// `a ∘ 0 = σ(a)`; `σ` is idempotent; and, when `σ(0) = 0`, `λ_0` is
/// idempotent, `0 ∘ a = λ_0(a)` and `σ λ_0 = λ_0 σ`.
pub fn skew_truss_consequences(obj: &AlgebraObject) -> Result<TheoremReport, StructureError> {
    obj.require(Kind::SkewTruss)?;
    let g = obj.group();
    let n = g.order();
    let sigma = obj.require_sigma()?;
    let circ = obj.require_circ()?;
    let lambda = lambda_family(obj)?;

    let lambda_witness = (0..n).find_map(|a| {
        let m = &lambda.maps[a];
        first_pair(n, |b, c| m.apply(g.add(b, c)) == g.add(m.apply(b), m.apply(c))).map(|w| {
            let mut v = vec![a];
            v.extend(w);
            v
        })
    });
    let mut claims = vec![
        ClaimReport::from_witness("lambda-maps-are-endomorphisms", lambda_witness),
        ClaimReport::from_witness(
            "right-multiplication-by-zero-is-sigma",
            first_single(n, |a| circ.get(a, 0) == sigma.apply(a)),
        ),
        ClaimReport::from_witness(
            "sigma-idempotent",
            first_single(n, |a| sigma.apply(sigma.apply(a)) == sigma.apply(a)),
        ),
    ];
    let lambda_zero_claims = [
        "lambda-zero-idempotent",
        "left-multiplication-by-zero-is-lambda-zero",
        "sigma-commutes-with-lambda-zero",
    ];
    if sigma.fixes_zero() {
        let l0 = lambda.at_zero();
        claims.push(ClaimReport::from_witness(
            lambda_zero_claims[0],
            first_single(n, |a| l0.apply(l0.apply(a)) == l0.apply(a)),
        ));
        claims.push(ClaimReport::from_witness(
            lambda_zero_claims[1],
            first_single(n, |a| circ.get(0, a) == l0.apply(a)),
        ));
        claims.push(ClaimReport::from_witness(
            lambda_zero_claims[2],
            first_single(n, |a| sigma.apply(l0.apply(a)) == l0.apply(sigma.apply(a))),
        ));
    } else {
        claims.extend(lambda_zero_claims.iter().map(|c| ClaimReport::skipped(c)));
    }
    Ok(TheoremReport::new("skew-truss-consequences", claims))
}

/// Checks, on a verified ditruss whose dot is left distributive:
/// `a · 0 = 0`, `a · (-b) = -(a · b)`, `a ∘ 0 = σ(a)` and
/// `a ∘ (-b) = σ(a) - a ∘ b + σ(a)`. When `σ` is an idempotent endomorphism
/// it also checks that associativity of `∘` matches left weak
/// σ-associativity of `·`, and when both hold, `σ(a · b) = a · σ(b)`,
/// `(a ∘ b) · c = a · (b · c)` and idempotence of `λ_0`.
pub fn ditruss_consequences(obj: &AlgebraObject) -> Result<TheoremReport, StructureError> {
    obj.require(Kind::Ditruss)?;
    let g = obj.group();
    let n = g.order();
    let sigma = obj.require_sigma()?;
    let circ = obj.require_circ()?;
    let dot = obj.require_dot()?;
    let distributive = laws::is_left_distributive(g, dot);
    if let Some(witness) = distributive.witness {
        return Err(StructureError::DotNotDistributive { witness });
    }

    let mut claims = vec![
        ClaimReport::from_witness("dot-zero", first_single(n, |a| dot.get(a, 0) == 0)),
        ClaimReport::from_witness(
            "dot-negation",
            first_pair(n, |a, b| dot.get(a, g.neg(b)) == g.neg(dot.get(a, b))),
        ),
        ClaimReport::from_witness(
            "right-multiplication-by-zero-is-sigma",
            first_single(n, |a| circ.get(a, 0) == sigma.apply(a)),
        ),
        ClaimReport::from_witness(
            "circ-negation",
            first_pair(n, |a, b| {
                let s = sigma.apply(a);
                circ.get(a, g.neg(b)) == g.add3(s, g.neg(circ.get(a, b)), s)
            }),
        ),
    ];

    let conditional = [
        "associativity-iff-weak-sigma-associativity",
        "sigma-commutes-with-dot",
        "lambda-semigroup-morphism",
        "lambda-zero-idempotent",
        "sigma-commutes-with-lambda-zero",
    ];
    let flags = SigmaFlags::of(sigma);
    if flags.idempotent_endomorphism() {
        let assoc = laws::is_associative(circ).passed;
        let weak = laws::is_left_weak_sigma_associative(g, dot, sigma).passed;
        claims.push(ClaimReport::from_bool(conditional[0], assoc == weak));
        if assoc && weak {
            claims.push(ClaimReport::from_witness(
                conditional[1],
                first_pair(n, |a, b| sigma.apply(dot.get(a, b)) == dot.get(a, sigma.apply(b))),
            ));
            let lambda = lambda_family(obj)?;
            let morphism = (0..n).find_map(|a| {
                (0..n).find_map(|b| {
                    let composed = lambda.maps[a].compose(&lambda.maps[b]);
                    (lambda.maps[circ.get(a, b)].images() != composed.images()).then(|| vec![a, b])
                })
            });
            claims.push(ClaimReport::from_witness(conditional[2], morphism));
            let l0 = lambda.at_zero();
            claims.push(ClaimReport::from_bool(conditional[3], is_idempotent_map(l0)));
            claims.push(ClaimReport::from_bool(conditional[4], compose_commute(sigma, l0)));
        } else {
            claims.extend(conditional[1..].iter().map(|c| ClaimReport::skipped(c)));
        }
    } else {
        claims.extend(conditional.iter().map(|c| ClaimReport::skipped(c)));
    }
    Ok(TheoremReport::new("ditruss-consequences", claims))
}

/// Builds the ditruss `(G, +, σ, ∘, ·)` with `σ(a) = a ∘ 0`, provided `·` is
/// left distributive and `a ∘ b - a · b = a ∘ 0` for all `a, b`.
pub fn ditruss_from_difference(
    group: Arc<FiniteGroup>,
    circ: BinOpTable,
    dot: BinOpTable,
) -> Result<AlgebraObject, StructureError> {
    let g = &*group;
    if let Some(witness) = laws::is_left_distributive(g, &dot).witness {
        return Err(StructureError::DotNotDistributive { witness });
    }
    let difference = op_sub(g, &circ, &dot).map_err(|e| StructureError::PreconditionFailed(e.to_string()))?;
    let sigma = first_factor_map(&difference).ok_or_else(|| {
        StructureError::PreconditionFailed("circ - dot depends on its second argument".into())
    })?;
    debug_assert!(g.elements().all(|a| sigma.apply(a) == circ.get(a, 0)));
    let obj = AlgebraObject::ditruss(group, sigma, circ, dot)?;
    debug_assert!(obj.is_verified());
    Ok(obj)
}

/// The ditruss with `a ∘ b = τ(b) + σ(a)` and `a · b = -σ(a) + τ(b) + σ(a)`
/// for commuting idempotent endomorphisms `σ, τ`.
pub fn build_conjugation_ditruss(
    group: Arc<FiniteGroup>,
    sigma: &EndoMap,
    tau: &EndoMap,
) -> Result<AlgebraObject, StructureError> {
    let g = &*group;
    for (name, m) in [("sigma", sigma), ("tau", tau)] {
        let m = EndoMap::checked(g, m.images().to_vec())?;
        if !m.is_endomorphism() || !is_idempotent_map(&m) {
            return Err(StructureError::PreconditionFailed(format!(
                "{name} is not an idempotent endomorphism"
            )));
        }
    }
    if !compose_commute(sigma, tau) {
        return Err(StructureError::PreconditionFailed("sigma and tau do not commute".into()));
    }
    let n = g.order();
    let circ = BinOpTable::from_fn(n, |a, b| g.add(tau.apply(b), sigma.apply(a)));
    let dot = BinOpTable::from_fn(n, |a, b| {
        let s = sigma.apply(a);
        g.add3(g.neg(s), tau.apply(b), s)
    });
    let obj = AlgebraObject::ditruss(group, sigma.clone(), circ, dot)?;
    if !obj.is_verified() {
        return Err(StructureError::NotVerified(Kind::Ditruss));
    }
    Ok(obj)
}
