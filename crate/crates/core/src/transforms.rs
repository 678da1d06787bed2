//! Constructions moving an object from one kind to another on the same
//! carrier.
//!
//! Every transform refuses unverified input and names the hypothesis that
//! failed. Each returns the new object together with a [`TransformRecord`]
//! carrying the maps recovered on the way.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::{compose_commute, image_commuting, is_idempotent_map, EndoMap, FiniteGroup};
use crate::laws;
use crate::ops::{make_sum_op, make_tau_pi2, op_opposite, second_factor_map, BinOpTable};
use crate::structures::{lambda_family, sigma_from_circ, AlgebraObject, Kind, SigmaFlags, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("sigma must be an idempotent group endomorphism")]
    SigmaNotIdempotentEndo,
    #[error("the dot operation depends on its first argument")]
    DotNotColumnConstant,
    #[error("hypothesis `{flag}` does not hold")]
    HypothesisFailed { flag: &'static str },
    #[error("input is not a verified interchange near-ring")]
    NotInterchange,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformParameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<EndoMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<EndoMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformRecord {
    pub source_kind: Kind,
    pub target_kind: Kind,
    pub forward_name: &'static str,
    pub parameters: TransformParameters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub object: AlgebraObject,
    pub record: TransformRecord,
}

impl Transformed {
    fn new(
        source: &AlgebraObject,
        object: AlgebraObject,
        forward_name: &'static str,
        sigma: Option<EndoMap>,
        tau: Option<EndoMap>,
    ) -> Self {
        let record = TransformRecord {
            source_kind: source.kind(),
            target_kind: object.kind(),
            forward_name,
            parameters: TransformParameters { sigma, tau },
        };
        Transformed { object, record }
    }
}

fn require(obj: &AlgebraObject, kind: Kind) -> Result<(), TransformError> {
    obj.require(kind).map_err(TransformError::from)
}

fn idempotent_endo(sigma: &EndoMap) -> bool {
    SigmaFlags::of(sigma).idempotent_endomorphism()
}

/// `λ_0` when the λ-family is constant.
fn constant_lambda(obj: &AlgebraObject) -> Option<EndoMap> {
    let fam = lambda_family(obj).ok()?;
    fam.constant.then(|| fam.at_zero().clone())
}

/// Skew truss `(T, +, ∘, σ)` ↦ weak truss `(T, +, ·, σ)` with
/// `a·b = −σ(a) + a∘b`.
pub fn truss_to_weak(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    require(obj, Kind::SkewTruss)?;
    let g = obj.group();
    let sigma = obj.sigma().unwrap();
    if !idempotent_endo(sigma) {
        return Err(TransformError::SigmaNotIdempotentEndo);
    }
    let circ = obj.circ().unwrap();
    let dot = BinOpTable::from_fn(g.order(), |a, b| g.add(g.neg(sigma.apply(a)), circ.get(a, b)));
    // −σ(a) + a∘b, not a∘b − σ(a): the two differ on nonabelian carriers.
    let weak = AlgebraObject::weak_truss(obj.group_arc().clone(), dot, sigma.clone())?;
    if !weak.is_verified() {
        return Err(StructureError::NotVerified(Kind::WeakTruss).into());
    }
    let tau = constant_lambda(obj);
    Ok(Transformed::new(obj, weak, "truss-to-weak", Some(sigma.clone()), tau))
}

/// Weak truss `(W, +, ·, σ)` ↦ skew truss `(W, +, ∘, σ)` with
/// `a∘b = σ(a) + a·b`.
pub fn weak_to_truss(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    require(obj, Kind::WeakTruss)?;
    let g = obj.group();
    let sigma = obj.sigma().unwrap();
    if !idempotent_endo(sigma) {
        return Err(TransformError::SigmaNotIdempotentEndo);
    }
    let dot = obj.dot().unwrap();
    // Weak σ-associativity alone does not make ∘ associative; the missing
    // piece is σ(a·b) = a·σ(b). Noncommuting idempotents σ, τ with · = τπ₂
    // already break it on V4.
    let n = g.order();
    if !(0..n).all(|a| (0..n).all(|b| sigma.apply(dot.get(a, b)) == dot.get(a, sigma.apply(b)))) {
        return Err(TransformError::HypothesisFailed {
            flag: "sigma-commutes-with-dot",
        });
    }
    let circ = BinOpTable::from_fn(n, |a, b| g.add(sigma.apply(a), dot.get(a, b)));
    let truss = AlgebraObject::skew_truss(obj.group_arc().clone(), circ, sigma.clone())?;
    if !truss.is_verified() {
        return Err(StructureError::NotVerified(Kind::SkewTruss).into());
    }
    let tau = constant_lambda(obj);
    Ok(Transformed::new(obj, truss, "weak-to-truss", Some(sigma.clone()), tau))
}

/// `(D, +, σ, ∘, τπ₂)` ↦ `(D, +, τ, τπ₁ + σπ₂, σπ₂)`.
pub fn ditruss_involution(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    require(obj, Kind::Ditruss)?;
    let g = obj.group();
    let sigma = obj.sigma().unwrap();
    let tau = second_factor_map(obj.dot().unwrap()).ok_or(TransformError::DotNotColumnConstant)?;
    let tau = EndoMap::checked(g, tau.into_images()).map_err(StructureError::from)?;
    let circ = BinOpTable::from_fn(g.order(), |a, b| g.add(tau.apply(a), sigma.apply(b)));
    let dot = make_tau_pi2(g, sigma);
    let image = AlgebraObject::ditruss(obj.group_arc().clone(), tau.clone(), circ, dot)?;
    debug_assert!(image.is_verified());
    Ok(Transformed::new(obj, image, "ditruss-involution", Some(sigma.clone()), Some(tau)))
}

/// Forgets `σ` and `·` from a ditruss with associative `∘`, constant λ and
/// image-commuting idempotent endomorphisms `σ`, `λ_0`.
pub fn ditruss_to_interchange(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    require(obj, Kind::Ditruss)?;
    let g = obj.group();
    let sigma = obj.sigma().unwrap();
    let circ = obj.circ().unwrap();
    if !laws::is_associative(circ).passed {
        return Err(TransformError::HypothesisFailed { flag: "circ-associative" });
    }
    let tau = constant_lambda(obj).ok_or(TransformError::HypothesisFailed { flag: "lambda-constant" })?;
    if !idempotent_endo(sigma) {
        return Err(TransformError::HypothesisFailed {
            flag: "sigma-idempotent-endomorphism",
        });
    }
    if !idempotent_endo(&tau) {
        return Err(TransformError::HypothesisFailed {
            flag: "lambda-zero-idempotent-endomorphism",
        });
    }
    if !image_commuting(g, sigma, &tau) {
        return Err(TransformError::HypothesisFailed { flag: "image-commuting" });
    }
    let image = AlgebraObject::interchange(obj.group_arc().clone(), circ.clone())?;
    if !image.is_verified() {
        return Err(TransformError::HypothesisFailed { flag: "interchange-law" });
    }
    Ok(Transformed::new(obj, image, "ditruss-to-interchange", Some(sigma.clone()), Some(tau)))
}

/// Associative interchange near-ring `(G, +, ∘)` ↦ ditruss
/// `(G, +, σ, ∘, τπ₂)` with `σ(a) = a∘0` and `τ(a) = 0∘a`.
pub fn interchange_to_ditruss(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    if obj.kind() != Kind::InterchangeNr || !obj.is_verified() {
        return Err(TransformError::NotInterchange);
    }
    let g = obj.group();
    let circ = obj.circ().unwrap();
    if !laws::is_associative(circ).passed {
        return Err(TransformError::HypothesisFailed { flag: "circ-associative" });
    }
    let sigma = sigma_from_circ(g, circ);
    let tau = EndoMap::checked(g, circ.row_map(0).into_images()).map_err(StructureError::from)?;
    let checks: [(&'static str, bool); 5] = [
        ("sigma-idempotent-endomorphism", idempotent_endo(&sigma)),
        ("tau-idempotent-endomorphism", idempotent_endo(&tau)),
        ("commuting", compose_commute(&sigma, &tau)),
        ("image-commuting", image_commuting(g, &sigma, &tau)),
        ("circ-is-sum", make_sum_op(g, &sigma, &tau) == *circ),
    ];
    if let Some((flag, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(TransformError::HypothesisFailed { flag });
    }
    let image = AlgebraObject::ditruss(obj.group_arc().clone(), sigma.clone(), circ.clone(), make_tau_pi2(g, &tau))?;
    debug_assert!(image.is_verified());
    Ok(Transformed::new(obj, image, "interchange-to-ditruss", Some(sigma), Some(tau)))
}

/// `(G, +, ∘)` ↦ `(G, +, ∘^op)`.
pub fn interchange_opposite(obj: &AlgebraObject) -> Result<Transformed, TransformError> {
    if obj.kind() != Kind::InterchangeNr || !obj.is_verified() {
        return Err(TransformError::NotInterchange);
    }
    let image = AlgebraObject::interchange(obj.group_arc().clone(), op_opposite(obj.circ().unwrap()))?;
    debug_assert!(image.is_verified());
    Ok(Transformed::new(obj, image, "interchange-opposite", None, None))
}

/// Outcome of the constant-λ equivalences for one pair of idempotent
/// endomorphisms, taking `∘ = σπ₁ + τπ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstantLambdaReport {
    /// `(G, +, ∘, σ)` is a skew truss with constant λ.
    pub lambda_constant_truss: bool,
    /// `τ` commutes with `σ` (so `∘` has the sum form with a commuting `τ`).
    pub commuting_sum: bool,
    /// `(G, +, τπ₁ + σπ₂, τ)` is a skew truss.
    pub swapped_truss: bool,
    /// `∘` is right skew τ-distributive; only evaluated when the other
    /// three agree and hold.
    pub right_skew_tau: Option<bool>,
    /// `τπ₁ + σπ₂` is right σ-distributive, under the same condition.
    pub swapped_right_distributive: Option<bool>,
}

impl ConstantLambdaReport {
    pub fn consistent(&self) -> bool {
        let all = [self.lambda_constant_truss, self.commuting_sum, self.swapped_truss];
        let agree = all.iter().all(|&x| x == all[0]);
        agree && (!all[0] || (self.right_skew_tau == Some(true) && self.swapped_right_distributive == Some(true)))
    }
}

pub fn constant_lambda_equivalence(
    group: &Arc<FiniteGroup>,
    sigma: &EndoMap,
    tau: &EndoMap,
) -> Result<ConstantLambdaReport, TransformError> {
    if !idempotent_endo(sigma) || !idempotent_endo(tau) {
        return Err(TransformError::SigmaNotIdempotentEndo);
    }
    let g = &**group;
    let circ = make_sum_op(g, sigma, tau);
    let truss = AlgebraObject::skew_truss(group.clone(), circ.clone(), sigma.clone())?;
    let lambda_constant_truss = truss.is_verified() && lambda_family(&truss)?.constant;
    let commuting_sum = compose_commute(sigma, tau);
    let swapped = make_sum_op(g, tau, sigma);
    let swapped_truss = AlgebraObject::skew_truss(group.clone(), swapped.clone(), tau.clone())?.is_verified();
    let holds = lambda_constant_truss && commuting_sum && swapped_truss;
    let right_skew_tau = holds.then(|| laws::is_right_skew_tau_distributive(g, &circ, tau).passed);
    // "right σ-distributive" for ∘′ is read in the skew sense, with σ as the correction term.
    let swapped_right_distributive =
        holds.then(|| laws::is_right_skew_tau_distributive(g, &swapped, sigma).passed);
    Ok(ConstantLambdaReport {
        lambda_constant_truss,
        commuting_sum,
        swapped_truss,
        right_skew_tau,
        swapped_right_distributive,
    })
}

/// Does the carrier map `h` preserve `+` and every operation of the kind?
///
/// Skew-truss and interchange morphisms preserve `+` and `∘`; weak-truss
/// morphisms preserve `+`, `·` and `σ`; ditruss morphisms preserve all four.
pub fn is_morphism(h: &[usize], src: &AlgebraObject, dst: &AlgebraObject) -> bool {
    let (g, g2) = (src.group(), dst.group());
    let n = g.order();
    if src.kind() != dst.kind() || h.len() != n || h.iter().any(|&x| x >= g2.order()) {
        return false;
    }
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let preserves = |f: &BinOpTable, f2: &BinOpTable| pairs().all(|(a, b)| h[f.get(a, b)] == f2.get(h[a], h[b]));
    if !pairs().all(|(a, b)| h[g.add(a, b)] == g2.add(h[a], h[b])) {
        return false;
    }
    let circ_ok = match (src.circ(), dst.circ()) {
        (Some(f), Some(f2)) => preserves(f, f2),
        _ => true,
    };
    let dot_ok = match (src.dot(), dst.dot()) {
        (Some(f), Some(f2)) => preserves(f, f2),
        _ => true,
    };
    let sigma_ok = src.kind() == Kind::SkewTruss || preserves_sigma(h, src, dst);
    circ_ok && dot_ok && sigma_ok
}

pub fn preserves_sigma(h: &[usize], src: &AlgebraObject, dst: &AlgebraObject) -> bool {
    match (src.sigma(), dst.sigma()) {
        (Some(s), Some(s2)) => (0..h.len()).all(|a| h[s.apply(a)] == s2.apply(h[a])),
        (None, None) => true,
        _ => false,
    }
}

/// Whether a skew truss has σ an idempotent endomorphism, the domain of
/// [`truss_to_weak`].
pub fn in_truss_weak_domain(obj: &AlgebraObject) -> bool {
    obj.sigma().is_some_and(|s| s.is_endomorphism() && is_idempotent_map(s))
}
