//! Ideals, congruences and quotients of skew trusses, and the split of a
//! truss into its 0-symmetric and constant parts.
//!
//! Congruences are found by closing single pairs under all operations,
//! without going through ideals, so that the ideal/congruence
//! correspondence can be tested rather than assumed.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::{is_normal_subgroup, is_subgroup, normal_subgroups, Element, FiniteGroup, GroupError};
use crate::laws::LawReport;
use crate::ops::BinOpTable;
use crate::structures::{lambda_family, AlgebraObject, Kind, StructureError};

/// Largest carrier for which ideals and congruences are searched.
pub const CONGRUENCE_ORDER_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstructureError {
    #[error("carrier of order {order} exceeds the search cap {cap}")]
    CarrierTooLarge { order: usize, cap: usize },
    #[error("the given set is not an ideal")]
    NotAnIdeal,
    #[error("sigma does not fix 0")]
    SigmaDoesNotFixZero,
    #[error("hypothesis `{0}` does not hold")]
    HypothesisFailed(&'static str),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub mod law_names {
    pub const IDEAL: &str = "ideal";
    pub const NORMAL_SUBGROUP: &str = "normal-subgroup";
    pub const ABSORBS_RIGHT_TRANSLATES: &str = "ideal-right-translate";
    pub const LAMBDA_STABLE: &str = "ideal-lambda-stable";
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Ideal {
    pub elements: Vec<Element>,
}

/// A partition of the carrier; blocks are sorted and listed by their least
/// element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Congruence {
    pub blocks: Vec<Vec<Element>>,
}

impl Congruence {
    fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<Element>> = Vec::new();
        let mut index = vec![usize::MAX; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            if index[l] == usize::MAX {
                index[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[l]].push(x);
        }
        Congruence { blocks }
    }

    pub fn block_of(&self, x: Element) -> &[Element] {
        self.blocks.iter().find(|b| b.contains(&x)).expect("partition covers the carrier")
    }
}

fn check_cap(g: &FiniteGroup) -> Result<(), SubstructureError> {
    if g.order() > CONGRUENCE_ORDER_CAP {
        return Err(SubstructureError::CarrierTooLarge {
            order: g.order(),
            cap: CONGRUENCE_ORDER_CAP,
        });
    }
    Ok(())
}

fn truss_parts(t: &AlgebraObject) -> Result<(&FiniteGroup, &BinOpTable, Vec<Vec<Element>>), SubstructureError> {
    t.require(Kind::SkewTruss)?;
    let lambdas = lambda_family(t)?.maps.into_iter().map(|m| m.into_images()).collect();
    Ok((t.group(), t.circ().unwrap(), lambdas))
}

/// Checks normality, `(i+a)∘b − a∘b ∈ I` and `λ_a(i) ∈ I`. The witness is the
/// first `[i, a, b]` (or `[i, a]`) that escapes `I`.
pub fn is_ideal(t: &AlgebraObject, set: &[Element]) -> Result<LawReport, SubstructureError> {
    let (g, circ, lambdas) = truss_parts(t)?;
    let n = g.order();
    let mut member = vec![false; n];
    for &x in set {
        if x >= n {
            return Ok(LawReport::new(law_names::NORMAL_SUBGROUP, Some(vec![x])));
        }
        member[x] = true;
    }
    let elems: Vec<Element> = (0..n).filter(|&x| member[x]).collect();
    if !is_normal_subgroup(g, &elems) {
        return Ok(LawReport::new(law_names::NORMAL_SUBGROUP, Some(vec![])));
    }
    let escapes = |translate: &dyn Fn(Element, Element) -> Element| {
        elems.iter().find_map(|&i| {
            (0..n).find_map(|a| {
                (0..n)
                    .find(|&b| !member[g.sub(circ.get(translate(i, a), b), circ.get(a, b))])
                    .map(|b| vec![i, a, b])
            })
        })
    };
    let right = escapes(&|i, a| g.add(i, a));
    // For normal I the `a + i` form holds exactly when the `i + a` form does
    // (a + i = i' + a with i' = a + i − a), though not pointwise in i.
    debug_assert_eq!(right.is_none(), escapes(&|i, a| g.add(a, i)).is_none());
    if let Some(w) = right {
        return Ok(LawReport::new(law_names::ABSORBS_RIGHT_TRANSLATES, Some(w)));
    }
    for &i in &elems {
        for a in 0..n {
            if !member[lambdas[a][i]] {
                return Ok(LawReport::new(law_names::LAMBDA_STABLE, Some(vec![i, a])));
            }
        }
    }
    Ok(LawReport::pass(law_names::IDEAL))
}

/// Ideals among the normal subgroups, smallest first.
pub fn ideals(t: &AlgebraObject) -> Result<Vec<Ideal>, SubstructureError> {
    check_cap(t.group())?;
    let mut out = Vec::new();
    for elements in normal_subgroups(t.group())? {
        if is_ideal(t, &elements)?.passed {
            out.push(Ideal { elements });
        }
    }
    Ok(out)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }

    fn labels(&mut self) -> Vec<usize> {
        (0..self.0.len()).map(|x| self.find(x)).collect()
    }
}

/// The least congruence containing the given partition labels.
fn close(g: &FiniteGroup, circ: &BinOpTable, sigma: &[Element], seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for (x, &l) in seed.iter().enumerate() {
        uf.union(x, l);
    }
    // Compatibility with each generating pair (x, root x) suffices.
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            changed |= uf.union(g.neg(x), g.neg(r));
            changed |= uf.union(sigma[x], sigma[r]);
            for z in 0..n {
                changed |= uf.union(g.add(x, z), g.add(r, z));
                changed |= uf.union(g.add(z, x), g.add(z, r));
                changed |= uf.union(circ.get(x, z), circ.get(r, z));
                changed |= uf.union(circ.get(z, x), circ.get(z, r));
            }
        }
    }
    uf.labels()
}

/// Every congruence of `(T, +, ∘, σ)`, coarser ones later.
pub fn congruences(t: &AlgebraObject) -> Result<Vec<Congruence>, SubstructureError> {
    t.require(Kind::SkewTruss)?;
    let g = t.group();
    check_cap(g)?;
    let n = g.order();
    let circ = t.circ().unwrap();
    let sigma = t.sigma().unwrap().images();
    let identity: Vec<usize> = (0..n).collect();
    let principal: BTreeSet<Vec<usize>> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut seed = identity.clone();
            seed[b] = a;
            close(g, circ, sigma, &seed)
        })
        .collect();
    // Every congruence is the join of the principal ones it contains.
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::from([identity]);
    let mut frontier: Vec<Vec<usize>> = found.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let mut seed = c.clone();
            let mut uf = UnionFind::new(n);
            for x in 0..n {
                uf.union(x, c[x]);
                uf.union(x, p[x]);
            }
            seed.copy_from_slice(&uf.labels());
            let j = close(g, circ, sigma, &seed);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = found.iter().map(|l| Congruence::from_labels(l)).collect();
    out.sort_by(|a, b| b.blocks.len().cmp(&a.blocks.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `a ≡ b` iff `a − b ∈ I`.
pub fn congruence_from_ideal(t: &AlgebraObject, ideal: &Ideal) -> Congruence {
    let g = t.group();
    let n = g.order();
    let labels: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&b| ideal.elements.contains(&g.sub(a, b))).unwrap())
        .collect();
    Congruence::from_labels(&labels)
}

/// The block of 0.
pub fn ideal_from_congruence(c: &Congruence) -> Ideal {
    Ideal {
        elements: c.block_of(0).to_vec(),
    }
}

/// `T/I`, with cosets numbered by their least element.
pub fn quotient(t: &AlgebraObject, ideal: &Ideal) -> Result<AlgebraObject, SubstructureError> {
    if !is_ideal(t, &ideal.elements)?.passed {
        return Err(SubstructureError::NotAnIdeal);
    }
    let g = t.group();
    let cong = congruence_from_ideal(t, ideal);
    let k = cong.blocks.len();
    let mut class = vec![0; g.order()];
    for (idx, block) in cong.blocks.iter().enumerate() {
        for &x in block {
            class[x] = idx;
        }
    }
    let rep = |c: usize| cong.blocks[c][0];
    let table: Vec<Vec<usize>> = (0..k).map(|x| (0..k).map(|y| class[g.add(rep(x), rep(y))]).collect()).collect();
    let qg = FiniteGroup::validate(&table, &format!("{}/{:?}", g.name(), ideal.elements))?;
    let circ = BinOpTable::from_fn(k, |x, y| class[t.circ().unwrap().get(rep(x), rep(y))]);
    let sigma = t.sigma().unwrap();
    let qsigma = crate::group::EndoMap::raw((0..k).map(|x| class[sigma.apply(rep(x))]).collect());
    Ok(AlgebraObject::skew_truss(Arc::new(qg), circ, qsigma)?)
}

/// `T0 = {a : 0∘a = 0}` and `Tc = {a : 0∘a = a}` with the facts the
/// decomposition rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroConstantDecomposition {
    pub zero_symmetric: Vec<Element>,
    pub constant: Vec<Element>,
    pub zero_symmetric_normal: bool,
    pub constant_subgroup: bool,
    pub unique_factorization: bool,
    pub closed_under_operations: bool,
}

impl ZeroConstantDecomposition {
    pub fn all_hold(&self) -> bool {
        self.zero_symmetric_normal && self.constant_subgroup && self.unique_factorization && self.closed_under_operations
    }
}

pub fn zero_symmetric_constant_decomposition(
    obj: &AlgebraObject,
) -> Result<ZeroConstantDecomposition, SubstructureError> {
    match obj.kind() {
        Kind::SkewTruss | Kind::Ditruss => obj.require(obj.kind())?,
        other => {
            return Err(StructureError::WrongKind {
                expected: Kind::SkewTruss,
                found: other,
            }
            .into())
        }
    }
    let sigma = obj.sigma().unwrap();
    if !sigma.fixes_zero() {
        return Err(SubstructureError::SigmaDoesNotFixZero);
    }
    if obj.kind() == Kind::Ditruss {
        let flags = obj.sigma_flags().unwrap();
        if !flags.idempotent_endomorphism() {
            return Err(SubstructureError::HypothesisFailed("sigma-idempotent-endomorphism"));
        }
        if !crate::laws::is_associative(obj.circ().unwrap()).passed {
            return Err(SubstructureError::HypothesisFailed("circ-associative"));
        }
        if !crate::laws::is_left_distributive(obj.group(), obj.dot().unwrap()).passed {
            return Err(SubstructureError::HypothesisFailed("dot-left-distributive"));
        }
    }
    let g = obj.group();
    let n = g.order();
    let circ = obj.circ().unwrap();
    let t0: Vec<Element> = (0..n).filter(|&a| circ.get(0, a) == 0).collect();
    let tc: Vec<Element> = (0..n).filter(|&a| circ.get(0, a) == a).collect();
    let unique_factorization = (0..n).all(|x| {
        t0.iter()
            .flat_map(|&k| tc.iter().map(move |&i| (k, i)))
            .filter(|&(k, i)| g.add(k, i) == x)
            .count()
            == 1
    });
    let closed = |set: &[Element]| {
        set.iter().all(|&a| set.contains(&sigma.apply(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&circ.get(a, b))))
            && obj
                .dot()
                .is_none_or(|d| set.iter().all(|&a| set.iter().all(|&b| set.contains(&d.get(a, b)))))
    };
    Ok(ZeroConstantDecomposition {
        zero_symmetric_normal: is_normal_subgroup(g, &t0),
        constant_subgroup: is_subgroup(g, &tc),
        unique_factorization,
        closed_under_operations: closed(&t0) && closed(&tc),
        zero_symmetric: t0,
        constant: tc,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroSymmetry {
    /// `T0 = T`.
    pub zero_symmetric: bool,
    /// `σ(a)∘b = σ(a)` for all `a, b`.
    pub sigma_absorbs: bool,
}

impl ZeroSymmetry {
    pub fn equivalence_holds(&self) -> bool {
        self.zero_symmetric == self.sigma_absorbs
    }
}

pub fn is_zero_symmetric(t: &AlgebraObject) -> Result<ZeroSymmetry, SubstructureError> {
    t.require(Kind::SkewTruss)?;
    let sigma = t.sigma().unwrap();
    if !sigma.fixes_zero() {
        return Err(SubstructureError::SigmaDoesNotFixZero);
    }
    let n = t.group().order();
    let circ = t.circ().unwrap();
    Ok(ZeroSymmetry {
        zero_symmetric: (0..n).all(|a| circ.get(0, a) == 0),
        sigma_absorbs: (0..n).all(|a| (0..n).all(|b| circ.get(sigma.apply(a), b) == sigma.apply(a))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, enumerate_endomorphisms, is_idempotent_map, EndoMap};
    use crate::ops::*;

    fn skew_ring(g: &Arc<FiniteGroup>) -> AlgebraObject {
        let (p1, _) = make_projection_ops(g);
        AlgebraObject::skew_truss(g.clone(), p1, EndoMap::identity(g)).unwrap()
    }

    fn near_ring(g: &Arc<FiniteGroup>) -> AlgebraObject {
        let (_, p2) = make_projection_ops(g);
        AlgebraObject::skew_truss(g.clone(), p2, EndoMap::zero(g)).unwrap()
    }

    #[test]
    fn skew_ring_ideals_are_normal_subgroups() {
        for g in catalog::all() {
            let g = Arc::new(g);
            let t = skew_ring(&g);
            let got: Vec<_> = ideals(&t).unwrap().into_iter().map(|i| i.elements).collect();
            assert_eq!(got, normal_subgroups(&g).unwrap());
            assert_eq!(congruences(&t).unwrap().len(), got.len());
        }
    }

    #[test]
    fn trivial_truss_has_one_ideal() {
        let g = Arc::new(catalog::cyclic(1));
        let t = skew_ring(&g);
        assert_eq!(ideals(&t).unwrap().len(), 1);
        assert_eq!(congruences(&t).unwrap().len(), 1);
    }

    #[test]
    fn a3_in_skew_ring_on_s3() {
        // In the skew ring both conditions reduce to normality.
        let g = Arc::new(catalog::s3());
        let t = skew_ring(&g);
        let a3 = crate::group::closure(&g, &[3]);
        assert_eq!(a3.len(), 3);
        assert!(is_ideal(&t, &a3).unwrap().passed);
        assert_eq!(is_ideal(&t, &[0, 1]).unwrap().law, law_names::NORMAL_SUBGROUP);
    }

    #[test]
    fn lambda_condition_can_fail() {
        // ∘ = τπ₂ with τ(1) = 2: the subgroup {0, 1} is normal but not λ-stable.
        let g = Arc::new(catalog::klein_four());
        let tau = EndoMap::checked(&g, vec![0, 2, 2, 0]).unwrap();
        assert!(tau.is_endomorphism() && is_idempotent_map(&tau));
        let t = AlgebraObject::skew_truss(g.clone(), make_tau_pi2(&g, &tau), EndoMap::zero(&g)).unwrap();
        assert!(t.is_verified());
        let r = is_ideal(&t, &[0, 1]).unwrap();
        assert_eq!(r.law, law_names::LAMBDA_STABLE);
        assert_eq!(r.witness, Some(vec![1, 0]));
        assert!(is_ideal(&t, &[0, 2]).unwrap().passed);
    }

    #[test]
    fn quotients() {
        let g = Arc::new(catalog::cyclic(4));
        let t = near_ring(&g);
        let zero = Ideal { elements: vec![0] };
        let q = quotient(&t, &zero).unwrap();
        assert!(q.is_verified());
        assert!(crate::canonical::are_isomorphic(&q, &t).unwrap());
        let full = Ideal { elements: vec![0, 1, 2, 3] };
        assert_eq!(quotient(&t, &full).unwrap().group().order(), 1);
        let half = Ideal { elements: vec![0, 2] };
        let q = quotient(&t, &half).unwrap();
        assert_eq!(q.group().order(), 2);
        assert!(q.is_verified());
        assert_eq!(quotient(&t, &Ideal { elements: vec![0, 1] }), Err(SubstructureError::NotAnIdeal));
    }

    #[test]
    fn round_trip_between_ideals_and_congruences() {
        for g in catalog::up_to_order(6) {
            let g = Arc::new(g);
            let ends = enumerate_endomorphisms(&g);
            let idem: Vec<_> = ends.iter().filter(|e| is_idempotent_map(e)).collect();
            for s in &idem {
                for t in idem.iter().filter(|t| crate::group::compose_commute(s, t)) {
                    let obj = AlgebraObject::skew_truss(g.clone(), make_sum_op(&g, s, t), (*s).clone()).unwrap();
                    let is = ideals(&obj).unwrap();
                    let cs = congruences(&obj).unwrap();
                    assert_eq!(is.len(), cs.len());
                    let mut mapped: Vec<_> = is.iter().map(|i| congruence_from_ideal(&obj, i)).collect();
                    mapped.sort();
                    let mut sorted = cs.clone();
                    sorted.sort();
                    assert_eq!(mapped, sorted);
                    for c in &cs {
                        assert_eq!(congruence_from_ideal(&obj, &ideal_from_congruence(c)), *c);
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_of_sum_ditruss() {
        let g = Arc::new(catalog::d4());
        let idem: Vec<_> = enumerate_endomorphisms(&g).into_iter().filter(is_idempotent_map).collect();
        for s in &idem {
            for t in idem.iter().filter(|t| crate::group::compose_commute(s, t)) {
                let d = AlgebraObject::ditruss(g.clone(), s.clone(), make_sum_op(&g, s, t), make_tau_pi2(&g, t))
                    .unwrap();
                let dec = zero_symmetric_constant_decomposition(&d).unwrap();
                assert_eq!(dec.zero_symmetric, t.kernel());
                assert_eq!(dec.constant, t.image_set());
                assert!(dec.all_hold());
            }
        }
    }

    #[test]
    fn extreme_decompositions() {
        let g = Arc::new(catalog::q8());
        let dec = zero_symmetric_constant_decomposition(&near_ring(&g)).unwrap();
        assert_eq!(dec.zero_symmetric, vec![0]);
        assert_eq!(dec.constant.len(), 8);
        let dec = zero_symmetric_constant_decomposition(&skew_ring(&g)).unwrap();
        assert_eq!(dec.zero_symmetric.len(), 8);
        assert_eq!(dec.constant, vec![0]);
        assert!(is_zero_symmetric(&skew_ring(&g)).unwrap().zero_symmetric);
        let z = is_zero_symmetric(&near_ring(&g)).unwrap();
        assert!(!z.zero_symmetric && z.equivalence_holds());
    }

    #[test]
    fn sigma_must_fix_zero() {
        let g = Arc::new(catalog::cyclic(2));
        let s = EndoMap::raw(vec![1, 1]);
        let t = AlgebraObject::skew_truss(g.clone(), make_sigma_pi1(&g, &s), s).unwrap();
        assert_eq!(is_zero_symmetric(&t), Err(SubstructureError::SigmaDoesNotFixZero));
        assert_eq!(
            zero_symmetric_constant_decomposition(&t),
            Err(SubstructureError::SigmaDoesNotFixZero)
        );
    }

    mod props {
        use super::*;
        use crate::enumeration::{enumerate_skew_trusses, SearchOptions};
        use proptest::prelude::*;
        use std::sync::OnceLock;

        fn d4_trusses() -> &'static Vec<AlgebraObject> {
            static CELL: OnceLock<Vec<AlgebraObject>> = OnceLock::new();
            CELL.get_or_init(|| {
                let g = Arc::new(catalog::d4());
                // Sum-form trusses σπ₁ + τπ₂ for commuting idempotent pairs.
                let idem: Vec<_> = enumerate_endomorphisms(&g).into_iter().filter(is_idempotent_map).collect();
                let mut out = Vec::new();
                for s in &idem {
                    for t in idem.iter().filter(|t| crate::group::compose_commute(s, t)) {
                        out.push(AlgebraObject::skew_truss(g.clone(), make_sum_op(&g, s, t), s.clone()).unwrap());
                    }
                }
                let mut opts = SearchOptions::default().keep_all();
                opts.filter.idempotent_endomorphism_sigma = true;
                let z4 = Arc::new(catalog::cyclic(4));
                out.extend(enumerate_skew_trusses(&z4, &opts).unwrap().structures.unwrap());
                out
            })
        }

        proptest! {
            #[test]
            fn quotients_are_skew_trusses(i in 0usize..1000) {
                let all = d4_trusses();
                let t = &all[i % all.len()];
                let n = t.group().order();
                for ideal in ideals(t).unwrap() {
                    let q = quotient(t, &ideal).unwrap();
                    prop_assert!(q.is_verified());
                    prop_assert_eq!(q.group().order() * ideal.elements.len(), n);
                    // The kernel of T -> T/I is I again.
                    let c = congruence_from_ideal(t, &ideal);
                    prop_assert_eq!(c.block_of(0), ideal.elements.as_slice());
                }
            }

            #[test]
            fn ideal_check_matches_congruence_closure(mask in 1u32..256, i in 0usize..1000) {
                let all = d4_trusses();
                let t = &all[i % all.len()];
                if t.group().order() != 8 {
                    return Ok(());
                }
                let set: Vec<Element> = (0..8).filter(|&x| x == 0 || mask & (1 << x) != 0).collect();
                let is = is_ideal(t, &set).unwrap().passed;
                let by_congruence = congruences(t).unwrap().iter().any(|c| c.block_of(0) == set.as_slice());
                prop_assert_eq!(is, by_congruence);
            }
        }
    }
}
