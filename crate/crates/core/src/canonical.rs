//! Canonical forms under the automorphism group of the carrier.
//!
//! Two structures on the same group are isomorphic exactly when some
//! automorphism of `(G, +)` carries one onto the other, so the least
//! serialization over the `Aut(G)`-orbit is a complete invariant.

use thiserror::Error;

use crate::group::{automorphisms, EndoMap, FiniteGroup};
use crate::ops::BinOpTable;
use crate::structures::{AlgebraObject, Kind, StructureError};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("objects live on different groups")]
    GroupMismatch,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Automorphisms of one group, with their inverses, ready to relabel
/// flat serializations.
#[derive(Debug, Clone)]
pub struct Canonicalizer {
    order: usize,
    auts: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Canonicalizer {
    pub fn new(g: &FiniteGroup) -> Self {
        let auts = automorphisms(g)
            .into_iter()
            .map(|phi| {
                let fwd = phi.into_images();
                let mut inv = vec![0; fwd.len()];
                for (a, &b) in fwd.iter().enumerate() {
                    inv[b] = a;
                }
                (fwd, inv)
            })
            .collect();
        Canonicalizer {
            order: g.order(),
            auts,
        }
    }

    pub fn automorphism_count(&self) -> usize {
        self.auts.len()
    }

    /// Least relabeling of a serialization made of whole unary maps
    /// (`unary` of them, length `n` each) followed by whole `n × n` tables.
    pub fn canonical_key(&self, key: &[u8], unary: usize) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        let mut buf = vec![0u8; key.len()];
        for (fwd, inv) in &self.auts {
            self.transport_into(key, unary, fwd, inv, &mut buf);
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.unwrap_or_else(|| key.to_vec())
    }

    fn transport_into(&self, key: &[u8], unary: usize, fwd: &[usize], inv: &[usize], out: &mut [u8]) {
        let n = self.order;
        let maps_len = unary * n;
        // φ·f: x ↦ φ(f(φ⁻¹ x)), and (x, y) ↦ φ(φ⁻¹ x ∗ φ⁻¹ y).
        for m in 0..unary {
            for x in 0..n {
                out[m * n + x] = fwd[key[m * n + inv[x]] as usize] as u8;
            }
        }
        let tables = (key.len() - maps_len) / (n * n);
        for t in 0..tables {
            let base = maps_len + t * n * n;
            for x in 0..n {
                for y in 0..n {
                    out[base + x * n + y] = fwd[key[base + inv[x] * n + inv[y]] as usize] as u8;
                }
            }
        }
    }
}

pub(crate) fn serialize(obj: &AlgebraObject) -> (Vec<u8>, usize) {
    let mut key = Vec::new();
    let mut unary = 0;
    if let Some(s) = obj.sigma() {
        key.extend(s.images().iter().map(|&v| v as u8));
        unary = 1;
    }
    for t in [obj.circ(), obj.dot()].into_iter().flatten() {
        key.extend(t.entries().iter().map(|&v| v as u8));
    }
    (key, unary)
}

pub(crate) fn deserialize(template: &AlgebraObject, key: &[u8]) -> Result<AlgebraObject, StructureError> {
    object_from_key(template.kind(), template.group_arc().clone(), key)
}

/// Rebuilds an object of `kind` from its flat serialization.
pub(crate) fn object_from_key(
    kind: Kind,
    group: Arc<FiniteGroup>,
    key: &[u8],
) -> Result<AlgebraObject, StructureError> {
    let n = group.order();
    let mut rest: Vec<usize> = key.iter().map(|&v| v as usize).collect();
    let sigma = (kind != Kind::InterchangeNr).then(|| EndoMap::raw(rest.drain(..n).collect()));
    let mut take_table =
        |present: bool| present.then(|| BinOpTable::from_flat(n, rest.drain(..n * n).collect()));
    let circ = take_table(kind != Kind::WeakTruss);
    let dot = take_table(matches!(kind, Kind::Ditruss | Kind::WeakTruss));
    AlgebraObject::new(kind, group, sigma, circ, dot)
}

/// Relabels every component of `obj` along the automorphism `phi`.
pub fn transport(obj: &AlgebraObject, phi: &EndoMap) -> Result<AlgebraObject, StructureError> {
    let fwd = phi.images().to_vec();
    let mut inv = vec![0; fwd.len()];
    for (a, &b) in fwd.iter().enumerate() {
        inv[b] = a;
    }
    let c = Canonicalizer {
        order: obj.group().order(),
        auts: vec![],
    };
    let (key, unary) = serialize(obj);
    let mut out = vec![0u8; key.len()];
    c.transport_into(&key, unary, &fwd, &inv, &mut out);
    deserialize(obj, &out)
}

/// The lexicographically least relabeling of `obj` (σ images, then `∘`
/// row-major, then `·` row-major) over `Aut(G)`.
pub fn canonical_form(obj: &AlgebraObject) -> Result<AlgebraObject, StructureError> {
    canonical_form_with(&Canonicalizer::new(obj.group()), obj)
}

pub fn canonical_form_with(
    canon: &Canonicalizer,
    obj: &AlgebraObject,
) -> Result<AlgebraObject, StructureError> {
    let (key, unary) = serialize(obj);
    deserialize(obj, &canon.canonical_key(&key, unary))
}

pub fn are_isomorphic(a: &AlgebraObject, b: &AlgebraObject) -> Result<bool, CanonError> {
    if !a.group().same_carrier(b.group()) {
        return Err(CanonError::GroupMismatch);
    }
    if a.kind() != b.kind() {
        return Ok(false);
    }
    let canon = Canonicalizer::new(a.group());
    let (ka, unary) = serialize(a);
    let (kb, _) = serialize(b);
    Ok(canon.canonical_key(&ka, unary) == canon.canonical_key(&kb, unary))
}
