//! Brute force over every table and every self-map, tested against the
//! defining axioms only. Feasible for carriers of order at most 3, where it
//! certifies the parametrized searches.

use crate::group::{image_commuting, is_idempotent_map, EndoMap, FiniteGroup};
use crate::laws;
use crate::ops::{depends_only_on_second, BinOpTable};
use crate::structures::Kind;

use super::{ClassFilter, EnumerationError};

pub const ORACLE_ORDER_CAP: usize = 3;

fn all_tables(n: usize) -> impl Iterator<Item = BinOpTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut entries = vec![0; cells];
        for e in entries.iter_mut() {
            *e = code % n;
            code /= n;
        }
        BinOpTable::from_flat(n, entries)
    })
}

fn all_maps(n: usize) -> Vec<EndoMap> {
    (0..n.pow(n as u32))
        .map(|mut code| {
            EndoMap::raw(
                (0..n)
                    .map(|_| {
                        let v = code % n;
                        code /= n;
                        v
                    })
                    .collect(),
            )
        })
        .collect()
}

fn key(sigma: Option<&EndoMap>, tables: &[&BinOpTable]) -> Vec<u8> {
    let mut k: Vec<u8> = sigma.map(|s| s.images().iter().map(|&v| v as u8).collect()).unwrap_or_default();
    for t in tables {
        k.extend(t.entries().iter().map(|&v| v as u8));
    }
    k
}

/// Serializations of every structure of `kind` on `g`, sorted.
///
/// `filter` has the same meaning as for the parametrized searches.
pub fn raw_structures(g: &FiniteGroup, kind: Kind, filter: ClassFilter) -> Result<Vec<Vec<u8>>, EnumerationError> {
    let n = g.order();
    if n > ORACLE_ORDER_CAP {
        return Err(EnumerationError::OracleTooLarge {
            order: n,
            cap: ORACLE_ORDER_CAP,
        });
    }
    let maps: Vec<EndoMap> = all_maps(n)
        .into_iter()
        .map(|m| EndoMap::checked(g, m.into_images()).expect("maps stay in range"))
        .filter(|m| !filter.idempotent_endomorphism_sigma || (m.is_endomorphism() && is_idempotent_map(m)))
        .collect();
    let mut out = Vec::new();
    match kind {
        Kind::SkewTruss => {
            for circ in all_tables(n).filter(|c| laws::is_associative(c).passed) {
                for s in &maps {
                    if laws::is_left_skew_sigma_distributive(g, &circ, s).passed {
                        out.push(key(Some(s), &[&circ]));
                    }
                }
            }
        }
        Kind::WeakTruss => {
            for dot in all_tables(n).filter(|d| laws::is_left_distributive(g, d).passed) {
                for s in &maps {
                    if laws::is_left_weak_sigma_associative(g, &dot, s).passed {
                        out.push(key(Some(s), &[&dot]));
                    }
                }
            }
        }
        Kind::InterchangeNr => {
            for circ in all_tables(n) {
                let keep = laws::satisfies_interchange(g, &circ).passed
                    && (!filter.associative_only || laws::is_associative(&circ).passed);
                if keep {
                    out.push(key(None, &[&circ]));
                }
            }
        }
        Kind::Ditruss => {
            // Associative ∘ whose derived · = −σ(a) + a∘b is τπ₂ with σ, τ
            // idempotent endomorphisms.
            for circ in all_tables(n).filter(|c| laws::is_associative(c).passed) {
                for s in &maps {
                    let dot = BinOpTable::from_fn(n, |a, b| g.add(g.neg(s.apply(a)), circ.get(a, b)));
                    if !depends_only_on_second(&dot) {
                        continue;
                    }
                    let tau = EndoMap::checked(g, dot.row_map(0).into_images()).unwrap();
                    let ok = s.is_endomorphism()
                        && is_idempotent_map(s)
                        && tau.is_endomorphism()
                        && is_idempotent_map(&tau)
                        && (!filter.image_commuting || image_commuting(g, s, &tau));
                    if ok {
                        out.push(key(Some(s), &[&circ, &dot]));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
