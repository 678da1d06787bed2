//! Exhaustive classification of structures on a fixed finite group.
//!
//! Skew trusses are searched as `a∘b = σ(a) + λ_a(b)` with every `λ_a` a
//! group endomorphism and `σ` an idempotent map; weak trusses as tables
//! whose rows are endomorphisms. Interchange near-rings and constant-λ
//! ditrusses come from pairs of endomorphisms. [`oracle`] brute-forces the
//! raw axioms on carriers of order at most 3 to certify these reductions.

pub mod oracle;
mod search;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canonical::{object_from_key, Canonicalizer};
use crate::group::{compose_commute, enumerate_endomorphisms, image_commuting, is_idempotent_map, EndoMap, FiniteGroup};
use crate::structures::{AlgebraObject, Kind, StructureError};

use search::RowSearch;

/// Orders searched without further checks.
pub const DEFAULT_CAP: usize = 4;
/// Orders above [`DEFAULT_CAP`] are searched up to this bound when the
/// search space estimate stays under [`SearchOptions::guard`].
pub const GUARDED_CAP: usize = 6;
pub const DEFAULT_GUARD: f64 = 2.0e9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerationError {
    #[error("carrier of order {order} is too large for this search (cap {cap}, estimate {estimate:.3e})")]
    CarrierTooLarge { order: usize, cap: usize, estimate: f64 },
    #[error("the brute-force oracle only runs on carriers of order at most {cap}, got {order}")]
    OracleTooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Restrictions on the class being enumerated; each applies to the kinds
/// it names.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassFilter {
    /// Skew and weak trusses: keep only σ an idempotent endomorphism.
    pub idempotent_endomorphism_sigma: bool,
    /// Interchange near-rings: keep only associative ones.
    pub associative_only: bool,
    /// Constant-λ ditrusses: keep only image-commuting `σ, λ_0`.
    pub image_commuting: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub cap: usize,
    pub guarded_cap: usize,
    pub guard: f64,
    pub filter: ClassFilter,
    /// Also return every structure found, not only representatives.
    pub keep_all: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_CAP,
            guarded_cap: GUARDED_CAP,
            guard: DEFAULT_GUARD,
            filter: ClassFilter::default(),
            keep_all: false,
        }
    }
}

impl SearchOptions {
    pub fn with_filter(mut self, filter: ClassFilter) -> Self {
        self.filter = filter;
        self
    }

    pub fn keep_all(mut self) -> Self {
        self.keep_all = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchStats {
    pub candidates_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub group: String,
    pub kind: Kind,
    pub filter: ClassFilter,
    pub total_count: usize,
    pub iso_class_count: usize,
    /// Structures with `σ(0) = 0`, for kinds that carry a σ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_fixes_zero_count: Option<usize>,
    pub representatives: Vec<AlgebraObject>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structures: Option<Vec<AlgebraObject>>,
    pub search_stats: SearchStats,
    #[serde(skip)]
    keys: Vec<Vec<u8>>,
}

impl ClassificationResult {
    /// Flat serializations of every structure found, sorted.
    pub fn keys(&self) -> &[Vec<u8>] {
        &self.keys
    }

    /// Every structure found, rebuilding them if they were not kept.
    pub fn all_structures(&self, group: &Arc<FiniteGroup>) -> Result<Vec<AlgebraObject>, StructureError> {
        match &self.structures {
            Some(s) => Ok(s.clone()),
            None => self.keys.iter().map(|k| object_from_key(self.kind, group.clone(), k)).collect(),
        }
    }
}

fn unary_count(kind: Kind) -> usize {
    (kind != Kind::InterchangeNr) as usize
}

fn assemble(
    group: &Arc<FiniteGroup>,
    kind: Kind,
    filter: ClassFilter,
    mut keys: Vec<Vec<u8>>,
    candidates_examined: u64,
    keep_all: bool,
    started: Instant,
) -> Result<ClassificationResult, EnumerationError> {
    keys.par_sort_unstable();
    keys.dedup();
    let canon = Canonicalizer::new(group);
    let unary = unary_count(kind);
    let classes: BTreeSet<Vec<u8>> = keys.par_iter().map(|k| canon.canonical_key(k, unary)).collect();
    let build = |k: &Vec<u8>| -> Result<AlgebraObject, EnumerationError> {
        let obj = object_from_key(kind, group.clone(), k)?;
        // Every emitted object is re-checked against the raw axioms.
        if !obj.is_verified() {
            return Err(StructureError::NotVerified(kind).into());
        }
        Ok(obj)
    };
    let representatives = classes.iter().map(build).collect::<Result<Vec<_>, _>>()?;
    let structures = if keep_all {
        Some(keys.par_iter().map(build).collect::<Result<Vec<_>, _>>()?)
    } else {
        None
    };
    let sigma_fixes_zero_count = (unary == 1).then(|| keys.iter().filter(|k| k[0] == 0).count());
    Ok(ClassificationResult {
        group: group.name().to_string(),
        kind,
        filter,
        total_count: keys.len(),
        iso_class_count: classes.len(),
        sigma_fixes_zero_count,
        representatives,
        structures,
        search_stats: SearchStats {
            candidates_examined,
            elapsed: started.elapsed(),
        },
        keys,
    })
}

fn flat_add(g: &FiniteGroup) -> Vec<u8> {
    let n = g.order();
    (0..n * n).map(|i| g.add(i / n, i % n) as u8).collect()
}

fn all_self_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = code % n;
                code /= n;
                v
            })
            .collect()
    })
}

/// σ candidates for the row search. For skew trusses σ must be idempotent
/// once `σ(0) = 0` (then `σ(σ(a)) = a∘σ(0) = σ(a)`); maps moving 0 are all
/// kept, since they need not be idempotent.
fn sigma_candidates(g: &FiniteGroup, filter: ClassFilter, ends: &[EndoMap], prune: bool) -> Vec<Vec<usize>> {
    if filter.idempotent_endomorphism_sigma {
        return ends.iter().filter(|e| is_idempotent_map(e)).map(|e| e.images().to_vec()).collect();
    }
    all_self_maps(g.order())
        .filter(|m| !prune || m[0] != 0 || m.iter().all(|&y| m[y] == y))
        .collect()
}

fn guard(
    g: &FiniteGroup,
    opts: &SearchOptions,
    sigma_count: usize,
    end_count: usize,
) -> Result<(), EnumerationError> {
    let n = g.order();
    let estimate = sigma_count as f64 * (end_count as f64).powi(n as i32);
    if n <= opts.cap || (n <= opts.guarded_cap && estimate <= opts.guard) {
        return Ok(());
    }
    Err(EnumerationError::CarrierTooLarge {
        order: n,
        cap: if n <= opts.guarded_cap { opts.guarded_cap } else { opts.cap },
        estimate,
    })
}

/// Every skew truss `(G, +, ∘, σ)` on `g`.
pub fn enumerate_skew_trusses(
    group: &Arc<FiniteGroup>,
    opts: &SearchOptions,
) -> Result<ClassificationResult, EnumerationError> {
    run_row_search(group, Kind::SkewTruss, opts)
}

/// Every weak truss `(W, +, ·, σ)` on `g`.
pub fn enumerate_weak_trusses(
    group: &Arc<FiniteGroup>,
    opts: &SearchOptions,
) -> Result<ClassificationResult, EnumerationError> {
    run_row_search(group, Kind::WeakTruss, opts)
}

fn run_row_search(
    group: &Arc<FiniteGroup>,
    kind: Kind,
    opts: &SearchOptions,
) -> Result<ClassificationResult, EnumerationError> {
    let started = Instant::now();
    let g = &**group;
    let n = g.order();
    let ends = enumerate_endomorphisms(g);
    let sigmas = sigma_candidates(g, opts.filter, &ends, kind == Kind::SkewTruss);
    guard(g, opts, sigmas.len(), ends.len())?;
    let add = flat_add(g);
    let end_rows: Vec<Vec<u8>> = ends.iter().map(|e| e.images().iter().map(|&v| v as u8).collect()).collect();
    let outcomes: Vec<(Vec<Vec<u8>>, u64)> = sigmas
        .par_iter()
        .map(|sigma| {
            let shift: Vec<u8> = sigma.iter().map(|&v| v as u8).collect();
            let candidates: Vec<Vec<Vec<u8>>> = match kind {
                Kind::SkewTruss => (0..n)
                    .map(|a| {
                        end_rows
                            .iter()
                            .map(|row| row.iter().map(|&v| add[sigma[a] * n + v as usize]).collect())
                            .collect()
                    })
                    .collect(),
                _ => vec![end_rows.clone(); n],
            };
            let search = RowSearch {
                n,
                candidates,
                pivot_shift: (kind == Kind::WeakTruss).then_some(shift.as_slice()),
                add: &add,
            };
            let out = search.run();
            let keys = out
                .tables
                .into_iter()
                .map(|t| {
                    let mut k = shift.clone();
                    k.extend(t);
                    k
                })
                .collect();
            (keys, out.candidates_examined)
        })
        .collect();
    let examined = outcomes.iter().map(|o| o.1).sum();
    let keys = outcomes.into_iter().flat_map(|o| o.0).collect();
    assemble(group, kind, opts.filter, keys, examined, opts.keep_all, started)
}

/// Interchange near-rings `επ₁ + ηπ₂` for image-commuting endomorphisms;
/// with `associative_only`, for commuting idempotent ones.
pub fn enumerate_interchange(
    group: &Arc<FiniteGroup>,
    associative_only: bool,
    keep_all: bool,
) -> Result<ClassificationResult, EnumerationError> {
    let started = Instant::now();
    let g = &**group;
    let n = g.order();
    let ends = enumerate_endomorphisms(g);
    let mut examined = 0u64;
    let mut keys = Vec::new();
    for e in &ends {
        for h in &ends {
            examined += 1;
            let mut ok = image_commuting(g, e, h);
            if associative_only {
                ok &= is_idempotent_map(e) && is_idempotent_map(h) && compose_commute(e, h);
            }
            if ok {
                keys.push((0..n * n).map(|i| g.add(e.apply(i / n), h.apply(i % n)) as u8).collect());
            }
        }
    }
    let filter = ClassFilter {
        associative_only,
        ..ClassFilter::default()
    };
    assemble(group, Kind::InterchangeNr, filter, keys, examined, keep_all, started)
}

/// Ditrusses `(G, +, σ, σπ₁ + τπ₂, τπ₂)` for commuting idempotent
/// endomorphisms `σ, τ`; with `image_commuting`, only image-commuting pairs.
pub fn enumerate_constant_lambda_ditrusses(
    group: &Arc<FiniteGroup>,
    image_commuting_only: bool,
    keep_all: bool,
) -> Result<ClassificationResult, EnumerationError> {
    let started = Instant::now();
    let g = &**group;
    let n = g.order();
    let idem: Vec<EndoMap> = enumerate_endomorphisms(g).into_iter().filter(is_idempotent_map).collect();
    let mut examined = 0u64;
    let mut keys = Vec::new();
    for s in &idem {
        for t in &idem {
            examined += 1;
            if !compose_commute(s, t) || (image_commuting_only && !image_commuting(g, s, t)) {
                continue;
            }
            let mut k: Vec<u8> = s.images().iter().map(|&v| v as u8).collect();
            k.extend((0..n * n).map(|i| g.add(s.apply(i / n), t.apply(i % n)) as u8));
            k.extend((0..n * n).map(|i| t.apply(i % n) as u8));
            keys.push(k);
        }
    }
    let filter = ClassFilter {
        image_commuting: image_commuting_only,
        ..ClassFilter::default()
    };
    assemble(group, Kind::Ditruss, filter, keys, examined, keep_all, started)
}

/// Dispatches on `kind`, reading the filter for the kinds that take one.
pub fn enumerate(
    group: &Arc<FiniteGroup>,
    kind: Kind,
    opts: &SearchOptions,
) -> Result<ClassificationResult, EnumerationError> {
    match kind {
        Kind::SkewTruss => enumerate_skew_trusses(group, opts),
        Kind::WeakTruss => enumerate_weak_trusses(group, opts),
        Kind::InterchangeNr => enumerate_interchange(group, opts.filter.associative_only, opts.keep_all),
        Kind::Ditruss => enumerate_constant_lambda_ditrusses(group, opts.filter.image_commuting, opts.keep_all),
    }
}

/// Counts from the brute-force oracle, in the same shape as a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub oracle_total: usize,
    pub oracle_iso_class_count: usize,
    pub agrees: bool,
}

pub fn compare_with_oracle(
    group: &Arc<FiniteGroup>,
    result: &ClassificationResult,
) -> Result<OracleComparison, EnumerationError> {
    let raw = oracle::raw_structures(group, result.kind, result.filter)?;
    let canon = Canonicalizer::new(group);
    let unary = unary_count(result.kind);
    let classes: BTreeSet<Vec<u8>> = raw.iter().map(|k| canon.canonical_key(k, unary)).collect();
    Ok(OracleComparison {
        oracle_total: raw.len(),
        oracle_iso_class_count: classes.len(),
        agrees: raw == result.keys,
    })
}

/// Builds the global worker pool from `TRUSSLAB_THREADS` when it is set to a
/// positive integer. Later calls, or calls after the pool exists, do nothing.
pub fn configure_threads_from_env() {
    if let Some(threads) = std::env::var("TRUSSLAB_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if threads > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
        }
    }
}
