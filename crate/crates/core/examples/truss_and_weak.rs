//! Moving between skew trusses and weak trusses when σ is an idempotent
//! endomorphism, and where the way back needs one more hypothesis.

use std::sync::Arc;

use trusslab::enumeration::{enumerate_skew_trusses, enumerate_weak_trusses, ClassFilter, SearchOptions};
use trusslab::group::catalog;
use trusslab::transforms::{truss_to_weak, weak_to_truss, TransformError};

fn main() {
    let filter = ClassFilter {
        idempotent_endomorphism_sigma: true,
        ..Default::default()
    };
    let opts = SearchOptions::default().with_filter(filter).keep_all();
    for g in [catalog::cyclic(4), catalog::klein_four()].map(Arc::new) {
        let trusses = enumerate_skew_trusses(&g, &opts).unwrap().structures.unwrap();
        let weak = enumerate_weak_trusses(&g, &opts).unwrap().structures.unwrap();
        let round_trips = trusses
            .iter()
            .filter(|t| weak_to_truss(&truss_to_weak(t).unwrap().object).unwrap().object == **t)
            .count();
        let mut refused = 0;
        for w in &weak {
            if let Err(TransformError::HypothesisFailed { flag }) = weak_to_truss(w) {
                assert_eq!(flag, "sigma-commutes-with-dot");
                refused += 1;
            }
        }
        println!(
            "{}: {} skew trusses (all round trip: {}), {} weak trusses, {} without a truss",
            g.name(),
            trusses.len(),
            round_trips == trusses.len(),
            weak.len(),
            refused
        );
    }
}
