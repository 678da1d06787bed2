//! Counting structures of every kind on one group, up to equality and up
//! to isomorphism.
//!
//! Run with `cargo run --release --example classify -- Z3`.

use std::sync::Arc;

use trusslab::enumeration::{compare_with_oracle, enumerate, oracle::ORACLE_ORDER_CAP, SearchOptions};
use trusslab::group::catalog;
use trusslab::structures::Kind;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Z3".into());
    let g = Arc::new(catalog::by_name(&name).expect("catalog group name"));
    for kind in Kind::ALL {
        match enumerate(&g, kind, &SearchOptions::default()) {
            Ok(r) => {
                let oracle = if g.order() <= ORACLE_ORDER_CAP {
                    let c = compare_with_oracle(&g, &r).unwrap();
                    format!(", brute force agrees: {}", c.agrees)
                } else {
                    String::new()
                };
                println!(
                    "{kind:<15} {:>7} total {:>6} classes  ({:?}){oracle}",
                    r.total_count, r.iso_class_count, r.search_stats.elapsed
                );
            }
            Err(e) => println!("{kind:<15} refused: {e}"),
        }
    }
}
