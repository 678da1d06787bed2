//! Reading and writing structures as JSON, including inline groups.

use trusslab::json::{parse_group, parse_structure, to_pretty};

fn main() {
    let text = r#"{
        "kind": "interchange",
        "group": {"name": "C3", "table": [[0,1,2],[1,2,0],[2,0,1]]},
        "circ": [[0,2,1],[1,0,2],[2,1,0]]
    }"#;
    let obj = parse_structure(text).unwrap();
    println!("parsed a {} on {}, verified: {}", obj.kind(), obj.group().name(), obj.is_verified());
    print!("{}", to_pretty(&obj));

    // Standalone groups may put the identity anywhere; it is moved to 0.
    let g = parse_group(r#"{"table": [[1,0],[0,1]]}"#).unwrap();
    println!("normalized table: {:?}", g.rows());

    for bad in [r#"{"kind":"skew-truss","group":"Z2","sigma":[0,0]}"#, "not json"] {
        println!("rejected: {}", parse_structure(bad).unwrap_err());
    }
}
