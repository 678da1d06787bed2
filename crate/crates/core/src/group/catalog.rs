//! Built-in groups addressable by name: `Z1`..`Z8`, `V4`, `S3`, `D4`, `Q8`.

use super::FiniteGroup;

pub const NAMES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "D4", "Q8",
];

pub fn by_name(name: &str) -> Option<FiniteGroup> {
    match name {
        "V4" | "K4" | "Klein4" | "Z2xZ2" => Some(klein_four()),
        "S3" => Some(s3()),
        "D4" => Some(d4()),
        "Q8" => Some(q8()),
        _ => {
            let n: usize = name.strip_prefix('Z')?.parse().ok()?;
            (1..=8).contains(&n).then(|| cyclic(n))
        }
    }
}

/// Every catalog group, in [`NAMES`] order.
pub fn all() -> Vec<FiniteGroup> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

/// Catalog groups of order at most `max_order`.
pub fn up_to_order(max_order: usize) -> Vec<FiniteGroup> {
    all().into_iter().filter(|g| g.order() <= max_order).collect()
}

/// Returns the catalog name of `g` if its table matches a catalog entry.
pub fn catalog_name(g: &FiniteGroup) -> Option<&'static str> {
    NAMES
        .iter()
        .copied()
        .find(|n| g.name() == *n && by_name(n).is_some_and(|c| c.same_carrier(g)))
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::validate(&table, &format!("Z{n}")).unwrap()
}

/// Klein four group on coordinates `00, 01, 10, 11` (index = binary value).
pub fn klein_four() -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    FiniteGroup::validate(&table, "V4").unwrap()
}

/// Symmetric group on three letters: permutations in lexicographic order,
/// `(p + q)(x) = p(q(x))`.
pub fn s3() -> FiniteGroup {
    permutation_group("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Dihedral group of the square acting on its four vertices.
pub fn d4() -> FiniteGroup {
    permutation_group("D4", 4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

/// Quaternion group; element `2 * u + s` is `(-1)^s * u` for `u` in `1, i, j, k`.
pub fn q8() -> FiniteGroup {
    // Unit products: (sign_negative, unit) for unit indices 1,i,j,k = 0..4.
    fn unit_mul(x: usize, y: usize) -> (bool, usize) {
        match (x, y) {
            (0, y) => (false, y),
            (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (neg, unit) = unit_mul(a / 2, b / 2);
                    let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                    2 * unit + sign
                })
                .collect()
        })
        .collect();
    FiniteGroup::validate(&table, "Q8").unwrap()
}

/// Closes the generators under composition and indexes the permutations in
/// lexicographic order (the identity comes first).
fn permutation_group(name: &str, degree: usize, generators: &[Vec<usize>]) -> FiniteGroup {
    let identity: Vec<usize> = (0..degree).collect();
    let mut members = vec![identity];
    let mut frontier = members.clone();
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<usize> = (0..degree).map(|x| p[g[x]]).collect();
            if !members.contains(&q) {
                members.push(q.clone());
                frontier.push(q);
            }
        }
    }
    members.sort();
    let index = |p: &[usize]| members.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = members
        .iter()
        .map(|p| {
            members
                .iter()
                .map(|q| index(&(0..degree).map(|x| p[q[x]]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    FiniteGroup::validate(&table, name).unwrap()
}
