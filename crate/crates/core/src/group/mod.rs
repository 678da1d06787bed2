//! Finite groups stored as Cayley tables over `0..n`, with `0` as identity.
//!
//! The additive notation `+` is used throughout even when the group is not
//! abelian, so `a - b` means `a + (-b)`.

pub mod catalog;
mod endo;
mod subgroup;

pub use endo::{
    automorphisms, compose_commute, enumerate_endomorphisms, image_commuting, is_homomorphism,
    is_idempotent_map, EndoMap,
};
pub use subgroup::{
    center, closure, decomposition_from_idempotent, is_normal_subgroup, is_subgroup,
    normal_subgroups, subgroups, subgroups_with_cap, Decomposition, DecompositionKind,
    SUBGROUP_ORDER_CAP,
};

use thiserror::Error;

/// An element of a finite carrier, addressed by its index.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group table is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table is not a Latin square: value at ({row}, {col}) repeats in its row or column")]
    NotLatinSquare { row: usize, col: usize },
    #[error("element 0 is not a two-sided identity (fails at {element})")]
    NoIdentityAtZero { element: Element },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: Element, b: Element, c: Element },
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("map has {len} images, carrier has {order} elements")]
    MapLengthMismatch { len: usize, order: usize },
    #[error("map image {value} at {index} is outside 0..{order}")]
    MapOutOfRange { index: usize, value: usize, order: usize },
    #[error("map is not idempotent (fails at {element})")]
    NotIdempotent { element: Element },
    #[error("map is not a group endomorphism (fails at ({a}, {b}))")]
    NotEndomorphism { a: Element, b: Element },
    #[error("group of order {order} exceeds the subgroup search cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}

/// A finite group given by its addition table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<Element>,
    inverses: Vec<Element>,
}

impl FiniteGroup {
    /// Validates a table whose identity must already sit at index 0.
    pub fn validate(table: &[Vec<usize>], name: &str) -> Result<Self, GroupError> {
        let order = check_shape(table)?;
        let flat: Vec<Element> = table.iter().flatten().copied().collect();

        for row in 0..order {
            let mut seen_row = vec![false; order];
            for col in 0..order {
                let v = flat[row * order + col];
                if std::mem::replace(&mut seen_row[v], true) {
                    return Err(GroupError::NotLatinSquare { row, col });
                }
            }
        }
        for col in 0..order {
            let mut seen_col = vec![false; order];
            for row in 0..order {
                let v = flat[row * order + col];
                if std::mem::replace(&mut seen_col[v], true) {
                    return Err(GroupError::NotLatinSquare { row, col });
                }
            }
        }
        for a in 0..order {
            if flat[a] != a || flat[a * order] != a {
                return Err(GroupError::NoIdentityAtZero { element: a });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = flat[a * order + b];
                for c in 0..order {
                    let bc = flat[b * order + c];
                    if flat[ab * order + c] != flat[a * order + bc] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        // Latin square with a two-sided identity: every row contains 0 once.
        let inverses = (0..order)
            .map(|a| (0..order).find(|&b| flat[a * order + b] == 0).unwrap())
            .collect();
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            table: flat,
            inverses,
        })
    }

    /// Like [`FiniteGroup::validate`], but first moves the identity element
    /// to index 0 by swapping it with the element currently there.
    pub fn validate_normalized(table: &[Vec<usize>], name: &str) -> Result<Self, GroupError> {
        let order = check_shape(table)?;
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        if identity == 0 {
            return Self::validate(table, name);
        }
        let swap = |x: usize| match x {
            0 => identity,
            x if x == identity => 0,
            x => x,
        };
        let relabeled: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| swap(table[swap(a)][swap(b)])).collect())
            .collect();
        Self::validate(&relabeled, name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.inverses[a]
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.inverses[b])
    }

    /// `a + b + c`, left to right.
    #[inline]
    pub fn add3(&self, a: Element, b: Element, c: Element) -> Element {
        self.add(self.add(a, b), c)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.add(a, b) == self.add(b, a)))
    }

    /// Additive order of `a`.
    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Transports the group along the bijection `perm` (old index to new).
    /// `perm[0]` must be 0 so the identity stays in place.
    pub fn relabel(&self, perm: &[Element]) -> FiniteGroup {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let n = self.order;
        let mut table = vec![0; n * n];
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[perm[a]] = perm[self.neg(a)];
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.add(a, b)];
            }
        }
        FiniteGroup {
            name: self.name.clone(),
            order: n,
            table,
            inverses,
        }
    }

    /// Same order and same addition table; names are ignored.
    pub fn same_carrier(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }
}

fn check_shape(table: &[Vec<usize>]) -> Result<usize, GroupError> {
    let order = table.len();
    if order == 0 {
        return Err(GroupError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != order {
            return Err(GroupError::NotSquare {
                row,
                len: r.len(),
                expected: order,
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= order {
                return Err(GroupError::EntryOutOfRange {
                    row,
                    col,
                    value,
                    order,
                });
            }
        }
    }
    Ok(order)
}
