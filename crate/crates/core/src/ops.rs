//! Binary operations on a finite carrier, and the pointwise group they form
//! over a group `(G, +)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Element, EndoMap, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("carrier mismatch: {left} vs {right} elements")]
    CarrierMismatch { left: usize, right: usize },
    #[error("operation table is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
}

/// An `n × n` operation table, `a ∗ b = entries[a * n + b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct BinOpTable {
    order: usize,
    entries: Vec<Element>,
}

impl BinOpTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, OpError> {
        let order = rows.len();
        if order == 0 {
            return Err(OpError::Empty);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(OpError::NotSquare {
                    row,
                    len: r.len(),
                    expected: order,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(OpError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                entries.push(value);
            }
        }
        Ok(BinOpTable { order, entries })
    }

    /// Builds from a flat row-major vector. Panics on a bad length or entry.
    pub fn from_flat(order: usize, entries: Vec<Element>) -> Self {
        assert_eq!(entries.len(), order * order);
        assert!(entries.iter().all(|&v| v < order));
        BinOpTable { order, entries }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(Element, Element) -> Element) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                entries.push(f(a, b));
            }
        }
        Self::from_flat(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.order + b]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.entries.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Left multiplication by `a` as a self-map `b ↦ a ∗ b`.
    pub fn row_map(&self, a: Element) -> EndoMap {
        EndoMap::raw(self.entries[a * self.order..(a + 1) * self.order].to_vec())
    }

    /// Right multiplication by `b` as a self-map `a ↦ a ∗ b`.
    pub fn column_map(&self, b: Element) -> EndoMap {
        EndoMap::raw((0..self.order).map(|a| self.get(a, b)).collect())
    }

    fn check_carrier(&self, other: &BinOpTable) -> Result<(), OpError> {
        if self.order != other.order {
            return Err(OpError::CarrierMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<usize>>> for BinOpTable {
    type Error = OpError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, OpError> {
        BinOpTable::from_rows(&rows)
    }
}

impl From<BinOpTable> for Vec<Vec<usize>> {
    fn from(t: BinOpTable) -> Self {
        t.rows()
    }
}

/// `(π₁, π₂)`: `a π₁ b = a`, `a π₂ b = b`.
pub fn make_projection_ops(g: &FiniteGroup) -> (BinOpTable, BinOpTable) {
    let n = g.order();
    (BinOpTable::from_fn(n, |a, _| a), BinOpTable::from_fn(n, |_, b| b))
}

/// `a (σπ₁) b = σ(a)`.
pub fn make_sigma_pi1(g: &FiniteGroup, sigma: &EndoMap) -> BinOpTable {
    assert_eq!(sigma.len(), g.order());
    BinOpTable::from_fn(g.order(), |a, _| sigma.apply(a))
}

/// `a (τπ₂) b = τ(b)`.
pub fn make_tau_pi2(g: &FiniteGroup, tau: &EndoMap) -> BinOpTable {
    assert_eq!(tau.len(), g.order());
    BinOpTable::from_fn(g.order(), |_, b| tau.apply(b))
}

/// The constant operation `a ∘₀ b = 0`.
pub fn make_zero_op(g: &FiniteGroup) -> BinOpTable {
    BinOpTable::from_fn(g.order(), |_, _| 0)
}

/// The group addition itself as an operation table.
pub fn make_group_op(g: &FiniteGroup) -> BinOpTable {
    BinOpTable::from_fn(g.order(), |a, b| g.add(a, b))
}

/// `σπ₁ + τπ₂`, i.e. `a ∘ b = σ(a) + τ(b)`.
pub fn make_sum_op(g: &FiniteGroup, sigma: &EndoMap, tau: &EndoMap) -> BinOpTable {
    BinOpTable::from_fn(g.order(), |a, b| g.add(sigma.apply(a), tau.apply(b)))
}

fn check_group(g: &FiniteGroup, f: &BinOpTable) -> Result<(), OpError> {
    if g.order() != f.order {
        return Err(OpError::CarrierMismatch {
            left: g.order(),
            right: f.order,
        });
    }
    Ok(())
}

/// Pointwise sum `a (f + h) b = f(a, b) + h(a, b)`.
pub fn op_add(g: &FiniteGroup, f: &BinOpTable, h: &BinOpTable) -> Result<BinOpTable, OpError> {
    check_group(g, f)?;
    f.check_carrier(h)?;
    let entries = f
        .entries
        .iter()
        .zip(&h.entries)
        .map(|(&x, &y)| g.add(x, y))
        .collect();
    Ok(BinOpTable {
        order: f.order,
        entries,
    })
}

/// Pointwise inverse `a (-f) b = -(f(a, b))`.
pub fn op_neg(g: &FiniteGroup, f: &BinOpTable) -> Result<BinOpTable, OpError> {
    check_group(g, f)?;
    Ok(BinOpTable {
        order: f.order,
        entries: f.entries.iter().map(|&x| g.neg(x)).collect(),
    })
}

/// `f - h = f + (-h)`.
pub fn op_sub(g: &FiniteGroup, f: &BinOpTable, h: &BinOpTable) -> Result<BinOpTable, OpError> {
    op_add(g, f, &op_neg(g, h)?)
}

/// `a f^op b = b f a`.
pub fn op_opposite(f: &BinOpTable) -> BinOpTable {
    BinOpTable::from_fn(f.order, |a, b| f.get(b, a))
}

/// The map `σ` with `f = σπ₁`, if every row of `f` is constant.
pub fn first_factor_map(f: &BinOpTable) -> Option<EndoMap> {
    let n = f.order;
    (0..n)
        .all(|a| (0..n).all(|b| f.get(a, b) == f.get(a, 0)))
        .then(|| EndoMap::raw((0..n).map(|a| f.get(a, 0)).collect()))
}

/// The map `τ` with `f = τπ₂`, if every column of `f` is constant.
pub fn second_factor_map(f: &BinOpTable) -> Option<EndoMap> {
    let n = f.order;
    (0..n)
        .all(|b| (0..n).all(|a| f.get(a, b) == f.get(0, b)))
        .then(|| EndoMap::raw((0..n).map(|b| f.get(0, b)).collect()))
}

pub fn depends_only_on_first(f: &BinOpTable) -> bool {
    first_factor_map(f).is_some()
}

pub fn depends_only_on_second(f: &BinOpTable) -> bool {
    second_factor_map(f).is_some()
}
