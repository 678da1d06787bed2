use serde::{Deserialize, Serialize};

use super::{is_idempotent_map, Element, EndoMap, FiniteGroup, GroupError};

/// Default cap for exhaustive subgroup enumeration.
pub const SUBGROUP_ORDER_CAP: usize = 12;

/// Subgroup generated by `seed`, sorted.
pub fn closure(g: &FiniteGroup, seed: &[Element]) -> Vec<Element> {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elems = vec![0];
    for &s in seed {
        if !member[s] {
            member[s] = true;
            elems.push(s);
        }
    }
    // In a finite group, closure under + already gives a subgroup.
    let mut i = 0;
    while i < elems.len() {
        let a = elems[i];
        let mut j = 0;
        while j < elems.len() {
            for c in [g.add(a, elems[j]), g.add(elems[j], a)] {
                if !member[c] {
                    member[c] = true;
                    elems.push(c);
                }
            }
            j += 1;
        }
        i += 1;
    }
    elems.sort_unstable();
    elems
}

pub fn is_subgroup(g: &FiniteGroup, set: &[Element]) -> bool {
    let mut member = vec![false; g.order()];
    for &a in set {
        member[a] = true;
    }
    member[0]
        && set
            .iter()
            .all(|&a| member[g.neg(a)] && set.iter().all(|&b| member[g.add(a, b)]))
}

pub fn is_normal_subgroup(g: &FiniteGroup, set: &[Element]) -> bool {
    let mut member = vec![false; g.order()];
    for &a in set {
        member[a] = true;
    }
    is_subgroup(g, set)
        && g.elements()
            .all(|x| set.iter().all(|&h| member[g.add3(x, h, g.neg(x))]))
}

pub fn subgroups(g: &FiniteGroup) -> Result<Vec<Vec<Element>>, GroupError> {
    subgroups_with_cap(g, SUBGROUP_ORDER_CAP)
}

/// All subgroups, obtained by repeatedly adjoining one element to a known
/// subgroup and closing. Sorted by size, then elementwise.
pub fn subgroups_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<Vec<Element>>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::TooLarge {
            order: g.order(),
            cap,
        });
    }
    let mut found = std::collections::BTreeSet::new();
    let mut frontier = vec![vec![0]];
    found.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        for a in g.elements() {
            if h.binary_search(&a).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(a);
            let k = closure(g, &seed);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Vec<Element>>, GroupError> {
    Ok(subgroups(g)?
        .into_iter()
        .filter(|h| is_normal_subgroup(g, h))
        .collect())
}

pub fn center(g: &FiniteGroup) -> Vec<Element> {
    g.elements()
        .filter(|&z| g.elements().all(|x| g.add(z, x) == g.add(x, z)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    Semidirect,
    Direct,
}

/// `G = ker e ⋊ e(G)` for an idempotent endomorphism `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub image_part: Vec<Element>,
    pub kernel_part: Vec<Element>,
    pub kind: DecompositionKind,
}

impl Decomposition {
    /// Writes `x = k + i` with `k` in the kernel and `i` in the image.
    pub fn factor(&self, g: &FiniteGroup, x: Element) -> Option<(Element, Element)> {
        let mut hits = self.kernel_part.iter().flat_map(|&k| {
            self.image_part
                .iter()
                .filter(move |&&i| g.add(k, i) == x)
                .map(move |&i| (k, i))
        });
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }
}

pub fn decomposition_from_idempotent(
    g: &FiniteGroup,
    e: &EndoMap,
) -> Result<Decomposition, GroupError> {
    if e.len() != g.order() {
        return Err(GroupError::MapLengthMismatch {
            len: e.len(),
            order: g.order(),
        });
    }
    if let Some(element) = g.elements().find(|&a| e.apply(e.apply(a)) != e.apply(a)) {
        debug_assert!(!is_idempotent_map(e));
        return Err(GroupError::NotIdempotent { element });
    }
    for a in g.elements() {
        for b in g.elements() {
            if e.apply(g.add(a, b)) != g.add(e.apply(a), e.apply(b)) {
                return Err(GroupError::NotEndomorphism { a, b });
            }
        }
    }
    let image_part = e.image_set();
    let kernel_part = e.kernel();
    let direct = image_part
        .iter()
        .all(|&i| kernel_part.iter().all(|&k| g.add(i, k) == g.add(k, i)));
    Ok(Decomposition {
        image_part,
        kernel_part,
        kind: if direct {
            DecompositionKind::Direct
        } else {
            DecompositionKind::Semidirect
        },
    })
}
