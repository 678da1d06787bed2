use super::{closure, Element, FiniteGroup, GroupError};

/// A self-map of a finite carrier. The `is_endomorphism` flag is only ever
/// set by checking the map against a group table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoMap {
    images: Vec<Element>,
    is_endomorphism: bool,
}

impl EndoMap {
    /// An uncertified self-map.
    pub fn raw(images: Vec<Element>) -> Self {
        EndoMap {
            images,
            is_endomorphism: false,
        }
    }

    /// Checks `images` against `g` and records whether it is an endomorphism.
    pub fn checked(g: &FiniteGroup, images: Vec<Element>) -> Result<Self, GroupError> {
        if images.len() != g.order() {
            return Err(GroupError::MapLengthMismatch {
                len: images.len(),
                order: g.order(),
            });
        }
        if let Some((index, &value)) = images.iter().enumerate().find(|(_, &v)| v >= g.order()) {
            return Err(GroupError::MapOutOfRange {
                index,
                value,
                order: g.order(),
            });
        }
        let is_endomorphism = is_homomorphism(g, &images);
        Ok(EndoMap {
            images,
            is_endomorphism,
        })
    }

    /// Like [`EndoMap::checked`] but fails unless the map is an endomorphism.
    pub fn endomorphism(g: &FiniteGroup, images: Vec<Element>) -> Result<Self, GroupError> {
        let map = Self::checked(g, images)?;
        match homomorphism_witness(g, &map.images) {
            None => Ok(map),
            Some((a, b)) => Err(GroupError::NotEndomorphism { a, b }),
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        EndoMap {
            images: g.elements().collect(),
            is_endomorphism: true,
        }
    }

    pub fn zero(g: &FiniteGroup) -> Self {
        EndoMap {
            images: vec![0; g.order()],
            is_endomorphism: true,
        }
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        self.images[a]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn into_images(self) -> Vec<Element> {
        self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.is_endomorphism
    }

    pub fn fixes_zero(&self) -> bool {
        self.images.first() == Some(&0)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&v| v == 0)
    }

    /// `self ∘ other`, i.e. `a ↦ self(other(a))`.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap {
            images: other.images.iter().map(|&b| self.images[b]).collect(),
            is_endomorphism: self.is_endomorphism && other.is_endomorphism,
        }
    }

    /// Sorted list of distinct images.
    pub fn image_set(&self) -> Vec<Element> {
        let mut out = self.images.clone();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Elements mapped to 0.
    pub fn kernel(&self) -> Vec<Element> {
        (0..self.images.len())
            .filter(|&a| self.images[a] == 0)
            .collect()
    }
}

impl serde::Serialize for EndoMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

pub fn is_homomorphism(g: &FiniteGroup, images: &[Element]) -> bool {
    homomorphism_witness(g, images).is_none()
}

fn homomorphism_witness(g: &FiniteGroup, images: &[Element]) -> Option<(Element, Element)> {
    for a in g.elements() {
        for b in g.elements() {
            if images[g.add(a, b)] != g.add(images[a], images[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `f(f(a)) = f(a)` for every `a`; applies to arbitrary self-maps.
pub fn is_idempotent_map(f: &EndoMap) -> bool {
    f.images.iter().all(|&x| f.images[x] == x)
}

pub fn compose_commute(f: &EndoMap, g: &EndoMap) -> bool {
    (0..f.len()).all(|a| f.apply(g.apply(a)) == g.apply(f.apply(a)))
}

/// `f(x) + g(y) = g(y) + f(x)` for all `x, y`.
pub fn image_commuting(group: &FiniteGroup, f: &EndoMap, g: &EndoMap) -> bool {
    let fi = f.image_set();
    let gi = g.image_set();
    fi.iter()
        .all(|&x| gi.iter().all(|&y| group.add(x, y) == group.add(y, x)))
}

/// Every endomorphism of `g`, sorted lexicographically by images.
///
/// Images are chosen for a small generating set and propagated along the
/// Cayley graph; each surviving candidate is re-checked against the full
/// table.
pub fn enumerate_endomorphisms(g: &FiniteGroup) -> Vec<EndoMap> {
    let gens = generating_set(g);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gens.len());
    assign_generators(g, &gens, &mut chosen, &mut out);
    out.sort();
    out
}

pub fn automorphisms(g: &FiniteGroup) -> Vec<EndoMap> {
    enumerate_endomorphisms(g)
        .into_iter()
        .filter(EndoMap::is_bijective)
        .collect()
}

fn generating_set(g: &FiniteGroup) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut generated = vec![0];
    for a in g.elements() {
        if generated.binary_search(&a).is_err() {
            gens.push(a);
            let mut with_a = generated.clone();
            with_a.push(a);
            generated = closure(g, &with_a);
        }
    }
    gens
}

fn assign_generators(
    g: &FiniteGroup,
    gens: &[Element],
    chosen: &mut Vec<Element>,
    out: &mut Vec<EndoMap>,
) {
    if chosen.len() == gens.len() {
        if let Some(images) = extend(g, gens, chosen) {
            if is_homomorphism(g, &images) {
                out.push(EndoMap {
                    images,
                    is_endomorphism: true,
                });
            }
        }
        return;
    }
    let order = g.element_order(gens[chosen.len()]);
    for x in g.elements() {
        if !order.is_multiple_of(g.element_order(x)) {
            continue;
        }
        chosen.push(x);
        assign_generators(g, gens, chosen, out);
        chosen.pop();
    }
}

/// Propagates generator images along `a ↦ a + gen`, failing on conflict.
fn extend(g: &FiniteGroup, gens: &[Element], images_of_gens: &[Element]) -> Option<Vec<Element>> {
    let n = g.order();
    let mut images = vec![usize::MAX; n];
    images[0] = 0;
    let mut queue = vec![0];
    while let Some(a) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images_of_gens) {
            let b = g.add(a, s);
            let v = g.add(images[a], t);
            if images[b] == usize::MAX {
                images[b] = v;
                queue.push(b);
            } else if images[b] != v {
                return None;
            }
        }
    }
    Some(images)
}
