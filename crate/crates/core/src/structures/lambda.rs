use serde::Serialize;

use super::{AlgebraObject, Kind, StructureError};
use crate::group::{EndoMap, FiniteGroup};
use crate::ops::BinOpTable;

/// The left multiplication maps `λ_a`, one per carrier element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaFamily {
    pub maps: Vec<EndoMap>,
    pub all_endomorphisms: bool,
    pub constant: bool,
}

impl LambdaFamily {
    fn from_maps(g: &FiniteGroup, raw: Vec<Vec<usize>>) -> Self {
        let maps: Vec<EndoMap> = raw
            .into_iter()
            .map(|m| EndoMap::checked(g, m).expect("lambda images stay in the carrier"))
            .collect();
        let all_endomorphisms = maps.iter().all(EndoMap::is_endomorphism);
        let constant = maps.windows(2).all(|w| w[0] == w[1]);
        LambdaFamily {
            maps,
            all_endomorphisms,
            constant,
        }
    }

    /// `λ_0`.
    pub fn at_zero(&self) -> &EndoMap {
        &self.maps[0]
    }
}

/// `λ_a(b) = -σ(a) + a ∘ b` for skew trusses, `λ_a(b) = a · b` when a dot
/// operation is present.
pub fn lambda_family(obj: &AlgebraObject) -> Result<LambdaFamily, StructureError> {
    let g = obj.group();
    let n = g.order();
    let raw: Vec<Vec<usize>> = match obj.kind() {
        Kind::SkewTruss => {
            let sigma = obj.require_sigma()?;
            let circ = obj.require_circ()?;
            (0..n)
                .map(|a| (0..n).map(|b| g.add(g.neg(sigma.apply(a)), circ.get(a, b))).collect())
                .collect()
        }
        Kind::Ditruss | Kind::WeakTruss => {
            let dot = obj.require_dot()?;
            (0..n).map(|a| dot.row_map(a).into_images()).collect()
        }
        Kind::InterchangeNr => {
            return Err(StructureError::MissingComponent {
                kind: Kind::InterchangeNr,
                component: "sigma",
            })
        }
    };
    debug_assert!(raw.iter().all(|m| m.len() == n));
    Ok(LambdaFamily::from_maps(g, raw))
}

/// `a ↦ a ∘ 0`.
pub fn sigma_from_circ(g: &FiniteGroup, circ: &BinOpTable) -> EndoMap {
    EndoMap::checked(g, circ.column_map(0).into_images()).expect("table entries stay in the carrier")
}
