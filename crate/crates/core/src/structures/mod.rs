//! Skew trusses, ditrusses, weak trusses and interchange near-rings as one
//! tagged [`AlgebraObject`].
//!
//! An object is checked against the defining axioms of its kind when it is
//! built; [`AlgebraObject::is_verified`] records the outcome and the
//! transforms refuse objects that did not verify.

mod lambda;
mod theorems;

pub use lambda::{lambda_family, sigma_from_circ, LambdaFamily};
pub use theorems::{
    build_conjugation_ditruss, ditruss_consequences, ditruss_from_difference,
    skew_truss_consequences, ClaimReport, ClaimStatus, TheoremReport,
};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{is_idempotent_map, EndoMap, FiniteGroup, GroupError};
use crate::laws::{self, LawReport};
use crate::ops::BinOpTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SkewTruss,
    Ditruss,
    WeakTruss,
    InterchangeNr,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::SkewTruss, Kind::Ditruss, Kind::WeakTruss, Kind::InterchangeNr];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::SkewTruss => "skew-truss",
            Kind::Ditruss => "ditruss",
            Kind::WeakTruss => "weak-truss",
            Kind::InterchangeNr => "interchange-nr",
        }
    }

    fn needs_sigma(self) -> bool {
        self != Kind::InterchangeNr
    }

    fn needs_circ(self) -> bool {
        self != Kind::WeakTruss
    }

    fn needs_dot(self) -> bool {
        matches!(self, Kind::Ditruss | Kind::WeakTruss)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "skew-truss" => Ok(Kind::SkewTruss),
            "ditruss" => Ok(Kind::Ditruss),
            "weak-truss" => Ok(Kind::WeakTruss),
            "interchange" | "interchange-nr" => Ok(Kind::InterchangeNr),
            other => Err(StructureError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("unknown structure kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} requires a `{component}` component")]
    MissingComponent { kind: Kind, component: &'static str },
    #[error("{kind} does not take a `{component}` component")]
    UnexpectedComponent { kind: Kind, component: &'static str },
    #[error("component `{component}` has {found} elements, group has {expected}")]
    CarrierMismatch {
        component: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0} does not satisfy its defining axioms")]
    NotVerified(Kind),
    #[error("expected a {expected}, got a {found}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("the dot operation is not left distributive (witness {witness:?})")]
    DotNotDistributive { witness: Vec<usize> },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Properties of `σ` that individual results depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaFlags {
    pub endomorphism: bool,
    pub idempotent: bool,
    pub fixes_zero: bool,
}

impl SigmaFlags {
    pub fn of(sigma: &EndoMap) -> Self {
        SigmaFlags {
            endomorphism: sigma.is_endomorphism(),
            idempotent: is_idempotent_map(sigma),
            fixes_zero: sigma.fixes_zero(),
        }
    }

    pub fn idempotent_endomorphism(&self) -> bool {
        self.endomorphism && self.idempotent
    }
}

/// Per-axiom outcome of [`AlgebraObject::check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub kind: Kind,
    pub verified: bool,
    pub axioms: Vec<LawReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraObject {
    group: Arc<FiniteGroup>,
    kind: Kind,
    sigma: Option<EndoMap>,
    circ: Option<BinOpTable>,
    dot: Option<BinOpTable>,
    verified: bool,
}

impl AlgebraObject {
    /// Assembles an object and checks its defining axioms.
    ///
    /// Fails only on structural problems (missing, extra or mis-sized
    /// components). Axiom failures yield an object with
    /// `is_verified() == false`; see [`AlgebraObject::check`] for witnesses.
    pub fn new(
        kind: Kind,
        group: Arc<FiniteGroup>,
        sigma: Option<EndoMap>,
        circ: Option<BinOpTable>,
        dot: Option<BinOpTable>,
    ) -> Result<Self, StructureError> {
        let n = group.order();
        let presence = [
            ("sigma", kind.needs_sigma(), sigma.is_some()),
            ("circ", kind.needs_circ(), circ.is_some()),
            ("dot", kind.needs_dot(), dot.is_some()),
        ];
        for (component, needed, present) in presence {
            match (needed, present) {
                (true, false) => return Err(StructureError::MissingComponent { kind, component }),
                (false, true) => return Err(StructureError::UnexpectedComponent { kind, component }),
                _ => {}
            }
        }
        let sigma = sigma
            .map(|s| EndoMap::checked(&group, s.into_images()))
            .transpose()?;
        for (component, table) in [("circ", &circ), ("dot", &dot)] {
            if let Some(t) = table {
                if t.order() != n {
                    return Err(StructureError::CarrierMismatch {
                        component,
                        expected: n,
                        found: t.order(),
                    });
                }
            }
        }
        let mut obj = AlgebraObject {
            group,
            kind,
            sigma,
            circ,
            dot,
            verified: false,
        };
        obj.verified = obj.check().verified;
        Ok(obj)
    }

    pub fn skew_truss(
        group: Arc<FiniteGroup>,
        circ: BinOpTable,
        sigma: EndoMap,
    ) -> Result<Self, StructureError> {
        Self::new(Kind::SkewTruss, group, Some(sigma), Some(circ), None)
    }

    pub fn ditruss(
        group: Arc<FiniteGroup>,
        sigma: EndoMap,
        circ: BinOpTable,
        dot: BinOpTable,
    ) -> Result<Self, StructureError> {
        Self::new(Kind::Ditruss, group, Some(sigma), Some(circ), Some(dot))
    }

    pub fn weak_truss(
        group: Arc<FiniteGroup>,
        dot: BinOpTable,
        sigma: EndoMap,
    ) -> Result<Self, StructureError> {
        Self::new(Kind::WeakTruss, group, Some(sigma), None, Some(dot))
    }

    pub fn interchange(group: Arc<FiniteGroup>, circ: BinOpTable) -> Result<Self, StructureError> {
        Self::new(Kind::InterchangeNr, group, None, Some(circ), None)
    }

    /// Runs exactly the defining axioms of the object's kind.
    pub fn check(&self) -> CheckReport {
        let g = &*self.group;
        let axioms = match self.kind {
            Kind::SkewTruss => {
                let (circ, sigma) = (self.circ.as_ref().unwrap(), self.sigma.as_ref().unwrap());
                vec![
                    laws::is_associative(circ),
                    laws::is_left_skew_sigma_distributive(g, circ, sigma),
                ]
            }
            Kind::Ditruss => vec![laws::satisfies_ditruss_identity(
                g,
                self.sigma.as_ref().unwrap(),
                self.circ.as_ref().unwrap(),
                self.dot.as_ref().unwrap(),
            )],
            Kind::WeakTruss => {
                let (dot, sigma) = (self.dot.as_ref().unwrap(), self.sigma.as_ref().unwrap());
                vec![
                    laws::is_left_weak_sigma_associative(g, dot, sigma),
                    laws::is_left_distributive(g, dot),
                ]
            }
            Kind::InterchangeNr => vec![laws::satisfies_interchange(g, self.circ.as_ref().unwrap())],
        };
        CheckReport {
            kind: self.kind,
            verified: axioms.iter().all(|r| r.passed),
            axioms,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn sigma(&self) -> Option<&EndoMap> {
        self.sigma.as_ref()
    }

    pub fn circ(&self) -> Option<&BinOpTable> {
        self.circ.as_ref()
    }

    pub fn dot(&self) -> Option<&BinOpTable> {
        self.dot.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn sigma_flags(&self) -> Option<SigmaFlags> {
        self.sigma.as_ref().map(SigmaFlags::of)
    }

    pub(crate) fn require(&self, kind: Kind) -> Result<(), StructureError> {
        if self.kind != kind {
            return Err(StructureError::WrongKind {
                expected: kind,
                found: self.kind,
            });
        }
        if !self.verified {
            return Err(StructureError::NotVerified(kind));
        }
        Ok(())
    }

    pub(crate) fn require_sigma(&self) -> Result<&EndoMap, StructureError> {
        self.sigma.as_ref().ok_or(StructureError::MissingComponent {
            kind: self.kind,
            component: "sigma",
        })
    }

    pub(crate) fn require_circ(&self) -> Result<&BinOpTable, StructureError> {
        self.circ.as_ref().ok_or(StructureError::MissingComponent {
            kind: self.kind,
            component: "circ",
        })
    }

    pub(crate) fn require_dot(&self) -> Result<&BinOpTable, StructureError> {
        self.dot.as_ref().ok_or(StructureError::MissingComponent {
            kind: self.kind,
            component: "dot",
        })
    }
}
