//! Decision procedures built on the engines: exact elements and sequences,
//! quasi-Gorenstein tests, Gorenstein rings and constructions over them.
//!
//! Each check returns a typed outcome and can be rendered as a
//! [`CheckReport`] whose evidence can be recomputed independently.

mod constructions;
mod exact;
mod gorenstein;
mod local;
mod qg;
mod random;

pub use constructions::{
    gp_dg_module_checks, tensor_resolution_construction, trivial_ext_checks, qg_along_trivial_extension, GpChecks,
    HomExtRow, TensorResolution, TrivialExt,
};
pub use exact::{is_exact_element, is_exact_sequence, ExactElement, ExactKind, RingTower};
pub use gorenstein::{depth_and_type, gorenstein_ring_test, GorensteinOutcome, GorensteinRoute};
pub use local::{Engine, LocalRing};
pub use qg::{
    annihilator_checks, koszul_augmentation_qg, koszul_sup, quasi_gorenstein_direct, top_bottom_criterion,
    AnnihilatorChecks, ExtEntry, KoszulAugmentation, QgOutcome, TopBottom,
};
pub use random::{random_sequence, SequenceStyle};

use serde::{Deserialize, Serialize};

use crate::artin::AlgebraError;
use crate::poly::{ParseError, QuotientError};
use crate::resolution::{Certificate, Checked, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_decided(self) -> bool {
        self != Verdict::Unknown
    }

    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
            _ => Verdict::Unknown,
        }
    }
}

impl From<Status> for Verdict {
    fn from(s: Status) -> Self {
        match s {
            Status::CertifiedYes => Verdict::Yes,
            Status::CertifiedNo => Verdict::No,
            Status::Inconclusive => Verdict::Unknown,
        }
    }
}

impl From<&Checked> for Verdict {
    fn from(c: &Checked) -> Self {
        c.status.into()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

/// A verdict, how it was certified, the criterion applied and the data
/// behind it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub criterion: String,
    pub verdict: Verdict,
    pub certification: Certificate,
    pub evidence: serde_json::Value,
}

impl CheckReport {
    pub fn new(criterion: impl Into<String>, verdict: Verdict, certification: Certificate, evidence: serde_json::Value) -> Self {
        CheckReport { criterion: criterion.into(), verdict, certification, evidence }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0} is not in the maximal ideal")]
    NotInMaximalIdeal(String),
    #[error("{0} is not homogeneous, which the graded engine requires")]
    Inhomogeneous(String),
    #[error("unsupported ring: {0}")]
    Unsupported(String),
    #[error("this check needs an artinian ring")]
    NeedsArtinian,
}
