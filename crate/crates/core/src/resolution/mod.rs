//! Minimal free resolutions, Ext and Tor, and tests built on them.

mod artin;
mod graded;

pub use artin::{
    bass_prefix as artinian_bass_prefix, gdim_estimate as artinian_gdim_estimate,
    totally_reflexive_test as artinian_totally_reflexive_test, ArtinianResolution,
};
pub use graded::{
    bass_prefix as graded_bass_prefix, gdim_estimate as graded_gdim_estimate, residue_field,
    totally_reflexive_test as graded_totally_reflexive_test, transpose, GradedResolution,
};

use serde::Serialize;

/// How a statement about infinitely many degrees was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Settled by a finite computation.
    Exact,
    /// The resolution stops: `F_i = 0` for `i > length`.
    Terminated { length: usize },
    /// `d_{i+period} = d_i` literally for all `i ≥ onset`.
    Periodic { onset: usize, period: usize },
    /// The ring is self-injective, so `Ext^{≥1}(-, A) = 0`.
    SelfInjective,
    /// Only degrees up to the cutoff were examined; not a proof.
    UpToCutoff { cutoff: usize },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certificate::UpToCutoff { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    CertifiedYes,
    CertifiedNo,
    Inconclusive,
}

/// A yes/no answer with the route that established it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checked {
    pub status: Status,
    pub certificate: Certificate,
    pub reason: String,
}

impl Checked {
    pub fn yes(certificate: Certificate, reason: impl Into<String>) -> Self {
        Checked { status: Status::CertifiedYes, certificate, reason: reason.into() }
    }
    pub fn no(reason: impl Into<String>) -> Self {
        Checked { status: Status::CertifiedNo, certificate: Certificate::Exact, reason: reason.into() }
    }
    pub fn inconclusive(cutoff: usize, reason: impl Into<String>) -> Self {
        Checked { status: Status::Inconclusive, certificate: Certificate::UpToCutoff { cutoff }, reason: reason.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityCertificate {
    pub onset: usize,
    pub period: usize,
}

/// The first coefficients of a Poincaré or Bass series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesPrefix {
    pub coefficients: Vec<u64>,
    /// Present when the coefficients beyond the prefix are determined.
    pub tail: Option<Certificate>,
}

impl SeriesPrefix {
    pub fn is_complete(&self) -> bool {
        self.tail.is_some()
    }
}

/// G-dimension as far as it could be decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum GDim {
    Finite(usize),
    Infinite,
    /// The `g`-th syzygy is totally reflexive, smaller ones undecided.
    AtMost(usize),
    /// `Ext^g(M, A) ≠ 0`, but no syzygy was certified totally reflexive.
    AtLeast(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GDimEstimate {
    pub value: GDim,
    pub certified: bool,
}

/// Smallest `(period, onset)` with `mats[onset + period - 1] == mats[onset - 1]`
/// (so `d_{s+p} = d_s` with 1-based indices), subject to `compatible`.
pub(crate) fn find_period<T: PartialEq>(mats: &[T], compatible: impl Fn(usize, usize) -> bool) -> Option<PeriodicityCertificate> {
    let n = mats.len();
    for p in 1..n {
        for s in 1..=n - p {
            if mats[s - 1] == mats[s + p - 1] && compatible(s, p) {
                return Some(PeriodicityCertificate { onset: s, period: p });
            }
        }
    }
    None
}

/// Decides whether `Ext^i` vanishes for all `i ≥ from`, given a function
/// computing whether it vanishes in degree `i` and the tail of the
/// resolution computed so far, extended on demand.
pub(crate) fn ext_vanishing(
    from: usize,
    cutoff: usize,
    mut vanishes: impl FnMut(usize) -> bool,
    mut tail: impl FnMut(usize) -> Option<Certificate>,
    what: &str,
) -> Checked {
    for i in from..=cutoff.max(from) {
        if !vanishes(i) {
            return Checked::no(format!("{what}: Ext^{i} is nonzero"));
        }
        match tail(i + 1) {
            Some(Certificate::Terminated { length }) if i >= length => {
                return Checked::yes(Certificate::Terminated { length }, format!("{what}: Ext^i = 0 for {from} <= i <= {i}, resolution has length {length}"));
            }
            Some(Certificate::Periodic { onset, period }) if i + 1 >= onset.max(from) + period => {
                return Checked::yes(
                    Certificate::Periodic { onset, period },
                    format!("{what}: Ext^i = 0 for {from} <= i <= {i}, resolution periodic from {onset} with period {period}"),
                );
            }
            _ => {}
        }
    }
    Checked::inconclusive(cutoff, format!("{what}: Ext^i = 0 for {from} <= i <= {}", cutoff.max(from)))
}
