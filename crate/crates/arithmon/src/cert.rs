//! Certification levels attached to computed values.

use serde::Serialize;
use std::fmt;

/// How much a reported number is worth.
///
/// Bounded searches cannot certify suprema, so every reported invariant
/// carries one of these tags. `Exact` means proven equal, `LowerBound`
/// means the true value is at least this large, `Evidence` means the
/// value is consistent with a bounded probe but not certified, and
/// `Unknown` means the computation could not say anything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    Exact,
    LowerBound,
    Evidence,
    Unknown,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Certification::Exact => "exact",
            Certification::LowerBound => "lower-bound",
            Certification::Evidence => "evidence",
            Certification::Unknown => "unknown",
        };
        f.write_str(s)
    }
}
