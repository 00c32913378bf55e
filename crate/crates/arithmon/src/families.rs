//! Building monoids from their text form, rendering them back, seeded
//! random instances, and curated structural metadata.
//!
//! The text grammar is one line per monoid:
//!
//! ```text
//! numerical: [6, 9, 20]
//! sqrt-cone: m = 2
//! diagonal-wall
//! puiseux-tail
//! fingen-vec: [[1, 0], [0, 1]]
//! ```
//!
//! `render` produces the canonical form (numerical generators minimized and
//! sorted), and `make(render(s)) == s` for every valid monoid.

use crate::error::{Error, Result};
use crate::monoid::{FinGenVec, MonoidSpec, Numerical};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;

const FAMILY_NAMES: &str = "numerical, sqrt-cone, diagonal-wall, puiseux-tail, fingen-vec";

/// Parses a single monoid description.
pub fn make(text: &str) -> Result<MonoidSpec> {
    let text = text.trim();
    let (head, tail) = match text.split_once(':') {
        Some((h, t)) => (h.trim(), Some(t.trim())),
        None => (text, None),
    };
    match head {
        "numerical" => {
            let body = tail.ok_or_else(|| {
                Error::Parse("numerical needs a generator list, e.g. numerical: [2, 3]".into())
            })?;
            let gens = parse_int_list(body)?;
            Ok(MonoidSpec::Numerical(Numerical::new(&gens)?))
        }
        "sqrt-cone" => {
            let body = tail.ok_or_else(|| {
                Error::Parse("sqrt-cone needs a parameter, e.g. sqrt-cone: m = 2".into())
            })?;
            let m = parse_m_assignment(body)?;
            MonoidSpec::sqrt_cone(m)
        }
        "diagonal-wall" => match tail {
            None => Ok(MonoidSpec::DiagonalWall),
            Some(_) => Err(Error::Parse("diagonal-wall takes no parameters".into())),
        },
        "puiseux-tail" => match tail {
            None => Ok(MonoidSpec::PuiseuxTail),
            Some(_) => Err(Error::Parse("puiseux-tail takes no parameters".into())),
        },
        "fingen-vec" => {
            let body = tail.ok_or_else(|| {
                Error::Parse(
                    "fingen-vec needs a generator list, e.g. fingen-vec: [[1, 0], [0, 1]]".into(),
                )
            })?;
            let gens = parse_nested_int_list(body)?;
            Ok(MonoidSpec::FinGenVec(FinGenVec::new(gens)?))
        }
        other => Err(Error::Parse(format!(
            "unknown family '{}', expected one of: {}",
            other, FAMILY_NAMES
        ))),
    }
}

/// Parses a spec file: comments start with '#', blank lines are ignored,
/// and exactly one monoid description must remain.
pub fn parse_spec_file(content: &str) -> Result<MonoidSpec> {
    let lines: Vec<&str> = content
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    match lines.as_slice() {
        [one] => make(one),
        [] => Err(Error::Parse("spec file contains no monoid description".into())),
        many => Err(Error::Parse(format!(
            "spec file must contain exactly one monoid description, found {}",
            many.len()
        ))),
    }
}

/// Canonical text form; inverse of [`make`] on valid input.
pub fn render(spec: &MonoidSpec) -> String {
    match spec {
        MonoidSpec::Numerical(n) => {
            format!("numerical: [{}]", join_ints(n.gens()))
        }
        MonoidSpec::SqrtCone { m } => format!("sqrt-cone: m = {}", m),
        MonoidSpec::DiagonalWall => "diagonal-wall".into(),
        MonoidSpec::PuiseuxTail => "puiseux-tail".into(),
        MonoidSpec::FinGenVec(fg) => {
            let inner: Vec<String> =
                fg.gens().iter().map(|g| format!("[{}]", join_ints(g))).collect();
            format!("fingen-vec: [{}]", inner.join(", "))
        }
    }
}

fn join_ints(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let inner = strip_brackets(s)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("expected an integer, got '{}'", t)))
        })
        .collect()
}

fn parse_nested_int_list(s: &str) -> Result<Vec<Vec<i64>>> {
    let inner = strip_brackets(s)?;
    let mut out = Vec::new();
    let mut depth = 0_i32;
    let mut start = None;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth == 0 {
                    start = Some(i);
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced brackets".into()));
                }
                if depth == 0 {
                    let piece = &inner[start.take().unwrap()..=i];
                    out.push(parse_int_list(piece)?);
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced brackets".into()));
    }
    if out.is_empty() {
        return Err(Error::Parse("expected a list of generator vectors".into()));
    }
    Ok(out)
}

fn strip_brackets(s: &str) -> Result<&str> {
    s.trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got '{}'", s.trim())))
}

fn parse_m_assignment(s: &str) -> Result<i64> {
    let rest = s
        .trim()
        .strip_prefix('m')
        .map(str::trim)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected 'm = <integer>', got '{}'", s.trim())))?;
    let rest = rest.trim();
    rest.parse::<i64>()
        .map_err(|_| Error::Parse(format!("expected an integer after 'm =', got '{}'", rest)))
}

/// Deterministic random numerical monoid: generator count up to
/// `max_generators`, values up to `max_value`, resampled until the chosen
/// set is setwise coprime. Identical arguments always produce the identical
/// monoid.
pub fn random_numerical(seed: u64, max_generators: u32, max_value: i64) -> Result<MonoidSpec> {
    if max_generators < 2 {
        return Err(Error::Input("max_generators must be at least 2".into()));
    }
    if max_value < 3 {
        return Err(Error::Input("max_value must be at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let count = rng.gen_range(2..=max_generators) as usize;
        let mut vals: BTreeSet<i64> = BTreeSet::new();
        let mut tries = 0;
        while vals.len() < count && tries < 1_000 {
            vals.insert(rng.gen_range(2..=max_value));
            tries += 1;
        }
        let gens: Vec<i64> = vals.into_iter().collect();
        if gens.len() < 2 {
            continue;
        }
        let g = gens.iter().fold(0_i64, |acc, &x| num::integer::gcd(acc, x));
        if g == 1 {
            return Ok(MonoidSpec::Numerical(Numerical::new(&gens)?));
        }
    }
    Err(Error::Internal("failed to sample a coprime generator set".into()))
}

/// What the complete integral closure of a family looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureKind {
    /// Discrete valuation monoid (a copy of the non-negative integers).
    DiscreteValuation,
    /// Valuation monoid with non-discrete value group.
    NondiscreteValuation,
    Unknown,
}

/// Whether the conductor into the complete integral closure is known to be
/// non-empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConductorStatus {
    NonEmpty,
    Unknown,
}

/// A structural fact that may be certain in either direction or open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KnownFlag {
    True,
    False,
    Unknown,
}

/// Curated structural facts about a family, used for report context and to
/// decide which equivalences may propagate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMetadata {
    pub reduced: bool,
    pub closure: ClosureKind,
    pub conductor: ConductorStatus,
    pub strongly_primary: KnownFlag,
    pub notes: &'static str,
}

pub fn metadata(spec: &MonoidSpec) -> FamilyMetadata {
    match spec {
        MonoidSpec::Numerical(_) => FamilyMetadata {
            reduced: true,
            closure: ClosureKind::DiscreteValuation,
            conductor: ConductorStatus::NonEmpty,
            strongly_primary: KnownFlag::True,
            notes: "complete integral closure is the non-negative integers; the conductor \
                    contains every integer past the Frobenius number; every nonzero member \
                    divides all sufficiently large members, so the monoid is strongly primary",
        },
        MonoidSpec::PuiseuxTail => FamilyMetadata {
            reduced: true,
            closure: ClosureKind::NondiscreteValuation,
            conductor: ConductorStatus::NonEmpty,
            strongly_primary: KnownFlag::True,
            notes: "complete integral closure is the non-negative rationals; the conductor \
                    is every rational at least 1; sums of n non-units are the members at \
                    least n, so each member has a finite power index",
        },
        MonoidSpec::SqrtCone { .. } => FamilyMetadata {
            reduced: true,
            closure: ClosureKind::Unknown,
            conductor: ConductorStatus::Unknown,
            strongly_primary: KnownFlag::False,
            notes: "not strongly primary: multiples of (1, 0) stay on the boundary ray, so \
                    no sum-of-non-units level is divisible by (1, 1)",
        },
        MonoidSpec::DiagonalWall => FamilyMetadata {
            reduced: true,
            closure: ClosureKind::Unknown,
            conductor: ConductorStatus::Unknown,
            strongly_primary: KnownFlag::False,
            notes: "not strongly primary: diagonal sums (0, n, n) are never divisible by \
                    (1, 0, 0)",
        },
        MonoidSpec::FinGenVec(_) => FamilyMetadata {
            reduced: true,
            closure: ClosureKind::Unknown,
            conductor: ConductorStatus::Unknown,
            strongly_primary: KnownFlag::Unknown,
            notes: "instance-dependent: a single-generator instance behaves like a discrete \
                    valuation monoid, while independent generators give a factorial monoid \
                    that is not primary",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        assert!(matches!(make("numerical: [2, 3]").unwrap(), MonoidSpec::Numerical(_)));
        assert!(matches!(make("sqrt-cone: m = 2").unwrap(), MonoidSpec::SqrtCone { m: 2 }));
        assert!(matches!(make("diagonal-wall").unwrap(), MonoidSpec::DiagonalWall));
        assert!(matches!(make("puiseux-tail").unwrap(), MonoidSpec::PuiseuxTail));
        assert!(matches!(make("fingen-vec: [[1, 0], [0, 1]]").unwrap(), MonoidSpec::FinGenVec(_)));
    }

    #[test]
    fn parse_errors_are_descriptive() {
        let e = make("numerical: [4, 6]").unwrap_err().to_string();
        assert!(e.contains("common divisor"), "{}", e);
        let e = make("sqrt-cone: m = 12").unwrap_err().to_string();
        assert!(e.contains("squarefree"), "{}", e);
        let e = make("numerial: [2, 3]").unwrap_err().to_string();
        assert!(e.contains("unknown family"), "{}", e);
        let e = make("diagonal-wall: [1]").unwrap_err().to_string();
        assert!(e.contains("no parameters"), "{}", e);
        assert!(make("numerical: 2, 3").is_err());
        assert!(make("fingen-vec: [[1, 0], [0]]").is_err());
    }

    #[test]
    fn render_round_trips() {
        for text in [
            "numerical: [6, 9, 20]",
            "sqrt-cone: m = 2",
            "diagonal-wall",
            "puiseux-tail",
            "fingen-vec: [[0, 1], [1, 0]]",
        ] {
            let spec = make(text).unwrap();
            assert_eq!(render(&spec), text);
            assert_eq!(make(&render(&spec)).unwrap(), spec);
        }
        // generator vectors canonicalize to sorted order
        let spec = make("fingen-vec: [[1, 0], [0, 1]]").unwrap();
        assert_eq!(render(&spec), "fingen-vec: [[0, 1], [1, 0]]");
    }

    #[test]
    fn render_canonicalizes_generators() {
        let spec = make("numerical: [20, 9, 6, 15]").unwrap();
        assert_eq!(render(&spec), "numerical: [6, 9, 20]");
    }

    #[test]
    fn spec_files_allow_comments() {
        let content = "# workload\n\nnumerical: [2, 3]  # the smallest interesting one\n";
        assert!(matches!(parse_spec_file(content).unwrap(), MonoidSpec::Numerical(_)));
        assert!(parse_spec_file("# nothing\n").is_err());
        assert!(parse_spec_file("diagonal-wall\npuiseux-tail\n").is_err());
    }

    #[test]
    fn random_numerical_is_deterministic() {
        let a = random_numerical(7, 4, 30).unwrap();
        let b = random_numerical(7, 4, 30).unwrap();
        assert_eq!(a, b);
        let c = random_numerical(8, 4, 30).unwrap();
        assert!(matches!(c, MonoidSpec::Numerical(_)));
    }

    #[test]
    fn metadata_flags_match_family_structure() {
        assert_eq!(
            metadata(&make("numerical: [2, 3]").unwrap()).strongly_primary,
            KnownFlag::True
        );
        assert_eq!(
            metadata(&make("sqrt-cone: m = 2").unwrap()).strongly_primary,
            KnownFlag::False
        );
        assert_eq!(
            metadata(&make("fingen-vec: [[2]]").unwrap()).strongly_primary,
            KnownFlag::Unknown
        );
    }
}
