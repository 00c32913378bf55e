//! Workbench for the arithmetic of non-unique factorizations in commutative,
//! cancellative, reduced monoids.
//!
//! The crate computes classical invariants of factorization theory on
//! concrete monoid families: sets of lengths and their gap sets, distances
//! between factorizations and catenary degrees, elasticities `rho_k`, the
//! omega invariant, tame degrees, and the power index measuring how fast
//! sums of n non-units fall into a fixed principal ideal. A nine-condition
//! report ties the computed evidence into the implication lattice relating
//! global tameness, finite elasticity, and valuation-theoretic properties
//! of the complete integral closure.
//!
//! Supported families:
//!
//! * `numerical: [a, b, ...]` - numerical monoids, co-finite submonoids of
//!   the non-negative integers,
//! * `sqrt-cone: m = k` - lattice points of the planar cone bounded by the
//!   rays y = 0 and y = sqrt(k) x, for squarefree k,
//! * `diagonal-wall` - triples (a, b, c) of non-negative integers with
//!   a > 0 or b = c,
//! * `puiseux-tail` - zero together with all rationals >= 1, handled in
//!   closed form by [`puiseux`],
//! * `fingen-vec: [[..], ...]` - the submonoid of a free commutative monoid
//!   generated by finitely many non-negative integer vectors.
//!
//! Start with [`families::make`] to build a monoid from its text form, then
//! feed it to the operations in [`factorize`], [`tame`], and [`invariants`].
//! Every capability has a runnable walkthrough under `examples/`.

pub mod cert;
pub mod cli;
pub mod element;
pub mod error;
pub mod factorize;
pub mod families;
pub mod invariants;
pub mod monoid;
pub mod oracle;
pub mod puiseux;
pub mod tame;

pub use cert::Certification;
pub use element::{Element, Rational};
pub use error::{Error, Result};
pub use factorize::{Factorization, LengthSet, SearchBudget};
pub use monoid::MonoidSpec;
