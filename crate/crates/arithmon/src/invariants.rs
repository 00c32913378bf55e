//! Monoid-level invariants and the nine-condition report.
