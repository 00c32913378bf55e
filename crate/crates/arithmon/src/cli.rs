//! Command-line workflows.
