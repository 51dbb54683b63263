//! Command-line front end: evaluations, figure sweeps, verification suites
//! and the equivalence report.

pub mod commands;
pub mod config;
pub mod csvout;
pub mod exit;
pub mod presets;
pub mod sweep;
pub mod verify;

pub use config::{Case, MethodChoice, RunConfig, Scale, Variable};
pub use sweep::{run_sweep, Row, SweepSpec};
