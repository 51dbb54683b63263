//! Excitation probabilities of a two-level atom that emits two identical
//! scalar photons near a perfectly reflecting mirror, with either the atom
//! or the mirror uniformly accelerated.
//!
//! Frequencies are angular (rad/s) throughout. Every probability depends on
//! the inputs only through [`DimensionlessGroups`] and the coupling prefactor.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod closedform;
pub mod equivalence;
pub mod error;
pub mod oracle;
pub mod params;
pub mod quad;
pub mod special;

pub use error::{Error, Result};
pub use params::{DimensionlessGroups, PhysicalParams, SPEED_OF_LIGHT, SPEED_OF_LIGHT_ROUNDED};

pub type ComplexValue = num_complex::Complex64;
