//! Quadrature building blocks shared by the special-function kernel and the
//! amplitude oracle. All routines integrate complex-valued integrands.

mod gauss_kronrod;
mod gauss_legendre;
mod richardson;
mod tanh_sinh;

pub use gauss_kronrod::{adaptive_gk21, GkOptions};
pub use gauss_legendre::GaussLegendre;
pub use richardson::{extrapolate_to_zero, Extrapolation};
pub use tanh_sinh::{tanh_sinh, TanhSinhOptions};

use num_complex::Complex64;

/// Outcome of one numerical integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureReport {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub method: QuadMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadMethod {
    GaussKronrod,
    GaussLegendrePanels,
    TanhSinh,
    Series,
    RegularizedExtrapolation,
    ContourRotation,
}

impl QuadMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            QuadMethod::GaussKronrod => "gauss_kronrod",
            QuadMethod::GaussLegendrePanels => "gauss_legendre_panels",
            QuadMethod::TanhSinh => "tanh_sinh",
            QuadMethod::Series => "series",
            QuadMethod::RegularizedExtrapolation => "regularized_extrapolation",
            QuadMethod::ContourRotation => "contour_rotation",
        }
    }
}
