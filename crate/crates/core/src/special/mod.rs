//! Complex log-gamma, Γ on the imaginary axis, K_{iμ}(x) and ₂F₃.

mod bessel;
mod gamma;
mod hyper;

pub use bessel::{
    bessel_k_imag_order, bessel_k_imag_order_panels, bessel_k_imag_order_scaled, bessel_k_imag_order_scaled_panels, bessel_scaled_envelope, LARGE_ORDER,
};
pub use gamma::{
    arg_gamma_imag, gamma_complex, gamma_imag_axis, ln_abs_gamma_imag, ln_gamma_complex,
    ImagAxisGamma,
};
pub use hyper::hyp2f3;
