use crate::error::{Error, Result};
use crate::quad::{adaptive_gk21, tanh_sinh, GaussLegendre, GkOptions, TanhSinhOptions};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Orders above this use the shifted-contour representation.
pub const LARGE_ORDER: f64 = 20.0;

// -ln(1e-18): the cosh-integrand is below 1e-18 beyond t_max.
const TAIL_EXPONENT: f64 = 41.446_531_673_892_82;

fn check_args(mu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::DomainError {
            function: "bessel_k_imag_order",
            detail: format!("x must be positive and finite, got {x}"),
        });
    }
    if !mu.is_finite() {
        return Err(Error::DomainError {
            function: "bessel_k_imag_order",
            detail: format!("order must be finite, got {mu}"),
        });
    }
    Ok(mu.abs())
}

fn t_max(x: f64) -> f64 {
    (TAIL_EXPONENT / x + 1.0).acosh()
}

/// K_{iμ}(x) = ∫₀^∞ e^{-x cosh t} cos(μt) dt.
///
/// Double-exponential quadrature on the real axis for μ ≤ 20; above that the
/// value is e^{-πμ/2} times [`bessel_k_imag_order_scaled`].
pub fn bessel_k_imag_order(mu: f64, x: f64) -> Result<f64> {
    let mu = check_args(mu, x)?;
    if mu > LARGE_ORDER {
        let scaled = bessel_k_imag_order_scaled(mu, x)?;
        return Ok(scaled * (-FRAC_PI_2 * mu).exp());
    }
    let opts = TanhSinhOptions {
        rel_tol: 1e-15,
        max_level: 14,
        ..Default::default()
    };
    let (rep, ok) = tanh_sinh(
        |t, _, _| Complex64::new((-x * t.cosh()).exp() * (mu * t).cos(), 0.0),
        0.0,
        t_max(x),
        opts,
    );
    if !ok && rep.abs_error_estimate > 1e-12 {
        return Err(Error::NoConvergence {
            what: "bessel_k_imag_order",
            detail: format!("mu={mu} x={x} error estimate {:e}", rep.abs_error_estimate),
        });
    }
    Ok(rep.value.re)
}

/// Independent evaluation of the same cosh-integral by composite 16-point
/// Gauss-Legendre panels of width at most π/(4μ). Returns the value on the
/// doubled panel count and its difference from the single count.
pub fn bessel_k_imag_order_panels(mu: f64, x: f64) -> Result<(f64, f64)> {
    let mu = check_args(mu, x)?;
    let upper = t_max(x);
    let mut width: f64 = 0.25;
    if mu > 0.0 {
        width = width.min(std::f64::consts::PI / (4.0 * mu));
    }
    let panels = (upper / width).ceil().max(1.0) as usize;
    let gl = GaussLegendre::new(16);
    let f = |t: f64| Complex64::new((-x * t.cosh()).exp() * (mu * t).cos(), 0.0);
    let coarse = gl.integrate_panels(f, 0.0, upper, panels).re;
    let fine = gl.integrate_panels(f, 0.0, upper, 2 * panels).re;
    Ok((fine, (fine - coarse).abs()))
}

/// e^{πμ/2} K_{iμ}(x), which stays O(μ^{-1/2}) where K_{iμ} itself
/// underflows.
///
/// Shifting the contour to Im t = π/2 - δ gives
/// e^{μδ} Re ∫₀^∞ exp(-x sinδ cosh t + i(μt - x cosδ sinh t)) dt.
pub fn bessel_k_imag_order_scaled(mu: f64, x: f64) -> Result<f64> {
    let mu = check_args(mu, x)?;
    let delta = if mu > 0.0 { (2.0 / mu).min(FRAC_PI_2) } else { FRAC_PI_2 };
    let (sd, cd) = delta.sin_cos();
    let damp = x * sd;
    let cutoff = TAIL_EXPONENT + mu * delta;
    let upper = (cutoff / damp).max(1.0).acosh().max(1.0);
    let integrand = |t: f64| {
        let phase = mu * t - x * cd * t.sinh();
        Complex64::from_polar((-damp * t.cosh()).exp(), phase)
    };
    let pieces = 64usize.max((upper * (mu + 1.0) / 8.0).ceil() as usize).min(4096);
    let breaks: Vec<f64> = (0..=pieces).map(|k| upper * k as f64 / pieces as f64).collect();
    // The integrand is O(1), so its roundoff sets an absolute floor.
    let opts = GkOptions {
        abs_tol: 1e-14 * upper,
        rel_tol: 1e-13,
        max_evaluations: 400_000,
    };
    let (rep, ok) = adaptive_gk21(integrand, &breaks, opts);
    let value = (mu * delta).exp() * rep.value.re;
    if !ok && rep.abs_error_estimate > 1e-10 * value.abs().max(1e-3) {
        return Err(Error::NoConvergence {
            what: "bessel_k_imag_order_scaled",
            detail: format!("mu={mu} x={x} error estimate {:e}", rep.abs_error_estimate),
        });
    }
    Ok(value)
}

/// e^{πμ/2} K_{iμ}(x) by fixed 16-point Gauss-Legendre panels on the contour
/// shifted by δ = min(π/2, 1/μ), i.e. a different path and rule from
/// [`bessel_k_imag_order_scaled`].
pub fn bessel_k_imag_order_scaled_panels(mu: f64, x: f64) -> Result<f64> {
    let mu = check_args(mu, x)?;
    let delta = if mu > 0.0 { (1.0 / mu).min(FRAC_PI_2) } else { FRAC_PI_2 };
    let (sd, cd) = delta.sin_cos();
    let damp = x * sd;
    let upper = ((TAIL_EXPONENT + mu * delta) / damp).max(1.0).acosh().max(1.0);
    let mut width: f64 = 0.125;
    if mu > 0.0 {
        width = width.min(std::f64::consts::PI / (8.0 * mu));
    }
    let panels = ((upper / width).ceil() as usize).max(1);
    let gl = GaussLegendre::new(16);
    let f = |t: f64| Complex64::from_polar((-damp * t.cosh()).exp(), mu * t - x * cd * t.sinh());
    Ok((mu * delta).exp() * gl.integrate_panels(f, 0.0, upper, panels).re)
}

/// Size of e^{πμ/2} K_{iμ}(x) in the oscillatory region x < μ, where the
/// function has zeros: √(π/2) (μ² - x²)^{-1/4}, floored at μ² - x² = 1.
/// Zero for x ≥ μ.
pub fn bessel_scaled_envelope(mu: f64, x: f64) -> f64 {
    let mu = mu.abs();
    if x >= mu {
        0.0
    } else {
        (FRAC_PI_2).sqrt() * (mu * mu - x * x).max(1.0).powf(-0.25)
    }
}
