use crate::error::{Error, Result};
use crate::quad::{
    adaptive_gk21, extrapolate_to_zero, tanh_sinh, Extrapolation, GkOptions, QuadMethod,
    QuadratureReport, TanhSinhOptions,
};
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Number of rungs in the default regulator ladder.
pub const LADDER_LEN: usize = 8;

/// Geometric ladder ε_k = 0.1·scale·2^{-k}. `scale` should be the distance
/// from ε = 0 to the nearest singularity of the regulated integral.
pub fn default_ladder(scale: f64) -> Vec<f64> {
    (0..LADDER_LEN).map(|k| 0.1 * scale * 0.5f64.powi(k as i32)).collect()
}

/// A diagonal step may exceed its predecessor by this factor before the
/// ladder is declared non-convergent.
pub const STEP_GROWTH_SLACK: f64 = 2.0;

/// Amplification of per-rung quadrature noise by degree-7 Neville
/// extrapolation on a halving ladder.
const NEVILLE_NOISE_GAIN: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralKind {
    /// ∫₀^∞ e^{iqx} x^{s-1} dx, damped by e^{-εx}.
    GammaType,
    /// ∫₀^∞ x^{s-1} e^{iq(x - 1/x)} dx, damped by e^{-ε(x + 1/x)}.
    BesselType,
}

/// A regulated integral on a ladder of ε and its extrapolation to ε = 0.
#[derive(Debug, Clone)]
pub struct RegularizedIntegral {
    pub report: QuadratureReport,
    pub trace: Vec<(f64, Complex64)>,
    pub extrapolation: Extrapolation,
}

fn gk_opts() -> GkOptions {
    GkOptions {
        abs_tol: 1e-13,
        rel_tol: 1e-12,
        max_evaluations: 200_000,
    }
}

/// ∫_X^∞ x^p e^{λx} dx for Re λ ≤ 0 by repeated integration by parts;
/// requires |λ| X comfortably above |p|.
fn ibp_tail(p: Complex64, lam: Complex64, x: f64) -> Complex64 {
    let lead = -(lam * x + p * x.ln()).exp() / lam;
    let lx = lam * x;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..200 {
        let next = term * (-(p - k as f64)) / lx;
        if next.norm() > term.norm() {
            break;
        }
        term = next;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    lead * sum
}

/// ∫_lo^∞ x^p e^{λx} e^{κ/x} dx: Gauss-Kronrod on [lo, X] and an asymptotic
/// tail with e^{κ/x} expanded in powers of 1/x.
fn half_line(p: Complex64, lam: Complex64, kappa: Complex64, lo: f64) -> Result<(Complex64, f64, usize)> {
    let reach = (p.norm() + 2.0 * kappa.norm() + 40.0) / lam.norm();
    let hi = reach.max(2.0 * lo).max(lo + 1.0);
    let panel = (PI / lam.im.abs().max(1e-300)).min(4.0);
    let n = (((hi - lo) / panel).ceil() as usize).clamp(1, 20_000);
    let breaks: Vec<f64> = (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect();
    let f = |x: f64| (p * x.ln() + lam * x + kappa / x).exp();
    let (rep, ok) = adaptive_gk21(f, &breaks, gk_opts());
    if !ok && rep.abs_error_estimate > 1e-10 * rep.value.norm().max(1.0) {
        return Err(Error::NoConvergence {
            what: "half-line quadrature",
            detail: format!("p={p} lambda={lam} error estimate {:e}", rep.abs_error_estimate),
        });
    }
    let mut tail = Complex64::new(0.0, 0.0);
    let mut coef = Complex64::new(1.0, 0.0);
    for m in 0..200 {
        let piece = coef * ibp_tail(p - m as f64, lam, hi);
        tail += piece;
        if piece.norm() < 1e-18 * tail.norm().max(1e-300) {
            break;
        }
        coef *= kappa / (m as f64 + 1.0);
    }
    Ok((rep.value + tail, rep.abs_error_estimate, rep.evaluations))
}

/// ∫₀^{x0} x^{s-1} e^{λx} dx = x0^s Σ (λx0)ⁿ / (n! (n + s)); for Re s = 0 this
/// is the Abel limit of the x → 0 end.
fn origin_series(s: Complex64, lam: Complex64, x0: f64) -> Complex64 {
    let z = lam * x0;
    let mut pow = Complex64::new(1.0, 0.0);
    let mut sum = 1.0 / s;
    for n in 1..400 {
        pow *= z / n as f64;
        let term = pow / (s + n as f64);
        sum += term;
        if term.norm() < 1e-18 * sum.norm() && n > 3 {
            break;
        }
    }
    (s * x0.ln()).exp() * sum
}

fn finish(
    what: &'static str,
    trace: Vec<(f64, Complex64)>,
    quad_error: f64,
    evaluations: usize,
) -> Result<RegularizedIntegral> {
    let extrapolation = extrapolate_to_zero(&trace);
    let value = extrapolation.value;
    let residual = extrapolation.residual;
    if !(residual <= 1e-3 * value.norm()) {
        return Err(Error::NoConvergence {
            what,
            detail: format!("extrapolation residual {residual:e} against |value| {:e}", value.norm()),
        });
    }
    let floor = 1e-10 * value.norm() + NEVILLE_NOISE_GAIN * quad_error;
    // The first step compares the raw ε₀ value with the first extrapolant.
    let settled = extrapolation.diagonal_steps[1.min(extrapolation.diagonal_steps.len())..]
        .windows(2)
        .all(|w| w[1] <= STEP_GROWTH_SLACK * w[0] || w[1] <= floor);
    if !settled {
        return Err(Error::NoConvergence {
            what,
            detail: format!("non-monotone ladder steps {:?}", extrapolation.diagonal_steps),
        });
    }
    Ok(RegularizedIntegral {
        report: QuadratureReport {
            value,
            abs_error_estimate: residual + quad_error,
            evaluations,
            method: QuadMethod::RegularizedExtrapolation,
        },
        trace,
        extrapolation,
    })
}

/// ∫₀^∞ e^{iqx} x^{s-1} dx for Re s ∈ [0, 1], q ≠ 0.
pub fn gamma_type_integral(s: Complex64, q: f64, ladder: &[f64]) -> Result<RegularizedIntegral> {
    if q == 0.0 || s.norm() == 0.0 {
        return Err(Error::DomainError {
            function: "gamma_type_integral",
            detail: format!("need q != 0 and s != 0, got q={q} s={s}"),
        });
    }
    let x0 = (1.0 / q.abs()).min(1.0);
    let mut trace = Vec::with_capacity(ladder.len());
    let (mut err, mut evals) = (0.0f64, 0usize);
    for &eps in ladder {
        let lam = Complex64::new(-eps, q);
        let (body, e, n) = half_line(s - 1.0, lam, Complex64::new(0.0, 0.0), x0)?;
        trace.push((eps, origin_series(s, lam, x0) + body));
        err = err.max(e);
        evals += n;
    }
    finish("gamma_type_integral", trace, err, evals)
}

/// ∫₀^∞ x^{iμ-1} e^{iq(x - 1/x)} dx for q > 0, split at x = 1 with y = 1/x
/// on the inner half.
pub fn bessel_type_integral(mu: f64, q: f64, ladder: &[f64]) -> Result<RegularizedIntegral> {
    if !(q > 0.0) {
        return Err(Error::DomainError {
            function: "bessel_type_integral",
            detail: format!("q must be positive, got {q}"),
        });
    }
    let mut trace = Vec::with_capacity(ladder.len());
    let (mut err, mut evals) = (0.0f64, 0usize);
    let s = Complex64::new(0.0, mu);
    for &eps in ladder {
        let (outer, e1, n1) = half_line(s - 1.0, Complex64::new(-eps, q), Complex64::new(-eps, -q), 1.0)?;
        let (inner, e2, n2) =
            half_line(-s - 1.0, Complex64::new(-eps, -q), Complex64::new(-eps, q), 1.0)?;
        trace.push((eps, outer + inner));
        err = err.max(e1 + e2);
        evals += n1 + n2;
    }
    finish("bessel_type_integral", trace, err, evals)
}

/// Regulated improper integral with s = i·`s_im`; for the gamma type `q` is
/// the signed frequency of e^{iqx}, for the Bessel type it is the positive
/// coefficient of (x - 1/x).
pub fn improper_phase_integral(
    s_im: f64,
    kind: IntegralKind,
    q: f64,
    eps_ladder: &[f64],
) -> Result<QuadratureReport> {
    if s_im == 0.0 {
        return Err(Error::DomainError {
            function: "improper_phase_integral",
            detail: "s_im must be nonzero".into(),
        });
    }
    let r = match kind {
        IntegralKind::GammaType => gamma_type_integral(Complex64::new(0.0, s_im), q, eps_ladder)?,
        IntegralKind::BesselType => bessel_type_integral(s_im, q, eps_ladder)?,
    };
    Ok(r.report)
}

/// Secondary evaluation of the gamma-type integral by rotating x = i·sgn(q)·u/|q|:
/// (i sgn q / |q|)^s ∫₀^∞ e^{-u} u^{s-1} du, the remaining integral done by
/// series on [0, 1] and Gauss-Kronrod on [1, 80].
pub fn gamma_type_contour(s: Complex64, q: f64) -> Result<QuadratureReport> {
    let mut head = 1.0 / s;
    let mut pow = Complex64::new(1.0, 0.0);
    for n in 1..60 {
        pow *= -1.0 / n as f64;
        head += pow / (s + n as f64);
    }
    let breaks: Vec<f64> = (0..=79).map(|k| 1.0 + k as f64).collect();
    let (rep, ok) = adaptive_gk21(|u| ((s - 1.0) * u.ln() - u).exp(), &breaks, gk_opts());
    if !ok {
        return Err(Error::NoConvergence {
            what: "gamma_type_contour",
            detail: format!("error estimate {:e}", rep.abs_error_estimate),
        });
    }
    let rot = (s * Complex64::new(-q.abs().ln(), 0.5 * PI * q.signum())).exp();
    Ok(QuadratureReport {
        value: rot * (head + rep.value),
        abs_error_estimate: rot.norm() * rep.abs_error_estimate,
        evaluations: rep.evaluations,
        method: QuadMethod::ContourRotation,
    })
}

/// ω I′₃ = -4ψ e^{-iψ} ∫₀¹ e^{2iψu} u^{iβ} (1-u)^{-iβ} du, i.e. the finite
/// interval integral with its prefactor, in units of 1/ω.
pub fn finite_log_phase_integral(beta: f64, psi_z: f64) -> Result<QuadratureReport> {
    if !(psi_z > 0.0) {
        return Err(Error::DomainError {
            function: "finite_log_phase_integral",
            detail: format!("psi_z must be positive, got {psi_z}"),
        });
    }
    let opts = TanhSinhOptions {
        rel_tol: 1e-14,
        max_level: 14,
        ..Default::default()
    };
    let (rep, ok) = tanh_sinh(
        |u, du, dv| (I * (2.0 * psi_z * u + beta * (du.ln() - dv.ln()))).exp(),
        0.0,
        1.0,
        opts,
    );
    if !ok && rep.abs_error_estimate > 1e-10 * rep.value.norm() {
        return Err(Error::NoConvergence {
            what: "finite_log_phase_integral",
            detail: format!("error estimate {:e}", rep.abs_error_estimate),
        });
    }
    let pref = Complex64::from_polar(-4.0 * psi_z, -psi_z);
    Ok(QuadratureReport {
        value: pref * rep.value,
        abs_error_estimate: pref.norm() * rep.abs_error_estimate,
        evaluations: rep.evaluations,
        method: QuadMethod::TanhSinh,
    })
}
