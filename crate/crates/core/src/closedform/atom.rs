use super::{
    ln_planck, planck, Method, PhaseAngles, ProbabilityResult, Warning, LOG_SPACE_THRESHOLD,
    PHASE_PRECISION_LIMIT,
};
use crate::error::Result;
use crate::params::{DimensionlessGroups, PhysicalParams};
use crate::special::{
    arg_gamma_imag, bessel_k_imag_order_scaled, gamma_imag_axis, LARGE_ORDER,
};
use std::f64::consts::PI;

/// θ = 2φ + α ln(2β) - arg Γ(iα).
pub fn theta_atom(gr: &DimensionlessGroups) -> Result<f64> {
    Ok(2.0 * gr.phi_z + gr.alpha * (2.0 * gr.beta).ln() - arg_gamma_imag(gr.alpha)?)
}

/// Closed-form partial amplitudes of the accelerated-atom case, in units of
/// c/a and with the common factor e^{-πα} pulled out:
/// I₁ + I₂ = (c/a) e^{-πα} `i12_scaled`, I₃ = (c/a) e^{-πα} `i3_scaled`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomPartials {
    pub i12_scaled: f64,
    pub i3_scaled: f64,
    pub theta: f64,
    /// e^{πα/2} |Γ(iα)|.
    pub gamma_scaled: f64,
    /// e^{πα/2} K_{iα}(2β).
    pub bessel_scaled: f64,
}

impl AtomPartials {
    /// Ordinary (unscaled) values in units of c/a.
    pub fn unscaled(&self, alpha: f64) -> (f64, f64) {
        let e = (-PI * alpha).exp();
        (e * self.i12_scaled, e * self.i3_scaled)
    }
}

pub fn atom_partials(gr: &DimensionlessGroups) -> Result<AtomPartials> {
    let theta = theta_atom(gr)?;
    let gamma_scaled = gamma_imag_axis(gr.alpha)?.scaled_modulus(gr.alpha);
    let bessel_scaled = bessel_k_imag_order_scaled(gr.alpha, 2.0 * gr.beta)?;
    Ok(AtomPartials {
        i12_scaled: 2.0 * gamma_scaled * theta.cos(),
        i3_scaled: -4.0 * bessel_scaled,
        theta,
        gamma_scaled,
        bessel_scaled,
    })
}

fn phase_warnings(gr: &DimensionlessGroups) -> Vec<Warning> {
    let mut w = Vec::new();
    if (gr.alpha * (2.0 * gr.beta).ln()).abs() >= PHASE_PRECISION_LIMIT
        || (gr.alpha * gr.alpha.ln()).abs() >= PHASE_PRECISION_LIMIT
    {
        w.push(Warning::PhasePrecision);
    }
    w
}

/// 𝒢²|I₁ + I₂ + I₃|² from groups; `coupling_time` is 𝒢c/a.
pub fn atom_probability(
    gr: &DimensionlessGroups,
    coupling_time: f64,
    method: Method,
) -> Result<ProbabilityResult> {
    let parts = atom_partials(gr)?;
    let angles = PhaseAngles::from_groups(gr)?;
    let mut warnings = phase_warnings(gr);
    let exponent = 2.0 * PI * gr.alpha;
    if exponent > LOG_SPACE_THRESHOLD {
        warnings.push(Warning::LogSpace);
    }
    if gr.alpha > LARGE_ORDER {
        warnings.push(Warning::LargeBesselOrder);
    }
    let sum = parts.i12_scaled + parts.i3_scaled;
    let ln_body = -exponent + 2.0 * sum.abs().ln();
    Ok(ProbabilityResult::from_log_body(
        coupling_time * coupling_time,
        ln_body,
        method,
        angles,
        planck(exponent),
        warnings,
    ))
}

pub fn p_exc_atom(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    atom_probability(&p.reduce(), p.coupling_time(), Method::AtomClosed)
}

/// The accelerated-atom probability with the photon frequency pinned to ω/2.
pub fn p_exc_atom_swapped(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let q = p.validate()?.with_nu(0.5 * p.omega);
    atom_probability(&q.reduce(), q.coupling_time(), Method::AtomSwapped)
}

/// Single-photon emission by the accelerated atom:
/// (8π𝒢²c/aω) sin²(φ + α ln β - arg Γ(iα)) / (e^{2πα} - 1).
pub fn p_exc_atom_single_photon(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    let gr = p.reduce();
    let angle = gr.phi_z + gr.alpha * gr.beta.ln() - arg_gamma_imag(gr.alpha)?;
    let exponent = 2.0 * PI * gr.alpha;
    let mut warnings = phase_warnings(&gr);
    if exponent > LOG_SPACE_THRESHOLD {
        warnings.push(Warning::LogSpace);
    }
    let ln_body = (8.0 * PI * p.c / (p.a * p.omega)).ln() + 2.0 * angle.sin().abs().ln()
        + ln_planck(exponent);
    let mut angles = PhaseAngles::from_groups(&gr)?;
    angles.theta = angle;
    Ok(ProbabilityResult::from_log_body(
        p.g * p.g,
        ln_body,
        Method::AtomClosed,
        angles,
        planck(exponent),
        warnings,
    ))
}
