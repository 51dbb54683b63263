use super::{
    ln_planck, planck, Method, PhaseAngles, ProbabilityResult, Warning, LOG_SPACE_THRESHOLD,
    PHASE_PRECISION_LIMIT, SECANT_THRESHOLD,
};
use crate::error::Result;
use crate::params::{DimensionlessGroups, PhysicalParams};
use crate::special::{arg_gamma_imag, gamma_imag_axis, hyp2f3, ln_abs_gamma_imag};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Small-β approximation is flagged above this β.
pub const SMALL_BETA_LIMIT: f64 = 0.1;

/// θ′ = ψ + 2β ln α - arg Γ(2iβ).
pub fn theta_mirror(gr: &DimensionlessGroups) -> Result<f64> {
    Ok(gr.psi_z + 2.0 * gr.beta * gr.alpha.ln() - arg_gamma_imag(2.0 * gr.beta)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BfValue {
    pub value: Complex64,
    pub zeta: f64,
    pub modulus: f64,
}

/// ₂F₃(a₁,a₂; ½,1,3/2; -ψ²) + iψ(1+iβ) ₂F₃(a₂,a₃; 3/2,3/2,2; -ψ²)
/// with a_k = k/2 + iβ/2.
pub fn b_f(gr: &DimensionlessGroups) -> Result<BfValue> {
    let ib = Complex64::new(0.0, 0.5 * gr.beta);
    let (a1, a2, a3) = (ib + 0.5, ib + 1.0, ib + 1.5);
    let z = -gr.psi_z * gr.psi_z;
    let f1 = hyp2f3(a1, a2, 0.5, 1.0, 1.5, z)?;
    let f2 = hyp2f3(a2, a3, 1.5, 1.5, 2.0, z)?;
    let value = f1 + Complex64::new(0.0, gr.psi_z) * Complex64::new(1.0, gr.beta) * f2;
    Ok(BfValue {
        value,
        zeta: value.arg(),
        modulus: value.norm(),
    })
}

/// Closed-form partial amplitudes of the accelerated-mirror case in units of
/// 1/ω, with e^{-πβ} pulled out: I′₁ + I′₂ = e^{-πβ} `i12_scaled` / ω and
/// I′₃ = e^{-πβ} `i3_scaled` / ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorPartials {
    pub i12_scaled: f64,
    pub i3_scaled: Complex64,
    pub theta_prime: f64,
    /// e^{πβ} |Γ(2iβ)|.
    pub gamma_scaled: f64,
    pub bf: BfValue,
    /// √(2πβ sinh 2πβ); infinite once sinh overflows.
    pub chi: f64,
}

impl MirrorPartials {
    pub fn unscaled(&self, beta: f64) -> (f64, Complex64) {
        let e = (-PI * beta).exp();
        (e * self.i12_scaled, self.i3_scaled * e)
    }
}

fn one_minus_exp(x: f64) -> f64 {
    -(-x).exp_m1()
}

pub fn mirror_partials(gr: &DimensionlessGroups) -> Result<MirrorPartials> {
    let beta = gr.beta;
    let theta_prime = theta_mirror(gr)?;
    let gamma_scaled = gamma_imag_axis(2.0 * beta)?.scaled_modulus(2.0 * beta);
    let bf = b_f(gr)?;
    let i12_scaled = -4.0 * beta * gamma_scaled * (-PI * beta).exp() * theta_prime.cos();
    let i3_scaled = Complex64::from_polar(1.0, -gr.psi_z) * bf.value
        * (-8.0 * PI * beta * gr.psi_z / one_minus_exp(2.0 * PI * beta));
    let chi = (2.0 * PI * beta * (2.0 * PI * beta).sinh()).sqrt();
    Ok(MirrorPartials {
        i12_scaled,
        i3_scaled,
        theta_prime,
        gamma_scaled,
        bf,
        chi,
    })
}

fn common_warnings(gr: &DimensionlessGroups) -> Vec<Warning> {
    let mut w = Vec::new();
    if (2.0 * gr.beta * gr.alpha.ln()).abs() >= PHASE_PRECISION_LIMIT {
        w.push(Warning::PhasePrecision);
    }
    if 4.0 * PI * gr.beta > LOG_SPACE_THRESHOLD {
        w.push(Warning::LogSpace);
    }
    w
}

/// 𝒢²|I′₁ + I′₂ + I′₃|² from groups; `coupling` is 𝒢/ω.
pub fn mirror_exact_probability(
    gr: &DimensionlessGroups,
    coupling: f64,
    method: Method,
) -> Result<ProbabilityResult> {
    let parts = mirror_partials(gr)?;
    let angles = PhaseAngles::from_groups(gr)?;
    let warnings = common_warnings(gr);
    let sum = parts.i3_scaled + parts.i12_scaled;
    let ln_body = -2.0 * PI * gr.beta + 2.0 * sum.norm().ln();
    Ok(ProbabilityResult::from_log_body(
        coupling * coupling,
        ln_body,
        method,
        angles,
        planck(4.0 * PI * gr.beta),
        warnings,
    ))
}

/// ω I′₃ with the finite-interval integrand expanded to first order:
/// -4ψ e^{-iψ} / (1 + iβ).
pub fn taylor_third_amplitude(gr: &DimensionlessGroups) -> Complex64 {
    Complex64::from_polar(-4.0 * gr.psi_z, -gr.psi_z) / Complex64::new(1.0, gr.beta)
}

/// The leading-order form: 𝒢²|I′₁ + I′₂ + I′₃⁽⁰⁾|², which is the displayed
/// Taylor expression with the secant multiplied through.
pub fn mirror_taylor_probability(
    gr: &DimensionlessGroups,
    coupling: f64,
    method: Method,
) -> Result<ProbabilityResult> {
    let theta_prime = theta_mirror(gr)?;
    let gamma_scaled = gamma_imag_axis(2.0 * gr.beta)?.scaled_modulus(2.0 * gr.beta);
    let angles = PhaseAngles::from_groups(gr)?;
    let mut warnings = common_warnings(gr);
    if 2.0 * gr.psi_z >= 1.0 {
        warnings.push(Warning::OutsideTaylorRegime);
    }
    if theta_prime.cos().abs() < SECANT_THRESHOLD {
        warnings.push(Warning::SecantSingular);
    }
    let i12 = -4.0 * gr.beta * gamma_scaled * (-2.0 * PI * gr.beta).exp() * theta_prime.cos();
    let sum = taylor_third_amplitude(gr) + i12;
    Ok(ProbabilityResult::from_log_body(
        coupling * coupling,
        2.0 * sum.norm().ln(),
        method,
        angles,
        planck(4.0 * PI * gr.beta),
        warnings,
    ))
}

fn mirror_coupling(p: &PhysicalParams) -> f64 {
    p.g / p.omega
}

pub fn p_exc_mirror_exact(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    mirror_exact_probability(&p.reduce(), mirror_coupling(&p), Method::MirrorExact)
}

pub fn p_exc_mirror_taylor(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    mirror_taylor_probability(&p.reduce(), mirror_coupling(&p), Method::MirrorTaylor)
}

/// The leading-order mirror probability at ν = ω/2; its θ′ becomes θ″.
pub fn p_exc_mirror_swapped(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let q = p.validate()?.with_nu(0.5 * p.omega);
    mirror_taylor_probability(&q.reduce(), mirror_coupling(&q), Method::MirrorSwapped)
}

/// (4𝒢²/ω²) cos²θ′ [1 + 2r sec θ′ + r² sec²θ′ {1 + 2πβ(1 + 1/π) sin ψ + sin²ψ}]
/// with r = (ψ/β) / |Γ(-2iβ)|, evaluated with the secant multiplied through.
pub fn p_exc_mirror_small_beta(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    let gr = p.reduce();
    let theta_prime = theta_mirror(&gr)?;
    let angles = PhaseAngles::from_groups(&gr)?;
    let mut warnings = common_warnings(&gr);
    if gr.beta > SMALL_BETA_LIMIT {
        warnings.push(Warning::OutsideSmallBetaRegime);
    }
    if theta_prime.cos().abs() < SECANT_THRESHOLD {
        warnings.push(Warning::SecantSingular);
    }
    let ln_r = (gr.psi_z / gr.beta).ln() - ln_abs_gamma_imag(2.0 * gr.beta);
    let m = ln_r.max(0.0);
    let (r, e) = ((ln_r - m).exp(), (-m).exp());
    let s = gr.psi_z.sin();
    let curly = 1.0 + 2.0 * PI * gr.beta * (1.0 + 1.0 / PI) * s + s * s;
    let cos = theta_prime.cos();
    let inner = (e * e * cos * cos + 2.0 * e * r * cos + r * r * curly).max(0.0);
    let ln_body = 4f64.ln() + 2.0 * m + inner.ln();
    Ok(ProbabilityResult::from_log_body(
        mirror_coupling(&p).powi(2),
        ln_body,
        Method::MirrorSmallBeta,
        angles,
        planck(4.0 * PI * gr.beta),
        warnings,
    ))
}

/// Single-photon emission near the accelerated mirror:
/// (8π𝒢²β/ω²) sin²(ψ + β ln α - arg Γ(iβ)) / (e^{2πβ} - 1).
pub fn p_exc_mirror_single_photon(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    let gr = p.reduce();
    let angle = gr.psi_z + gr.beta * gr.alpha.ln() - arg_gamma_imag(gr.beta)?;
    let exponent = 2.0 * PI * gr.beta;
    let mut warnings = Vec::new();
    if exponent > LOG_SPACE_THRESHOLD {
        warnings.push(Warning::LogSpace);
    }
    if (gr.beta * gr.alpha.ln()).abs() >= PHASE_PRECISION_LIMIT {
        warnings.push(Warning::PhasePrecision);
    }
    let ln_body = (8.0 * PI * gr.beta).ln() + 2.0 * angle.sin().abs().ln() + ln_planck(exponent);
    let mut angles = PhaseAngles::from_groups(&gr)?;
    angles.theta_prime = angle;
    Ok(ProbabilityResult::from_log_body(
        mirror_coupling(&p).powi(2),
        ln_body,
        Method::MirrorExact,
        angles,
        planck(exponent),
        warnings,
    ))
}
