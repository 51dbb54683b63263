//! Literal evaluations of the fully expanded probability expressions, secants
//! included. They are plain double-precision formulas without any log-space
//! protection and exist to be compared against the amplitude assemblies.

use super::{b_f, theta_atom, theta_mirror};
use crate::error::Result;
use crate::params::PhysicalParams;
use crate::special::{bessel_k_imag_order, gamma_imag_axis};
use std::f64::consts::PI;

fn sec(x: f64) -> f64 {
    1.0 / x.cos()
}

/// (4𝒢²c²/a²) e^{-πα} |Γ(iα)|² cos²θ (1 - 2 sec θ K_{iα}(2β) / |Γ(iα)|)².
pub fn atom_first_form(p: &PhysicalParams) -> Result<f64> {
    let gr = p.reduce();
    let theta = theta_atom(&gr)?;
    let gamma = gamma_imag_axis(gr.alpha)?.modulus;
    let k = bessel_k_imag_order(gr.alpha, 2.0 * gr.beta)?;
    let bracket = 1.0 - 2.0 * sec(theta) * k / gamma;
    Ok(4.0 * p.coupling_time().powi(2) * (-PI * gr.alpha).exp() * gamma * gamma
        * theta.cos().powi(2)
        * bracket
        * bracket)
}

/// (8π𝒢²c/aω) cos²θ/(e^{2πα} - 1) (1 - 4 sec θ K/|Γ| + (4α/π) sec²θ K² sinh πα).
pub fn atom_second_form(p: &PhysicalParams) -> Result<f64> {
    let gr = p.reduce();
    let theta = theta_atom(&gr)?;
    let gamma = gamma_imag_axis(gr.alpha)?.modulus;
    let k = bessel_k_imag_order(gr.alpha, 2.0 * gr.beta)?;
    let s = sec(theta);
    let bracket = 1.0 - 4.0 * s * k / gamma
        + 4.0 * gr.alpha / PI * s * s * k * k * (PI * gr.alpha).sinh();
    Ok(8.0 * PI * p.g * p.g * p.c / (p.a * p.omega) * theta.cos().powi(2)
        / (2.0 * PI * gr.alpha).exp_m1()
        * bracket)
}

/// Both sides of 4e^{-πα}|Γ(iα)|² = (8π/α)/(e^{2πα} - 1).
pub fn planck_identity_sides(alpha: f64) -> Result<(f64, f64)> {
    let gamma = gamma_imag_axis(alpha)?.modulus;
    let lhs = 4.0 * (-PI * alpha).exp() * gamma * gamma;
    let rhs = 8.0 * PI / alpha / (2.0 * PI * alpha).exp_m1();
    Ok((lhs, rhs))
}

/// The ν = ω/2 accelerated-atom expansion.
pub fn atom_swapped_form(p: &PhysicalParams) -> Result<f64> {
    atom_second_form(&p.with_nu(0.5 * p.omega))
}

/// The bracketed exact mirror expansion with χ = √(2πβ sinh 2πβ).
pub fn mirror_exact_form(p: &PhysicalParams) -> Result<f64> {
    let gr = p.reduce();
    let (beta, psi) = (gr.beta, gr.psi_z);
    let theta = theta_mirror(&gr)?;
    let bf = b_f(&gr)?;
    let chi = (2.0 * PI * beta * (2.0 * PI * beta).sinh()).sqrt();
    let d = -(-2.0 * PI * beta).exp_m1();
    let s = sec(theta);
    let bracket = 1.0
        + 4.0 * bf.modulus * chi * psi * s / d * (bf.zeta - psi).cos()
        + 4.0 * bf.modulus.powi(2) * chi * chi * psi * psi * s * s / (d * d);
    Ok(16.0 * PI * p.g * p.g * beta / (p.omega * p.omega) * theta.cos().powi(2)
        / (4.0 * PI * beta).exp_m1()
        * bracket)
}

fn taylor_form_at(p: &PhysicalParams, prefactor: f64) -> Result<f64> {
    let gr = p.reduce();
    let (beta, psi) = (gr.beta, gr.psi_z);
    let theta = theta_mirror(&gr)?;
    let gamma = gamma_imag_axis(2.0 * beta)?.modulus;
    let r = (psi / beta) * (PI * beta).exp() * sec(theta) / (1.0 + beta * beta) / gamma;
    let first = 1.0 + r * (psi.cos() - beta * psi.sin());
    let second = r * (beta * psi.cos() + psi.sin());
    Ok(prefactor * theta.cos().powi(2) / (4.0 * PI * beta).exp_m1() * (first * first + second * second))
}

/// The leading-order mirror expansion.
pub fn mirror_taylor_form(p: &PhysicalParams) -> Result<f64> {
    let beta = p.reduce().beta;
    taylor_form_at(p, 16.0 * PI * p.g * p.g * beta / (p.omega * p.omega))
}

/// The ν = ω/2 mirror expansion, its lone θ′ read as θ″.
pub fn mirror_swapped_form(p: &PhysicalParams) -> Result<f64> {
    let q = p.with_nu(0.5 * p.omega);
    taylor_form_at(&q, 8.0 * PI * p.g * p.g * p.c / (p.a * p.omega))
}

/// The small-β mirror expansion with its secants.
pub fn mirror_small_beta_form(p: &PhysicalParams) -> Result<f64> {
    let gr = p.reduce();
    let (beta, psi) = (gr.beta, gr.psi_z);
    let theta = theta_mirror(&gr)?;
    let gamma = gamma_imag_axis(2.0 * beta)?.modulus;
    let r = (psi / beta) * sec(theta) / gamma;
    let curly = 1.0 + 2.0 * PI * beta * (1.0 + 1.0 / PI) * psi.sin() + psi.sin().powi(2);
    Ok(4.0 * p.g * p.g * theta.cos().powi(2) / (p.omega * p.omega)
        * (1.0 + 2.0 * r + r * r * curly))
}
