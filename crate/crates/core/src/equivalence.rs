//! The frequency-exchange comparison between the two configurations.
//!
//! Dual photons: the atom at ν = ω/2 against the mirror at ν = ω/2, whose
//! Planck factors and angles coincide but whose brackets do not.
//! Single photon: the same machinery with the cross term removed, compared
//! after ν ↔ ω, which for the two single-photon probabilities is an identity
//! only at ν = ω; the control is therefore evaluated there.

use crate::closedform::{
    display, ln_planck, p_exc_atom_swapped, p_exc_mirror_exact, p_exc_mirror_single_photon,
    p_exc_mirror_swapped, rel_difference, ProbabilityResult,
};
use crate::error::Result;
use crate::oracle::{p_exc_atom_single_photon_oracle, p_exc_mirror_single_photon_oracle};
use crate::params::PhysicalParams;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Control and dual comparisons are judged against these.
pub const DUAL_MIN_DIFFERENCE: f64 = 0.01;
pub const CONTROL_MAX_DIFFERENCE: f64 = 1e-3;
const PREFACTOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub p_atom_swapped: ProbabilityResult,
    pub p_mirror_swapped: ProbabilityResult,
    pub p_mirror_exact_swapped: ProbabilityResult,
    /// Between `p_atom_swapped` and `p_mirror_swapped`.
    pub rel_difference: f64,
    /// Between `p_atom_swapped` and `p_mirror_exact_swapped`.
    pub rel_difference_exact: f64,
    pub angle_match: bool,
    pub planck_match: bool,
    /// Secant-form evaluations of the two compared expressions, when finite.
    pub atom_display: Option<f64>,
    pub mirror_display: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Nonequivalent,
    NotDistinguished,
    Inconclusive,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Nonequivalent => "NONEQUIVALENT",
            Verdict::NotDistinguished => "NOT_DISTINGUISHED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// NONEQUIVALENT iff the dual difference exceeds ten times the control's.
pub fn verdict(dual: &EquivalenceReport, control: &EquivalenceReport) -> Verdict {
    let all_zero = [&dual.p_atom_swapped, &dual.p_mirror_swapped, &control.p_atom_swapped, &control.p_mirror_swapped]
        .iter()
        .all(|r| r.value == 0.0 && r.log10_value == f64::NEG_INFINITY);
    if all_zero {
        Verdict::Inconclusive
    } else if dual.rel_difference > 10.0 * control.rel_difference {
        Verdict::Nonequivalent
    } else {
        Verdict::NotDistinguished
    }
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    x == y || (x - y).abs() <= tol * x.abs().max(y.abs())
}

/// Logs of (8π𝒢²c/aω)/(e^{2πα} - 1) and (16π𝒢²β/ω²)/(e^{4πβ} - 1) at β = α/2.
fn dual_prefactors(p: &PhysicalParams) -> (f64, f64) {
    let alpha = p.omega * p.c / p.a;
    let beta = 0.5 * alpha;
    let g2 = p.g * p.g;
    let atom = (8.0 * PI * g2 * p.c / (p.a * p.omega)).ln() + ln_planck(2.0 * PI * alpha);
    let mirror = (16.0 * PI * g2 * beta / (p.omega * p.omega)).ln() + ln_planck(4.0 * PI * beta);
    (atom, mirror)
}

fn prefactors_match(lx: f64, ly: f64) -> bool {
    lx == ly || (lx - ly).abs() <= PREFACTOR_TOL
}

fn finite(r: Result<f64>) -> Option<f64> {
    r.ok().filter(|v| v.is_finite())
}

fn difference(x: &ProbabilityResult, y: &ProbabilityResult) -> f64 {
    if x.value == 0.0 && y.value == 0.0 && x.log10_value.is_finite() && y.log10_value.is_finite() {
        crate::closedform::rel_difference_log10(x.log10_value, y.log10_value)
    } else {
        rel_difference(x.value, y.value)
    }
}

/// Both dual-photon probabilities at ν = ω/2 (the input ν is ignored).
pub fn nonequivalence_report(p: &PhysicalParams) -> Result<EquivalenceReport> {
    let p = p.validate()?;
    let atom = p_exc_atom_swapped(&p)?;
    let mirror = p_exc_mirror_swapped(&p)?;
    let exact = p_exc_mirror_exact(&p.with_nu(0.5 * p.omega))?;
    let theta_bar = atom.angles.theta;
    let theta_dprime = mirror.angles.theta_prime;
    let (la, lm) = dual_prefactors(&p);
    Ok(EquivalenceReport {
        rel_difference: difference(&atom, &mirror),
        rel_difference_exact: difference(&atom, &exact),
        angle_match: close(theta_bar, theta_dprime, 1e-12),
        planck_match: prefactors_match(la, lm),
        atom_display: finite(display::atom_swapped_form(&p)),
        mirror_display: finite(display::mirror_swapped_form(&p)),
        p_atom_swapped: atom,
        p_mirror_swapped: mirror,
        p_mirror_exact_swapped: exact,
    })
}

/// Single-photon probabilities of both configurations by quadrature at ν = ω.
/// `p_mirror_exact_swapped` carries the closed-form mirror value.
pub fn single_photon_control(p: &PhysicalParams) -> Result<EquivalenceReport> {
    let p = p.validate()?.with_nu(p.omega);
    let p = p.validate()?;
    let atom = p_exc_atom_single_photon_oracle(&p)?;
    let mirror = p_exc_mirror_single_photon_oracle(&p)?;
    let closed = p_exc_mirror_single_photon(&p)?;
    let gr = p.reduce();
    let atom_angle = gr.phi_z + gr.alpha * gr.beta.ln() - crate::special::arg_gamma_imag(gr.alpha)?;
    let mirror_angle = gr.psi_z + gr.beta * gr.alpha.ln() - crate::special::arg_gamma_imag(gr.beta)?;
    let g2 = p.g * p.g;
    let la = (8.0 * PI * g2 * p.c / (p.a * p.omega)).ln() + ln_planck(2.0 * PI * gr.alpha);
    let lm = (8.0 * PI * g2 * gr.beta / (p.omega * p.omega)).ln() + ln_planck(2.0 * PI * gr.beta);
    Ok(EquivalenceReport {
        rel_difference: difference(&atom, &mirror),
        rel_difference_exact: difference(&atom, &closed),
        angle_match: close(atom_angle, mirror_angle, 1e-12),
        planck_match: prefactors_match(la, lm),
        atom_display: finite(crate::closedform::p_exc_atom_single_photon(&p).map(|r| r.value)),
        mirror_display: Some(closed.value),
        p_atom_swapped: atom,
        p_mirror_swapped: mirror,
        p_mirror_exact_swapped: closed,
    })
}

/// One report per ω, in grid order; failures stay in place.
pub fn sweep_nonequivalence(p: &PhysicalParams, omega_grid: &[f64]) -> Vec<Result<EquivalenceReport>> {
    omega_grid
        .par_iter()
        .map(|&w| nonequivalence_report(&p.with_omega(w)))
        .collect()
}

/// Ten log-spaced ω from 10⁵ to 10⁷ rad/s.
pub fn documented_omega_grid() -> Vec<f64> {
    (0..10).map(|k| 10f64.powf(5.0 + 2.0 * k as f64 / 9.0)).collect()
}

/// a = 10¹⁵ m/s², z₀ = 0.01 m, 𝒢 = 10⁷ rad/s, c = 3×10⁸ m/s, ω = 10⁶ rad/s.
pub fn reference_params() -> PhysicalParams {
    PhysicalParams::new(1e15, 5e5, 1e6, 0.01, 1e7).with_c(crate::params::SPEED_OF_LIGHT_ROUNDED)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_point() {
        let r = nonequivalence_report(&reference_params()).unwrap();
        assert!(r.angle_match);
        assert!(r.planck_match);
        assert!(r.rel_difference > 0.1, "{}", r.rel_difference);
        assert!((0.0..=1.0).contains(&r.rel_difference));
        let d = r.atom_display.unwrap();
        assert!(rel_difference(d, r.p_atom_swapped.value) < 1e-10);
    }

    #[test]
    fn input_nu_is_ignored() {
        let p = reference_params();
        let a = nonequivalence_report(&p).unwrap();
        let b = nonequivalence_report(&p.with_nu(123.0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn control_matches() {
        let c = single_photon_control(&reference_params()).unwrap();
        assert!(c.planck_match && c.angle_match);
        assert!(c.rel_difference < CONTROL_MAX_DIFFERENCE, "{}", c.rel_difference);
        assert!(c.rel_difference_exact < 1e-6);
    }

    #[test]
    fn zero_coupling() {
        let p = reference_params().with_g(0.0);
        let d = nonequivalence_report(&p).unwrap();
        let c = single_photon_control(&p).unwrap();
        assert_eq!(d.rel_difference, 0.0);
        assert_eq!(c.rel_difference, 0.0);
        assert!(d.planck_match);
        assert_eq!(verdict(&d, &c), Verdict::Inconclusive);
    }

    #[test]
    fn singleton_sweep() {
        let p = reference_params();
        let s = sweep_nonequivalence(&p, &[p.omega]);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].as_ref().unwrap(), &nonequivalence_report(&p).unwrap());
    }

    #[test]
    fn sweep_keeps_errors_in_place() {
        let p = reference_params();
        let s = sweep_nonequivalence(&p, &[1e6, -1.0, 2e6]);
        assert!(s[0].is_ok() && s[1].is_err() && s[2].is_ok());
    }

    #[test]
    fn grid_shape() {
        let g = documented_omega_grid();
        assert_eq!(g.len(), 10);
        assert!((g[0] - 1e5).abs() < 1e-6 && (g[9] - 1e7).abs() < 1e-3);
    }
}
