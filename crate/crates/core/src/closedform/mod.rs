//! Closed-form excitation probabilities.
//!
//! Every authoritative value is assembled as 𝒢²|Σ I|² from the closed-form
//! partial amplitudes, carried in a scaled form so that the exponentially
//! small factors never underflow before the logarithm is taken. The fully
//! expanded textbook displays live in [`display`] and serve as regression
//! targets.

mod atom;
pub mod display;
mod mirror;

pub use atom::{
    atom_partials, atom_probability, p_exc_atom, p_exc_atom_single_photon, p_exc_atom_swapped,
    theta_atom, AtomPartials,
};
pub use mirror::{
    b_f, mirror_exact_probability, mirror_partials, mirror_taylor_probability,
    p_exc_mirror_exact, p_exc_mirror_single_photon, p_exc_mirror_small_beta,
    p_exc_mirror_swapped, p_exc_mirror_taylor, taylor_third_amplitude, theta_mirror, BfValue,
    MirrorPartials,
};

use crate::error::Result;
use crate::params::DimensionlessGroups;
use crate::special::arg_gamma_imag;
use std::f64::consts::LN_10;
use std::fmt;

/// Exponent magnitude beyond which results are assembled in log space.
pub const LOG_SPACE_THRESHOLD: f64 = 200.0;

/// Size of log-frequency phase terms beyond which trig evaluation loses digits.
pub const PHASE_PRECISION_LIMIT: f64 = 1e8;

/// Below this |cos θ| the displayed secant forms are numerically singular.
pub const SECANT_THRESHOLD: f64 = 1e-8;

/// θ, θ′ and the two exchanged angles, all evaluated at the same groups.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseAngles {
    pub theta: f64,
    pub theta_prime: f64,
    pub theta_bar: f64,
    pub theta_dprime: f64,
}

impl PhaseAngles {
    pub fn from_groups(gr: &DimensionlessGroups) -> Result<Self> {
        let half = gr.half_frequency_exchange();
        Ok(Self {
            theta: theta_atom(gr)?,
            theta_prime: theta_mirror(gr)?,
            theta_bar: theta_atom(&half)?,
            theta_dprime: theta_mirror(&half)?,
        })
    }
}

/// ψ + α ln α - arg Γ(iα): the angle shared by both cases once ν = ω/2.
pub fn theta_exchanged(gr: &DimensionlessGroups) -> Result<f64> {
    Ok(gr.psi_z + gr.alpha * gr.alpha.ln() - arg_gamma_imag(gr.alpha)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    AtomClosed,
    MirrorExact,
    MirrorTaylor,
    MirrorSmallBeta,
    AtomSwapped,
    MirrorSwapped,
    Oracle,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::AtomClosed => "atom_closed",
            Method::MirrorExact => "mirror_exact",
            Method::MirrorTaylor => "mirror_taylor",
            Method::MirrorSmallBeta => "mirror_small_beta",
            Method::AtomSwapped => "atom_swapped",
            Method::MirrorSwapped => "mirror_swapped",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Warning {
    /// The probability is below the smallest double; only log10_value is meaningful.
    Underflow,
    LogSpace,
    OutsideTaylorRegime,
    OutsideSmallBetaRegime,
    PhasePrecision,
    LargeBesselOrder,
    SecantSingular,
}

impl Warning {
    pub fn tag(&self) -> &'static str {
        match self {
            Warning::Underflow => "underflow",
            Warning::LogSpace => "log_space",
            Warning::OutsideTaylorRegime => "outside_taylor_regime",
            Warning::OutsideSmallBetaRegime => "outside_small_beta_regime",
            Warning::PhasePrecision => "phase_precision",
            Warning::LargeBesselOrder => "large_bessel_order",
            Warning::SecantSingular => "secant_singular",
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityResult {
    pub value: f64,
    pub log10_value: f64,
    pub method: Method,
    pub angles: PhaseAngles,
    /// The 1/(e^{x} - 1) factor of the relevant case, as actually evaluated.
    pub planck_factor: f64,
    pub warnings: Vec<Warning>,
}

impl ProbabilityResult {
    /// Assemble `coupling² · exp(ln_body)`, keeping the logarithm when the
    /// value underflows.
    pub(crate) fn from_log_body(
        coupling_sq: f64,
        ln_body: f64,
        method: Method,
        angles: PhaseAngles,
        planck_factor: f64,
        mut warnings: Vec<Warning>,
    ) -> Self {
        let body = ln_body.exp();
        let value = coupling_sq * body;
        let log10_value = (coupling_sq.ln() + ln_body) / LN_10;
        if value == 0.0 && coupling_sq > 0.0 && ln_body.is_finite() {
            warnings.push(Warning::Underflow);
        }
        warnings.sort();
        warnings.dedup();
        Self {
            value,
            log10_value,
            method,
            angles,
            planck_factor,
            warnings,
        }
    }

    pub fn has_warning(&self, w: Warning) -> bool {
        self.warnings.contains(&w)
    }

    /// The angle that governs this method's spatial oscillation.
    pub fn primary_angle(&self) -> f64 {
        match self.method {
            Method::AtomClosed => self.angles.theta,
            Method::AtomSwapped => self.angles.theta_bar,
            Method::MirrorSwapped => self.angles.theta_dprime,
            Method::MirrorExact | Method::MirrorTaylor | Method::MirrorSmallBeta => {
                self.angles.theta_prime
            }
            Method::Oracle => self.angles.theta,
        }
    }

    pub fn warning_tags(&self) -> String {
        self.warnings.iter().map(|w| w.tag()).collect::<Vec<_>>().join(";")
    }
}

/// |P - P′| / max(P, P′), zero when both vanish.
pub fn rel_difference(p: f64, q: f64) -> f64 {
    let m = p.abs().max(q.abs());
    if m == 0.0 {
        0.0
    } else {
        (p - q).abs() / m
    }
}

/// Like [`rel_difference`] but from log10 values, for results that underflow.
pub fn rel_difference_log10(lp: f64, lq: f64) -> f64 {
    if lp == f64::NEG_INFINITY && lq == f64::NEG_INFINITY {
        return 0.0;
    }
    let (hi, lo) = if lp >= lq { (lp, lq) } else { (lq, lp) };
    -(((lo - hi) * LN_10).exp_m1())
}

/// ln(1/(e^{x} - 1)) for x > 0 without overflow.
pub fn ln_planck(x: f64) -> f64 {
    -x - (-(-x).exp_m1()).ln()
}

pub fn planck(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel_difference_conventions() {
        assert_eq!(rel_difference(0.0, 0.0), 0.0);
        assert_eq!(rel_difference(1.0, 0.0), 1.0);
        assert!((rel_difference(1.0, 0.9) - 0.1).abs() < 1e-15);
        assert!((rel_difference_log10(-300.0, -300.0 + 0.9f64.log10()) - 0.1).abs() < 1e-12);
        assert_eq!(rel_difference_log10(f64::NEG_INFINITY, f64::NEG_INFINITY), 0.0);
    }

    #[test]
    fn planck_logs() {
        for x in [1e-3, 0.5, 3.0, 40.0] {
            assert!((ln_planck(x) - planck(x).ln()).abs() < 1e-13);
        }
        assert!((ln_planck(2000.0) + 2000.0).abs() < 1e-12);
    }

    #[test]
    fn exchanged_angles_coincide() {
        for (alpha, psi) in [(0.3, 0.01), (3.0, 0.2), (300.0, 1.0 / 30.0)] {
            let gr = DimensionlessGroups::from_mirror_phase(alpha, 0.7, psi);
            let a = PhaseAngles::from_groups(&gr).unwrap();
            let t = theta_exchanged(&gr).unwrap();
            assert!((a.theta_bar - a.theta_dprime).abs() <= 1e-12 * t.abs().max(1.0));
            assert!((a.theta_bar - t).abs() <= 1e-12 * t.abs().max(1.0));
        }
    }
}
