//! Independent quadrature of every amplitude integral straight from its
//! definition. Improper integrals are damped on a ladder of ε and
//! extrapolated to ε = 0; nothing here calls Γ, K or ₂F₃.

mod integrals;
mod modes;

pub use integrals::{
    bessel_type_integral, default_ladder, finite_log_phase_integral, gamma_type_contour,
    gamma_type_integral, improper_phase_integral, IntegralKind, RegularizedIntegral, LADDER_LEN, STEP_GROWTH_SLACK,
};
pub use modes::{
    atom_proper_time_integrand, mirror_coordinate_time_integrand, mode_rindler_in_minkowski,
    mode_standing_wave, trajectory, RAPIDITY_LIMIT,
};

use crate::closedform::{planck, Method, PhaseAngles, ProbabilityResult};
use crate::error::Result;
use crate::params::{DimensionlessGroups, PhysicalParams};
use crate::quad::QuadratureReport;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct AmplitudeBreakdown {
    pub i1: Complex64,
    pub i2: Complex64,
    pub i3: Complex64,
    pub total: Complex64,
    /// (ε, i1 + i2 + i3 at ε) for the regulated pieces; i3 enters unregulated
    /// when it is a finite-interval integral.
    pub epsilon_trace: Vec<(f64, Complex64)>,
    /// Sum of the error estimates of the three pieces, same units as `total`.
    pub residual: f64,
    pub reports: [QuadratureReport; 3],
}

fn cis_pow(base: f64, exponent_im: f64) -> Complex64 {
    Complex64::from_polar(1.0, exponent_im * base.ln())
}

fn zero_report() -> QuadratureReport {
    QuadratureReport {
        value: Complex64::new(0.0, 0.0),
        abs_error_estimate: 0.0,
        evaluations: 0,
        method: crate::quad::QuadMethod::Series,
    }
}

fn scaled(r: &RegularizedIntegral, factor: Complex64) -> QuadratureReport {
    QuadratureReport {
        value: factor * r.report.value,
        abs_error_estimate: factor.norm() * r.report.abs_error_estimate,
        ..r.report
    }
}

fn assemble(
    parts: [QuadratureReport; 3],
    traces: &[(&RegularizedIntegral, Complex64)],
    offset: Complex64,
    time_unit: f64,
) -> AmplitudeBreakdown {
    let n = traces.iter().map(|(r, _)| r.trace.len()).min().unwrap_or(0);
    let epsilon_trace = (0..n)
        .map(|k| {
            let eps = traces[0].0.trace[k].0;
            let v: Complex64 = traces.iter().map(|(r, f)| f * r.trace[k].1).sum::<Complex64>() + offset;
            (eps, v * time_unit)
        })
        .collect();
    let [i1, i2, i3] = parts.map(|r| r.value * time_unit);
    AmplitudeBreakdown {
        i1,
        i2,
        i3,
        total: i1 + i2 + i3,
        epsilon_trace,
        residual: parts.iter().map(|r| r.abs_error_estimate).sum::<f64>() * time_unit,
        reports: parts.map(|r| QuadratureReport {
            value: r.value * time_unit,
            abs_error_estimate: r.abs_error_estimate * time_unit,
            ..r
        }),
    }
}

/// I₁, I₂, I₃ of the accelerated atom; `time_unit` is c/a (pass 1 for the
/// dimensionless amplitudes).
pub fn atom_breakdown(gr: &DimensionlessGroups, time_unit: f64) -> Result<AmplitudeBreakdown> {
    let (al, be, ph) = (gr.alpha, gr.beta, gr.phi_z);
    let ladder = default_ladder(be.min(1.0));
    let g1 = gamma_type_integral(Complex64::new(0.0, al), 1.0, &ladder)?;
    let g2 = gamma_type_integral(Complex64::new(0.0, -al), -1.0, &ladder)?;
    let k3 = bessel_type_integral(al, be, &ladder)?;
    let f1 = cis_pow(2.0 * be, -al) * Complex64::from_polar(1.0, -2.0 * ph);
    let f2 = cis_pow(2.0 * be, al) * Complex64::from_polar(1.0, 2.0 * ph);
    let f3 = Complex64::new(-2.0, 0.0);
    Ok(assemble(
        [scaled(&g1, f1), scaled(&g2, f2), scaled(&k3, f3)],
        &[(&g1, f1), (&g2, f2), (&k3, f3)],
        Complex64::new(0.0, 0.0),
        time_unit,
    ))
}

/// I′₁, I′₂, I′₃ of the accelerated mirror; `time_unit` is 1/ω.
pub fn mirror_breakdown(gr: &DimensionlessGroups, time_unit: f64) -> Result<AmplitudeBreakdown> {
    let (al, be, ps) = (gr.alpha, gr.beta, gr.psi_z);
    let ladder = default_ladder(1.0);
    let g1 = gamma_type_integral(Complex64::new(1.0, -2.0 * be), -1.0, &ladder)?;
    let g2 = gamma_type_integral(Complex64::new(1.0, 2.0 * be), 1.0, &ladder)?;
    let third = finite_log_phase_integral(be, ps)?;
    let f1 = cis_pow(al, 2.0 * be) * Complex64::from_polar(1.0, ps);
    let f2 = cis_pow(al, -2.0 * be) * Complex64::from_polar(1.0, -ps);
    Ok(assemble(
        [scaled(&g1, f1), scaled(&g2, f2), third],
        &[(&g1, f1), (&g2, f2)],
        third.value,
        time_unit,
    ))
}

/// Ĩ₁ + Ĩ₂ for one photon emitted by the accelerated atom (no cross term).
pub fn atom_single_photon_breakdown(
    gr: &DimensionlessGroups,
    time_unit: f64,
) -> Result<AmplitudeBreakdown> {
    let (al, be, ph) = (gr.alpha, gr.beta, gr.phi_z);
    let ladder = default_ladder(1.0);
    let g1 = gamma_type_integral(Complex64::new(0.0, al), 1.0, &ladder)?;
    let g2 = gamma_type_integral(Complex64::new(0.0, -al), -1.0, &ladder)?;
    let f1 = cis_pow(be, -al) * Complex64::from_polar(1.0, -ph);
    let f2 = -cis_pow(be, al) * Complex64::from_polar(1.0, ph);
    Ok(assemble(
        [scaled(&g1, f1), scaled(&g2, f2), zero_report()],
        &[(&g1, f1), (&g2, f2)],
        Complex64::new(0.0, 0.0),
        time_unit,
    ))
}

/// J′₁ + J′₂ for one photon and the accelerated mirror; a single mode factor
/// has no overlap term, so J′₃ = 0.
pub fn mirror_single_photon_breakdown(
    gr: &DimensionlessGroups,
    time_unit: f64,
) -> Result<AmplitudeBreakdown> {
    let (al, be, ps) = (gr.alpha, gr.beta, gr.psi_z);
    let ladder = default_ladder(1.0);
    let g1 = gamma_type_integral(Complex64::new(1.0, -be), -1.0, &ladder)?;
    let g2 = gamma_type_integral(Complex64::new(1.0, be), 1.0, &ladder)?;
    let f1 = cis_pow(al, be) * Complex64::from_polar(1.0, ps);
    let f2 = -cis_pow(al, -be) * Complex64::from_polar(1.0, -ps);
    Ok(assemble(
        [scaled(&g1, f1), scaled(&g2, f2), zero_report()],
        &[(&g1, f1), (&g2, f2)],
        Complex64::new(0.0, 0.0),
        time_unit,
    ))
}

fn probability(
    gr: &DimensionlessGroups,
    b: &AmplitudeBreakdown,
    coupling: f64,
    planck_exponent: f64,
) -> Result<ProbabilityResult> {
    Ok(ProbabilityResult::from_log_body(
        coupling * coupling,
        2.0 * b.total.norm().ln(),
        Method::Oracle,
        PhaseAngles::from_groups(gr)?,
        planck(planck_exponent),
        Vec::new(),
    ))
}

/// 𝒢²|I₁ + I₂ + I₃|² with dimensionless amplitudes; `coupling_time` is 𝒢c/a.
pub fn atom_oracle_probability(gr: &DimensionlessGroups, coupling_time: f64) -> Result<ProbabilityResult> {
    probability(gr, &atom_breakdown(gr, 1.0)?, coupling_time, 2.0 * PI * gr.alpha)
}

/// 𝒢²|I′₁ + I′₂ + I′₃|² with dimensionless amplitudes; `coupling` is 𝒢/ω.
pub fn mirror_oracle_probability(gr: &DimensionlessGroups, coupling: f64) -> Result<ProbabilityResult> {
    probability(gr, &mirror_breakdown(gr, 1.0)?, coupling, 4.0 * PI * gr.beta)
}

pub fn p_exc_atom_oracle(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    atom_oracle_probability(&p.reduce(), p.coupling_time())
}

pub fn p_exc_mirror_oracle(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    mirror_oracle_probability(&p.reduce(), p.g / p.omega)
}

pub fn p_exc_atom_single_photon_oracle(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    let gr = p.reduce();
    probability(&gr, &atom_single_photon_breakdown(&gr, 1.0)?, p.coupling_time(), 2.0 * PI * gr.alpha)
}

pub fn p_exc_mirror_single_photon_oracle(p: &PhysicalParams) -> Result<ProbabilityResult> {
    let p = p.validate()?;
    let gr = p.reduce();
    probability(&gr, &mirror_single_photon_breakdown(&gr, 1.0)?, p.g / p.omega, 2.0 * PI * gr.beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{
        atom_partials, mirror_partials, p_exc_atom, p_exc_atom_single_photon, p_exc_mirror_exact,
        p_exc_mirror_single_photon, rel_difference,
    };

    #[test]
    fn atom_partials_agree() {
        let gr = DimensionlessGroups::from_atom_phase(1.0, 0.5, 0.1);
        let b = atom_breakdown(&gr, 1.0).unwrap();
        let (i12, i3) = atom_partials(&gr).unwrap().unscaled(gr.alpha);
        assert!((b.i1 + b.i2 - i12).norm() < 1e-8 * i12.abs());
        assert!((b.i3 - i3).norm() < 1e-8 * i3.abs());
        assert!((b.total - (b.i1 + b.i2 + b.i3)).norm() < 1e-15);
        assert_eq!(b.epsilon_trace.len(), LADDER_LEN);
    }

    #[test]
    fn atom_second_piece_is_conjugate_of_first() {
        let gr = DimensionlessGroups::from_atom_phase(0.6, 0.2, 0.3);
        let b = atom_breakdown(&gr, 1.0).unwrap();
        assert!((b.i2 - b.i1.conj()).norm() < 1e-10 * b.i1.norm());
    }

    #[test]
    fn atom_probability_at_unit_groups() {
        let gr = DimensionlessGroups::from_atom_phase(1.0, 0.5, 0.1);
        let o = atom_oracle_probability(&gr, 1.0).unwrap();
        let c = crate::closedform::atom_probability(&gr, 1.0, Method::AtomClosed).unwrap();
        assert!(rel_difference(o.value, c.value) < 1e-6);
        assert_eq!(o.method, Method::Oracle);
    }

    #[test]
    fn mirror_partials_agree() {
        let gr = DimensionlessGroups::from_mirror_phase(2.0, 0.6, 0.1);
        let b = mirror_breakdown(&gr, 1.0).unwrap();
        let (i12, i3) = mirror_partials(&gr).unwrap().unscaled(gr.beta);
        assert!((b.i1 + b.i2 - i12).norm() < 1e-8 * i12.abs());
        assert!((b.i3 - i3).norm() < 1e-10 * i3.norm());
    }

    #[test]
    fn reference_points() {
        let p = PhysicalParams::new(1e15, 1e4, 1e5, 0.01, 1e7).with_c(3e8);
        let o = p_exc_atom_oracle(&p).unwrap().value;
        assert!(rel_difference(o, p_exc_atom(&p).unwrap().value) < 1e-4);
        let p = PhysicalParams::new(1e15, 3.3e5, 1e9, 0.01, 1e7).with_c(3e8);
        let o = p_exc_mirror_oracle(&p).unwrap().value;
        assert!(rel_difference(o, p_exc_mirror_exact(&p).unwrap().value) < 1e-4);
        assert_eq!(p_exc_mirror_oracle(&p.with_g(0.0)).unwrap().value, 0.0);
    }

    #[test]
    fn single_photon_oracles_match_closed_forms() {
        let p = PhysicalParams::new(1e15, 3e6, 2e6, 0.02, 1e7).with_c(3e8);
        let o = p_exc_atom_single_photon_oracle(&p).unwrap().value;
        assert!(rel_difference(o, p_exc_atom_single_photon(&p).unwrap().value) < 1e-7);
        let o = p_exc_mirror_single_photon_oracle(&p).unwrap().value;
        assert!(rel_difference(o, p_exc_mirror_single_photon(&p).unwrap().value) < 1e-7);
    }

    #[test]
    fn dimensionful_scaling() {
        let p = PhysicalParams::new(1e15, 1e6, 3e6, 0.01, 1e7).with_c(3e8);
        let gr = p.reduce();
        let b = atom_breakdown(&gr, p.c / p.a).unwrap();
        let u = atom_breakdown(&gr, 1.0).unwrap();
        assert!((b.total - u.total * (p.c / p.a)).norm() < 1e-15 * b.total.norm());
    }
}
