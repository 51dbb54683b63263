use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use num_complex::Complex64;

/// Largest |aτ/c| accepted before sinh/cosh are considered unsafe.
pub const RAPIDITY_LIMIT: f64 = 700.0;

/// Uniformly accelerated worldline: t = (c/a) sinh(aτ/c), z = (c²/a) cosh(aτ/c).
pub fn trajectory(tau: f64, a: f64, c: f64) -> Result<(f64, f64)> {
    let u = a * tau / c;
    if !(u.abs() <= RAPIDITY_LIMIT) {
        return Err(Error::DomainError {
            function: "trajectory",
            detail: format!("rapidity a*tau/c = {u:e} exceeds {RAPIDITY_LIMIT}"),
        });
    }
    Ok((c / a * u.sinh(), c * c / a * u.cosh()))
}

/// e^{-iνt - ik(z-z₀)} - e^{-iνt + ik(z-z₀)}, k = ν/c.
pub fn mode_standing_wave(nu: f64, t: f64, z: f64, z0: f64, c: f64) -> Complex64 {
    let kz = nu / c * (z - z0);
    Complex64::from_polar(1.0, -nu * t - kz) - Complex64::from_polar(1.0, -nu * t + kz)
}

fn heaviside(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// e^{iβ ln[(a/c²)(z-ct)]} Θ(z-ct) - e^{-iβ ln[(a/c²)(z+ct)]} Θ(z+ct), β = νc/a,
/// with Θ(0) = ½. A term with zero argument contributes only through Θ and
/// is dropped.
pub fn mode_rindler_in_minkowski(nu: f64, t: f64, z: f64, a: f64, c: f64) -> Complex64 {
    let beta = nu * c / a;
    let term = |arg: f64, sign: f64| {
        let h = heaviside(arg);
        if arg > 0.0 {
            Complex64::from_polar(h, sign * beta * (a / (c * c) * arg).ln())
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    term(z - c * t, 1.0) - term(z + c * t, -1.0)
}

/// e^{iωτ} conj(u(t(τ), z(τ)))²: the proper-time integrand of the accelerated
/// atom, mode evaluated on the worldline.
pub fn atom_proper_time_integrand(p: &PhysicalParams, tau: f64) -> Result<Complex64> {
    let (t, z) = trajectory(tau, p.a, p.c)?;
    let m = mode_standing_wave(p.nu, t, z, p.z0, p.c).conj();
    Ok(Complex64::from_polar(1.0, p.omega * tau) * m * m)
}

/// e^{iωt} conj(u(t, z₀))²: the coordinate-time integrand for the static atom
/// at z₀ and the accelerated mirror.
pub fn mirror_coordinate_time_integrand(p: &PhysicalParams, t: f64) -> Complex64 {
    let m = mode_rindler_in_minkowski(p.nu, t, p.z0, p.a, p.c).conj();
    Complex64::from_polar(1.0, p.omega * t) * m * m
}
