//! Physical inputs and the dimensionless groups every formula depends on.
//!
//! Units are SI throughout. Both `nu` (photon) and `omega` (atomic transition)
//! are **angular** frequencies in rad/s: they enter the amplitudes as bare
//! phases `e^{i nu t}` and `e^{i omega tau}`, so quoted "Hz" figures are read
//! as rad/s without a 2π conversion.

use crate::error::{Error, Result};

/// Exact SI speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Rounded speed of light used by the figure presets.
pub const SPEED_OF_LIGHT_ROUNDED: f64 = 3.0e8;

/// One physical configuration of the atom-mirror system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Relative acceleration, m/s².
    pub a: f64,
    /// Photon angular frequency, rad/s.
    pub nu: f64,
    /// Atomic transition angular frequency, rad/s.
    pub omega: f64,
    /// Fixed position of the static partner (mirror or atom), m.
    pub z0: f64,
    /// Effective atom-field coupling, rad/s.
    pub g: f64,
    /// Speed of light, m/s.
    pub c: f64,
}

impl PhysicalParams {
    pub fn new(a: f64, nu: f64, omega: f64, z0: f64, g: f64) -> Self {
        Self {
            a,
            nu,
            omega,
            z0,
            g,
            c: SPEED_OF_LIGHT,
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn with_nu(mut self, nu: f64) -> Self {
        self.nu = nu;
        self
    }

    pub fn with_omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }

    pub fn with_z0(mut self, z0: f64) -> Self {
        self.z0 = z0;
        self
    }

    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    /// Distance c²/a from the origin to the acceleration horizon.
    pub fn horizon(&self) -> f64 {
        self.c * self.c / self.a
    }

    /// Returns the same parameters if every invariant holds.
    pub fn validate(self) -> Result<Self> {
        for (name, value) in [("a", self.a), ("nu", self.nu), ("omega", self.omega), ("c", self.c)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::NonPositiveInput { name, value });
            }
        }
        for (name, value) in [("g", self.g), ("z0", self.z0)] {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::NegativeInput { name, value });
            }
        }
        let horizon = self.horizon();
        if self.z0 >= horizon {
            return Err(Error::WedgeViolation {
                z0: self.z0,
                horizon,
            });
        }
        Ok(self)
    }

    pub fn reduce(&self) -> DimensionlessGroups {
        DimensionlessGroups {
            alpha: self.omega * self.c / self.a,
            beta: self.nu * self.c / self.a,
            phi_z: self.nu * self.z0 / self.c,
            psi_z: self.omega * self.z0 / self.c,
        }
    }

    /// The coupling expressed in units of the acceleration time c/a.
    pub fn coupling_time(&self) -> f64 {
        self.g * self.c / self.a
    }
}

/// The four combinations `ωc/a`, `νc/a`, `νz₀/c`, `ωz₀/c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessGroups {
    pub alpha: f64,
    pub beta: f64,
    pub phi_z: f64,
    pub psi_z: f64,
}

impl DimensionlessGroups {
    /// Builds a consistent set from `alpha`, `beta` and the atom-side phase
    /// `phi_z`; `psi_z` follows from `alpha * phi_z = beta * psi_z`.
    pub fn from_atom_phase(alpha: f64, beta: f64, phi_z: f64) -> Self {
        Self {
            alpha,
            beta,
            phi_z,
            psi_z: alpha * phi_z / beta,
        }
    }

    /// Same as [`from_atom_phase`](Self::from_atom_phase) but keyed on `psi_z`.
    pub fn from_mirror_phase(alpha: f64, beta: f64, psi_z: f64) -> Self {
        Self {
            alpha,
            beta,
            phi_z: beta * psi_z / alpha,
            psi_z,
        }
    }

    /// Groups after the exchange `nu = omega / 2`.
    pub fn half_frequency_exchange(&self) -> Self {
        Self {
            alpha: self.alpha,
            beta: 0.5 * self.alpha,
            phi_z: 0.5 * self.psi_z,
            psi_z: self.psi_z,
        }
    }

    /// Groups after the single-photon resonance `nu = omega`.
    pub fn resonant_exchange(&self) -> Self {
        Self {
            alpha: self.alpha,
            beta: self.alpha,
            phi_z: self.psi_z,
            psi_z: self.psi_z,
        }
    }

    /// Checks positivity and the `alpha * phi_z == beta * psi_z` identity.
    pub fn check(&self) -> Result<()> {
        for (name, value) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("phi_z", self.phi_z),
            ("psi_z", self.psi_z),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::NonPositiveInput { name, value });
            }
        }
        let lhs = self.alpha * self.phi_z;
        let rhs = self.beta * self.psi_z;
        if (lhs - rhs).abs() > 1e-12 * lhs.abs().max(rhs.abs()) {
            return Err(Error::Config(format!(
                "inconsistent groups: alpha*phi_z = {lhs:e} but beta*psi_z = {rhs:e}"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reference() -> PhysicalParams {
        PhysicalParams::new(1e15, 1e4, 1e9, 0.01, 1e7).with_c(3e8)
    }

    #[test]
    fn reference_parameters_validate() {
        assert_eq!(reference().validate(), Ok(reference()));
    }

    #[test]
    fn wedge_violation() {
        let p = reference().with_z0(1.0);
        let p = PhysicalParams { a: 1e18, ..p };
        match p.validate() {
            Err(Error::WedgeViolation { horizon, .. }) => assert!((horizon - 0.09).abs() < 1e-15),
            other => panic!("expected wedge violation, got {other:?}"),
        }
    }

    #[test]
    fn zero_frequency_rejected() {
        assert!(matches!(
            reference().with_nu(0.0).validate(),
            Err(Error::NonPositiveInput { name: "nu", .. })
        ));
        assert!(matches!(
            reference().with_omega(-1.0).validate(),
            Err(Error::NonPositiveInput { name: "omega", .. })
        ));
        assert!(reference().with_g(0.0).validate().is_ok());
        assert!(reference().with_g(-1.0).validate().is_err());
        assert!(reference().with_nu(f64::NAN).validate().is_err());
    }

    #[test]
    fn reduce_reference_parameters() {
        let gr = reference().reduce();
        assert!((gr.alpha - 300.0).abs() < 1e-12);
        assert!((gr.beta - 3e-3).abs() < 1e-18);
        assert!((gr.phi_z - 1e-2 / 3e4).abs() < 1e-20);
        assert!((gr.psi_z - 1.0 / 30.0).abs() < 1e-16);
        assert!((gr.alpha * gr.phi_z - 1e-4).abs() < 1e-16);
        assert!((gr.beta * gr.psi_z - 1e-4).abs() < 1e-16);
        gr.check().unwrap();
    }

    #[test]
    fn log_term_vanishes_at_a_equal_two_nu_c() {
        let p = reference();
        let p = PhysicalParams { a: 2.0 * p.nu * p.c, ..p };
        let gr = p.reduce();
        assert_eq!((1.0 / (2.0 * gr.beta)).ln(), 0.0);
    }

    #[test]
    fn exchanges() {
        let gr = reference().reduce();
        let h = gr.half_frequency_exchange();
        assert_eq!(h.beta, 150.0);
        h.check().unwrap();
        let r = gr.resonant_exchange();
        assert_eq!(r.beta, r.alpha);
        r.check().unwrap();
    }

    proptest! {
        #[test]
        fn validate_is_idempotent(a in 1e10f64..1e18, nu in 1.0f64..1e9, om in 1.0f64..1e10, frac in 0.0f64..0.999) {
            let p = PhysicalParams::new(a, nu, om, 0.0, 1e6);
            let p = p.with_z0(frac * p.horizon());
            let once = p.validate().unwrap();
            prop_assert_eq!(once.validate().unwrap(), once);
        }

        #[test]
        fn reduce_scaling(lambda in 0.01f64..100.0, a in 1e12f64..1e16, nu in 1e2f64..1e8, om in 1e2f64..1e10) {
            let p = PhysicalParams::new(a, nu, om, 0.01, 1e7).with_c(3e8);
            let q = PhysicalParams { a: lambda * a, nu: lambda * nu, omega: lambda * om, z0: 0.01 / lambda, ..p };
            let (gp, gq) = (p.reduce(), q.reduce());
            let close = |x: f64, y: f64| (x - y).abs() <= 1e-14 * x.abs();
            prop_assert!(close(gp.alpha, gq.alpha));
            prop_assert!(close(gp.beta, gq.beta));
            prop_assert!(close(gq.phi_z, q.nu * q.z0 / q.c));
            prop_assert!(close(gq.psi_z, q.omega * q.z0 / q.c));
            prop_assert!(close(gp.phi_z, gq.phi_z));
        }
    }
}
