use crate::config::{Case, MethodChoice, Scale, Variable};
use accelrad::closedform::{
    p_exc_atom, p_exc_mirror_exact, p_exc_mirror_small_beta, p_exc_mirror_taylor, ProbabilityResult,
};
use accelrad::oracle::{p_exc_atom_oracle, p_exc_mirror_oracle};
use accelrad::{Error, PhysicalParams};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: Variable,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub scale: Scale,
    pub case: Case,
    pub method: MethodChoice,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !self.from.is_finite() || !self.to.is_finite() || self.from >= self.to {
            return Err(Error::Config(format!("sweep needs from < to, got {} and {}", self.from, self.to)));
        }
        if self.points < 2 {
            return Err(Error::Config(format!("sweep needs at least 2 points, got {}", self.points)));
        }
        if self.scale == Scale::Log && self.from <= 0.0 {
            return Err(Error::Config("log sweep needs from > 0".into()));
        }
        method_supported(self.case, self.method)
    }

    /// Grid values with both endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n)
            .map(|k| {
                if k == n {
                    return self.to;
                }
                let t = k as f64 / n as f64;
                match self.scale {
                    Scale::Linear => self.from + t * (self.to - self.from),
                    Scale::Log => self.from * (self.to / self.from).powf(t),
                }
            })
            .collect()
    }
}

fn method_supported(case: Case, method: MethodChoice) -> Result<(), Error> {
    match (case, method) {
        (Case::Atom, MethodChoice::Taylor | MethodChoice::SmallBeta) => Err(Error::Config(
            "taylor and small-beta apply to the mirror case only".into(),
        )),
        _ => Ok(()),
    }
}

pub fn evaluate(p: &PhysicalParams, case: Case, method: MethodChoice) -> Result<ProbabilityResult, Error> {
    method_supported(case, method)?;
    match (case, method) {
        (Case::Atom, MethodChoice::Oracle) => p_exc_atom_oracle(p),
        (Case::Atom, _) => p_exc_atom(p),
        (Case::Mirror, MethodChoice::Exact) => p_exc_mirror_exact(p),
        (Case::Mirror, MethodChoice::Taylor) => p_exc_mirror_taylor(p),
        (Case::Mirror, MethodChoice::SmallBeta) => p_exc_mirror_small_beta(p),
        (Case::Mirror, MethodChoice::Oracle) => p_exc_mirror_oracle(p),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub index: usize,
    pub variable: Variable,
    pub value: f64,
    pub outcome: Result<ProbabilityResult, Error>,
}

/// Evaluate every grid point in parallel; rows come back in grid order.
pub fn run_sweep(base: &PhysicalParams, spec: &SweepSpec) -> Vec<Row> {
    spec.grid()
        .into_par_iter()
        .enumerate()
        .map(|(index, value)| Row {
            index,
            variable: spec.variable,
            value,
            outcome: evaluate(&spec.variable.apply(base, value), spec.case, spec.method),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(scale: Scale) -> SweepSpec {
        SweepSpec {
            variable: Variable::Omega,
            from: 1e3,
            to: 1e5,
            points: 3,
            scale,
            case: Case::Atom,
            method: MethodChoice::Exact,
        }
    }

    #[test]
    fn grids() {
        let g = spec(Scale::Log).grid();
        assert_eq!((g[0], g[2]), (1e3, 1e5));
        assert!((g[1] - 1e4).abs() < 1e-9);
        assert_eq!(spec(Scale::Linear).grid(), vec![1e3, 50_500.0, 1e5]);
    }

    #[test]
    fn validation() {
        assert!(spec(Scale::Log).validate().is_ok());
        assert!(SweepSpec { points: 1, ..spec(Scale::Log) }.validate().is_err());
        assert!(SweepSpec { from: 2e5, ..spec(Scale::Log) }.validate().is_err());
        assert!(SweepSpec { from: 0.0, ..spec(Scale::Log) }.validate().is_err());
        assert!(SweepSpec { method: MethodChoice::Taylor, ..spec(Scale::Log) }.validate().is_err());
    }

    #[test]
    fn rows_keep_order_and_errors() {
        let base = PhysicalParams::new(1e15, 1e4, 1e5, 0.01, 1e7).with_c(3e8);
        let s = SweepSpec { variable: Variable::Z0, from: -1.0, to: 0.05, points: 8, scale: Scale::Linear, ..spec(Scale::Linear) };
        let rows = run_sweep(&base, &s);
        assert!(rows.iter().enumerate().all(|(i, r)| r.index == i));
        assert!(rows[0].outcome.is_err());
        assert!(rows[7].outcome.is_ok());
    }
}
