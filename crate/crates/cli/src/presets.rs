//! Figure presets: a = 10¹⁵ m/s², z₀ = 0.01 m, 𝒢 = 10⁷ rad/s, c = 3×10⁸ m/s.
//! The sweep ranges are choices of this tool.

use crate::config::{Case, MethodChoice, Scale, Variable};
use crate::sweep::SweepSpec;
use accelrad::{PhysicalParams, SPEED_OF_LIGHT_ROUNDED};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Atom case, ν = 10⁴, ω swept over [10³, 3×10⁷].
    Fig1,
    /// Mirror case, ω = 10⁹, ν swept over [10³, 10⁷].
    Fig2,
    /// As fig2 with the small-β form.
    Fig3,
}

pub const FIG_POINTS: usize = 400;

impl Preset {
    pub fn params(&self) -> PhysicalParams {
        let base = PhysicalParams::new(1e15, 1e4, 1e9, 0.01, 1e7).with_c(SPEED_OF_LIGHT_ROUNDED);
        match self {
            Preset::Fig1 => base.with_omega(1e5),
            Preset::Fig2 | Preset::Fig3 => base,
        }
    }

    pub fn spec(&self) -> SweepSpec {
        match self {
            Preset::Fig1 => SweepSpec {
                variable: Variable::Omega,
                from: 1e3,
                to: 3e7,
                points: FIG_POINTS,
                scale: Scale::Log,
                case: Case::Atom,
                method: MethodChoice::Exact,
            },
            Preset::Fig2 | Preset::Fig3 => SweepSpec {
                variable: Variable::Nu,
                from: 1e3,
                to: 1e7,
                points: FIG_POINTS,
                scale: Scale::Log,
                case: Case::Mirror,
                method: if *self == Preset::Fig2 {
                    MethodChoice::Exact
                } else {
                    MethodChoice::SmallBeta
                },
            },
        }
    }
}
