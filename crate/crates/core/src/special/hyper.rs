use crate::error::{Error, Result};
use num_complex::Complex64;

pub const MAX_TERMS: usize = 10_000;
const SMALL_RUN: usize = 3;

/// Σ (a)_n / (b)_n zⁿ/n! by multiplicative term recursion.
pub(crate) fn hyp_series(a: &[Complex64], b: &[f64], z: Complex64) -> Result<Complex64> {
    for (i, &bi) in b.iter().enumerate() {
        if bi <= 0.0 && bi == bi.round() {
            return Err(Error::ParameterPole { index: i + 1, value: bi });
        }
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let mut num = z;
        for ai in a {
            num *= ai + nf;
        }
        let mut den = nf + 1.0;
        for bi in b {
            den *= bi + nf;
        }
        term *= num / den;
        sum += term;
        if term.norm() < 1e-16 * sum.norm() || term.norm() == 0.0 {
            small += 1;
            if small >= SMALL_RUN {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence {
        what: "hypergeometric series",
        detail: format!("{MAX_TERMS} terms exhausted at z = {z}"),
    })
}

/// ₂F₃(a1, a2; b1, b2, b3; z) for real lower parameters and real argument.
pub fn hyp2f3(a1: Complex64, a2: Complex64, b1: f64, b2: f64, b3: f64, z: f64) -> Result<Complex64> {
    hyp_series(&[a1, a2], &[b1, b2, b3], Complex64::new(z, 0.0))
}
