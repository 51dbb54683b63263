use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_78;

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += *c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + HALF_LN_2PI + sum.ln()
}

/// log(1 + w) without cancellation for small |w|.
fn ln_1p(w: Complex64) -> Complex64 {
    let u = w + 1.0;
    if u == Complex64::new(1.0, 0.0) {
        w
    } else {
        u.ln() * w / (u - 1.0)
    }
}

/// Principal branch of ln Γ(z), continuous off the negative real axis.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::DomainError {
            function: "ln_gamma_complex",
            detail: format!("non-finite argument {z}"),
        });
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::PoleError { re: z.re, im: z.im });
    }
    if z.im < 0.0 {
        return ln_gamma_complex(z.conj()).map(|v| v.conj());
    }
    if z.re >= 0.5 {
        return Ok(lanczos(z));
    }
    // Reflection; for Im z >= 0 this branch of ln sin(πz) yields the principal ln Γ.
    let i = Complex64::new(0.0, 1.0);
    let e = (2.0 * PI * i * z).exp();
    let ln_sin = -i * PI * z + i * (PI / 2.0) - std::f64::consts::LN_2 + ln_1p(-e);
    Ok(PI.ln() - ln_sin - lanczos(1.0 - z))
}

pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    ln_gamma_complex(z).map(|v| v.exp())
}

/// Γ(iy) split into modulus and argument, with the log-modulus kept for
/// arguments where the modulus itself underflows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImagAxisGamma {
    pub modulus: f64,
    pub ln_modulus: f64,
    /// Continuous argument, i.e. Im ln Γ(iy); not reduced mod 2π.
    pub argument: f64,
}

impl ImagAxisGamma {
    /// e^{π|y|/2} |Γ(iy)|, finite for every y.
    pub fn scaled_modulus(&self, y: f64) -> f64 {
        (self.ln_modulus + 0.5 * PI * y.abs()).exp()
    }
}

/// ln |Γ(iy)| = ½ ln(π / (y sinh πy)), arranged to stay finite for large |y|.
pub fn ln_abs_gamma_imag(y: f64) -> f64 {
    let y = y.abs();
    // y sinh(πy) = y e^{πy} (1 - e^{-2πy}) / 2
    let ln_sinh = PI * y + (-(-2.0 * PI * y).exp_m1()).ln() - std::f64::consts::LN_2;
    0.5 * (PI.ln() - y.ln() - ln_sinh)
}

pub fn gamma_imag_axis(y: f64) -> Result<ImagAxisGamma> {
    if y == 0.0 || !y.is_finite() {
        return Err(Error::DomainError {
            function: "gamma_imag_axis",
            detail: format!("y must be finite and nonzero, got {y}"),
        });
    }
    let ln_modulus = ln_abs_gamma_imag(y);
    let argument = ln_gamma_complex(Complex64::new(0.0, y))?.im;
    Ok(ImagAxisGamma {
        modulus: ln_modulus.exp(),
        ln_modulus,
        argument,
    })
}

/// arg Γ(iy), continuous in y.
pub fn arg_gamma_imag(y: f64) -> Result<f64> {
    gamma_imag_axis(y).map(|g| g.argument)
}
