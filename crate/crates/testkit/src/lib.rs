//! Exact rational partial sums of generalized hypergeometric series.
//!
//! Every f64 input converts to a rational without rounding, so the only
//! approximation is truncation, which is pushed far below double precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::ops::{Add, Mul};

#[derive(Clone, Debug, PartialEq)]
pub struct RatComplex {
    pub re: BigRational,
    pub im: BigRational,
}

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

impl RatComplex {
    pub fn from_f64(re: f64, im: f64) -> Self {
        Self { re: rat(re), im: rat(im) }
    }

    pub fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self { re: BigRational::one(), im: BigRational::zero() }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(0.0), self.im.to_f64().unwrap_or(0.0))
    }

    fn add_int(&self, n: u64) -> Self {
        Self { re: &self.re + BigRational::from_integer(BigInt::from(n)), im: self.im.clone() }
    }

    fn div_real(&self, d: &BigRational) -> Self {
        Self { re: &self.re / d, im: &self.im / d }
    }

    fn magnitude(&self) -> f64 {
        let (r, i) = self.to_f64();
        r.hypot(i)
    }
}

impl Add for &RatComplex {
    type Output = RatComplex;
    fn add(self, o: &RatComplex) -> RatComplex {
        RatComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Mul for &RatComplex {
    type Output = RatComplex;
    fn mul(self, o: &RatComplex) -> RatComplex {
        RatComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

/// Σₙ Π(aᵢ)ₙ / Π(bⱼ)ₙ · zⁿ/n! summed exactly until the newest term is below
/// 1e-40 of the running sum (checked on 3 consecutive terms) or `max_terms`.
/// Panics if a lower parameter is a non-positive integer.
pub fn pfq_partial_sum(a: &[(f64, f64)], b: &[f64], z: (f64, f64), max_terms: usize) -> (f64, f64) {
    assert!(b.iter().all(|&x| !(x <= 0.0 && x.fract() == 0.0)), "pole in lower parameter");
    let a: Vec<RatComplex> = a.iter().map(|&(r, i)| RatComplex::from_f64(r, i)).collect();
    let b: Vec<BigRational> = b.iter().map(|&x| rat(x)).collect();
    let z = RatComplex::from_f64(z.0, z.1);
    let mut term = RatComplex::one();
    let mut sum = RatComplex::one();
    let mut quiet = 0;
    for n in 0..max_terms as u64 {
        let mut next = &term * &z;
        for ai in &a {
            next = &next * &ai.add_int(n);
        }
        let mut den = BigRational::from_integer(BigInt::from(n + 1));
        for bj in &b {
            den *= bj + BigRational::from_integer(BigInt::from(n));
        }
        term = next.div_real(&den);
        if term.re.is_zero() && term.im.is_zero() {
            break;
        }
        sum = &sum + &term;
        if term.magnitude() < 1e-40 * sum.magnitude() {
            quiet += 1;
            if quiet == 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    sum.to_f64()
}

/// ₂F₃(a₁, a₂; b₁, b₂, b₃; z) for real z.
pub fn hyp2f3_reference(a1: (f64, f64), a2: (f64, f64), b: [f64; 3], z: f64) -> (f64, f64) {
    pfq_partial_sum(&[a1, a2], &b, (z, 0.0), 5000)
}

/// ₁F₁(a; b; z).
pub fn hyp1f1_reference(a: (f64, f64), b: f64, z: (f64, f64)) -> (f64, f64) {
    pfq_partial_sum(&[a], &[b], z, 5000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_series() {
        let (re, im) = pfq_partial_sum(&[], &[], (1.0, 0.0), 200);
        assert!((re - std::f64::consts::E).abs() < 1e-15);
        assert_eq!(im, 0.0);
    }

    #[test]
    fn kummer_with_equal_parameters_is_exponential() {
        let (re, im) = hyp1f1_reference((2.0, 0.0), 2.0, (0.0, 1.0));
        assert!((re - 1f64.cos()).abs() < 1e-15);
        assert!((im - 1f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn terminating_series() {
        // ₂F₃(-2, 1; 1, 1, 1; z) = 1 - 2z + z²/4
        let (re, _) = hyp2f3_reference((-2.0, 0.0), (1.0, 0.0), [1.0, 1.0, 1.0], 0.5);
        assert!((re - 0.0625).abs() < 1e-16);
    }
}
