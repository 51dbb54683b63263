use super::{QuadMethod, QuadratureReport};
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

// QUADPACK qk21 abscissae and weights; the odd-indexed abscissae are the
// 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_319_954,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
pub struct GkOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evaluations: usize,
}

impl Default for GkOptions {
    fn default() -> Self {
        Self {
            abs_tol: 0.0,
            rel_tol: 1e-12,
            max_evaluations: 200_000,
        }
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_sum = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        abs_sum += pair.norm() * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).norm();
    // Roundoff floor, as in QUADPACK.
    let floor = 50.0 * f64::EPSILON * abs_sum * half.abs();
    Segment {
        a,
        b,
        value,
        error: raw.max(floor),
    }
}

/// Globally adaptive 21-point Gauss-Kronrod quadrature over the consecutive
/// intervals delimited by `breaks` (at least two points, increasing).
pub fn adaptive_gk21<F: FnMut(f64) -> Complex64>(
    mut f: F,
    breaks: &[f64],
    opts: GkOptions,
) -> (QuadratureReport, bool) {
    assert!(breaks.len() >= 2, "need at least one interval");
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    for w in breaks.windows(2) {
        heap.push(gk21(&mut f, w[0], w[1]));
        evaluations += 21;
    }
    let mut converged = false;
    loop {
        let total: Complex64 = heap.iter().map(|s| s.value).sum();
        let error: f64 = heap.iter().map(|s| s.error).sum();
        let target = opts.abs_tol.max(opts.rel_tol * total.norm());
        if error <= target {
            converged = true;
        }
        let top_floor = heap
            .peek()
            .map(|s| (s.b - s.a).abs() <= 1e-14 * s.a.abs().max(s.b.abs()).max(1e-300))
            .unwrap_or(true);
        if converged || evaluations + 42 > opts.max_evaluations || top_floor {
            let report = QuadratureReport {
                value: total,
                abs_error_estimate: error,
                evaluations,
                method: QuadMethod::GaussKronrod,
            };
            return (report, converged);
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(gk21(&mut f, worst.a, mid));
        heap.push(gk21(&mut f, mid, worst.b));
        evaluations += 42;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_rule_is_exact_to_degree_31() {
        let mut f_deg = 0;
        while f_deg <= 31 {
            let d = f_deg;
            let seg = gk21(&mut |x: f64| Complex64::new(x.powi(d), 0.0), 0.0, 1.0);
            assert!((seg.value.re - 1.0 / (d as f64 + 1.0)).abs() < 1e-15, "degree {d}");
            f_deg += 1;
        }
    }

    #[test]
    fn gauss_subrule_is_exact_to_degree_19() {
        for d in 0..=19 {
            let seg = gk21(&mut |x: f64| Complex64::new(x.powi(d), 0.0), -1.0, 1.0);
            let want = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
            // both subrules exact, so the difference is pure roundoff
            assert!(seg.error < 1e-13, "degree {d}");
            assert!((seg.value.re - want).abs() < 1e-14);
        }
    }

    #[test]
    fn adapts_to_peaked_integrand() {
        let f = |x: f64| Complex64::new(1.0 / (1e-4 + x * x), 0.0);
        let (rep, ok) = adaptive_gk21(f, &[-1.0, 1.0], GkOptions::default());
        assert!(ok);
        let want = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((rep.value.re - want).abs() < 1e-10 * want);
    }

    #[test]
    fn reports_budget_exhaustion() {
        let f = |x: f64| Complex64::new((1.0 / x).sin(), 0.0);
        let opts = GkOptions {
            rel_tol: 1e-15,
            max_evaluations: 500,
            ..Default::default()
        };
        let (rep, ok) = adaptive_gk21(f, &[1e-6, 1.0], opts);
        assert!(!ok);
        assert!(rep.evaluations <= 500);
    }
}
