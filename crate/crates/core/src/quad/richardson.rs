use num_complex::Complex64;

/// Result of extrapolating a ladder of regularized values to zero.
#[derive(Debug, Clone)]
pub struct Extrapolation {
    pub value: Complex64,
    /// Difference between the last two diagonal estimates.
    pub residual: f64,
    /// `|estimate_k - estimate_{k-1}|` along the ladder, k = 1..n-1.
    pub diagonal_steps: Vec<f64>,
}

impl Extrapolation {
    /// True when the diagonal steps shrink along the ladder, ignoring steps
    /// already below `noise_floor`.
    pub fn is_monotone(&self, noise_floor: f64) -> bool {
        self.diagonal_steps
            .windows(2)
            .all(|w| w[1] <= w[0] || w[1] <= noise_floor)
    }
}

/// Neville extrapolation of `(x_k, y_k)` to `x = 0` using the full ladder
/// (polynomial order = ladder length - 1).
pub fn extrapolate_to_zero(points: &[(f64, Complex64)]) -> Extrapolation {
    assert!(!points.is_empty(), "empty extrapolation ladder");
    let n = points.len();
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let mut table: Vec<Complex64> = points.iter().map(|p| p.1).collect();
    let mut diagonal = vec![table[0]];
    // After pass m, table[i] holds the interpolant through points i..=i+m at 0.
    for m in 1..n {
        for i in 0..n - m {
            let (xi, xj) = (xs[i], xs[i + m]);
            table[i] = (table[i + 1] * xi - table[i] * xj) / (xi - xj);
        }
        diagonal.push(table[0]);
    }
    let diagonal_steps: Vec<f64> = diagonal.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    Extrapolation {
        value: diagonal[n - 1],
        residual: diagonal_steps.last().copied().unwrap_or(0.0),
        diagonal_steps,
    }
}
