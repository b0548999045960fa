//! One-dimensional DCT-I pair on an equidistant `N`-interval grid, its
//! continuous extension, the closed-form kernel and spectral derivatives.
//!
//! Grid knots are `t_k = k * T0 / N` for `k = 0..=N`. The forward transform is
//!
//! ```text
//! a_j = sum_k (C_{N,j} C_{N,k} / 2N) g_k cos(pi j k / N)
//! ```
//!
//! and the continuous extension is `f_N(t) = sum_j a_j cos(pi j t / T0)`,
//! which reproduces every sample exactly at the knots.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::tolerance::{DOMAIN_SLACK, KERNEL_GUARD};

/// Which discrete transform a set of coefficients came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Dct1,
    Dft,
}

/// `N + 1` real samples on the equidistant grid over `[0, T0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction1D {
    samples: Vec<f64>,
    interval_length: f64,
}

impl GridFunction1D {
    pub fn new(samples: Vec<f64>, interval_length: f64) -> Result<Self> {
        if samples.len() < 2 {
            return domain(format!(
                "grid function needs at least 2 samples, got {}",
                samples.len()
            ));
        }
        check_interval(interval_length)?;
        if let Some(k) = samples.iter().position(|v| !v.is_finite()) {
            return domain(format!("sample {k} is not finite"));
        }
        Ok(Self {
            samples,
            interval_length,
        })
    }

    /// Samples `f` at the `n + 1` knots of `[0, interval_length]`.
    pub fn from_fn(n: usize, interval_length: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n == 0 {
            return domain("interval count must be at least 1");
        }
        check_interval(interval_length)?;
        let samples = (0..=n).map(|k| f(knot(k, n, interval_length))).collect();
        Self::new(samples, interval_length)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    /// Number of grid intervals `N`.
    pub fn n_intervals(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn interval_length(&self) -> f64 {
        self.interval_length
    }

    pub fn knot(&self, k: usize) -> f64 {
        knot(k, self.n_intervals(), self.interval_length)
    }

    pub fn knots(&self) -> Vec<f64> {
        (0..=self.n_intervals()).map(|k| self.knot(k)).collect()
    }
}

/// DCT-I coefficients `a_0 ..= a_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    coefficients: Vec<f64>,
    interval_length: f64,
}

impl CoefficientVector {
    pub fn new(coefficients: Vec<f64>, interval_length: f64) -> Result<Self> {
        if coefficients.len() < 2 {
            return domain(format!(
                "coefficient vector needs at least 2 entries, got {}",
                coefficients.len()
            ));
        }
        check_interval(interval_length)?;
        if let Some(j) = coefficients.iter().position(|v| !v.is_finite()) {
            return domain(format!("coefficient {j} is not finite"));
        }
        Ok(Self {
            coefficients,
            interval_length,
        })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn n_intervals(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn interval_length(&self) -> f64 {
        self.interval_length
    }

    pub fn kind(&self) -> TransformKind {
        TransformKind::Dct1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixVariant {
    /// `D_N`, maps samples to coefficients.
    Analysis,
    /// `Psi_N = {cos(pi j k / N)}`, maps coefficients to samples.
    Synthesis,
}

/// Dense `(N+1) x (N+1)` transform matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformMatrix {
    entries: Vec<f64>,
    n_intervals: usize,
    variant: MatrixVariant,
}

impl TransformMatrix {
    pub fn n_intervals(&self) -> usize {
        self.n_intervals
    }

    pub fn dim(&self) -> usize {
        self.n_intervals + 1
    }

    pub fn variant(&self) -> MatrixVariant {
        self.variant
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim() + col]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        let d = self.dim();
        if v.len() != d {
            return domain(format!(
                "vector length {} does not match matrix size {d}",
                v.len()
            ));
        }
        Ok(self
            .entries
            .chunks_exact(d)
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect())
    }
}

/// Size of the conjugacy class at knot `k`: 1 at the endpoints, 2 inside.
pub fn class_weight(n: usize, k: usize) -> Result<u32> {
    if n == 0 {
        return domain("interval count must be at least 1");
    }
    if k > n {
        return domain(format!("knot index {k} outside 0..={n}"));
    }
    Ok(weight(n, k))
}

/// The analysis matrix `D_N`.
pub fn dct_matrix(n: usize) -> Result<TransformMatrix> {
    if n == 0 {
        return domain("interval count must be at least 1");
    }
    let table = CosTable::new(n);
    let d = n + 1;
    let mut entries = vec![0.0; d * d];
    for j in 0..d {
        for k in 0..d {
            let w = f64::from(weight(n, j) * weight(n, k)) / (2 * n) as f64;
            entries[j * d + k] = w * table.cos(j * k);
        }
    }
    Ok(TransformMatrix {
        entries,
        n_intervals: n,
        variant: MatrixVariant::Analysis,
    })
}

/// The synthesis matrix `Psi_N`, the inverse of `D_N`.
pub fn synthesis_matrix(n: usize) -> Result<TransformMatrix> {
    if n == 0 {
        return domain("interval count must be at least 1");
    }
    let table = CosTable::new(n);
    let d = n + 1;
    let mut entries = vec![0.0; d * d];
    for j in 0..d {
        for k in 0..d {
            entries[j * d + k] = table.cos(j * k);
        }
    }
    Ok(TransformMatrix {
        entries,
        n_intervals: n,
        variant: MatrixVariant::Synthesis,
    })
}

pub fn forward(g: &GridFunction1D) -> CoefficientVector {
    let coefficients = analyze(g.samples());
    CoefficientVector {
        coefficients,
        interval_length: g.interval_length,
    }
}

pub fn inverse_on_grid(a: &CoefficientVector) -> GridFunction1D {
    let samples = synthesize(a.coefficients());
    GridFunction1D {
        samples,
        interval_length: a.interval_length,
    }
}

/// Continuous extension `f_N(t)` for `t` in `[0, T0]`.
pub fn evaluate(a: &CoefficientVector, t: f64) -> Result<f64> {
    let s = normalized(t, a.interval_length)?;
    Ok(cosine_series(a.coefficients(), s))
}

/// Evaluates the continuous extension directly from the samples using the
/// closed-form kernel
///
/// ```text
/// A_{N,k}(t) = (-1)^k C_{N,k} / 2N * sin(pi N t) sin(pi t) / (cos(pi t_k) - cos(pi t))
/// ```
///
/// Within [`KERNEL_GUARD`] of a knot the plain cosine series is used instead.
pub fn evaluate_kernel(g: &GridFunction1D, t: f64) -> Result<f64> {
    let s = normalized(t, g.interval_length)?;
    let n = g.n_intervals();
    let nf = n as f64;

    // The nearest knot's term is a ratio of two small quantities; both must
    // come from the same offset `delta` or their rounding errors do not cancel.
    let ns = nf * s;
    let nearest = ns.round();
    let delta = (ns - nearest) / nf;
    let near_k = nearest as usize;

    let mut denominators = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let sk = k as f64 / nf;
        let d = if k == near_k {
            2.0 * (0.5 * PI * (2.0 * sk + delta)).sin() * (0.5 * PI * delta).sin()
        } else {
            cos_difference(sk, s)
        };
        if d.abs() < KERNEL_GUARD {
            return Ok(cosine_series(&analyze(g.samples()), s));
        }
        denominators.push(d);
    }

    let sign = if near_k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let numerator = sign * (PI * nf * delta).sin() * (PI * s).sin();

    let total = g
        .samples()
        .iter()
        .zip(&denominators)
        .enumerate()
        .map(|(k, (gk, d))| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * f64::from(weight(n, k)) * gk / d
        })
        .sum::<f64>();
    Ok(total * numerator / (2.0 * nf))
}

/// Derivative of the continuous extension at the interior knot `t_m`,
/// computed from the samples without forming the coefficients.
pub fn derivative_at_knot(g: &GridFunction1D, m: usize) -> Result<f64> {
    let n = g.n_intervals();
    if m == 0 || m >= n {
        return domain(format!(
            "derivative at knot {m} is only defined for interior knots 1..={}",
            n.saturating_sub(1)
        ));
    }
    let nf = n as f64;
    let sm = m as f64 / nf;
    let (sin_m, cos_m) = (PI * sm).sin_cos();

    let mut sum = 0.0;
    for (k, gk) in g.samples().iter().enumerate() {
        if k == m {
            continue;
        }
        let u = gk / cos_difference(k as f64 / nf, sm);
        let sign = if (k + m).is_multiple_of(2) { 1.0 } else { -1.0 };
        sum += sign * f64::from(weight(n, k)) * u;
    }
    let value = 0.5 * PI * sin_m * sum + PI * cos_m / (2.0 * sin_m) * g.samples()[m];
    Ok(value / g.interval_length)
}

/// Term-by-term derivative of the continuous extension on the open interval.
pub fn derivative_series(a: &CoefficientVector, t: f64) -> Result<f64> {
    let t0 = a.interval_length;
    if !(t > 0.0 && t < t0) {
        return domain(format!("derivative requires 0 < t < {t0}, got {t}"));
    }
    let s = t / t0;
    let sum: f64 = a
        .coefficients()
        .iter()
        .enumerate()
        .map(|(j, aj)| -aj * PI * j as f64 * (PI * j as f64 * s).sin())
        .sum();
    Ok(sum / t0)
}

/// Weighted discrete form `sum_k C_{N,k} f_k g_k`.
pub fn discrete_form(f: &GridFunction1D, g: &GridFunction1D) -> Result<f64> {
    let n = f.n_intervals();
    if g.n_intervals() != n {
        return domain(format!(
            "grid functions have different interval counts ({n} vs {})",
            g.n_intervals()
        ));
    }
    if f.interval_length != g.interval_length {
        return domain("grid functions have different interval lengths");
    }
    Ok(f.samples()
        .iter()
        .zip(g.samples())
        .enumerate()
        .map(|(k, (a, b))| f64::from(weight(n, k)) * a * b)
        .sum())
}

/// The basis function `psi_m(t) = cos(pi m t / T0)` sampled on the `n`-interval grid.
pub fn basis_samples(m: usize, n: usize, interval_length: f64) -> Result<GridFunction1D> {
    if n == 0 {
        return domain("interval count must be at least 1");
    }
    let table = CosTable::new(n);
    GridFunction1D::new((0..=n).map(|k| table.cos(m * k)).collect(), interval_length)
}

pub(crate) fn weight(n: usize, k: usize) -> u32 {
    if k == 0 || k == n {
        1
    } else {
        2
    }
}

pub(crate) fn knot(k: usize, n: usize, interval_length: f64) -> f64 {
    if k == n {
        interval_length
    } else {
        k as f64 * interval_length / n as f64
    }
}

/// DCT-I analysis of raw samples (`N + 1` values).
pub(crate) fn analyze(samples: &[f64]) -> Vec<f64> {
    let n = samples.len() - 1;
    let table = CosTable::new(n);
    let scale = 1.0 / (2 * n) as f64;
    (0..=n)
        .map(|j| {
            let s: f64 = samples
                .iter()
                .enumerate()
                .map(|(k, g)| f64::from(weight(n, k)) * g * table.cos(j * k))
                .sum();
            f64::from(weight(n, j)) * scale * s
        })
        .collect()
}

pub(crate) fn synthesize(coefficients: &[f64]) -> Vec<f64> {
    let n = coefficients.len() - 1;
    let table = CosTable::new(n);
    (0..=n)
        .map(|k| {
            coefficients
                .iter()
                .enumerate()
                .map(|(j, a)| a * table.cos(j * k))
                .sum()
        })
        .collect()
}

/// `sum_j a_j cos(pi j s)` for normalized `s`.
pub(crate) fn cosine_series(coefficients: &[f64], s: f64) -> f64 {
    coefficients
        .iter()
        .enumerate()
        .map(|(j, a)| a * (PI * j as f64 * s).cos())
        .sum()
}

/// Maps `t` in `[0, T0]` onto `[0, 1]`, clamping round-off overshoot.
pub(crate) fn normalized(t: f64, interval_length: f64) -> Result<f64> {
    let slack = DOMAIN_SLACK * interval_length;
    if !t.is_finite() || t < -slack || t > interval_length + slack {
        return domain(format!("t = {t} outside [0, {interval_length}]"));
    }
    Ok((t / interval_length).clamp(0.0, 1.0))
}

fn check_interval(interval_length: f64) -> Result<()> {
    if !(interval_length.is_finite() && interval_length > 0.0) {
        return domain(format!(
            "interval length must be positive and finite, got {interval_length}"
        ));
    }
    Ok(())
}

/// `cos(pi a) - cos(pi b)` in product form, accurate when `a` is close to `b`.
fn cos_difference(a: f64, b: f64) -> f64 {
    2.0 * (0.5 * PI * (a + b)).sin() * (0.5 * PI * (b - a)).sin()
}

/// `cos(pi r / N)` for integer `r`, reduced modulo `2N` so that symmetric
/// entries come out bit-identical.
pub(crate) struct CosTable {
    n: usize,
    values: Vec<f64>,
}

impl CosTable {
    pub(crate) fn new(n: usize) -> Self {
        let values = (0..2 * n)
            .map(|r| match r {
                _ if r == 0 => 1.0,
                _ if 2 * r == n || 2 * r == 3 * n => 0.0,
                _ if r == n => -1.0,
                _ => (PI * r as f64 / n as f64).cos(),
            })
            .collect();
        Self { n, values }
    }

    pub(crate) fn cos(&self, r: usize) -> f64 {
        self.values[r % (2 * self.n)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gaussian_n3() -> GridFunction1D {
        GridFunction1D::from_fn(3, 1.0, |t| (-0.5 * (t * 3.0).powi(2)).exp()).unwrap()
    }

    fn random_grid(rng: &mut ChaCha8Rng, n: usize, t0: f64) -> GridFunction1D {
        GridFunction1D::new((0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect(), t0).unwrap()
    }

    #[allow(clippy::needless_range_loop)]
    /// Gaussian elimination with partial pivoting; independent of the transform code.
    fn solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
        let n = b.len();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
                .unwrap();
            m.swap(col, piv);
            b.swap(col, piv);
            for row in col + 1..n {
                let f = m[row][col] / m[col][col];
                for c in col..n {
                    m[row][c] -= f * m[col][c];
                }
                b[row] -= f * b[col];
            }
        }
        let mut x = vec![0.0; n];
        for row in (0..n).rev() {
            let s: f64 = (row + 1..n).map(|c| m[row][c] * x[c]).sum();
            x[row] = (b[row] - s) / m[row][row];
        }
        x
    }

    #[test]
    fn class_weights() {
        assert_eq!(class_weight(4, 0).unwrap(), 1);
        assert_eq!(class_weight(4, 2).unwrap(), 2);
        assert_eq!(class_weight(1, 1).unwrap(), 1);
        assert!(class_weight(4, 5).is_err());
        assert!(class_weight(0, 0).is_err());
    }

    #[test]
    fn small_matrices() {
        let d1 = dct_matrix(1).unwrap();
        assert_eq!(d1.entries(), &[0.5, 0.5, 0.5, -0.5]);
        let d2 = dct_matrix(2).unwrap();
        let want = [0.25, 0.5, 0.25, 0.5, 0.0, -0.5, 0.25, -0.5, 0.25];
        for (got, want) in d2.entries().iter().zip(want) {
            assert!((got - want).abs() < 1e-15);
        }
        let d4 = dct_matrix(4).unwrap();
        assert!((d4.get(1, 1) - 2f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(dct_matrix(0).is_err());
    }

    #[test]
    fn dct_matrix_is_symmetric() {
        let d = dct_matrix(9).unwrap();
        for j in 0..10 {
            for k in 0..10 {
                assert_eq!(d.get(j, k), d.get(k, j));
            }
        }
    }

    #[test]
    fn gaussian_coefficients() {
        let a = forward(&gaussian_n3());
        let want = [0.415807, 0.486695, 0.089748, 0.007750];
        for (got, want) in a.coefficients().iter().zip(want) {
            assert!((got - want).abs() < 1e-6, "{got} vs {want}");
        }
        assert_eq!(a.kind(), TransformKind::Dct1);
    }

    #[test]
    fn forward_of_constant() {
        let g = GridFunction1D::new(vec![3.5; 8], 2.0).unwrap();
        let a = forward(&g);
        assert!((a.coefficients()[0] - 3.5).abs() < 1e-12);
        assert!(a.coefficients()[1..].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn forward_matches_linear_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_grid(&mut rng, 5, 1.0);
        let psi: Vec<Vec<f64>> = (0..6)
            .map(|j| (0..6).map(|k| (PI * (j * k) as f64 / 5.0).cos()).collect())
            .collect();
        let oracle = solve(psi, g.samples().to_vec());
        let a = forward(&g);
        for (got, want) in a.coefficients().iter().zip(&oracle) {
            assert!((got - want).abs() < 1e-12);
        }
        let via_matrix = dct_matrix(5).unwrap().apply(g.samples()).unwrap();
        for (got, want) in a.coefficients().iter().zip(&via_matrix) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn inverse_examples() {
        let a = CoefficientVector::new(vec![2.0, 0.0, 0.0, 0.0], 1.0).unwrap();
        assert!(inverse_on_grid(&a)
            .samples()
            .iter()
            .all(|v| (v - 2.0).abs() < 1e-15));

        let g = inverse_on_grid(&forward(&gaussian_n3()));
        let want = [1.0, 0.606531, 0.135335, 0.011109];
        for (got, want) in g.samples().iter().zip(want) {
            assert!((got - want).abs() < 1e-6);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = random_grid(&mut rng, 7, 1.0);
        let back = inverse_on_grid(&forward(&g));
        for (a, b) in back.samples().iter().zip(g.samples()) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn evaluate_examples() {
        let a = forward(&gaussian_n3());
        assert!((evaluate(&a, 0.5).unwrap() - 0.326059).abs() < 1e-6);
        assert!((evaluate(&a, 1.0 / 6.0).unwrap() - 0.882171).abs() < 1e-6);
        let sum: f64 = a.coefficients().iter().sum();
        assert!((evaluate(&a, 0.0).unwrap() - sum).abs() < 1e-15);
        assert!(evaluate(&a, 1.01).is_err());
        assert!(evaluate(&a, -0.01).is_err());
    }

    #[test]
    fn evaluate_honours_interval_length() {
        let g = GridFunction1D::from_fn(6, 4.0, |t| (t / 4.0).powi(2)).unwrap();
        let a = forward(&g);
        for k in 0..=6 {
            assert!((evaluate(&a, g.knot(k)).unwrap() - g.samples()[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_examples() {
        let c = GridFunction1D::new(vec![-1.25; 6], 1.0).unwrap();
        for t in [0.0, 0.13, 0.5, 0.77, 1.0] {
            assert!((evaluate_kernel(&c, t).unwrap() + 1.25).abs() < 1e-12);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = random_grid(&mut rng, 8, 2.0);
        let t = 0.37 * 2.0;
        let naive = evaluate(&forward(&g), t).unwrap();
        assert!((evaluate_kernel(&g, t).unwrap() - naive).abs() < 1e-10);

        assert!((evaluate_kernel(&g, g.knot(3)).unwrap() - g.samples()[3]).abs() < 1e-12);
        assert!(evaluate_kernel(&g, 2.5).is_err());
    }

    #[test]
    fn derivative_at_knot_examples() {
        let c = GridFunction1D::new(vec![4.0; 9], 1.0).unwrap();
        for m in 1..8 {
            assert!(derivative_at_knot(&c, m).unwrap().abs() < 1e-12);
        }

        let t0 = 3.0;
        let g = GridFunction1D::from_fn(12, t0, |t| (PI * t / t0).cos()).unwrap();
        for m in 1..12 {
            let want = -(PI / t0) * (PI * g.knot(m) / t0).sin();
            assert!((derivative_at_knot(&g, m).unwrap() - want).abs() < 1e-10);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let g = random_grid(&mut rng, 10, 1.0);
        let a = forward(&g);
        let h = 1e-6;
        let t = g.knot(4);
        let fd = (evaluate(&a, t + h).unwrap() - evaluate(&a, t - h).unwrap()) / (2.0 * h);
        assert!((derivative_at_knot(&g, 4).unwrap() - fd).abs() < 1e-4);

        assert!(derivative_at_knot(&g, 0).is_err());
        assert!(derivative_at_knot(&g, 10).is_err());
    }

    #[test]
    fn derivative_series_examples() {
        let a = CoefficientVector::new(vec![1.0, 0.0, 0.0], 1.0).unwrap();
        assert_eq!(derivative_series(&a, 0.3).unwrap(), 0.0);

        let t0 = 2.5;
        let a = CoefficientVector::new(vec![0.0, 1.0, 0.0, 0.0], t0).unwrap();
        assert!((derivative_series(&a, t0 / 2.0).unwrap() + PI / t0).abs() < 1e-14);

        let g = gaussian_n3();
        let a = forward(&g);
        let series = derivative_series(&a, 1.0 / 3.0).unwrap();
        assert!((series - derivative_at_knot(&g, 1).unwrap()).abs() < 1e-10);

        assert!(derivative_series(&a, 0.0).is_err());
        assert!(derivative_series(&a, 1.0).is_err());
    }

    #[test]
    fn discrete_form_examples() {
        let psi0 = basis_samples(0, 4, 1.0).unwrap();
        assert!((discrete_form(&psi0, &psi0).unwrap() - 8.0).abs() < 1e-12);
        let psi1 = basis_samples(1, 4, 1.0).unwrap();
        let psi2 = basis_samples(2, 4, 1.0).unwrap();
        assert!(discrete_form(&psi1, &psi2).unwrap().abs() < 1e-12);
        let psi2 = basis_samples(2, 6, 1.0).unwrap();
        assert!((discrete_form(&psi2, &psi2).unwrap() - 6.0).abs() < 1e-12);
        assert!(discrete_form(&psi0, &psi2).is_err());
    }

    #[test]
    fn invalid_grids() {
        assert!(GridFunction1D::new(vec![1.0], 1.0).is_err());
        assert!(GridFunction1D::new(vec![1.0, 2.0], 0.0).is_err());
        assert!(GridFunction1D::new(vec![1.0, f64::NAN], 1.0).is_err());
        assert!(CoefficientVector::new(vec![1.0, f64::INFINITY], 1.0).is_err());
    }
}
