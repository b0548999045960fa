//! Standard DFT pair, its continuous extension, the half-spectrum truncated
//! series and quadrature-based continuous Fourier coefficients.
//!
//! These exist to contrast with the DCT-I extension in [`crate::spectral`].
//! The DFT uses only `g_0 ..= g_{N-1}` of an `(N+1)`-sample grid function;
//! the last knot is discarded.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::spectral::{normalized, GridFunction1D, TransformKind};

/// DFT coefficients `u_0 ..= u_{N-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DftCoefficients {
    coefficients: Vec<Complex64>,
    interval_length: f64,
}

impl DftCoefficients {
    pub fn new(coefficients: Vec<Complex64>, interval_length: f64) -> Result<Self> {
        if coefficients.is_empty() {
            return domain("DFT needs at least one coefficient");
        }
        if !(interval_length.is_finite() && interval_length > 0.0) {
            return domain(format!(
                "interval length must be positive, got {interval_length}"
            ));
        }
        if coefficients
            .iter()
            .any(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return domain("DFT coefficients must be finite");
        }
        Ok(Self {
            coefficients,
            interval_length,
        })
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn interval_length(&self) -> f64 {
        self.interval_length
    }

    pub fn kind(&self) -> TransformKind {
        TransformKind::Dft
    }
}

/// Continuous Fourier coefficients `c_0 ..= c_K` of a real function; negative
/// orders follow from `c_{-j} = conj(c_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CftCoefficients {
    coefficients: Vec<Complex64>,
    interval_length: f64,
}

impl CftCoefficients {
    pub fn harmonic_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `c_j` for `-K <= j <= K`.
    pub fn get(&self, j: isize) -> Option<Complex64> {
        let c = *self.coefficients.get(j.unsigned_abs())?;
        Some(if j < 0 { c.conj() } else { c })
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// The trigonometric polynomial `P_K(t) = c_0 + 2 Re sum_{j=1}^K c_j e^{2 pi i j t / T0}`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let s = normalized(t, self.interval_length)?;
        Ok(half_spectrum(&self.coefficients, s))
    }
}

pub fn dft_forward(g: &GridFunction1D) -> DftCoefficients {
    let n = g.n_intervals();
    let table = RootTable::new(n);
    let samples = &g.samples()[..n];
    let coefficients = (0..n)
        .map(|j| {
            let sum: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(k, gk)| table.root(k * j).conj() * gk)
                .sum();
            sum / n as f64
        })
        .collect();
    DftCoefficients {
        coefficients,
        interval_length: g.interval_length(),
    }
}

/// Inverse DFT: the `N` grid values `g_0 ..= g_{N-1}` (complex in general).
pub fn dft_inverse_on_grid(u: &DftCoefficients) -> Vec<Complex64> {
    let n = u.len();
    let table = RootTable::new(n);
    (0..n)
        .map(|k| {
            u.coefficients
                .iter()
                .enumerate()
                .map(|(j, uj)| uj * table.root(k * j))
                .sum()
        })
        .collect()
}

/// Continuous extension `h_N(t) = sum_{j=0}^{N-1} u_j e^{2 pi i j t / T0}`.
pub fn cedft_evaluate(u: &DftCoefficients, t: f64) -> Result<Complex64> {
    let s = normalized(t, u.interval_length)?;
    Ok(u.coefficients
        .iter()
        .enumerate()
        .map(|(j, uj)| uj * Complex64::cis(2.0 * PI * j as f64 * s))
        .sum())
}

/// Half-spectrum series `s_K(t) = u_0 + 2 Re sum_{j=1}^K u_j e^{2 pi i j t / T0}`.
pub fn truncated_series(u: &DftCoefficients, k: usize, t: f64) -> Result<f64> {
    check_order(u, k)?;
    let s = normalized(t, u.interval_length)?;
    Ok(half_spectrum(&u.coefficients[..=k], s))
}

/// Derivative `s_K'(t)`.
pub fn truncated_series_derivative(u: &DftCoefficients, k: usize, t: f64) -> Result<f64> {
    check_order(u, k)?;
    let t0 = u.interval_length;
    let s = normalized(t, t0)?;
    let sum: f64 = u.coefficients[1..=k]
        .iter()
        .enumerate()
        .map(|(i, uj)| {
            let w = 2.0 * PI * (i + 1) as f64;
            (uj * Complex64::new(0.0, w) * Complex64::cis(w * s)).re
        })
        .sum();
    Ok(2.0 * sum / t0)
}

/// Continuous Fourier coefficients of a real function by composite Simpson
/// quadrature over `quadrature_points` subintervals (rounded up to even).
pub fn cft_coefficients(
    g: impl Fn(f64) -> f64,
    interval_length: f64,
    harmonic_order: usize,
    quadrature_points: usize,
) -> Result<CftCoefficients> {
    let min_points = (8 * harmonic_order).max(2);
    if quadrature_points < min_points {
        return domain(format!(
            "harmonic order {harmonic_order} needs at least {min_points} quadrature points, got {quadrature_points}"
        ));
    }
    if !(interval_length.is_finite() && interval_length > 0.0) {
        return domain(format!(
            "interval length must be positive, got {interval_length}"
        ));
    }
    let m = quadrature_points + quadrature_points % 2;
    let h = 1.0 / m as f64;
    let values: Vec<f64> = (0..=m).map(|i| g(interval_length * i as f64 * h)).collect();
    let coefficients = (0..=harmonic_order)
        .map(|j| {
            let w = -2.0 * PI * j as f64;
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let simpson = if i == 0 || i == m {
                        1.0
                    } else if i % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    };
                    Complex64::cis(w * i as f64 * h) * (simpson * v)
                })
                .sum();
            sum * (h / 3.0)
        })
        .collect();
    Ok(CftCoefficients {
        coefficients,
        interval_length,
    })
}

fn check_order(u: &DftCoefficients, k: usize) -> Result<()> {
    let n = u.len();
    if k < 1 || 2 * k > n {
        return domain(format!("harmonic order {k} outside 1..={}", n / 2));
    }
    Ok(())
}

fn half_spectrum(c: &[Complex64], s: f64) -> f64 {
    let tail: f64 = c[1..]
        .iter()
        .enumerate()
        .map(|(i, cj)| (cj * Complex64::cis(2.0 * PI * (i + 1) as f64 * s)).re)
        .sum();
    c[0].re + 2.0 * tail
}

/// `e^{2 pi i r / N}` reduced modulo `N`.
struct RootTable {
    roots: Vec<Complex64>,
}

impl RootTable {
    fn new(n: usize) -> Self {
        let roots = (0..n)
            .map(|r| Complex64::cis(2.0 * PI * r as f64 / n as f64))
            .collect();
        Self { roots }
    }

    fn root(&self, r: usize) -> Complex64 {
        self.roots[r % self.roots.len()]
    }
}
