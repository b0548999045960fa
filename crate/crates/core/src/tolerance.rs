//! Numerical thresholds shared across the crate.
//!
//! All values assume IEEE double precision and interval counts up to a few
//! hundred; the largest grids exercised by the figure runs use N = 140.

/// `evaluate_kernel` falls back to the plain cosine series when
/// `|cos(pi t_k) - cos(pi t)|` drops below this for any knot.
pub const KERNEL_GUARD: f64 = 1e-9;

/// Relative slack (in units of the interval length) accepted when a
/// coordinate overshoots `[0, T0]` through rounding; such points are clamped.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// Absolute slack (intensity levels) before a reconstructed image is
/// considered out of `[0, 255]` and renormalized.
pub const RENORM_SLACK: f64 = 1e-6;

/// Default composite Simpson subinterval count for continuous Fourier coefficients.
pub const DEFAULT_QUADRATURE_POINTS: usize = 4096;
