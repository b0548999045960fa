//! DCT-I transform pair with a continuous extension between grid knots.
//!
//! * [`spectral`]: 1-D forward/inverse transform, continuous evaluation,
//!   closed-form kernel and spectral derivatives.
//! * [`dft`]: standard DFT pair and its extensions, kept for comparison.
//! * [`multidim`]: tensor-product transform on n-dimensional grids.
//! * [`image`]: block-based grayscale interpolation and compression, PGM I/O.
//! * [`cli`]: the `cedct` command-line front end.
//!
//! ```
//! use cedct::spectral::{evaluate, forward, GridFunction1D};
//!
//! let g = GridFunction1D::from_fn(3, 1.0, |t| (-4.5 * t * t).exp()).unwrap();
//! let a = forward(&g);
//! assert!((evaluate(&a, 0.5).unwrap() - 0.326059).abs() < 1e-6);
//! ```

pub mod cli;
pub mod dft;
pub mod error;
pub mod functions;
pub mod image;
pub mod multidim;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
