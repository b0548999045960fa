// Sup-norm error of the continuous extension for the two-Gaussian signal
// as the grid is refined, next to a truncated Fourier series of similar size.

use cedct::dft::cft_coefficients;
use cedct::functions::TestFunction;
use cedct::spectral::{evaluate, forward, GridFunction1D};
use cedct::tolerance::DEFAULT_QUADRATURE_POINTS;

fn sup_error(f: impl Fn(f64) -> f64, g: &TestFunction) -> f64 {
    (0..=4000)
        .map(|i| i as f64 / 4000.0)
        .map(|t| (f(t) - g.value(t)).abs())
        .fold(0.0, f64::max)
}

pub fn run_example() -> cedct::Result<()> {
    let g = TestFunction::figure1();
    for n in [10, 14, 28, 56] {
        let a = forward(&GridFunction1D::from_fn(n, 1.0, |t| g.value(t))?);
        let err = sup_error(|t| evaluate(&a, t).unwrap(), &g);
        let cft = cft_coefficients(|t| g.value(t), 1.0, n / 2, DEFAULT_QUADRATURE_POINTS)?;
        let err_p = sup_error(|t| cft.evaluate(t).unwrap(), &g);
        println!(
            "N = {n:>2}: max|f_N - g| = {err:.3e}   max|P_{} - g| = {err_p:.3e}",
            n / 2
        );
    }
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
