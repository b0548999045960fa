// Spectral differentiation: term-by-term derivative of the extension, the
// sample-only formula at the knots, and the truncated-DFT derivative.

use cedct::dft::{dft_forward, truncated_series_derivative};
use cedct::functions::TestFunction;
use cedct::spectral::{derivative_at_knot, derivative_series, forward, GridFunction1D};

pub fn run_example() -> cedct::Result<()> {
    let g = TestFunction::figure4();
    for n in [14, 28, 56, 140] {
        let grid = GridFunction1D::from_fn(n, 1.0, |t| g.value(t))?;
        let (a, u) = (forward(&grid), dft_forward(&grid));
        let (mut ef, mut es) = (0.0f64, 0.0f64);
        for i in 0..=800 {
            let t = 0.1 + 0.8 * i as f64 / 800.0;
            ef = ef.max((derivative_series(&a, t)? - g.derivative(t)).abs());
            es = es.max((truncated_series_derivative(&u, n / 2, t)? - g.derivative(t)).abs());
        }
        println!("N = {n:>3}: interior max|f'_N - g'| = {ef:.3e}   max|s'_K - g'| = {es:.3e}");
    }

    let grid = GridFunction1D::from_fn(28, 1.0, |t| g.value(t))?;
    let m = 10;
    println!(
        "at t_{m}: from samples {:.6}, from series {:.6}, exact {:.6}",
        derivative_at_knot(&grid, m)?,
        derivative_series(&forward(&grid), grid.knot(m))?,
        g.derivative(grid.knot(m))
    );
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
