// The DFT-based extension matches every knot but oscillates between them
// when the signal does not close up periodically; the cosine extension
// does not.

use cedct::dft::{cedft_evaluate, dft_forward, truncated_series};
use cedct::functions::TestFunction;
use cedct::spectral::{evaluate, forward, GridFunction1D};

pub fn run_example() -> cedct::Result<()> {
    let g = TestFunction::figure2();
    for n in [16, 32, 64] {
        let grid = GridFunction1D::from_fn(n, 1.0, |t| g.value(t))?;
        let (a, u) = (forward(&grid), dft_forward(&grid));
        let mut worst = (0.0f64, 0.0f64);
        for k in 0..n {
            let t = (k as f64 + 0.5) / n as f64;
            worst.0 = worst.0.max((cedft_evaluate(&u, t)? - g.value(t)).norm());
            worst.1 = worst.1.max((evaluate(&a, t)? - g.value(t)).abs());
        }
        println!(
            "N = {n:>2}: midpoint error  DFT {:.3e}  DCT-I {:.3e}",
            worst.0, worst.1
        );
    }

    // The symmetric truncated series is real but misses the knots.
    let g = TestFunction::figure3();
    let grid = GridFunction1D::from_fn(16, 1.0, |t| g.value(t))?;
    let u = dft_forward(&grid);
    let miss = (0..=16)
        .map(|k| (truncated_series(&u, 8, grid.knot(k)).unwrap() - grid.samples()[k]).abs())
        .fold(0.0, f64::max);
    println!("s_8 largest knot error at N = 16: {miss:.4}");
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
