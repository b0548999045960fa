// Forward transform of a sampled Gaussian on four knots, the continuous
// extension between them, and the closed-form kernel that skips the
// coefficients entirely.

use cedct::functions::TestFunction;
use cedct::spectral::{dct_matrix, evaluate, evaluate_kernel, forward, GridFunction1D};

pub fn run_example() -> cedct::Result<()> {
    let g = TestFunction::gauss(1.0 / 3.0);
    let grid = GridFunction1D::from_fn(3, 1.0, |t| g.value(t))?;
    let a = forward(&grid);
    println!("samples      {:.6?}", grid.samples());
    println!("coefficients {:.6?}", a.coefficients());

    let d = dct_matrix(3)?;
    println!("D_3 row 0    {:.6?}", &d.entries()[..4]);

    for t in [1.0 / 6.0, 0.5, 5.0 / 6.0] {
        let f = evaluate(&a, t)?;
        let k = evaluate_kernel(&grid, t)?;
        println!(
            "t = {t:.4}: f_3 = {f:.6}  kernel = {k:.6}  g = {:.6}",
            g.value(t)
        );
    }
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
