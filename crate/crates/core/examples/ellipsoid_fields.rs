// Two-dimensional extension of Gaussian ellipsoid fields: sample on an
// N x N grid, transform, and evaluate on a refined lattice.

use cedct::functions::EllipsoidField;
use cedct::multidim::{evaluate_nd, evaluate_nd_grid, forward_nd, GridFunctionND};

fn refined_error(field: &EllipsoidField, n: usize, refinement: usize) -> cedct::Result<f64> {
    let grid = GridFunctionND::from_fn(vec![n, n], vec![1.0, 1.0], |p| field.value(p[0], p[1]))?;
    let fine = evaluate_nd_grid(&forward_nd(&grid), &[refinement, refinement])?;
    let cols = fine.dims()[1];
    let mut worst = 0.0f64;
    for (idx, v) in fine.samples().iter().enumerate() {
        let (x, y) = (fine.knot(0, idx / cols), fine.knot(1, idx % cols));
        worst = worst.max((v - field.value(x, y)).abs());
    }
    Ok(worst)
}

pub fn run_example() -> cedct::Result<()> {
    for (name, field) in [
        ("crossed", EllipsoidField::figure5()),
        ("inclined", EllipsoidField::figure6()),
    ] {
        for n in [20, 40] {
            println!(
                "{name:>8} N = {n}: max error on 3x refined lattice {:.3e}",
                refined_error(&field, n, 3)?
            );
        }
    }

    let field = EllipsoidField::figure6();
    let grid = GridFunctionND::from_fn(vec![20, 20], vec![1.0, 1.0], |p| field.value(p[0], p[1]))?;
    let a = forward_nd(&grid);
    let p = [0.512, 0.487];
    println!(
        "F{p:?} = {:.6}, G = {:.6}",
        evaluate_nd(&a, &p)?,
        field.value(p[0], p[1])
    );
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
