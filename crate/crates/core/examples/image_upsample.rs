// Block-wise image upsampling and compression on a synthetic image. The
// results are written as PGM files to the system temp directory.

use cedct::image::{
    block_transform, compress, reconstruct, save_pgm, BlockPlan, CompressionPolicy, GrayImage,
};

pub fn run_example() -> cedct::Result<()> {
    let img = GrayImage::from_fn(140, 56, |x, y| {
        let (u, v) = (x as f64 / 140.0, y as f64 / 56.0);
        let ring = ((u - 0.5).powi(2) * 16.0 + (v - 0.5).powi(2) * 4.0).sqrt();
        (128.0 + 100.0 * (12.0 * ring).cos() * (-2.0 * ring).exp()).round() as u8
    })?;
    let plan = BlockPlan::for_image(&img, 28, 28)?;
    let coeffs = block_transform(&img, &plan)?;
    println!("{} blocks of 28x28 pixels", plan.blocks().len());

    let lossless = reconstruct(&coeffs, &plan, 1)?;
    println!("refinement 1 reproduces the input: {}", lossless == img);

    let dir = std::env::temp_dir();
    let up = reconstruct(&coeffs, &plan, 3)?;
    println!("refinement 3: {}x{}", up.width(), up.height());
    save_pgm(&up, dir.join("cedct_upsampled.pgm"))?;

    for policy in [
        CompressionPolicy::low_pass(12),
        CompressionPolicy::threshold(0.05)?,
    ] {
        let packed: Vec<_> = coeffs.iter().map(|a| compress(a, policy)).collect();
        let kept: usize = packed.iter().map(|c| c.retained).sum();
        let total: usize = coeffs.iter().map(|a| a.coefficients().len()).sum();
        let blocks: Vec<_> = packed.into_iter().map(|c| c.coefficients).collect();
        let out = reconstruct(&blocks, &plan, 1)?;
        let rms = (out
            .pixels()
            .iter()
            .zip(img.pixels())
            .map(|(a, b)| (f64::from(*a) - f64::from(*b)).powi(2))
            .sum::<f64>()
            / img.pixels().len() as f64)
            .sqrt();
        println!(
            "{policy:?}: kept {kept}/{total}, ratio {:.2}, rms {rms:.2}",
            total as f64 / kept as f64
        );
    }
    Ok(())
}

fn main() -> cedct::Result<()> {
    run_example()
}
