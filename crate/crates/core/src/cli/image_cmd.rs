//! `image` subcommand: block transform, optional compression, refined
//! reconstruction.

use std::io::Write;

use super::{ImageAction, ImageArgs};
use crate::error::{Error, Result};
use crate::image::{
    block_transform, compress, load_pgm, reconstruct, save_pgm, BlockPlan, CompressionPolicy,
};

pub fn cmd_image(args: &ImageArgs, out: &mut dyn Write) -> Result<()> {
    let img = load_pgm(&args.input)?;
    let (bw, bh) = args.block;
    if bw > img.width() || bh > img.height() {
        return Err(Error::Usage(format!(
            "block {bw}x{bh} larger than image {}x{}",
            img.width(),
            img.height()
        )));
    }
    if args.r == 0 {
        return Err(Error::Usage("--r must be at least 1".into()));
    }
    let plan = BlockPlan::for_image(&img, bw, bh)?;
    let blocks = block_transform(&img, &plan)?;

    let policy = match args.action {
        ImageAction::Upsample => None,
        ImageAction::Lowpass => Some(CompressionPolicy::low_pass(args.nmax)),
        ImageAction::Threshold => {
            Some(CompressionPolicy::threshold(args.frac).map_err(|e| Error::Usage(e.to_string()))?)
        }
    };

    let total: usize = blocks.iter().map(|b| b.coefficients().len()).sum();
    let (blocks, retained) = match policy {
        None => (blocks, total),
        Some(policy) => {
            let mut retained = 0;
            let compressed = blocks
                .iter()
                .map(|b| {
                    let c = compress(b, policy);
                    retained += c.retained;
                    c.coefficients
                })
                .collect();
            (compressed, retained)
        }
    };

    let result = reconstruct(&blocks, &plan, args.r)?;
    save_pgm(&result, &args.out)?;
    writeln!(
        out,
        "{} blocks, retained {retained} of {total} coefficients, storage ratio {:.2}",
        plan.blocks().len(),
        total as f64 / retained as f64
    )?;
    writeln!(
        out,
        "wrote {}x{} image (refinement {}) to {}",
        result.width(),
        result.height(),
        args.r,
        args.out.display()
    )?;
    Ok(())
}
