//! Block-based grayscale pipeline: per-block 2-D transform, coefficient
//! compression and refined reconstruction.
//!
//! A block of `P x Q` pixels (rows x columns) is treated as a grid with
//! `(P-1) x (Q-1)` intervals whose knots are the pixel centres, measured in
//! pixel units. Blocks are disjoint, so a block refined by `r` covers
//! `r(P-1)+1` rows and `r(Q-1)+1` columns of the output, and the refined
//! image size is the sum of those extents over the tile rows and columns.
//! With `r = 1` this is the original image size.

mod dump;
mod pgm;

pub use dump::{decode_coefficient_dump, encode_coefficient_dump, DUMP_MAGIC};
pub use pgm::{decode_pgm, encode_pgm, load_pgm, save_pgm};

use crate::error::{domain, Result};
use crate::multidim::{evaluate_nd_grid, forward_nd, CoefficientTensorND, GridFunctionND};
use crate::tolerance::RENORM_SLACK;

/// 8-bit grayscale raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return domain(format!(
                "image dimensions must be positive, got {width}x{height}"
            ));
        }
        if pixels.len() != width * height {
            return domain(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            ));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> u8) -> Result<Self> {
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }
}

/// Rectangular tile of a [`BlockPlan`], in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tile {
    pub x: usize,
    pub y: usize,
    pub width: usize,
    pub height: usize,
}

/// Disjoint tiling of an image into blocks, listed row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlan {
    block_width: usize,
    block_height: usize,
    image_width: usize,
    image_height: usize,
    columns: Vec<(usize, usize)>,
    rows: Vec<(usize, usize)>,
    blocks: Vec<Tile>,
}

/// Splits `len` pixels into runs of `block`; the last run shrinks to fit and a
/// trailing single pixel is merged into the run before it.
fn split_axis(len: usize, block: usize) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = 0;
    while start < len {
        let size = block.min(len - start);
        runs.push((start, size));
        start += size;
    }
    if runs.len() > 1 && runs.last().is_some_and(|r| r.1 == 1) {
        runs.pop();
        if let Some(last) = runs.last_mut() {
            last.1 += 1;
        }
    }
    runs
}

impl BlockPlan {
    pub fn new(
        image_width: usize,
        image_height: usize,
        block_width: usize,
        block_height: usize,
    ) -> Result<Self> {
        if image_width < 2 || image_height < 2 {
            return domain(format!(
                "image must be at least 2x2 pixels, got {image_width}x{image_height}"
            ));
        }
        if block_width < 2 || block_height < 2 {
            return domain(format!(
                "blocks must be at least 2x2 pixels, got {block_width}x{block_height}"
            ));
        }
        if block_width > image_width || block_height > image_height {
            return domain(format!(
                "block {block_width}x{block_height} larger than image {image_width}x{image_height}"
            ));
        }
        let columns = split_axis(image_width, block_width);
        let rows = split_axis(image_height, block_height);
        let blocks = rows
            .iter()
            .flat_map(|&(y, height)| {
                columns.iter().map(move |&(x, width)| Tile {
                    x,
                    y,
                    width,
                    height,
                })
            })
            .collect();
        Ok(Self {
            block_width,
            block_height,
            image_width,
            image_height,
            columns,
            rows,
            blocks,
        })
    }

    pub fn for_image(img: &GrayImage, block_width: usize, block_height: usize) -> Result<Self> {
        Self::new(img.width, img.height, block_width, block_height)
    }

    pub fn blocks(&self) -> &[Tile] {
        &self.blocks
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn block_height(&self) -> usize {
        self.block_height
    }

    pub fn image_size(&self) -> (usize, usize) {
        (self.image_width, self.image_height)
    }

    /// `(width, height)` of the image produced by [`reconstruct`] at `refinement`.
    pub fn refined_size(&self, refinement: usize) -> (usize, usize) {
        let extent = |runs: &[(usize, usize)]| -> usize {
            runs.iter().map(|&(_, n)| refinement * (n - 1) + 1).sum()
        };
        (extent(&self.columns), extent(&self.rows))
    }

    fn covers(&self, img: &GrayImage) -> bool {
        self.image_width == img.width && self.image_height == img.height
    }
}

/// Rule for zeroing coefficients of a block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CompressionPolicy {
    /// Keep only entries whose every index is at most `n_max`.
    LowPass { n_max: usize },
    /// Zero every non-DC entry with `|A| <= fraction * A_max`, where `A_max`
    /// is the largest non-DC magnitude.
    Threshold { fraction: f64 },
}

impl CompressionPolicy {
    pub fn low_pass(n_max: usize) -> Self {
        Self::LowPass { n_max }
    }

    pub fn threshold(fraction: f64) -> Result<Self> {
        if !(fraction > 0.0 && fraction < 1.0) {
            return domain(format!(
                "threshold fraction must lie in (0, 1), got {fraction}"
            ));
        }
        Ok(Self::Threshold { fraction })
    }
}

/// Outcome of [`compress`].
#[derive(Debug, Clone, PartialEq)]
pub struct Compressed {
    pub coefficients: CoefficientTensorND,
    /// Entries the policy kept (not forced to zero).
    pub retained: usize,
}

impl Compressed {
    /// Total entries over retained entries.
    pub fn storage_ratio(&self) -> f64 {
        self.coefficients.coefficients().len() as f64 / self.retained as f64
    }
}

pub fn block_transform(img: &GrayImage, plan: &BlockPlan) -> Result<Vec<CoefficientTensorND>> {
    if !plan.covers(img) {
        return domain(format!(
            "plan is for a {}x{} image, got {}x{}",
            plan.image_width, plan.image_height, img.width, img.height
        ));
    }
    plan.blocks
        .iter()
        .map(|tile| {
            let samples = (tile.y..tile.y + tile.height)
                .flat_map(|y| (tile.x..tile.x + tile.width).map(move |x| (x, y)))
                .map(|(x, y)| f64::from(img.get(x, y)))
                .collect();
            let grid = GridFunctionND::new(
                vec![tile.height - 1, tile.width - 1],
                vec![(tile.height - 1) as f64, (tile.width - 1) as f64],
                samples,
            )?;
            Ok(forward_nd(&grid))
        })
        .collect()
}

pub fn compress(coeffs: &CoefficientTensorND, policy: CompressionPolicy) -> Compressed {
    let mut out = coeffs.clone();
    let keep: Vec<bool> = match policy {
        CompressionPolicy::LowPass { n_max } => coeffs
            .indices()
            .map(|idx| idx.iter().all(|&i| i <= n_max))
            .collect(),
        CompressionPolicy::Threshold { fraction } => {
            let values = coeffs.coefficients();
            let a_max = values[1..].iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let cut = fraction * a_max;
            values
                .iter()
                .enumerate()
                .map(|(i, v)| i == 0 || v.abs() > cut)
                .collect()
        }
    };
    for (value, k) in out.coefficients_mut().iter_mut().zip(&keep) {
        if !k {
            *value = 0.0;
        }
    }
    Compressed {
        coefficients: out,
        retained: keep.iter().filter(|k| **k).count(),
    }
}

/// Evaluates every block on its refined lattice, assembles the blocks and
/// maps the result to 8-bit intensities.
///
/// The field is rescaled linearly to `[0, 255]` (whole image) only when it
/// leaves that range; otherwise values are clamped and rounded half away
/// from zero.
pub fn reconstruct(
    coeff_blocks: &[CoefficientTensorND],
    plan: &BlockPlan,
    refinement: usize,
) -> Result<GrayImage> {
    if refinement == 0 {
        return domain("refinement must be at least 1");
    }
    if coeff_blocks.len() != plan.blocks.len() {
        return domain(format!(
            "plan has {} blocks, got {} coefficient blocks",
            plan.blocks.len(),
            coeff_blocks.len()
        ));
    }
    let (width, height) = plan.refined_size(refinement);
    let mut field = vec![0.0f64; width * height];

    let col_offsets = offsets(&plan.columns, refinement);
    let row_offsets = offsets(&plan.rows, refinement);
    let n_cols = plan.columns.len();

    for (b, (tile, coeffs)) in plan.blocks.iter().zip(coeff_blocks).enumerate() {
        if coeffs.shape() != [tile.height - 1, tile.width - 1] {
            return domain(format!(
                "block {b} has shape {:?}, expected [{}, {}]",
                coeffs.shape(),
                tile.height - 1,
                tile.width - 1
            ));
        }
        let refined = evaluate_nd_grid(coeffs, &[refinement, refinement])?;
        let dims = refined.dims();
        let (oy, ox) = (row_offsets[b / n_cols], col_offsets[b % n_cols]);
        for (r, row) in refined.samples().chunks_exact(dims[1]).enumerate() {
            let start = (oy + r) * width + ox;
            field[start..start + dims[1]].copy_from_slice(row);
        }
    }

    GrayImage::new(width, height, to_intensities(&field))
}

fn offsets(runs: &[(usize, usize)], refinement: usize) -> Vec<usize> {
    runs.iter()
        .scan(0, |acc, &(_, n)| {
            let start = *acc;
            *acc += refinement * (n - 1) + 1;
            Some(start)
        })
        .collect()
}

pub(crate) fn to_intensities(field: &[f64]) -> Vec<u8> {
    let (lo, hi) = field
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(*v), hi.max(*v))
        });
    let out_of_range = lo < -RENORM_SLACK || hi > 255.0 + RENORM_SLACK;
    let map: Box<dyn Fn(f64) -> f64> = if out_of_range && hi > lo {
        let scale = 255.0 / (hi - lo);
        Box::new(move |v| (v - lo) * scale)
    } else {
        Box::new(|v| v)
    };
    field
        .iter()
        .map(|v| map(*v).clamp(0.0, 255.0).round() as u8)
        .collect()
}
