//! `transform` subcommand.
//!
//! Input kind is sniffed from the leading bytes: `P5`/`P2` is a PGM image,
//! the `CEDCT1` magic is a 2-D coefficient dump, anything else is CSV.
//!
//! * forward, CSV: needs a `g` column; an optional `t` column sets the
//!   interval length to its last value. Writes `j,a,t0`.
//! * forward, PGM: the whole image is one grid in pixel units. Writes a dump.
//! * inverse, CSV: needs an `a` column, optional `t0` (default 1). Writes `t,g`.
//! * inverse, dump: evaluates at the knots and writes a PGM.

use std::io::Write;
use std::path::Path;

use super::table::{format_float, NumericCsv, Table};
use super::Direction;
use crate::error::{Error, Result};
use crate::image::{
    decode_coefficient_dump, decode_pgm, encode_coefficient_dump, save_pgm, GrayImage, DUMP_MAGIC,
};
use crate::multidim::{evaluate_nd_grid, forward_nd, GridFunctionND};
use crate::spectral::{forward, inverse_on_grid, CoefficientVector, GridFunction1D};

/// Relative tolerance on knot spacing when a CSV carries a `t` column.
const KNOT_SPACING_TOL: f64 = 1e-9;

enum Input {
    Image(GrayImage),
    Dump(Vec<u8>),
    Csv(NumericCsv),
}

fn sniff(data: &[u8]) -> Result<Input> {
    if data.starts_with(b"P5") || data.starts_with(b"P2") {
        Ok(Input::Image(decode_pgm(data)?))
    } else if data.starts_with(DUMP_MAGIC) {
        Ok(Input::Dump(data.to_vec()))
    } else {
        Ok(Input::Csv(NumericCsv::parse(data)?))
    }
}

pub fn cmd_transform(
    direction: Direction,
    input: &Path,
    output: &Path,
    out: &mut dyn Write,
) -> Result<()> {
    let data = std::fs::read(input)?;
    match (direction, sniff(&data)?) {
        (Direction::Forward, Input::Csv(csv)) => {
            let g = samples_from_csv(&csv)?;
            let a = forward(&g);
            let mut table = Table::new(["j", "a", "t0"]);
            for (j, v) in a.coefficients().iter().enumerate() {
                table.push_raw(vec![
                    j.to_string(),
                    format_float(*v),
                    format_float(a.interval_length()),
                ]);
            }
            table.write(output)?;
            writeln!(
                out,
                "forward: {} samples -> {}",
                g.samples().len(),
                output.display()
            )?;
        }
        (Direction::Forward, Input::Image(img)) => {
            let (w, h) = (img.width(), img.height());
            if w < 2 || h < 2 {
                return Err(Error::Usage(format!(
                    "image must be at least 2x2 pixels, got {w}x{h}"
                )));
            }
            let grid = GridFunctionND::new(
                vec![h - 1, w - 1],
                vec![(h - 1) as f64, (w - 1) as f64],
                img.pixels().iter().map(|&p| f64::from(p)).collect(),
            )?;
            let coeffs = forward_nd(&grid);
            std::fs::write(output, encode_coefficient_dump(&coeffs)?)?;
            writeln!(out, "forward: {w}x{h} image -> {}", output.display())?;
        }
        (Direction::Inverse, Input::Csv(csv)) => {
            let a = coefficients_from_csv(&csv)?;
            let g = inverse_on_grid(&a);
            let mut table = Table::new(["t", "g"]);
            for (k, v) in g.samples().iter().enumerate() {
                table.push([Some(g.knot(k)), Some(*v)]);
            }
            table.write(output)?;
            writeln!(
                out,
                "inverse: {} coefficients -> {}",
                g.samples().len(),
                output.display()
            )?;
        }
        (Direction::Inverse, Input::Dump(bytes)) => {
            let coeffs = decode_coefficient_dump(&bytes)?;
            let grid = evaluate_nd_grid(&coeffs, &[1, 1])?;
            let dims = grid.dims();
            let img = GrayImage::new(
                dims[1],
                dims[0],
                crate::image::to_intensities(grid.samples()),
            )?;
            save_pgm(&img, output)?;
            writeln!(
                out,
                "inverse: {}x{} coefficients -> {}",
                dims[1],
                dims[0],
                output.display()
            )?;
        }
        (Direction::Forward, Input::Dump(_)) => {
            return Err(Error::Usage(
                "forward expects a CSV signal or a PGM image, got a coefficient dump".into(),
            ))
        }
        (Direction::Inverse, Input::Image(_)) => {
            return Err(Error::Usage(
                "inverse expects a coefficient CSV or dump, got a PGM image".into(),
            ))
        }
    }
    Ok(())
}

fn samples_from_csv(csv: &NumericCsv) -> Result<GridFunction1D> {
    let g_col = csv.column("g").ok_or_else(|| Error::Csv {
        line: 1,
        message: "missing column \"g\"".into(),
    })?;
    let samples: Vec<f64> = csv.rows.iter().map(|r| r[g_col]).collect();
    if samples.len() < 2 {
        return Err(Error::Csv {
            line: csv.lines.last().copied().unwrap_or(1),
            message: format!("need at least 2 samples, found {}", samples.len()),
        });
    }
    let interval_length = match csv.column("t") {
        None => 1.0,
        Some(t_col) => {
            let ts: Vec<f64> = csv.rows.iter().map(|r| r[t_col]).collect();
            let t0 = *ts.last().unwrap_or(&1.0);
            let n = (ts.len() - 1) as f64;
            for (k, t) in ts.iter().enumerate() {
                let want = k as f64 * t0 / n;
                if (t - want).abs() > KNOT_SPACING_TOL * t0.abs().max(1.0) {
                    return Err(Error::Csv {
                        line: csv.lines[k],
                        message: format!(
                            "t = {t} is not on the equidistant grid (expected {want})"
                        ),
                    });
                }
            }
            t0
        }
    };
    GridFunction1D::new(samples, interval_length)
}

fn coefficients_from_csv(csv: &NumericCsv) -> Result<CoefficientVector> {
    let a_col = csv.column("a").ok_or_else(|| Error::Csv {
        line: 1,
        message: "missing column \"a\"".into(),
    })?;
    if let Some(j_col) = csv.column("j") {
        for (k, row) in csv.rows.iter().enumerate() {
            if row[j_col] != k as f64 {
                return Err(Error::Csv {
                    line: csv.lines[k],
                    message: format!("expected j = {k}, found {}", row[j_col]),
                });
            }
        }
    }
    let t0 = match (csv.column("t0"), csv.rows.first()) {
        (Some(c), Some(row)) => row[c],
        _ => 1.0,
    };
    CoefficientVector::new(csv.rows.iter().map(|r| r[a_col]).collect(), t0)
}
