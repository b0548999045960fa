//! Command-line front end: figure reproduction, file transforms and the
//! block image pipeline.
//!
//! ```text
//! cedct figure <fig1|fig2|fig3|fig4|fig5|fig6> [--n N] [--k K] [--points P] [--out DIR]
//! cedct transform <forward|inverse> --in FILE --out FILE
//! cedct image <upsample|lowpass|threshold> --in FILE --out FILE [--block WxH] [--r R] [--nmax M] [--frac F]
//! ```

mod figure;
mod image_cmd;
mod table;
mod transform;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};

pub use figure::{cmd_figure, ExperimentSpec};
pub use image_cmd::cmd_image;
pub use transform::cmd_transform;

#[derive(Debug, Parser)]
#[command(name = "cedct", version, about = "DCT-I continuous extension toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the CSV data behind one of the reference figures.
    Figure(FigureArgs),
    /// Forward or inverse transform of a CSV signal or a PGM image.
    Transform(TransformArgs),
    /// Block-wise upsampling and compression of a PGM image.
    Image(ImageArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub which: Figure,
    /// Interval count (replaces the figure's default set).
    #[arg(long)]
    pub n: Option<usize>,
    /// Harmonic order for the comparison series.
    #[arg(long)]
    pub k: Option<usize>,
    /// Evaluation points per curve (per axis for the 2-D figures).
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImageAction {
    Upsample,
    Lowpass,
    Threshold,
}

#[derive(Debug, Args)]
pub struct ImageArgs {
    #[arg(value_enum)]
    pub action: ImageAction,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Block size in pixels, `WxH`.
    #[arg(long, default_value = "28x28", value_parser = parse_block)]
    pub block: (usize, usize),
    /// Refinement factor for the reconstructed image.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Highest mode kept by `lowpass`.
    #[arg(long, default_value_t = 19)]
    pub nmax: usize,
    /// Relative magnitude cut used by `threshold`.
    #[arg(long, default_value_t = 0.05)]
    pub frac: f64,
}

fn parse_block(s: &str) -> std::result::Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let w = w
        .trim()
        .parse()
        .map_err(|_| format!("bad block width in {s:?}"))?;
    let h = h
        .trim()
        .parse()
        .map_err(|_| format!("bad block height in {s:?}"))?;
    Ok((w, h))
}

/// Runs a parsed command, writing progress lines to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Figure(args) => cmd_figure(&args, out).map(|_| ()),
        Command::Transform(args) => cmd_transform(args.direction, &args.input, &args.out, out),
        Command::Image(args) => cmd_image(&args, out),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("cedct: {e}");
            match e {
                Error::Usage(_) => 2,
                _ => 1,
            }
        }
    }
}
