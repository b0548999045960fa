//! CSV data for the reference figures.
//!
//! 1-D figures evaluate on `P` equidistant points of `[0, 1]` (default
//! `20 N + 1`, so every knot is included). 2-D figures write the analytic
//! field and its extension on a lattice refined from the `N x N` grid.

use std::io::Write;
use std::path::{Path, PathBuf};

use super::table::Table;
use super::{Figure, FigureArgs};
use crate::dft::{
    cedft_evaluate, cft_coefficients, dft_forward, truncated_series, truncated_series_derivative,
};
use crate::error::{Error, Result};
use crate::functions::{EllipsoidField, TestFunction};
use crate::multidim::{evaluate_nd_grid, forward_nd, GridFunctionND};
use crate::spectral::{derivative_series, evaluate, forward, GridFunction1D};
use crate::tolerance::DEFAULT_QUADRATURE_POINTS;

const POINTS_PER_INTERVAL: usize = 20;
const DEFAULT_REFINEMENT_2D: usize = 5;

/// One curve to compute: signal, interval count, sampling density, target file.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub function: TestFunction,
    pub n: usize,
    pub eval_points: usize,
    pub output_path: PathBuf,
}

impl ExperimentSpec {
    pub fn new(
        function: TestFunction,
        n: usize,
        eval_points: Option<usize>,
        output_path: PathBuf,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("--n must be at least 1".into()));
        }
        let eval_points = eval_points.unwrap_or(POINTS_PER_INTERVAL * n + 1);
        if eval_points < n + 1 {
            return Err(Error::Usage(format!(
                "--points must be at least N+1 = {}, got {eval_points}",
                n + 1
            )));
        }
        Ok(Self {
            function,
            n,
            eval_points,
            output_path,
        })
    }

    fn grid(&self) -> Result<GridFunction1D> {
        GridFunction1D::from_fn(self.n, 1.0, |t| self.function.value(t))
    }

    fn eval_grid(&self) -> Vec<f64> {
        let last = self.eval_points - 1;
        (0..self.eval_points)
            .map(|i| {
                if i == last {
                    1.0
                } else {
                    i as f64 / last as f64
                }
            })
            .collect()
    }
}

/// Writes the CSV files for one figure and returns their paths.
pub fn cmd_figure(args: &FigureArgs, out: &mut dyn Write) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(&args.out)?;
    let defaults: &[usize] = match args.which {
        Figure::Fig1 => &[10, 14],
        Figure::Fig2 => &[16, 32, 64],
        Figure::Fig3 => &[16],
        Figure::Fig4 => &[14, 140],
        Figure::Fig5 | Figure::Fig6 => &[20],
    };
    let ns: Vec<usize> = match args.n {
        Some(n) => vec![n],
        None => defaults.to_vec(),
    };
    let mut written = Vec::new();
    for n in ns {
        let path = match args.which {
            Figure::Fig1 => figure1(&args.out, n, args, out)?,
            Figure::Fig2 => figure2(&args.out, n, args, out)?,
            Figure::Fig3 => figure3(&args.out, n, args, out)?,
            Figure::Fig4 => figure4(&args.out, n, args, out)?,
            Figure::Fig5 => figure_2d(&args.out, "fig5", EllipsoidField::figure5(), n, args, out)?,
            Figure::Fig6 => figure_2d(&args.out, "fig6", EllipsoidField::figure6(), n, args, out)?,
        };
        written.push(path);
    }
    Ok(written)
}

fn half_order(spec: &ExperimentSpec, k: Option<usize>) -> Result<usize> {
    let k = k.unwrap_or(spec.n / 2);
    if k < 1 || 2 * k > spec.n {
        return Err(Error::Usage(format!(
            "--k must lie in 1..={} for N = {}",
            spec.n / 2,
            spec.n
        )));
    }
    Ok(k)
}

fn figure1(dir: &Path, n: usize, args: &FigureArgs, out: &mut dyn Write) -> Result<PathBuf> {
    let f = TestFunction::figure1();
    let spec = ExperimentSpec::new(f, n, args.points, dir.join(format!("fig1_N{n}.csv")))?;
    let k = args.k.unwrap_or(n / 2);
    let a = forward(&spec.grid()?);
    let cft = cft_coefficients(|t| f.value(t), 1.0, k, DEFAULT_QUADRATURE_POINTS.max(8 * k))?;
    let mut table = Table::new(["t", "g", "f_N", "P_K"]);
    let (mut err_f, mut err_p) = (0.0f64, 0.0f64);
    for t in spec.eval_grid() {
        let (g, fn_, pk) = (f.value(t), evaluate(&a, t)?, cft.evaluate(t)?);
        err_f = err_f.max((fn_ - g).abs());
        err_p = err_p.max((pk - g).abs());
        table.push([Some(t), Some(g), Some(fn_), Some(pk)]);
    }
    table.write(&spec.output_path)?;
    writeln!(
        out,
        "fig1 N={n} K={k}: max|f_N-g| = {err_f:.6e}, max|P_K-g| = {err_p:.6e} -> {}",
        spec.output_path.display()
    )?;
    Ok(spec.output_path)
}

fn figure2(dir: &Path, n: usize, args: &FigureArgs, out: &mut dyn Write) -> Result<PathBuf> {
    let f = TestFunction::figure2();
    let spec = ExperimentSpec::new(f, n, args.points, dir.join(format!("fig2_N{n}.csv")))?;
    let grid = spec.grid()?;
    let a = forward(&grid);
    let u = dft_forward(&grid);
    let mut table = Table::new(["t", "g", "f_N", "h_N_re"]);
    for t in spec.eval_grid() {
        let h = cedft_evaluate(&u, t)?;
        table.push([
            Some(t),
            Some(f.value(t)),
            Some(evaluate(&a, t)?),
            Some(h.re),
        ]);
    }
    table.write(&spec.output_path)?;

    let (mut err_h, mut err_f) = (0.0f64, 0.0f64);
    for k in 0..n {
        let t = (k as f64 + 0.5) / n as f64;
        err_h = err_h.max((cedft_evaluate(&u, t)? - f.value(t)).norm());
        err_f = err_f.max((evaluate(&a, t)? - f.value(t)).abs());
    }
    writeln!(
        out,
        "fig2 N={n}: midpoint max|h_N-g| = {err_h:.6e}, max|f_N-g| = {err_f:.6e} -> {}",
        spec.output_path.display()
    )?;
    Ok(spec.output_path)
}

fn figure3(dir: &Path, n: usize, args: &FigureArgs, out: &mut dyn Write) -> Result<PathBuf> {
    let f = TestFunction::figure3();
    let spec = ExperimentSpec::new(f, n, args.points, dir.join(format!("fig3_N{n}.csv")))?;
    let half = half_order(&spec, None)?;
    let mut orders = vec![
        half_order(&spec, Some(args.k.unwrap_or(6).min(half)))?,
        half,
    ];
    orders.dedup();
    let grid = spec.grid()?;
    let a = forward(&grid);
    let u = dft_forward(&grid);

    let mut header = vec!["t".to_string(), "g".into(), "f_N".into()];
    header.extend(orders.iter().map(|k| format!("s_{k}")));
    header.push("err_f_N".into());
    header.extend(orders.iter().map(|k| format!("err_s_{k}")));
    let mut table = Table::new(header);
    for t in spec.eval_grid() {
        let g = f.value(t);
        let fn_ = evaluate(&a, t)?;
        let s: Vec<f64> = orders
            .iter()
            .map(|&k| truncated_series(&u, k, t))
            .collect::<Result<_>>()?;
        let mut row = vec![Some(t), Some(g), Some(fn_)];
        row.extend(s.iter().map(|v| Some(*v)));
        row.push(Some(fn_ - g));
        row.extend(s.iter().map(|v| Some(v - g)));
        table.push(row);
    }
    table.write(&spec.output_path)?;

    let knot_err = (0..=n)
        .map(|k| truncated_series(&u, half, grid.knot(k)).map(|s| (s - grid.samples()[k]).abs()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    writeln!(
        out,
        "fig3 N={n} K={orders:?}: max knot |s_{half}-g_k| = {knot_err:.6e} -> {}",
        spec.output_path.display()
    )?;
    Ok(spec.output_path)
}

fn figure4(dir: &Path, n: usize, args: &FigureArgs, out: &mut dyn Write) -> Result<PathBuf> {
    let f = TestFunction::figure4();
    let spec = ExperimentSpec::new(f, n, args.points, dir.join(format!("fig4_N{n}.csv")))?;
    let k = half_order(&spec, args.k)?;
    let grid = spec.grid()?;
    let a = forward(&grid);
    let u = dft_forward(&grid);
    let mut table = Table::new(["t", "g", "f_N", "s_K", "dg", "df_N", "ds_K"]);
    let ts = spec.eval_grid();
    let last = ts.len() - 1;
    for (i, &t) in ts.iter().enumerate() {
        let mut row = vec![
            Some(t),
            Some(f.value(t)),
            Some(evaluate(&a, t)?),
            Some(truncated_series(&u, k, t)?),
        ];
        if i == 0 || i == last {
            row.extend([None, None, None]);
        } else {
            row.extend([
                Some(f.derivative(t)),
                Some(derivative_series(&a, t)?),
                Some(truncated_series_derivative(&u, k, t)?),
            ]);
        }
        table.push(row);
    }
    table.write(&spec.output_path)?;
    writeln!(out, "fig4 N={n} K={k} -> {}", spec.output_path.display())?;
    Ok(spec.output_path)
}

fn figure_2d(
    dir: &Path,
    name: &str,
    field: EllipsoidField,
    n: usize,
    args: &FigureArgs,
    out: &mut dyn Write,
) -> Result<PathBuf> {
    if n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    let refinement = match args.points {
        Some(p) if p < n + 1 => {
            return Err(Error::Usage(format!(
                "--points must be at least N+1 = {}",
                n + 1
            )))
        }
        Some(p) => (p - 1) / n,
        None => DEFAULT_REFINEMENT_2D,
    };
    let grid = GridFunctionND::from_fn(vec![n, n], vec![1.0, 1.0], |p| field.value(p[0], p[1]))?;
    let fine = evaluate_nd_grid(&forward_nd(&grid), &[refinement, refinement])?;
    let dims = fine.dims();
    let path = dir.join(format!("{name}_N{n}.csv"));
    let mut table = Table::new(["x", "y", "G", "F"]);
    let mut max_err = 0.0f64;
    for i in 0..dims[0] {
        for j in 0..dims[1] {
            let (x, y) = (fine.knot(0, i), fine.knot(1, j));
            let g = field.value(x, y);
            let v = fine.samples()[i * dims[1] + j];
            max_err = max_err.max((v - g).abs());
            table.push([Some(x), Some(y), Some(g), Some(v)]);
        }
    }
    table.write(&path)?;
    writeln!(
        out,
        "{name} M=N={n} refinement {refinement}: max|F-G| = {max_err:.6e} -> {}",
        path.display()
    )?;
    Ok(path)
}
