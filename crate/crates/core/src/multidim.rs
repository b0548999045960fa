//! Tensor-product DCT-I on rectangular grids of any dimension.
//!
//! Arrays are dense and row-major with axis 0 varying slowest. Axis `i` has
//! `M_i` intervals, so `M_i + 1` knots spanning `[0, X_i]`. The forward
//! transform is applied as one 1-D pass per axis; every pass sums in a fixed
//! order so results do not depend on how slices are scheduled.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::spectral::{knot, normalized, weight, CosTable};

/// Samples on an `(M_1 + 1) x ... x (M_n + 1)` knot lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunctionND {
    shape: Vec<usize>,
    extents: Vec<f64>,
    samples: Vec<f64>,
}

/// Coefficients `A_{m_1 ... m_n}`, same layout as the originating grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTensorND {
    shape: Vec<usize>,
    extents: Vec<f64>,
    coefficients: Vec<f64>,
}

fn validate(shape: &[usize], extents: &[f64], values: &[f64]) -> Result<()> {
    if shape.is_empty() {
        return domain("grid needs at least one axis");
    }
    if shape.len() != extents.len() {
        return domain(format!(
            "{} axes but {} extents",
            shape.len(),
            extents.len()
        ));
    }
    if let Some(axis) = shape.iter().position(|&m| m == 0) {
        return domain(format!("axis {axis} has no intervals"));
    }
    if let Some(axis) = extents.iter().position(|x| !(x.is_finite() && *x > 0.0)) {
        return domain(format!("axis {axis} extent must be positive"));
    }
    let expected: usize = shape.iter().map(|m| m + 1).product();
    if values.len() != expected {
        return domain(format!(
            "expected {expected} values for shape {shape:?}, got {}",
            values.len()
        ));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return domain("values must be finite");
    }
    Ok(())
}

fn dims(shape: &[usize]) -> Vec<usize> {
    shape.iter().map(|m| m + 1).collect()
}

fn flat_index(dims: &[usize], index: &[usize]) -> Option<usize> {
    if index.len() != dims.len() {
        return None;
    }
    let mut flat = 0;
    for (i, d) in index.iter().zip(dims) {
        if i >= d {
            return None;
        }
        flat = flat * d + i;
    }
    Some(flat)
}

impl GridFunctionND {
    pub fn new(shape: Vec<usize>, extents: Vec<f64>, samples: Vec<f64>) -> Result<Self> {
        validate(&shape, &extents, &samples)?;
        Ok(Self {
            shape,
            extents,
            samples,
        })
    }

    /// Samples `f` at every knot; `f` receives physical coordinates.
    pub fn from_fn(
        shape: Vec<usize>,
        extents: Vec<f64>,
        f: impl Fn(&[f64]) -> f64,
    ) -> Result<Self> {
        let count = if shape.is_empty() {
            0
        } else {
            shape.iter().map(|m| m + 1).product()
        };
        let mut samples = Vec::with_capacity(count);
        let mut index = vec![0usize; shape.len()];
        let mut point = vec![0.0; shape.len()];
        for _ in 0..count {
            for (axis, &i) in index.iter().enumerate() {
                point[axis] = knot(i, shape[axis], extents.get(axis).copied().unwrap_or(1.0));
            }
            samples.push(f(&point));
            increment(&mut index, &shape);
        }
        Self::new(shape, extents, samples)
    }

    /// Interval counts per axis.
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn extents(&self) -> &[f64] {
        &self.extents
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn ndim(&self) -> usize {
        self.shape.len()
    }

    /// Knot counts per axis.
    pub fn dims(&self) -> Vec<usize> {
        dims(&self.shape)
    }

    pub fn get(&self, index: &[usize]) -> Option<f64> {
        flat_index(&self.dims(), index).map(|i| self.samples[i])
    }

    /// Physical coordinate of knot `i` on `axis`.
    pub fn knot(&self, axis: usize, i: usize) -> f64 {
        knot(i, self.shape[axis], self.extents[axis])
    }
}

impl CoefficientTensorND {
    pub fn new(shape: Vec<usize>, extents: Vec<f64>, coefficients: Vec<f64>) -> Result<Self> {
        validate(&shape, &extents, &coefficients)?;
        Ok(Self {
            shape,
            extents,
            coefficients,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn extents(&self) -> &[f64] {
        &self.extents
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn coefficients_mut(&mut self) -> &mut [f64] {
        &mut self.coefficients
    }

    pub fn ndim(&self) -> usize {
        self.shape.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        dims(&self.shape)
    }

    pub fn get(&self, index: &[usize]) -> Option<f64> {
        flat_index(&self.dims(), index).map(|i| self.coefficients[i])
    }

    /// Multi-index of each flat position, in storage order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let shape = self.shape.clone();
        let mut index = vec![0usize; shape.len()];
        (0..self.coefficients.len()).map(move |_| {
            let current = index.clone();
            increment(&mut index, &shape);
            current
        })
    }
}

fn increment(index: &mut [usize], shape: &[usize]) {
    for axis in (0..index.len()).rev() {
        index[axis] += 1;
        if index[axis] <= shape[axis] {
            return;
        }
        index[axis] = 0;
    }
}

/// Applies a dense `rows x dims[axis]` matrix along `axis`, returning the new
/// data; the axis length becomes `rows`.
pub(crate) fn apply_along_axis(
    data: &[f64],
    dims: &[usize],
    axis: usize,
    matrix: &[f64],
    rows: usize,
) -> Vec<f64> {
    let len = dims[axis];
    let outer: usize = dims[..axis].iter().product();
    let inner: usize = dims[axis + 1..].iter().product();
    let mut out = vec![0.0; outer * rows * inner];
    for o in 0..outer {
        let src = &data[o * len * inner..(o + 1) * len * inner];
        let dst = &mut out[o * rows * inner..(o + 1) * rows * inner];
        for r in 0..rows {
            let coeffs = &matrix[r * len..(r + 1) * len];
            let row = &mut dst[r * inner..(r + 1) * inner];
            for (k, c) in coeffs.iter().enumerate() {
                let line = &src[k * inner..(k + 1) * inner];
                for (d, s) in row.iter_mut().zip(line) {
                    *d += c * s;
                }
            }
        }
    }
    out
}

fn analysis_matrix(m: usize) -> Vec<f64> {
    let table = CosTable::new(m);
    let d = m + 1;
    let mut out = vec![0.0; d * d];
    for j in 0..d {
        for k in 0..d {
            let w = f64::from(weight(m, j) * weight(m, k)) / (2 * m) as f64;
            out[j * d + k] = w * table.cos(j * k);
        }
    }
    out
}

/// `cos(pi m i / (r M))` for `i = 0..=rM`, `m = 0..=M`.
fn refined_synthesis_matrix(m: usize, refinement: usize) -> Vec<f64> {
    let fine = m * refinement;
    let table = CosTable::new(fine);
    let d = m + 1;
    let mut out = vec![0.0; (fine + 1) * d];
    for i in 0..=fine {
        for j in 0..d {
            out[i * d + j] = table.cos(i * j);
        }
    }
    out
}

/// Forward transform with the axes processed in the given order.
pub(crate) fn forward_nd_ordered(g: &GridFunctionND, order: &[usize]) -> CoefficientTensorND {
    let dims = g.dims();
    let mut data = g.samples.clone();
    for &axis in order {
        let m = g.shape[axis];
        data = apply_along_axis(&data, &dims, axis, &analysis_matrix(m), m + 1);
    }
    CoefficientTensorND {
        shape: g.shape.clone(),
        extents: g.extents.clone(),
        coefficients: data,
    }
}

pub fn forward_nd(g: &GridFunctionND) -> CoefficientTensorND {
    let order: Vec<usize> = (0..g.ndim()).collect();
    forward_nd_ordered(g, &order)
}

/// Continuous extension `F(x_1, ..., x_n)` at one point.
pub fn evaluate_nd(a: &CoefficientTensorND, point: &[f64]) -> Result<f64> {
    if point.len() != a.ndim() {
        return domain(format!(
            "point has {} coordinates, tensor has {} axes",
            point.len(),
            a.ndim()
        ));
    }
    let normalized: Vec<f64> = point
        .iter()
        .zip(&a.extents)
        .map(|(x, ext)| normalized(*x, *ext))
        .collect::<Result<_>>()?;

    // Contract the last axis first; the remaining block shrinks each step.
    let mut data = a.coefficients.clone();
    for axis in (0..a.ndim()).rev() {
        let len = a.shape[axis] + 1;
        let cosines: Vec<f64> = (0..len)
            .map(|m| (PI * m as f64 * normalized[axis]).cos())
            .collect();
        data = data
            .chunks_exact(len)
            .map(|chunk| chunk.iter().zip(&cosines).map(|(c, w)| c * w).sum())
            .collect();
    }
    Ok(data[0])
}

/// Evaluates the extension on the lattice obtained by splitting every
/// interval of axis `i` into `refinement[i]` parts.
pub fn evaluate_nd_grid(a: &CoefficientTensorND, refinement: &[usize]) -> Result<GridFunctionND> {
    if refinement.len() != a.ndim() {
        return domain(format!(
            "{} refinement factors for {} axes",
            refinement.len(),
            a.ndim()
        ));
    }
    if refinement.contains(&0) {
        return domain("refinement factors must be at least 1");
    }
    let mut dims = a.dims();
    let mut data = a.coefficients.clone();
    for (axis, &r) in refinement.iter().enumerate() {
        let m = a.shape[axis];
        let rows = m * r + 1;
        data = apply_along_axis(&data, &dims, axis, &refined_synthesis_matrix(m, r), rows);
        dims[axis] = rows;
    }
    Ok(GridFunctionND {
        shape: a.shape.iter().zip(refinement).map(|(m, r)| m * r).collect(),
        extents: a.extents.clone(),
        samples: data,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{self, GridFunction1D};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_grid(rng: &mut ChaCha8Rng, shape: Vec<usize>, extents: Vec<f64>) -> GridFunctionND {
        let count = shape.iter().map(|m| m + 1).product();
        let samples = (0..count).map(|_| rng.gen_range(-1.0..1.0)).collect();
        GridFunctionND::new(shape, extents, samples).unwrap()
    }

    #[test]
    fn constant_field() {
        let g = GridFunctionND::new(vec![4, 4], vec![1.0, 1.0], vec![0.7; 25]).unwrap();
        let a = forward_nd(&g);
        assert!((a.coefficients()[0] - 0.7).abs() < 1e-12);
        assert!(a.coefficients()[1..].iter().all(|v| v.abs() < 1e-12));
        assert!((evaluate_nd(&a, &[0.31, 0.77]).unwrap() - 0.7).abs() < 1e-12);
    }

    #[test]
    fn separable_product_is_outer_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g1: Vec<f64> = (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let g2: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let a1 = spectral::forward(&GridFunction1D::new(g1.clone(), 1.0).unwrap());
        let a2 = spectral::forward(&GridFunction1D::new(g2.clone(), 1.0).unwrap());
        let samples = g1
            .iter()
            .flat_map(|x| g2.iter().map(move |y| x * y))
            .collect();
        let g = GridFunctionND::new(vec![5, 7], vec![1.0, 1.0], samples).unwrap();
        let a = forward_nd(&g);
        for m in 0..6 {
            for n in 0..8 {
                let want = a1.coefficients()[m] * a2.coefficients()[n];
                assert!((a.get(&[m, n]).unwrap() - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn axis_order_does_not_matter() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = random_grid(&mut rng, vec![4, 6], vec![1.0, 2.0]);
        let rows_first = forward_nd_ordered(&g, &[0, 1]);
        let cols_first = forward_nd_ordered(&g, &[1, 0]);
        for (a, b) in rows_first
            .coefficients()
            .iter()
            .zip(cols_first.coefficients())
        {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_at_grid_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_grid(&mut rng, vec![5, 5], vec![2.0, 3.0]);
        let a = forward_nd(&g);
        for j in 0..6 {
            for k in 0..6 {
                let v = evaluate_nd(&a, &[g.knot(0, j), g.knot(1, k)]).unwrap();
                assert!((v - g.get(&[j, k]).unwrap()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn slice_reduces_to_one_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = random_grid(&mut rng, vec![7, 7], vec![1.0, 1.0]);
        let a = forward_nd(&g);
        let y0 = 0.413;
        // Partially transformed slice: b_m = sum_n A_mn cos(pi n y0).
        let slice: Vec<f64> = (0..8)
            .map(|m| {
                (0..8)
                    .map(|n| a.get(&[m, n]).unwrap() * (PI * n as f64 * y0).cos())
                    .sum()
            })
            .collect();
        let b = spectral::CoefficientVector::new(slice, 1.0).unwrap();
        for x in [0.0, 0.05, 0.5, 0.93, 1.0] {
            let want = spectral::evaluate(&b, x).unwrap();
            assert!((evaluate_nd(&a, &[x, y0]).unwrap() - want).abs() < 1e-10);
        }
    }

    #[test]
    fn refined_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_grid(&mut rng, vec![4, 4], vec![1.0, 1.0]);
        let a = forward_nd(&g);
        let same = evaluate_nd_grid(&a, &[1, 1]).unwrap();
        for (x, y) in same.samples().iter().zip(g.samples()) {
            assert!((x - y).abs() < 1e-9);
        }
        let fine = evaluate_nd_grid(&a, &[3, 3]).unwrap();
        assert_eq!(fine.dims(), vec![13, 13]);
        assert_eq!(fine.shape(), &[12, 12]);

        let g = random_grid(&mut rng, vec![5, 5], vec![1.0, 2.0]);
        let a = forward_nd(&g);
        let fine = evaluate_nd_grid(&a, &[2, 2]).unwrap();
        for _ in 0..10 {
            let (i, j) = (rng.gen_range(0..11), rng.gen_range(0..11));
            let p = [fine.knot(0, i), fine.knot(1, j)];
            let want = evaluate_nd(&a, &p).unwrap();
            assert!((fine.get(&[i, j]).unwrap() - want).abs() < 1e-12);
        }
        assert!(evaluate_nd_grid(&a, &[0, 1]).is_err());
        assert!(evaluate_nd_grid(&a, &[1]).is_err());
    }

    #[test]
    fn invalid_inputs() {
        assert!(GridFunctionND::new(vec![], vec![], vec![]).is_err());
        assert!(GridFunctionND::new(vec![2, 0], vec![1.0, 1.0], vec![0.0; 3]).is_err());
        assert!(GridFunctionND::new(vec![2], vec![1.0], vec![0.0; 4]).is_err());
        assert!(GridFunctionND::new(vec![2], vec![-1.0], vec![0.0; 3]).is_err());
        let g = GridFunctionND::new(vec![2, 2], vec![1.0, 1.0], vec![1.0; 9]).unwrap();
        let a = forward_nd(&g);
        assert!(evaluate_nd(&a, &[0.5]).is_err());
        assert!(evaluate_nd(&a, &[0.5, 1.5]).is_err());
    }

    #[test]
    fn three_dimensional_exactness() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = random_grid(&mut rng, vec![2, 3, 4], vec![1.0, 1.5, 2.0]);
        let a = forward_nd(&g);
        let back = evaluate_nd_grid(&a, &[1, 1, 1]).unwrap();
        for (x, y) in back.samples().iter().zip(g.samples()) {
            assert!((x - y).abs() < 1e-10);
        }
    }
}
