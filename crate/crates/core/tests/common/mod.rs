use std::f64::consts::PI;

use cedct::multidim::GridFunctionND;

pub fn weight(n: usize, k: usize) -> f64 {
    if k == 0 || k == n {
        1.0
    } else {
        2.0
    }
}

/// Direct nested sum over every index pair, no axis factoring.
pub fn brute_force_nd(g: &GridFunctionND) -> Vec<f64> {
    let shape = g.shape().to_vec();
    let dims = g.dims();
    let total: usize = dims.iter().product();
    let unravel = |mut flat: usize| {
        let mut idx = vec![0; dims.len()];
        for axis in (0..dims.len()).rev() {
            idx[axis] = flat % dims[axis];
            flat /= dims[axis];
        }
        idx
    };
    (0..total)
        .map(|out| {
            let j = unravel(out);
            (0..total)
                .map(|inp| {
                    let k = unravel(inp);
                    let mut term = g.samples()[inp];
                    for axis in 0..dims.len() {
                        let n = shape[axis];
                        term *= weight(n, j[axis]) * weight(n, k[axis]) / (2 * n) as f64
                            * (PI * (j[axis] * k[axis]) as f64 / n as f64).cos();
                    }
                    term
                })
                .sum()
        })
        .collect()
}
