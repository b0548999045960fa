//! Binary dump of a 2-D coefficient array.
//!
//! Layout: the 8-byte magic `CEDCT1\0\0`, `u32` row count, `u32` column
//! count (both little-endian), then `rows * cols` little-endian `f64`
//! values in row-major order.

use crate::error::{domain, Error, Result};
use crate::multidim::CoefficientTensorND;

pub const DUMP_MAGIC: &[u8; 8] = b"CEDCT1\0\0";
const HEADER_LEN: usize = 16;

pub fn encode_coefficient_dump(coeffs: &CoefficientTensorND) -> Result<Vec<u8>> {
    let dims = coeffs.dims();
    if dims.len() != 2 {
        return domain(format!(
            "coefficient dump holds 2-D arrays, got {} axes",
            dims.len()
        ));
    }
    let rows = u32::try_from(dims[0]).map_err(|_| Error::Domain("too many rows".into()))?;
    let cols = u32::try_from(dims[1]).map_err(|_| Error::Domain("too many columns".into()))?;
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * coeffs.coefficients().len());
    out.extend_from_slice(DUMP_MAGIC);
    out.extend_from_slice(&rows.to_le_bytes());
    out.extend_from_slice(&cols.to_le_bytes());
    for v in coeffs.coefficients() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    Ok(out)
}

/// Decodes a dump; extents are set to `(rows - 1, cols - 1)`, i.e. pixel units.
pub fn decode_coefficient_dump(data: &[u8]) -> Result<CoefficientTensorND> {
    let parse = |offset: usize, message: String| Error::Parse { offset, message };
    if data.len() < HEADER_LEN {
        return Err(parse(data.len(), "truncated header".into()));
    }
    if &data[..8] != DUMP_MAGIC {
        return Err(parse(0, "bad magic, expected CEDCT1".into()));
    }
    let rows = u32::from_le_bytes(data[8..12].try_into().unwrap()) as usize;
    let cols = u32::from_le_bytes(data[12..16].try_into().unwrap()) as usize;
    if rows < 2 || cols < 2 {
        return Err(parse(
            8,
            format!("array must be at least 2x2, got {rows}x{cols}"),
        ));
    }
    let expected = rows * cols * 8;
    let payload = &data[HEADER_LEN..];
    if payload.len() != expected {
        return Err(parse(
            HEADER_LEN + payload.len().min(expected),
            format!("expected {expected} payload bytes, found {}", payload.len()),
        ));
    }
    let values = payload
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    CoefficientTensorND::new(
        vec![rows - 1, cols - 1],
        vec![(rows - 1) as f64, (cols - 1) as f64],
        values,
    )
}
