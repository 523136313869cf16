//! Rotation matrices composed from planar Givens rotations.

use alloc::format;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Builds the rotation for an angle matrix.
///
/// Each nonzero `theta[(p, q)]` (with `p < q`) contributes a Givens rotation in
/// the `x_p`–`x_q` plane, right-multiplied onto the running product with `p`
/// ascending in the outer loop and `q` ascending in the inner loop. Givens
/// factors do not commute, so the order is part of the result.
pub fn build_rotation(theta: &SquareMatrix) -> Result<SquareMatrix> {
    if !theta.is_strictly_upper() {
        return Err(Error::Shape(format!(
            "angle matrix must be strictly upper-triangular ({0}x{0})",
            theta.dim()
        )));
    }
    let d = theta.dim();
    let mut r = SquareMatrix::identity(d);
    for p in 0..d.saturating_sub(1) {
        for q in p + 1..d {
            let angle = theta[(p, q)];
            if angle == 0.0 {
                continue;
            }
            apply_givens_right(&mut r, p, q, angle);
        }
    }
    Ok(r)
}

/// `r ← r · G(p, q, angle)` where `G` is the identity except
/// `G(p,p) = G(q,q) = cos`, `G(p,q) = −sin`, `G(q,p) = sin`.
///
/// Only columns `p` and `q` of `r` change.
fn apply_givens_right(r: &mut SquareMatrix, p: usize, q: usize, angle: f64) {
    let (s, c) = libm::sincos(angle);
    for i in 0..r.dim() {
        let rp = r[(i, p)];
        let rq = r[(i, q)];
        r[(i, p)] = c * rp + s * rq;
        r[(i, q)] = -s * rp + c * rq;
    }
}
