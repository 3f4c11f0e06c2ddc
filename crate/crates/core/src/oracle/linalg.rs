//! Small dense helpers over `nalgebra` matrices.

use nalgebra::{DMatrix, DVector};

pub type Mat = DMatrix<f64>;

pub fn bracket(x: &Mat, y: &Mat) -> Mat {
    x * y - y * x
}

pub fn inner(x: &Mat, y: &Mat) -> f64 {
    x.dot(y)
}

/// Modified Gram–Schmidt in the Frobenius inner product; vectors whose
/// residual norm falls below `tol` are dropped.
pub fn orthonormalize(mats: &[Mat], tol: f64) -> Vec<Mat> {
    let mut out: Vec<Mat> = Vec::new();
    for m in mats {
        let mut v = m.clone();
        for _ in 0..2 {
            for q in &out {
                let c = inner(q, &v);
                v -= q * c;
            }
        }
        let norm = v.norm();
        if norm > tol {
            out.push(v / norm);
        }
    }
    out
}

/// Coordinates of `x` against an orthonormal family.
pub fn coords(basis: &[Mat], x: &Mat) -> DVector<f64> {
    DVector::from_iterator(basis.len(), basis.iter().map(|b| inner(b, x)))
}

/// `x` minus its orthogonal projection onto an orthonormal family.
pub fn residual(basis: &[Mat], x: &Mat) -> Mat {
    let mut r = x.clone();
    for b in basis {
        r -= b * inner(b, x);
    }
    r
}

/// Singular values in non-increasing order.
pub fn singular_values(m: &Mat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Number of singular values above `rel_tol · σ_max`.
pub fn numerical_rank(sv: &[f64], rel_tol: f64) -> usize {
    let Some(&max) = sv.first() else { return 0 };
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Orthonormal basis of the null space of `m` (right singular vectors for
/// singular values at most `rel_tol · σ_max`, or all of them if `m` is zero).
pub fn nullspace(m: &Mat, rel_tol: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    // Pad to at least n rows so the thin SVD returns a full V.
    let mut padded = Mat::zeros(m.nrows().max(n), n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("requested V^T");
    let max = svd.singular_values.max();
    (0..n)
        .filter(|&i| max == 0.0 || svd.singular_values[i] <= rel_tol * max)
        .map(|i| vt.row(i).transpose())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Mat::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0]);
        let sv = singular_values(&m);
        assert_eq!(numerical_rank(&sv, 1e-8), 1);
        let ns = nullspace(&m, 1e-8);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!((&m * v).norm() < 1e-12);
        }
        assert_eq!(numerical_rank(&[], 1e-8), 0);
    }

    #[test]
    fn gram_schmidt_drops_dependent() {
        let a = Mat::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        let b = Mat::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 0.0]);
        let c = Mat::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 0.0]);
        let q = orthonormalize(&[a, b, c], 1e-10);
        assert_eq!(q.len(), 2);
        assert!(inner(&q[0], &q[1]).abs() < 1e-14);
    }
}
