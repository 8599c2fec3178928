use nalgebra::DMatrix;

use super::RepMatrix;
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;
const DEGENERACY_TOL: f64 = 1e-12;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a real
/// symmetric tridiagonal matrix.
pub fn eig_sym_tridiag(m: &RepMatrix) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let (diag, off) = m.symmetric_tridiagonal(SYMMETRY_TOL)?;
    let (values, vectors) = tridiagonal_eigen(&diag, &off, true)?;
    Ok((values, vectors.expect("vectors requested")))
}

/// Eigenvalues only, ascending.
pub fn eigvals_sym_tridiag(m: &RepMatrix) -> Result<Vec<f64>> {
    let (diag, off) = m.symmetric_tridiagonal(SYMMETRY_TOL)?;
    Ok(tridiagonal_eigen(&diag, &off, false)?.0)
}

/// Implicit-shift QL on the tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off` (`off[i]` couples `i` and `i+1`).
pub fn tridiagonal_eigen(diag: &[f64], off: &[f64], want_vectors: bool) -> Result<(Vec<f64>, Option<DMatrix<f64>>)> {
    let n = diag.len();
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(|| DMatrix::zeros(0, 0))));
    }
    if off.len() + 1 != n {
        return Err(Error::Shape(format!("off-diagonal has {} entries for a {n}x{n} matrix", off.len())));
    }
    let mut d = diag.to_vec();
    let mut e: Vec<f64> = off.iter().copied().chain(std::iter::once(0.0)).collect();
    let mut v = want_vectors.then(|| DMatrix::<f64>::identity(n, n));
    let eps = f64::EPSILON;
    let max_iter = 60 * n.max(1);
    let mut f = 0.0;
    let mut tst1 = 0.0f64;

    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > max_iter {
                    return Err(Error::Contract(format!("QL iteration did not converge for eigenvalue {l}")));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_mut() {
                        for k in 0..n {
                            let h = v[(k, i + 1)];
                            v[(k, i + 1)] = s * v[(k, i)] + c * h;
                            v[(k, i)] = c * v[(k, i)] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = v.map(|v| {
        let mut sorted = DMatrix::from_fn(n, n, |row, col| v[(row, order[col])]);
        reorthonormalize_clusters(&values, &mut sorted);
        sorted
    });
    Ok((values, vectors))
}

/// Modified Gram–Schmidt within each cluster of numerically equal eigenvalues.
fn reorthonormalize_clusters(values: &[f64], v: &mut DMatrix<f64>) {
    let n = values.len();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (values[end] - values[end - 1]).abs() < DEGENERACY_TOL * values[end].abs().max(1.0) {
            end += 1;
        }
        if end - start > 1 {
            for j in start..end {
                for k in start..j {
                    let proj = v.column(j).dot(&v.column(k));
                    let ck = v.column(k).clone_owned();
                    v.column_mut(j).axpy(-proj, &ck, 1.0);
                }
                let norm = v.column(j).norm();
                v.column_mut(j).unscale_mut(norm);
            }
        }
        start = end;
    }
}
