use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{BasisTag, RepMatrix};
use crate::error::{Error, Result};

const CLAMP_TOL: f64 = 1e-12;
const NORM_SLACK: f64 = 1e-12;

/// Largest singular value.
pub fn spectral_norm(m: &RepMatrix) -> f64 {
    if m.rows() == 0 || m.cols() == 0 {
        return 0.0;
    }
    m.matrix().clone().svd(false, false).singular_values.max()
}

/// Defect blocks `(√(I − TT†), √(I − T†T))` from one SVD of `t`.
fn defects(t: &DMatrix<Complex64>) -> Result<(DMatrix<Complex64>, DMatrix<Complex64>)> {
    let svd = t.clone().svd(true, true);
    let (w, v_adj) = match (svd.u, svd.v_t) {
        (Some(w), Some(v_adj)) => (w, v_adj),
        _ => return Err(Error::Contract("singular value decomposition did not return vectors".into())),
    };
    let mut cos = Vec::with_capacity(svd.singular_values.len());
    for &sigma in svd.singular_values.iter() {
        let gap = 1.0 - sigma * sigma;
        if gap < -CLAMP_TOL {
            return Err(Error::Contract(format!("defect operator has negative eigenvalue {gap:e}")));
        }
        cos.push(Complex64::new(gap.max(0.0).sqrt(), 0.0));
    }
    let sandwich = |q: &DMatrix<Complex64>| {
        let scaled = DMatrix::from_fn(q.nrows(), q.ncols(), |i, j| q[(i, j)] * cos[j]);
        scaled * q.adjoint()
    };
    Ok((sandwich(&w), sandwich(&v_adj.adjoint())))
}

/// Embeds `m / alpha` as the top-left block of a unitary of twice the size:
/// `[[T, √(I − TT†)], [√(I − T†T), −T†]]`. A rectangular `m` is first padded
/// with zero rows or columns to a square.
pub fn unitary_dilation(m: &RepMatrix, alpha: f64) -> Result<RepMatrix> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::Domain(format!("alpha must be positive and finite, got {alpha}")));
    }
    let norm = spectral_norm(m);
    if norm > alpha * (1.0 + NORM_SLACK) {
        return Err(Error::Contraction { alpha, norm });
    }
    let n = m.rows().max(m.cols());
    let mut t = DMatrix::<Complex64>::zeros(n, n);
    t.view_mut((0, 0), (m.rows(), m.cols())).copy_from(m.matrix());
    t.unscale_mut(alpha);
    let t_adj = t.adjoint();
    let (top_right, bottom_left) = defects(&t)?;

    let mut u = DMatrix::<Complex64>::zeros(2 * n, 2 * n);
    u.view_mut((0, 0), (n, n)).copy_from(&t);
    u.view_mut((0, n), (n, n)).copy_from(&top_right);
    u.view_mut((n, 0), (n, n)).copy_from(&bottom_left);
    u.view_mut((n, n), (n, n)).copy_from(&(-t_adj));
    Ok(RepMatrix::new(u, BasisTag::dilation(2 * n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmat::build;
    use crate::wick::NamedOp;

    fn unitarity_residual(u: &RepMatrix) -> f64 {
        let n = u.rows();
        let g = u.matrix().adjoint() * u.matrix();
        (g - DMatrix::<Complex64>::identity(n, n)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn zero_operator_gives_swap() {
        let z = RepMatrix::zeros(3, 3, BasisTag::position(2, 2));
        let u = unitary_dilation(&z, 1.0).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expected = if (i + 3 == j) || (j + 3 == i) { 1.0 } else { 0.0 };
                assert!((u.get(i, j).re - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn identity_gives_reflection() {
        let u = unitary_dilation(&RepMatrix::identity(2, BasisTag::position(1, 1)), 1.0).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| u.get(i, i).re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
        assert!(unitarity_residual(&u) < 1e-15);
    }

    #[test]
    fn b1_at_its_norm() {
        let s = 6;
        let b1 = build(NamedOp::B1, s).unwrap();
        let bound = (2.0 * s as f64).sqrt();
        assert!((spectral_norm(&b1) - bound).abs() < 1e-12);
        let u = unitary_dilation(&b1, bound).unwrap();
        assert!(unitarity_residual(&u) < 1e-12);
        assert!(matches!(unitary_dilation(&b1, 0.9 * bound), Err(Error::Contraction { .. })));
    }
}
