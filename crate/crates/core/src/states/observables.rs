use num_complex::Complex64;

use super::{EnergyState, PositionState, WavefunctionBasis};
use crate::error::Result;
use crate::repmat::build_energy;
use crate::wick::NamedOp;

fn hop(s: usize, j: usize) -> f64 {
    (((s - j) * (j + 1)) as f64).sqrt()
}

/// `⟨X⟩ = 2 Σ_j Re(d_j* d_{j+1}) √(s−j) √(j+1)`.
pub fn expectation_x(psi: &EnergyState) -> Result<f64> {
    psi.require_normalized()?;
    let d = &psi.amplitudes;
    Ok(2.0 * (0..psi.s).map(|j| (d[j].conj() * d[j + 1]).re * hop(psi.s, j)).sum::<f64>())
}

/// `⟨P⟩ = 2 Σ_j Im(d_j* d_{j+1}) √(s−j) √(j+1)`.
pub fn expectation_p(psi: &EnergyState) -> Result<f64> {
    psi.require_normalized()?;
    let d = &psi.amplitudes;
    Ok(2.0 * (0..psi.s).map(|j| (d[j].conj() * d[j + 1]).im * hop(psi.s, j)).sum::<f64>())
}

/// `⟨O²⟩ − ⟨O⟩²` for Hermitian `O` from its energy-basis matrix, using `⟨O²⟩ = ‖Oψ‖²`.
fn energy_variance(op: NamedOp, psi: &EnergyState) -> Result<f64> {
    let m = build_energy(op, psi.s)?;
    let v = m.matrix() * nalgebra::DVector::from_column_slice(&psi.amplitudes);
    let mean: Complex64 = psi.amplitudes.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
    let second: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    Ok(second - mean.re * mean.re)
}

/// `(σ_X², σ_P²)` through the energy-basis matrices of `X` and `P`.
pub fn uncertainty(psi: &EnergyState) -> Result<(f64, f64)> {
    psi.require_normalized()?;
    Ok((energy_variance(NamedOp::X, psi)?, energy_variance(NamedOp::P, psi)?))
}

/// Variance of an observable from a state's coefficients in the observable's
/// own eigenbasis.
pub fn variance_in_eigenbasis(coeffs: &[Complex64], eigenvalues: &[f64]) -> f64 {
    let total: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
    let weights: Vec<f64> = coeffs.iter().map(|c| c.norm_sqr() / total).collect();
    let mean: f64 = weights.iter().zip(eigenvalues).map(|(w, l)| w * l).sum();
    weights.iter().zip(eigenvalues).map(|(w, l)| w * (l - mean) * (l - mean)).sum()
}

/// Position eigenstate at `x = 2k − s` expressed in the energy basis, `d_n = α^n_k`.
pub fn position_eigenstate(k: usize, s: usize) -> Result<EnergyState> {
    WavefunctionBasis::new(s).to_energy(&PositionState::basis(s, k)?)
}

/// Momentum eigenstate with eigenvalue `2k − s`, `d_n = iⁿ α^n_k`.
pub fn momentum_eigenstate(k: usize, s: usize) -> Result<EnergyState> {
    let mut psi = position_eigenstate(k, s)?;
    for (n, d) in psi.amplitudes.iter_mut().enumerate() {
        *d *= Complex64::i().powu(n as u32);
    }
    Ok(psi)
}

#[derive(Clone, Debug, PartialEq)]
pub struct UncertaintyFloor {
    pub s: usize,
    /// `min σ_X² σ_P²` over all position and momentum eigenstates, with each
    /// state's sharp variance taken in its own eigenbasis.
    pub min_product: f64,
    /// Largest sharp-observable variance recomputed through the energy basis;
    /// zero up to rounding.
    pub energy_basis_residual: f64,
}

pub fn uncertainty_floor(s: usize) -> Result<UncertaintyFloor> {
    let grid: Vec<f64> = (0..=s).map(|k| 2.0 * k as f64 - s as f64).collect();
    let mut min_product = f64::INFINITY;
    let mut residual = 0.0f64;
    for k in 0..=s {
        let sharp = PositionState::basis(s, k)?;
        let var_sharp = variance_in_eigenbasis(&sharp.amplitudes, &grid);

        let pos = position_eigenstate(k, s)?;
        let (vx, vp) = uncertainty(&pos)?;
        min_product = min_product.min(var_sharp * vp);
        residual = residual.max(vx.abs());

        let mom = momentum_eigenstate(k, s)?;
        let (vx, vp) = uncertainty(&mom)?;
        min_product = min_product.min(vx * var_sharp);
        residual = residual.max(vp.abs());
    }
    Ok(UncertaintyFloor { s, min_product, energy_basis_residual: residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn superposition_expectations() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let real = EnergyState::new(vec![c(r, 0.0), c(r, 0.0)]).unwrap();
        assert!((expectation_x(&real).unwrap() - 1.0).abs() < 1e-15);
        assert!(expectation_p(&real).unwrap().abs() < 1e-15);
        let imag = EnergyState::new(vec![c(r, 0.0), c(0.0, r)]).unwrap();
        assert!(expectation_x(&imag).unwrap().abs() < 1e-15);
        assert!((expectation_p(&imag).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenstates_have_zero_mean() {
        for n in 0..=4 {
            let psi = EnergyState::basis(4, n).unwrap();
            assert_eq!(expectation_x(&psi).unwrap(), 0.0);
            assert_eq!(expectation_p(&psi).unwrap(), 0.0);
        }
    }

    #[test]
    fn unnormalized_rejected() {
        let psi = EnergyState::from_real(&[1.0, 1.0]).unwrap();
        assert!(expectation_x(&psi).is_err());
        assert!(uncertainty(&psi).is_err());
    }

    #[test]
    fn ground_state_variances_equal_s() {
        for s in [1usize, 3, 10] {
            let (vx, vp) = uncertainty(&EnergyState::basis(s, 0).unwrap()).unwrap();
            assert!((vx - s as f64).abs() < 1e-12 && (vp - s as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenstates_are_sharp() {
        let s = 6;
        for k in 0..=s {
            let (vx, _) = uncertainty(&position_eigenstate(k, s).unwrap()).unwrap();
            assert!(vx.abs() < 1e-11);
            let (_, vp) = uncertainty(&momentum_eigenstate(k, s).unwrap()).unwrap();
            assert!(vp.abs() < 1e-11);
        }
        assert_eq!(uncertainty_floor(s).unwrap().min_product, 0.0);
    }
}
