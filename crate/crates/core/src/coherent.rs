//! Displacement-operator coherent states and their time evolution.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repmat::{tridiagonal_eigen, BasisTag, RepMatrix};
use crate::states::{EnergyState, PositionState, WavefunctionBasis};

/// Phase convention for free evolution in the energy basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvolutionConvention {
    /// `d_j ← e^{i(s−2j)t} d_j`; `⟨X⟩` oscillates at frequency 2.
    #[default]
    PaperPhase,
    /// `d_j ← e^{−ijt} d_j`, generated by `H` with spectrum `{0..s}`.
    Hamiltonian,
}

impl EvolutionConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            EvolutionConvention::PaperPhase => "paper-phase",
            EvolutionConvention::Hamiltonian => "hamiltonian",
        }
    }

    /// Angular frequency of `⟨X(t)⟩`.
    pub fn frequency(self) -> f64 {
        match self {
            EvolutionConvention::PaperPhase => 2.0,
            EvolutionConvention::Hamiltonian => 1.0,
        }
    }
}

impl fmt::Display for EvolutionConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvolutionConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-phase" => Ok(EvolutionConvention::PaperPhase),
            "hamiltonian" => Ok(EvolutionConvention::Hamiltonian),
            other => Err(Error::Parse(format!("unknown evolution convention `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoherentMethod {
    /// Matrix exponential of the displacement generator.
    #[default]
    Oracle,
    /// Closed-form expansion, valid for `|β| < π/4`.
    Bch,
}

impl FromStr for CoherentMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(CoherentMethod::Oracle),
            "bch" => Ok(CoherentMethod::Bch),
            other => Err(Error::Parse(format!("unknown coherent-state method `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DisplacementParams {
    pub beta: Complex64,
    pub s: usize,
    pub convention: EvolutionConvention,
}

/// `arg β` with `arg 0 = 0`.
pub fn beta_arg(beta: Complex64) -> f64 {
    if beta.norm() == 0.0 {
        0.0
    } else {
        beta.arg()
    }
}

/// Factors of `exp(βD† − β*D) = Φ V e^{−iΛ} Vᵀ Φ†`, where `Φ = diag((i e^{i arg β})ⁿ)`
/// turns the Hermitian tridiagonal `i(βD† − β*D)` into the real matrix `V Λ Vᵀ`.
struct Generator {
    phases: Vec<Complex64>,
    values: Vec<f64>,
    vectors: DMatrix<f64>,
}

impl Generator {
    fn new(beta: Complex64, s: usize) -> Result<Self> {
        let step = Complex64::i() * Complex64::from_polar(1.0, beta_arg(beta));
        let phases = (0..=s).map(|n| step.powu(n as u32)).collect();
        let off: Vec<f64> = (0..s).map(|n| 2.0 * beta.norm() * (((s - n) * (n + 1)) as f64).sqrt()).collect();
        let (values, vectors) = tridiagonal_eigen(&vec![0.0; s + 1], &off, true)?;
        Ok(Self { phases, values, vectors: vectors.expect("vectors requested") })
    }

    /// `exp(G) v`.
    fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = v.len();
        let w: Vec<Complex64> = v.iter().zip(&self.phases).map(|(a, p)| a * p.conj()).collect();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let proj: Complex64 = (0..n).map(|i| w[i] * self.vectors[(i, k)]).sum();
            *c = proj * Complex64::from_polar(1.0, -self.values[k]);
        }
        (0..n).map(|i| self.phases[i] * (0..n).map(|k| coeffs[k] * self.vectors[(i, k)]).sum::<Complex64>()).collect()
    }

    fn matrix(&self) -> DMatrix<Complex64> {
        let n = self.phases.len();
        DMatrix::from_fn(n, n, |i, j| {
            let inner: Complex64 = (0..n)
                .map(|k| Complex64::from_polar(self.vectors[(i, k)] * self.vectors[(j, k)], -self.values[k]))
                .sum();
            self.phases[i] * inner * self.phases[j].conj()
        })
    }
}

/// `exp(βD† − β*D)` in the energy basis.
pub fn displacement_matrix(beta: Complex64, s: usize) -> Result<RepMatrix> {
    let g = Generator::new(beta, s)?;
    Ok(RepMatrix::new(g.matrix(), BasisTag::energy(s, s)))
}

/// `Aᵀ M A` for an energy-basis matrix `M` and the wavefunction matrix `A`.
pub fn to_position_basis(m: &RepMatrix, basis: &WavefunctionBasis) -> Result<RepMatrix> {
    if !m.is_square() || m.rows() != basis.s + 1 {
        return Err(Error::Shape(format!("expected a {0}x{0} energy-basis matrix", basis.s + 1)));
    }
    let a = basis.alpha.map(|v| Complex64::new(v, 0.0));
    Ok(RepMatrix::new(a.transpose() * m.matrix() * a, BasisTag::position(basis.s, basis.s)))
}

/// `exp(βD† − β*D)` in the n1-ascending position basis.
pub fn displacement_matrix_position(beta: Complex64, s: usize) -> Result<RepMatrix> {
    to_position_basis(&displacement_matrix(beta, s)?, &WavefunctionBasis::new(s))
}

/// `|β, s⟩ = exp(βD† − β*D) |0, s⟩`.
pub fn coherent_state(beta: Complex64, s: usize, method: CoherentMethod) -> Result<EnergyState> {
    match method {
        CoherentMethod::Oracle => {
            let g = Generator::new(beta, s)?;
            let ground = EnergyState::basis(s, 0)?;
            EnergyState::new(g.apply(&ground.amplitudes))
        }
        CoherentMethod::Bch => coherent_state_bch(beta, s),
    }
}

/// Amplitudes `(e^{i arg β} tan 2|β|)^j √C(s,j) cos^s(2|β|)`.
fn coherent_state_bch(beta: Complex64, s: usize) -> Result<EnergyState> {
    let r = beta.norm();
    if !(r < FRAC_PI_4) {
        return Err(Error::Domain(format!(
            "closed-form expansion needs |beta| < pi/4, got {r}; use the oracle method"
        )));
    }
    let ratio = Complex64::from_polar((2.0 * r).tan(), beta_arg(beta));
    let mut amps = Vec::with_capacity(s + 1);
    let mut cur = Complex64::new((2.0 * r).cos().powi(s as i32), 0.0);
    for j in 0..=s {
        amps.push(cur);
        if j < s {
            cur *= ratio * (((s - j) as f64) / ((j + 1) as f64)).sqrt();
        }
    }
    EnergyState::new(amps)
}

/// Free evolution for time `t`.
pub fn evolve(psi: &EnergyState, t: f64, convention: EvolutionConvention) -> EnergyState {
    let s = psi.s as f64;
    let amplitudes = psi
        .amplitudes
        .iter()
        .enumerate()
        .map(|(j, d)| {
            let phase = match convention {
                EvolutionConvention::PaperPhase => (s - 2.0 * j as f64) * t,
                EvolutionConvention::Hamiltonian => -(j as f64) * t,
            };
            d * Complex64::from_polar(1.0, phase)
        })
        .collect();
    EnergyState { s: psi.s, amplitudes }
}

/// `⟨X(t)⟩ = s cos(2t − arg β) sin(4|β|)`.
pub fn position_expectation_closed(beta: Complex64, t: f64, s: usize) -> f64 {
    position_expectation_closed_with(beta, t, s, EvolutionConvention::PaperPhase)
}

/// `s cos(ωt − arg β) sin(4|β|)` with `ω` set by the convention.
pub fn position_expectation_closed_with(beta: Complex64, t: f64, s: usize, convention: EvolutionConvention) -> f64 {
    s as f64 * (convention.frequency() * t - beta_arg(beta)).cos() * (4.0 * beta.norm()).sin()
}

/// Real displacement `β′` whose coherent state at `t = 0` has the same position
/// probabilities as the state displaced by `beta` and evolved for `t`
/// (paper-phase convention): `sin 4β′ = sin 4|β| cos(2t − arg β)`.
pub fn equivalent_displacement(beta: Complex64, t: f64) -> f64 {
    let v = (4.0 * beta.norm()).sin() * (2.0 * t - beta_arg(beta)).cos();
    v.clamp(-1.0, 1.0).asin() / 4.0
}

/// Position amplitudes of the evolved coherent state for each `t`.
pub fn coherent_wavefunction_series(beta: Complex64, s: usize, t_grid: &[f64]) -> Result<Vec<PositionState>> {
    let basis = WavefunctionBasis::new(s);
    let psi = coherent_state(beta, s, CoherentMethod::Oracle)?;
    t_grid.iter().map(|&t| basis.to_position(&evolve(&psi, t, EvolutionConvention::PaperPhase))).collect()
}

/// Evenly spaced grid of `steps` points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..steps).map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64).collect(),
    }
}

/// One time or displacement sample of a coherent state.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherentFrame {
    pub t: f64,
    pub beta: Complex64,
    pub position: PositionState,
    pub expected_x_closed: f64,
    pub expected_x_oracle: f64,
}

fn frame(
    psi: &EnergyState,
    beta: Complex64,
    t: f64,
    convention: EvolutionConvention,
    basis: &WavefunctionBasis,
) -> Result<CoherentFrame> {
    let evolved = evolve(psi, t, convention);
    Ok(CoherentFrame {
        t,
        beta,
        position: basis.to_position(&evolved)?,
        expected_x_closed: position_expectation_closed_with(beta, t, psi.s, convention),
        expected_x_oracle: crate::states::expectation_x(&evolved)?,
    })
}

/// Frames of the oracle coherent state at fixed `beta` over `t_grid`.
pub fn time_sweep(
    beta: Complex64,
    s: usize,
    t_grid: &[f64],
    convention: EvolutionConvention,
) -> Result<Vec<CoherentFrame>> {
    let basis = WavefunctionBasis::new(s);
    let psi = coherent_state(beta, s, CoherentMethod::Oracle)?;
    t_grid.iter().map(|&t| frame(&psi, beta, t, convention, &basis)).collect()
}

/// Frames at fixed time `t` over displacements `|β| ∈ abs_grid` with fixed `arg β`.
pub fn beta_sweep(
    abs_grid: &[f64],
    arg: f64,
    s: usize,
    t: f64,
    convention: EvolutionConvention,
) -> Result<Vec<CoherentFrame>> {
    let basis = WavefunctionBasis::new(s);
    abs_grid
        .iter()
        .map(|&r| {
            let beta = Complex64::from_polar(r, arg);
            let psi = coherent_state(beta, s, CoherentMethod::Oracle)?;
            frame(&psi, beta, t, convention, &basis)
        })
        .collect()
}
