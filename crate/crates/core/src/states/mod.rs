//! Energy- and position-basis states at fixed resolution.

mod io;
mod ladder;
mod observables;
mod rescale;
mod wavefunction;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use io::{State, StateBasis, StateFile};
pub use ladder::{apply_ladder, ladder_factor, LadderOp};
pub use observables::{
    expectation_p, expectation_x, momentum_eigenstate, position_eigenstate, uncertainty, uncertainty_floor,
    variance_in_eigenbasis, UncertaintyFloor,
};
pub use rescale::{rescale_resolution, RescaleMode, Rescaled};
pub use wavefunction::{
    change_basis, eigenstate_wavefunction, eigenstate_wavefunction_float, ground_state, ground_state_exact,
    wavefunctions_exact, wavefunctions_float, ExactGroundState, WavefunctionBasis, EXACT_MAX_S,
};

/// Tolerance on `Σ|d|² = 1` for operations that require normalized input.
pub const NORMALIZATION_TOL: f64 = 1e-10;

fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum()
}

fn check_len(amplitudes: &[Complex64]) -> Result<usize> {
    amplitudes.len().checked_sub(1).ok_or_else(|| Error::Shape("a state needs at least one amplitude".into()))
}

/// `Σ_n d_n |n,s⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyState {
    pub s: usize,
    pub amplitudes: Vec<Complex64>,
}

/// `Σ_{n1} a_{n1} ψ_{n1,s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PositionState {
    pub s: usize,
    pub amplitudes: Vec<Complex64>,
}

macro_rules! state_common {
    ($ty:ident) => {
        impl $ty {
            /// Resolution is inferred from the length.
            pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
                let s = check_len(&amplitudes)?;
                Ok(Self { s, amplitudes })
            }

            pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
                Self::new(amplitudes.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            }

            /// Unit vector at index `k`.
            pub fn basis(s: usize, k: usize) -> Result<Self> {
                if k > s {
                    return Err(Error::Domain(format!("index {k} outside 0..={s}")));
                }
                let mut amplitudes = vec![Complex64::new(0.0, 0.0); s + 1];
                amplitudes[k] = Complex64::new(1.0, 0.0);
                Ok(Self { s, amplitudes })
            }

            pub fn zero(s: usize) -> Self {
                Self { s, amplitudes: vec![Complex64::new(0.0, 0.0); s + 1] }
            }

            pub fn norm_sqr(&self) -> f64 {
                norm_sqr(&self.amplitudes)
            }

            pub fn norm(&self) -> f64 {
                self.norm_sqr().sqrt()
            }

            pub fn is_zero(&self) -> bool {
                self.amplitudes.iter().all(|z| *z == Complex64::new(0.0, 0.0))
            }

            /// Unit-norm copy; fails on the zero vector.
            pub fn normalized(&self) -> Result<Self> {
                let n = self.norm();
                if n == 0.0 || !n.is_finite() {
                    return Err(Error::Domain("cannot normalize a zero or non-finite state".into()));
                }
                Ok(Self { s: self.s, amplitudes: self.amplitudes.iter().map(|z| z / n).collect() })
            }

            pub fn require_normalized(&self) -> Result<()> {
                let dev = (self.norm_sqr() - 1.0).abs();
                if !(dev <= NORMALIZATION_TOL) {
                    return Err(Error::Contract(format!("state is not normalized (|1 - Σ|d|²| = {dev:e})")));
                }
                Ok(())
            }

            /// `⟨self|other⟩`.
            pub fn inner(&self, other: &Self) -> Result<Complex64> {
                if self.s != other.s {
                    return Err(Error::Shape(format!("resolutions differ: {} vs {}", self.s, other.s)));
                }
                Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
            }

            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                if self.s != other.s {
                    return f64::INFINITY;
                }
                self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
            }
        }
    };
}

state_common!(EnergyState);
state_common!(PositionState);

impl PositionState {
    /// Grid coordinate `x = 2 n1 − s`.
    pub fn x(&self, n1: usize) -> i64 {
        2 * n1 as i64 - self.s as i64
    }
}
