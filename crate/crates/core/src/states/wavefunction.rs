use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::{EnergyState, PositionState, State};
use crate::error::{Error, Result};
use crate::exact::{factorial_valuation, merge_factors, primes_up_to, Surd};
use crate::repmat::evaluate;
use crate::specfn::double_factorial;
use crate::wick::{named, NamedOp};

/// Largest resolution handled in exact arithmetic.
pub const EXACT_MAX_S: usize = 60;

/// `(B1†)^s ψ_{0,0}` in exact arithmetic, before and after normalization.
#[derive(Clone, Debug)]
pub struct ExactGroundState {
    pub s: usize,
    pub unnormalized: Vec<Surd>,
    /// `‖(B1†)^s ψ_{0,0}‖²`, exact.
    pub norm_squared: BigRational,
    pub amplitudes: Vec<Surd>,
}

impl ExactGroundState {
    /// Whether the squared pre-normalization constant equals `(2s)!!`.
    pub fn norm_is_double_factorial(&self) -> bool {
        self.norm_squared == BigRational::from_integer(BigInt::from(double_factorial(2 * self.s as u64)))
    }
}

pub fn ground_state_exact(s: usize) -> ExactGroundState {
    let root = Surd::sqrt_u64;
    let mut v = vec![Surd::one()];
    for k in 0..s {
        let mut next = vec![Surd::zero(); k + 2];
        for (n1, a) in v.iter().enumerate() {
            next[n1 + 1] = &next[n1 + 1] + &(&root((n1 + 1) as u64) * a);
            next[n1] = &next[n1] + &(&root((k + 1 - n1) as u64) * a);
        }
        v = next;
    }
    let norm_squared = v
        .iter()
        .map(|a| a.square_if_single().expect("ground amplitudes are single surds"))
        .fold(BigRational::from_integer(0.into()), |acc, q| acc + q);
    // (2s)!! = 2^s s!
    let s_factorial: Vec<(u64, i64)> =
        primes_up_to(s as u64).into_iter().map(|p| (p, factorial_valuation(s as u64, p))).collect();
    let factors = merge_factors(&[(2, s as i64)], &s_factorial);
    let inv = Surd::sqrt_factored(&factors).inverse_single().expect("nonzero normalization");
    let amplitudes = v.iter().map(|a| a * &inv).collect();
    ExactGroundState { s, unnormalized: v, norm_squared, amplitudes }
}

fn ground_state_float(s: usize) -> Vec<f64> {
    let mut v = vec![1.0];
    for k in 0..s {
        let mut next = vec![0.0; k + 2];
        let scale = (2.0 * (k + 1) as f64).sqrt();
        for (n1, a) in v.iter().enumerate() {
            next[n1 + 1] += ((n1 + 1) as f64).sqrt() * a / scale;
            next[n1] += ((k + 1 - n1) as f64).sqrt() * a / scale;
        }
        v = next;
    }
    v
}

/// Normalized lowest-energy state `(B1†)^s ψ_{0,0} / √((2s)!!)`.
pub fn ground_state(s: usize) -> PositionState {
    let amps = if s <= EXACT_MAX_S {
        ground_state_exact(s).amplitudes.iter().map(Surd::to_f64).collect()
    } else {
        ground_state_float(s)
    };
    PositionState::from_real(&amps).expect("nonempty")
}

/// `α^0 .. α^{n_max}` at resolution `s` in exact arithmetic.
pub fn wavefunctions_exact(s: usize, n_max: usize) -> Vec<Vec<Surd>> {
    let mut out = vec![ground_state_exact(s).amplitudes];
    for k in 0..n_max.min(s) {
        let prev = out.last().expect("nonempty");
        let mut next = vec![Surd::zero(); s + 1];
        for j in 0..=s {
            let mut acc = &Surd::integer(2 * j as i64 - s as i64) * &prev[j];
            if j < s {
                // (j, j+1) = −√((s−j)(j+1))
                let h = Surd::sqrt_u64(((s - j) * (j + 1)) as u64);
                acc = &acc - &(&h * &prev[j + 1]);
            }
            if j >= 1 {
                let h = Surd::sqrt_u64(((s - j + 1) * j) as u64);
                acc = &acc + &(&h * &prev[j - 1]);
            }
            next[j] = acc;
        }
        let norm = (&Surd::integer(2) * &Surd::sqrt_u64(((s - k) * (k + 1)) as u64))
            .inverse_single()
            .expect("nonzero ladder factor");
        out.push(next.iter().map(|a| a * &norm).collect());
    }
    out
}

/// Neumaier-compensated sum.
fn compensated_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0;
    for t in terms {
        let next = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - next) + t } else { (t - next) + sum };
        sum = next;
    }
    sum + comp
}

/// `α^0 .. α^{n_max}` at resolution `s` in floating point, stepping with the
/// evaluated `D†` matrix.
pub fn wavefunctions_float(s: usize, n_max: usize) -> Vec<Vec<f64>> {
    let ddag = evaluate(&named(NamedOp::DDag), s).expect("D† conserves resolution").real_part();
    let mut out = vec![ground_state_float(s)];
    for k in 0..n_max.min(s) {
        let prev = out.last().expect("nonempty");
        let norm = 2.0 * (((s - k) * (k + 1)) as f64).sqrt();
        let next = (0..=s)
            .map(|j| {
                let lo = j.saturating_sub(1);
                let hi = (j + 1).min(s);
                compensated_sum((lo..=hi).map(|i| ddag[(j, i)] * prev[i])) / norm
            })
            .collect();
        out.push(next);
    }
    out
}

fn check_level(n: usize, s: usize) -> Result<()> {
    if n > s {
        return Err(Error::Domain(format!("energy level {n} outside 0..={s}")));
    }
    Ok(())
}

/// `α^n_{·,s}`, exact below [`EXACT_MAX_S`] and floating point above.
pub fn eigenstate_wavefunction(n: usize, s: usize) -> Result<PositionState> {
    check_level(n, s)?;
    if s <= EXACT_MAX_S {
        let chain = wavefunctions_exact(s, n);
        let amps: Vec<f64> = chain[n].iter().map(Surd::to_f64).collect();
        return PositionState::from_real(&amps);
    }
    eigenstate_wavefunction_float(n, s)
}

pub fn eigenstate_wavefunction_float(n: usize, s: usize) -> Result<PositionState> {
    check_level(n, s)?;
    let chain = wavefunctions_float(s, n);
    PositionState::from_real(&chain[n])
}

/// Orthogonal change-of-basis matrix `[α^n_{n1,s}]` (rows `n`, columns `n1`).
#[derive(Clone, Debug)]
pub struct WavefunctionBasis {
    pub s: usize,
    pub alpha: DMatrix<f64>,
}

impl WavefunctionBasis {
    pub fn new(s: usize) -> Self {
        let rows: Vec<Vec<f64>> = if s <= EXACT_MAX_S {
            wavefunctions_exact(s, s).iter().map(|r| r.iter().map(Surd::to_f64).collect()).collect()
        } else {
            wavefunctions_float(s, s)
        };
        Self { s, alpha: DMatrix::from_fn(s + 1, s + 1, |n, n1| rows[n][n1]) }
    }

    fn check(&self, s: usize) -> Result<()> {
        if s != self.s {
            return Err(Error::Shape(format!("basis built for s = {}, state has s = {s}", self.s)));
        }
        Ok(())
    }

    /// `a_{n1} = Σ_n α^n_{n1} d_n`.
    pub fn to_position(&self, psi: &EnergyState) -> Result<PositionState> {
        self.check(psi.s)?;
        let amps = (0..=self.s).map(|n1| (0..=self.s).map(|n| psi.amplitudes[n] * self.alpha[(n, n1)]).sum()).collect();
        Ok(PositionState { s: self.s, amplitudes: amps })
    }

    /// `d_n = Σ_{n1} α^n_{n1} a_{n1}`.
    pub fn to_energy(&self, phi: &PositionState) -> Result<EnergyState> {
        self.check(phi.s)?;
        let amps = (0..=self.s)
            .map(|n| (0..=self.s).map(|n1| phi.amplitudes[n1] * self.alpha[(n, n1)]).sum::<Complex64>())
            .collect();
        Ok(EnergyState { s: self.s, amplitudes: amps })
    }

    pub fn change_basis(&self, state: &State) -> Result<State> {
        match state {
            State::Energy(psi) => self.to_position(psi).map(State::Position),
            State::Position(phi) => self.to_energy(phi).map(State::Energy),
        }
    }
}

/// Converts between the energy and position representations.
pub fn change_basis(state: &State) -> Result<State> {
    WavefunctionBasis::new(state.s()).change_basis(state)
}
