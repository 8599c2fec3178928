use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{apply_ladder, EnergyState, LadderOp};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RescaleMode {
    /// Repeated `B1†` or `B1`, then renormalization.
    #[default]
    Ladder,
    /// Amplitudes `d_n` carried over unchanged, then renormalization.
    AmplitudePreserving,
}

impl RescaleMode {
    pub fn as_str(self) -> &'static str {
        match self {
            RescaleMode::Ladder => "ladder",
            RescaleMode::AmplitudePreserving => "amplitude-preserving",
        }
    }
}

impl fmt::Display for RescaleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RescaleMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ladder" => Ok(RescaleMode::Ladder),
            "amplitude-preserving" => Ok(RescaleMode::AmplitudePreserving),
            other => Err(Error::Parse(format!("unknown rescale mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rescaled {
    pub state: EnergyState,
    /// `Σ_{n > target} |d_n|² / Σ_n |d_n|²` of the input.
    pub lost_norm: f64,
}

/// Moves `psi` to resolution `target_s`, mapping `|n,s⟩` to `|n,target_s⟩`.
/// Lowering past an occupied level fails with [`Error::Truncation`] unless
/// `force` is set.
pub fn rescale_resolution(psi: &EnergyState, target_s: usize, mode: RescaleMode, force: bool) -> Result<Rescaled> {
    let total = psi.norm_sqr();
    if total == 0.0 || !total.is_finite() {
        return Err(Error::Domain("cannot rescale a zero or non-finite state".into()));
    }
    let dropped: f64 = psi.amplitudes.iter().skip(target_s + 1).map(Complex64::norm_sqr).sum();
    let lost_norm = dropped / total;
    if lost_norm > 0.0 && !force {
        return Err(Error::Truncation { target: target_s, lost_norm });
    }
    if lost_norm >= 1.0 {
        return Err(Error::Domain(format!("no occupied level survives lowering to s = {target_s}")));
    }
    let moved = match mode {
        RescaleMode::Ladder => {
            let op = if target_s > psi.s { LadderOp::B1Dag } else { LadderOp::B1 };
            let mut cur = psi.clone();
            for _ in 0..psi.s.abs_diff(target_s) {
                cur = apply_ladder(op, &cur)?;
            }
            cur
        }
        RescaleMode::AmplitudePreserving => {
            let mut amplitudes = vec![Complex64::new(0.0, 0.0); target_s + 1];
            for (slot, d) in amplitudes.iter_mut().zip(&psi.amplitudes) {
                *slot = *d;
            }
            EnergyState { s: target_s, amplitudes }
        }
    };
    Ok(Rescaled { state: moved.normalized()?, lost_norm })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenstates_keep_their_level() {
        for mode in [RescaleMode::Ladder, RescaleMode::AmplitudePreserving] {
            let up = rescale_resolution(&EnergyState::basis(4, 2).unwrap(), 5, mode, false).unwrap();
            assert!(up.state.max_abs_diff(&EnergyState::basis(5, 2).unwrap()) < 1e-15);
            let down = rescale_resolution(&EnergyState::basis(4, 2).unwrap(), 3, mode, false).unwrap();
            assert!(down.state.max_abs_diff(&EnergyState::basis(3, 2).unwrap()) < 1e-15);
            assert_eq!(down.lost_norm, 0.0);
        }
    }

    #[test]
    fn modes_differ_on_superpositions() {
        let s = 3usize;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![0.0; s + 1];
        amps[0] = r;
        amps[1] = r;
        let psi = EnergyState::from_real(&amps).unwrap();
        let kept = rescale_resolution(&psi, s + 1, RescaleMode::AmplitudePreserving, false).unwrap();
        assert!((kept.state.amplitudes[0].re - r).abs() < 1e-15 && (kept.state.amplitudes[1].re - r).abs() < 1e-15);
        let ladder = rescale_resolution(&psi, s + 1, RescaleMode::Ladder, false).unwrap();
        let (a, b) = ((s as f64 + 1.0).sqrt(), (s as f64).sqrt());
        let norm = (a * a + b * b).sqrt();
        assert!((ladder.state.amplitudes[0].re - a / norm).abs() < 1e-15);
        assert!((ladder.state.amplitudes[1].re - b / norm).abs() < 1e-15);
    }

    #[test]
    fn lowering_past_occupied_level() {
        let psi = EnergyState::from_real(&[0.6, 0.0, 0.8]).unwrap();
        match rescale_resolution(&psi, 1, RescaleMode::Ladder, false) {
            Err(Error::Truncation { lost_norm, .. }) => assert!((lost_norm - 0.64).abs() < 1e-15),
            other => panic!("expected truncation, got {other:?}"),
        }
        let forced = rescale_resolution(&psi, 1, RescaleMode::Ladder, true).unwrap();
        assert!((forced.lost_norm - 0.64).abs() < 1e-15);
        assert!((forced.state.amplitudes[0].re - 1.0).abs() < 1e-15);
    }
}
