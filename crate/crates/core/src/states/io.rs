use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{EnergyState, PositionState};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateBasis {
    Energy,
    Position,
}

/// On-disk form `{s, basis, amplitudes: [[re, im], ..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub s: usize,
    pub basis: StateBasis,
    pub amplitudes: Vec<[f64; 2]>,
}

/// A state in either representation.
#[derive(Clone, Debug, PartialEq)]
pub enum State {
    Energy(EnergyState),
    Position(PositionState),
}

impl State {
    pub fn s(&self) -> usize {
        match self {
            State::Energy(e) => e.s,
            State::Position(p) => p.s,
        }
    }

    pub fn basis(&self) -> StateBasis {
        match self {
            State::Energy(_) => StateBasis::Energy,
            State::Position(_) => StateBasis::Position,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        match self {
            State::Energy(e) => &e.amplitudes,
            State::Position(p) => &p.amplitudes,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let file = StateFile {
            s: self.s(),
            basis: self.basis(),
            amplitudes: self.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: StateFile = serde_json::from_str(text)?;
        if file.amplitudes.len() != file.s + 1 {
            return Err(Error::Shape(format!(
                "state at s = {} needs {} amplitudes, found {}",
                file.s,
                file.s + 1,
                file.amplitudes.len()
            )));
        }
        let amplitudes: Vec<Complex64> = file.amplitudes.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        Ok(match file.basis {
            StateBasis::Energy => State::Energy(EnergyState { s: file.s, amplitudes }),
            StateBasis::Position => State::Position(PositionState { s: file.s, amplitudes }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let psi = State::Energy(EnergyState::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, -0.8)]).unwrap());
        let text = psi.to_json().unwrap();
        assert!(text.contains("\"basis\": \"energy\""));
        assert_eq!(State::from_json(&text).unwrap(), psi);
    }

    #[test]
    fn length_mismatch_rejected() {
        let text = r#"{"s": 2, "basis": "position", "amplitudes": [[1, 0]]}"#;
        assert!(matches!(State::from_json(text), Err(Error::Shape(_))));
    }
}
