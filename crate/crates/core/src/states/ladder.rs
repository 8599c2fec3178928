use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::EnergyState;
use crate::error::{Error, Result};
use crate::wick::NamedOp;

/// Operators that move between energy levels or resolutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderOp {
    D,
    DDag,
    B1,
    B1Dag,
    B2,
    B2Dag,
}

impl LadderOp {
    pub const ALL: [LadderOp; 6] =
        [LadderOp::D, LadderOp::DDag, LadderOp::B1, LadderOp::B1Dag, LadderOp::B2, LadderOp::B2Dag];

    pub fn named(self) -> NamedOp {
        match self {
            LadderOp::D => NamedOp::D,
            LadderOp::DDag => NamedOp::DDag,
            LadderOp::B1 => NamedOp::B1,
            LadderOp::B1Dag => NamedOp::B1Dag,
            LadderOp::B2 => NamedOp::B2,
            LadderOp::B2Dag => NamedOp::B2Dag,
        }
    }

    /// `(Δn, Δs)`.
    pub fn shifts(self) -> (i64, i64) {
        match self {
            LadderOp::D => (-1, 0),
            LadderOp::DDag => (1, 0),
            LadderOp::B1 => (0, -1),
            LadderOp::B1Dag => (0, 1),
            LadderOp::B2 => (-1, -1),
            LadderOp::B2Dag => (1, 1),
        }
    }
}

impl TryFrom<NamedOp> for LadderOp {
    type Error = Error;
    fn try_from(op: NamedOp) -> Result<Self> {
        LadderOp::ALL
            .into_iter()
            .find(|l| l.named() == op)
            .ok_or_else(|| Error::UnknownOperator(format!("{op} is not a ladder operator")))
    }
}

impl FromStr for LadderOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<NamedOp>()?.try_into()
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.named().fmt(f)
    }
}

/// Coefficient `c` in `op |n,s⟩ = c |n + Δn, s + Δs⟩`. Zero whenever the
/// target level does not exist.
pub fn ladder_factor(op: LadderOp, n: usize, s: usize) -> f64 {
    let (n, s) = (n as f64, s as f64);
    let v = match op {
        LadderOp::DDag => 4.0 * (s - n) * (n + 1.0),
        LadderOp::D => 4.0 * (s - n + 1.0) * n,
        LadderOp::B1Dag => 2.0 * (s - n + 1.0),
        LadderOp::B1 => 2.0 * (s - n),
        LadderOp::B2 => 2.0 * n,
        LadderOp::B2Dag => 2.0 * (n + 1.0),
    };
    v.max(0.0).sqrt()
}

/// Componentwise ladder action; the output is not renormalized.
pub fn apply_ladder(op: LadderOp, psi: &EnergyState) -> Result<EnergyState> {
    let (dn, ds) = op.shifts();
    let s_out = psi.s as i64 + ds;
    if s_out < 0 {
        return Err(Error::Domain(format!("{op} lowers the resolution and is undefined at s = 0")));
    }
    let s_out = s_out as usize;
    let mut out = vec![Complex64::new(0.0, 0.0); s_out + 1];
    for (n, d) in psi.amplitudes.iter().enumerate() {
        let target = n as i64 + dn;
        if target < 0 || target > s_out as i64 {
            continue;
        }
        let c = ladder_factor(op, n, psi.s);
        out[target as usize] += d * c;
    }
    Ok(EnergyState { s: s_out, amplitudes: out })
}
