use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::band::{Band, BandSpec};
use super::{BasisTag, IndexConvention, RepMatrix};
use crate::error::{Error, Result};
use crate::wick::NamedOp;

/// Which form of the fixed-resolution Hamiltonian matrix to produce.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HamiltonianConvention {
    /// `½S + H_I`: diagonal `s/2`, off-diagonal `−½√((s−j)(j+1))`, spectrum `{0..s}`.
    #[default]
    Canonical,
    /// Diagonal `s`, off-diagonal `+√((s−j)(j+1))`: twice the canonical matrix
    /// up to an alternating-sign similarity, spectrum `{0, 2, .., 2s}`.
    Printed,
}

impl HamiltonianConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            HamiltonianConvention::Canonical => "canonical",
            HamiltonianConvention::Printed => "printed",
        }
    }
}

impl fmt::Display for HamiltonianConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HamiltonianConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(HamiltonianConvention::Canonical),
            "printed" => Ok(HamiltonianConvention::Printed),
            other => Err(Error::Parse(format!("unknown hamiltonian convention `{other}`"))),
        }
    }
}

/// `√((s−j)(j+1))`, the hopping amplitude between `n1 = j` and `n1 = j+1`.
fn hop(s: usize, j: usize) -> f64 {
    (((s - j) * (j + 1)) as f64).sqrt()
}

fn hops(s: usize, scale: f64) -> Vec<f64> {
    (0..s).map(|j| scale * hop(s, j)).collect()
}

fn diag(s: usize, f: impl Fn(usize) -> f64) -> Band {
    Band::real(0, 0, (0..=s).map(f))
}

fn square(s: usize) -> BandSpec {
    BandSpec::new(s + 1, s + 1)
}

fn need_lower(op: NamedOp, s: usize) -> Result<usize> {
    s.checked_sub(1).ok_or_else(|| Error::Domain(format!("{op} lowers the resolution and is undefined at s = 0")))
}

/// `op` at resolution `s` in the n1-ascending position basis.
pub fn build(op: NamedOp, s: usize) -> Result<RepMatrix> {
    build_with(op, s, IndexConvention::N1Ascending)
}

pub fn build_with(op: NamedOp, s: usize, convention: IndexConvention) -> Result<RepMatrix> {
    let sf = s as f64;
    let fixed = BasisTag::position(s, s);
    let bands = match op {
        NamedOp::I => square(s).with(diag(s, |_| 1.0)),
        NamedOp::S => square(s).with(diag(s, |_| sf)),
        NamedOp::N1 => square(s).with(diag(s, |j| j as f64)),
        NamedOp::N2 => square(s).with(diag(s, |j| (s - j) as f64)),
        NamedOp::X => square(s).with(diag(s, |j| 2.0 * j as f64 - sf)),
        NamedOp::Omega => square(s).with(diag(s, |_| sf * (sf + 2.0))),
        NamedOp::HI => square(s).with(Band::real(0, 1, hops(s, -0.5))).with(Band::real(1, 0, hops(s, -0.5))),
        NamedOp::H => square(s).with(diag(s, |_| sf / 2.0)).with(Band::real(0, 1, hops(s, -0.5))).with(Band::real(
            1,
            0,
            hops(s, -0.5),
        )),
        NamedOp::D => square(s)
            .with(diag(s, |j| 2.0 * j as f64 - sf))
            .with(Band::real(0, 1, hops(s, 1.0)))
            .with(Band::real(1, 0, hops(s, -1.0))),
        NamedOp::DDag => square(s)
            .with(diag(s, |j| 2.0 * j as f64 - sf))
            .with(Band::real(0, 1, hops(s, -1.0)))
            .with(Band::real(1, 0, hops(s, 1.0))),
        NamedOp::P => {
            let up: Vec<Complex64> = hops(s, 1.0).into_iter().map(|h| Complex64::new(0.0, -h)).collect();
            let down = up.iter().map(|z| z.conj()).collect();
            square(s).with(Band::new(0, 1, up)).with(Band::new(1, 0, down))
        }
        NamedOp::A1 | NamedOp::A2 | NamedOp::B1 | NamedOp::B2 => {
            need_lower(op, s)?;
            // A1: (n1−1, n1) = √n1; A2: (n1, n1) = √(s−n1).
            let a1 = Band::real(0, 1, (1..=s).map(|n1| (n1 as f64).sqrt()));
            let a2 = |sign: f64| Band::real(0, 0, (0..s).map(move |n1| sign * ((s - n1) as f64).sqrt()));
            let bands = BandSpec::new(s, s + 1);
            match op {
                NamedOp::A1 => bands.with(a1),
                NamedOp::A2 => bands.with(a2(1.0)),
                NamedOp::B1 => bands.with(a1).with(a2(1.0)),
                _ => bands.with(a1).with(a2(-1.0)),
            }
        }
        NamedOp::A1Dag | NamedOp::A2Dag | NamedOp::B1Dag | NamedOp::B2Dag => {
            // A1†: (n1+1, n1) = √(n1+1); A2†: (n1, n1) = √(s+1−n1).
            let a1 = Band::real(1, 0, (0..=s).map(|n1| ((n1 + 1) as f64).sqrt()));
            let a2 = |sign: f64| Band::real(0, 0, (0..=s).map(move |n1| sign * ((s + 1 - n1) as f64).sqrt()));
            let bands = BandSpec::new(s + 2, s + 1);
            match op {
                NamedOp::A1Dag => bands.with(a1),
                NamedOp::A2Dag => bands.with(a2(1.0)),
                NamedOp::B1Dag => bands.with(a1).with(a2(1.0)),
                _ => bands.with(a1).with(a2(-1.0)),
            }
        }
    };
    let s_out = (s as i64 + op.resolution_shift()) as usize;
    let tag = BasisTag { s_out, ..fixed };
    Ok(bands.to_matrix(tag)?.reindexed(convention))
}

/// `op` at resolution `s` in the energy basis `|n,s⟩`.
pub fn build_energy(op: NamedOp, s: usize) -> Result<RepMatrix> {
    let sf = s as f64;
    let tag = BasisTag::energy(s, (s as i64 + op.resolution_shift()) as usize);
    // X has ⟨n+1|X|n⟩ = ⟨n|X|n+1⟩ = √((s−n)(n+1)).
    let x_half = |sign: f64| {
        square(s).with(diag(s, |_| sf / 2.0)).with(Band::real(0, 1, hops(s, 0.5 * sign))).with(Band::real(
            1,
            0,
            hops(s, 0.5 * sign),
        ))
    };
    let bands = match op {
        NamedOp::I => square(s).with(diag(s, |_| 1.0)),
        NamedOp::S => square(s).with(diag(s, |_| sf)),
        NamedOp::H => square(s).with(diag(s, |n| n as f64)),
        NamedOp::HI => square(s).with(diag(s, |n| n as f64 - sf / 2.0)),
        NamedOp::Omega => square(s).with(diag(s, |_| sf * (sf + 2.0))),
        NamedOp::X => square(s).with(Band::real(0, 1, hops(s, 1.0))).with(Band::real(1, 0, hops(s, 1.0))),
        NamedOp::N1 => x_half(1.0),
        NamedOp::N2 => x_half(-1.0),
        NamedOp::P => {
            let up: Vec<Complex64> = hops(s, 1.0).into_iter().map(|h| Complex64::new(0.0, -h)).collect();
            let down = up.iter().map(|z| z.conj()).collect();
            square(s).with(Band::new(0, 1, up)).with(Band::new(1, 0, down))
        }
        NamedOp::DDag => square(s).with(Band::real(1, 0, hops(s, 2.0))),
        NamedOp::D => square(s).with(Band::real(0, 1, hops(s, 2.0))),
        NamedOp::A1 | NamedOp::A2 | NamedOp::B1 | NamedOp::B2 => {
            need_lower(op, s)?;
            // B1: |n,s⟩ → √(2(s−n)) |n,s−1⟩; B2: |n,s⟩ → √(2n) |n−1,s−1⟩.
            let b1 = |c: f64| Band::real(0, 0, (0..s).map(move |n| c * (2.0 * (s - n) as f64).sqrt()));
            let b2 = |c: f64| Band::real(0, 1, (1..=s).map(move |n| c * (2.0 * n as f64).sqrt()));
            let bands = BandSpec::new(s, s + 1);
            match op {
                NamedOp::B1 => bands.with(b1(1.0)),
                NamedOp::B2 => bands.with(b2(1.0)),
                NamedOp::A1 => bands.with(b1(0.5)).with(b2(0.5)),
                _ => bands.with(b1(0.5)).with(b2(-0.5)),
            }
        }
        NamedOp::A1Dag | NamedOp::A2Dag | NamedOp::B1Dag | NamedOp::B2Dag => {
            // B1†: |n,s⟩ → √(2(s+1−n)) |n,s+1⟩; B2†: |n,s⟩ → √(2(n+1)) |n+1,s+1⟩.
            let b1 = |c: f64| Band::real(0, 0, (0..=s).map(move |n| c * (2.0 * (s + 1 - n) as f64).sqrt()));
            let b2 = |c: f64| Band::real(1, 0, (0..=s).map(move |n| c * (2.0 * (n + 1) as f64).sqrt()));
            let bands = BandSpec::new(s + 2, s + 1);
            match op {
                NamedOp::B1Dag => bands.with(b1(1.0)),
                NamedOp::B2Dag => bands.with(b2(1.0)),
                NamedOp::A1Dag => bands.with(b1(0.5)).with(b2(0.5)),
                _ => bands.with(b1(0.5)).with(b2(-0.5)),
            }
        }
    };
    bands.to_matrix(tag)
}

/// Canonical Hamiltonian `½S + H_I` at resolution `s`.
pub fn hamiltonian(s: usize) -> RepMatrix {
    hamiltonian_with(s, HamiltonianConvention::Canonical)
}

pub fn hamiltonian_with(s: usize, convention: HamiltonianConvention) -> RepMatrix {
    let bands = match convention {
        HamiltonianConvention::Canonical => return build(NamedOp::H, s).expect("H is defined at every s"),
        HamiltonianConvention::Printed => square(s)
            .with(diag(s, |_| s as f64))
            .with(Band::real(0, 1, hops(s, 1.0)))
            .with(Band::real(1, 0, hops(s, 1.0))),
    };
    bands.to_matrix(BasisTag::position(s, s)).expect("hamiltonian bands are well formed")
}
