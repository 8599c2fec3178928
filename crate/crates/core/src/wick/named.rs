use std::fmt;
use std::str::FromStr;

use super::coeff::Coeff;
use super::poly::{BosonMonomial, OperatorPoly};
use crate::error::{Error, Result};

/// Operators of the two-mode construction that have a fixed symbolic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedOp {
    A1,
    A2,
    A1Dag,
    A2Dag,
    B1,
    B2,
    B1Dag,
    B2Dag,
    /// Hamiltonian `½S + H_I`.
    H,
    /// Total quanta (resolution operator) `N1 + N2`.
    S,
    /// Interaction term `−½(A1 A2† + A1† A2)`.
    HI,
    /// Energy lowering operator `B1† B2`.
    D,
    /// Energy raising operator `B2† B1`.
    DDag,
    X,
    P,
    N1,
    N2,
    /// Quadratic Casimir `D D† + 4H_I² + 4H_I`.
    Omega,
    I,
}

impl NamedOp {
    pub const ALL: [NamedOp; 19] = [
        NamedOp::A1,
        NamedOp::A2,
        NamedOp::A1Dag,
        NamedOp::A2Dag,
        NamedOp::B1,
        NamedOp::B2,
        NamedOp::B1Dag,
        NamedOp::B2Dag,
        NamedOp::H,
        NamedOp::S,
        NamedOp::HI,
        NamedOp::D,
        NamedOp::DDag,
        NamedOp::X,
        NamedOp::P,
        NamedOp::N1,
        NamedOp::N2,
        NamedOp::Omega,
        NamedOp::I,
    ];

    /// Change of the resolution `s` effected by the operator.
    pub fn resolution_shift(self) -> i64 {
        match self {
            NamedOp::A1 | NamedOp::A2 | NamedOp::B1 | NamedOp::B2 => -1,
            NamedOp::A1Dag | NamedOp::A2Dag | NamedOp::B1Dag | NamedOp::B2Dag => 1,
            _ => 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            NamedOp::A1 => "A1",
            NamedOp::A2 => "A2",
            NamedOp::A1Dag => "A1†",
            NamedOp::A2Dag => "A2†",
            NamedOp::B1 => "B1",
            NamedOp::B2 => "B2",
            NamedOp::B1Dag => "B1†",
            NamedOp::B2Dag => "B2†",
            NamedOp::H => "H",
            NamedOp::S => "S",
            NamedOp::HI => "H_I",
            NamedOp::D => "D",
            NamedOp::DDag => "D†",
            NamedOp::X => "X",
            NamedOp::P => "P",
            NamedOp::N1 => "N1",
            NamedOp::N2 => "N2",
            NamedOp::Omega => "Ω",
            NamedOp::I => "I",
        }
    }

    /// Exact normal-ordered polynomial for the operator.
    pub fn poly(self) -> OperatorPoly {
        named(self)
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for NamedOp {
    type Err = Error;

    /// Accepts the printed symbols plus ASCII spellings (`A1dag`, `A1^dag`, `A1'`,
    /// `HI`, `Omega`).
    fn from_str(name: &str) -> Result<Self> {
        let trimmed = name.trim();
        let (base, dagger) = ["†", "^dag", "dag", "'", "^†"]
            .iter()
            .find_map(|suffix| trimmed.strip_suffix(suffix).map(|b| (b, true)))
            .unwrap_or((trimmed, false));
        let op = match (base, dagger) {
            ("A1", false) => NamedOp::A1,
            ("A2", false) => NamedOp::A2,
            ("A1", true) => NamedOp::A1Dag,
            ("A2", true) => NamedOp::A2Dag,
            ("B1", false) => NamedOp::B1,
            ("B2", false) => NamedOp::B2,
            ("B1", true) => NamedOp::B1Dag,
            ("B2", true) => NamedOp::B2Dag,
            ("H", false) => NamedOp::H,
            ("S", false) => NamedOp::S,
            ("H_I" | "HI", false) => NamedOp::HI,
            ("D", false) => NamedOp::D,
            ("D", true) => NamedOp::DDag,
            ("X", false) => NamedOp::X,
            ("P", false) => NamedOp::P,
            ("N1", false) => NamedOp::N1,
            ("N2", false) => NamedOp::N2,
            ("Ω" | "Omega" | "omega", false) => NamedOp::Omega,
            ("I", false) => NamedOp::I,
            _ => return Err(Error::UnknownOperator(name.to_string())),
        };
        Ok(op)
    }
}

fn word(p: u32, q: u32, r: u32, t: u32) -> OperatorPoly {
    OperatorPoly::term(BosonMonomial::new(p, q, r, t), Coeff::one())
}

/// Symbolic polynomial of a named operator, built from its defining relations.
pub fn named(op: NamedOp) -> OperatorPoly {
    let half = Coeff::real(1, 2);
    match op {
        NamedOp::A1 => word(0, 0, 1, 0),
        NamedOp::A2 => word(0, 0, 0, 1),
        NamedOp::A1Dag => word(1, 0, 0, 0),
        NamedOp::A2Dag => word(0, 1, 0, 0),
        NamedOp::B1 => &named(NamedOp::A1) + &named(NamedOp::A2),
        NamedOp::B2 => &named(NamedOp::A1) - &named(NamedOp::A2),
        NamedOp::B1Dag => named(NamedOp::B1).adjoint(),
        NamedOp::B2Dag => named(NamedOp::B2).adjoint(),
        NamedOp::N1 => named(NamedOp::A1Dag).multiply(&named(NamedOp::A1)),
        NamedOp::N2 => named(NamedOp::A2Dag).multiply(&named(NamedOp::A2)),
        NamedOp::S => &named(NamedOp::N1) + &named(NamedOp::N2),
        NamedOp::HI => {
            let hop = &named(NamedOp::A1).multiply(&named(NamedOp::A2Dag))
                + &named(NamedOp::A1Dag).multiply(&named(NamedOp::A2));
            hop.scale(&Coeff::real(-1, 2))
        }
        NamedOp::H => {
            let free = &named(NamedOp::N1) + &named(NamedOp::N2);
            let hop = &named(NamedOp::A1).multiply(&named(NamedOp::A2Dag))
                + &named(NamedOp::A1Dag).multiply(&named(NamedOp::A2));
            (&free - &hop).scale(&half)
        }
        NamedOp::D => named(NamedOp::B1Dag).multiply(&named(NamedOp::B2)),
        NamedOp::DDag => named(NamedOp::B2Dag).multiply(&named(NamedOp::B1)),
        NamedOp::X => (&named(NamedOp::DDag) + &named(NamedOp::D)).scale(&half),
        NamedOp::P => (&named(NamedOp::DDag) - &named(NamedOp::D)).scale(&Coeff::imag(1, 2)),
        NamedOp::Omega => {
            let hi = named(NamedOp::HI);
            let four = Coeff::real(4, 1);
            let ddd = named(NamedOp::D).multiply(&named(NamedOp::DDag));
            &(&ddd + &hi.multiply(&hi).scale(&four)) + &hi.scale(&four)
        }
        NamedOp::I => OperatorPoly::identity(),
    }
}

/// [`named`] keyed by symbol, failing on unsupported names.
pub fn named_by_symbol(name: &str) -> Result<OperatorPoly> {
    Ok(named(name.parse()?))
}
