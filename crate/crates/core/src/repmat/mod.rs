//! Finite-resolution matrix representations.

mod band;
mod build;
mod dilation;
mod eigen;
mod evaluate;
mod io;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use band::{Band, BandSpec};
pub use build::{build, build_energy, build_with, hamiltonian, hamiltonian_with, HamiltonianConvention};
pub use dilation::{spectral_norm, unitary_dilation};
pub use eigen::{eig_sym_tridiag, eigvals_sym_tridiag, tridiagonal_eigen};
pub use evaluate::evaluate;
pub use io::MatrixFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Eigenstates `ψ_{n1,s}` of `N1` and `S`.
    Position,
    /// Eigenstates `|n,s⟩` of `H` and `S`.
    Energy,
    /// Doubled space of a unitary dilation.
    Dilation,
}

/// Ordering of the position-basis index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexConvention {
    /// Index `j = n1`.
    #[default]
    N1Ascending,
    /// Index `j = n2 = s − n1`, the ordering of the printed band matrices.
    AppendixC,
}

impl IndexConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            IndexConvention::N1Ascending => "n1-ascending",
            IndexConvention::AppendixC => "appendix-c",
        }
    }
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n1-ascending" => Ok(IndexConvention::N1Ascending),
            "appendix-c" => Ok(IndexConvention::AppendixC),
            other => Err(Error::Parse(format!("unknown index convention `{other}`"))),
        }
    }
}

/// Which basis slice the rows and columns index. Columns live at resolution
/// `s_in`, rows at `s_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisTag {
    pub basis: Basis,
    pub convention: IndexConvention,
    pub s_in: usize,
    pub s_out: usize,
}

impl BasisTag {
    pub fn position(s_in: usize, s_out: usize) -> Self {
        Self { basis: Basis::Position, convention: IndexConvention::N1Ascending, s_in, s_out }
    }

    pub fn energy(s_in: usize, s_out: usize) -> Self {
        Self { basis: Basis::Energy, convention: IndexConvention::N1Ascending, s_in, s_out }
    }

    pub fn dilation(n: usize) -> Self {
        Self { basis: Basis::Dilation, convention: IndexConvention::N1Ascending, s_in: n, s_out: n }
    }
}

/// Printed as `position/n1-ascending/s=3->2`, `energy/s=4` or `dilation/n=8`.
impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res = if self.s_in == self.s_out {
            format!("s={}", self.s_in)
        } else {
            format!("s={}->{}", self.s_in, self.s_out)
        };
        match self.basis {
            Basis::Position => write!(f, "position/{}/{res}", self.convention),
            Basis::Energy => write!(f, "energy/{res}"),
            Basis::Dilation => write!(f, "dilation/n={}", self.s_in),
        }
    }
}

impl FromStr for BasisTag {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed basis tag `{text}`"));
        let parts: Vec<&str> = text.trim().split('/').collect();
        let parse_res = |r: &str| -> Result<(usize, usize)> {
            let r = r.strip_prefix("s=").ok_or_else(bad)?;
            match r.split_once("->") {
                Some((a, b)) => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
                None => {
                    let v = r.parse().map_err(|_| bad())?;
                    Ok((v, v))
                }
            }
        };
        match parts.as_slice() {
            ["position", conv, res] => {
                let (s_in, s_out) = parse_res(res)?;
                Ok(Self { basis: Basis::Position, convention: conv.parse()?, s_in, s_out })
            }
            ["energy", res] => {
                let (s_in, s_out) = parse_res(res)?;
                Ok(Self::energy(s_in, s_out))
            }
            ["dilation", n] => {
                let n = n.strip_prefix("n=").ok_or_else(bad)?.parse().map_err(|_| bad())?;
                Ok(Self::dilation(n))
            }
            _ => Err(bad()),
        }
    }
}

/// Dense complex matrix over a basis slice.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    data: DMatrix<Complex64>,
    pub tag: BasisTag,
}

impl RepMatrix {
    pub fn new(data: DMatrix<Complex64>, tag: BasisTag) -> Self {
        Self { data, tag }
    }

    pub fn from_real(data: DMatrix<f64>, tag: BasisTag) -> Self {
        Self::new(data.map(|v| Complex64::new(v, 0.0)), tag)
    }

    pub fn zeros(rows: usize, cols: usize, tag: BasisTag) -> Self {
        Self::new(DMatrix::zeros(rows, cols), tag)
    }

    pub fn identity(n: usize, tag: BasisTag) -> Self {
        Self::new(DMatrix::identity(n, n), tag)
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.data
    }

    pub fn real_part(&self) -> DMatrix<f64> {
        self.data.map(|z| z.re)
    }

    pub fn adjoint(&self) -> Self {
        let tag = BasisTag { s_in: self.tag.s_out, s_out: self.tag.s_in, ..self.tag };
        Self::new(self.data.adjoint(), tag)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.data.map(|z| z * factor), self.tag)
    }

    /// `self · rhs`, failing when the inner dimensions disagree.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols(),
                rhs.rows(),
                rhs.cols()
            )));
        }
        let tag = BasisTag { s_in: rhs.tag.s_in, ..self.tag };
        Ok(Self::new(&self.data * &rhs.data, tag))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Self::new(&self.data + &rhs.data, self.tag))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Self::new(&self.data - &rhs.data, self.tag))
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.data.shape() != rhs.data.shape() {
            return Err(Error::Shape(format!("shape mismatch {:?} vs {:?}", self.data.shape(), rhs.data.shape())));
        }
        Ok(())
    }

    /// Largest entrywise modulus, `max |m_ij|`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |self_ij − rhs_ij|`, infinite on shape mismatch.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        match self.sub(rhs) {
            Ok(d) => d.max_abs(),
            Err(_) => f64::INFINITY,
        }
    }

    /// Maximum absolute row sum `‖m‖∞`.
    pub fn norm_inf(&self) -> f64 {
        self.data.row_iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Reverses row and column order, switching between the two position
    /// index conventions.
    pub fn reindexed(&self, convention: IndexConvention) -> Self {
        if self.tag.basis != Basis::Position || convention == self.tag.convention {
            return self.clone();
        }
        let (r, c) = self.data.shape();
        let data = DMatrix::from_fn(r, c, |i, j| self.data[(r - 1 - i, c - 1 - j)]);
        Self::new(data, BasisTag { convention, ..self.tag })
    }

    /// Diagonal and first superdiagonal when the matrix is real symmetric
    /// tridiagonal within `tol`.
    pub fn symmetric_tridiagonal(&self, tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let n = self.rows();
        if !self.is_square() {
            return Err(Error::Contract(format!("matrix is {}x{}, not square", n, self.cols())));
        }
        for i in 0..n {
            for j in 0..n {
                let z = self.data[(i, j)];
                if z.im.abs() > tol {
                    return Err(Error::Contract(format!("entry ({i},{j}) is not real")));
                }
                if i.abs_diff(j) > 1 && z.re.abs() > tol {
                    return Err(Error::Contract(format!("entry ({i},{j}) lies outside the tridiagonal band")));
                }
                if (z.re - self.data[(j, i)].re).abs() > tol {
                    return Err(Error::Contract(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        let diag = (0..n).map(|i| self.data[(i, i)].re).collect();
        let off = (1..n).map(|i| self.data[(i - 1, i)].re).collect();
        Ok((diag, off))
    }
}
