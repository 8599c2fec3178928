use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{BasisTag, RepMatrix};
use crate::error::{Error, Result};

/// A run of values written along a diagonal starting at `(start_row, start_col)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Band {
    pub start_row: usize,
    pub start_col: usize,
    pub values: Vec<Complex64>,
}

impl Band {
    pub fn new(start_row: usize, start_col: usize, values: Vec<Complex64>) -> Self {
        Self { start_row, start_col, values }
    }

    pub fn real(start_row: usize, start_col: usize, values: impl IntoIterator<Item = f64>) -> Self {
        Self::new(start_row, start_col, values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.values.len()).map(|k| (self.start_row + k, self.start_col + k))
    }
}

/// Matrix given by its shape and nonzero diagonal bands.
#[derive(Clone, Debug, PartialEq)]
pub struct BandSpec {
    pub rows: usize,
    pub cols: usize,
    pub bands: Vec<Band>,
}

impl BandSpec {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, bands: Vec::new() }
    }

    pub fn with(mut self, band: Band) -> Self {
        self.bands.push(band);
        self
    }

    /// Checks that every band fits and no entry is written twice.
    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Shape(format!("band matrix must be nonempty, got {}x{}", self.rows, self.cols)));
        }
        let mut written = vec![false; self.rows * self.cols];
        for (b, band) in self.bands.iter().enumerate() {
            for (i, j) in band.positions() {
                if i >= self.rows || j >= self.cols {
                    return Err(Error::Shape(format!(
                        "band {b} reaches ({i},{j}) outside a {}x{} matrix",
                        self.rows, self.cols
                    )));
                }
                let slot = &mut written[i * self.cols + j];
                if *slot {
                    return Err(Error::Shape(format!("band {b} overlaps an earlier band at ({i},{j})")));
                }
                *slot = true;
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self, tag: BasisTag) -> Result<RepMatrix> {
        self.validate()?;
        let mut data = DMatrix::zeros(self.rows, self.cols);
        for band in &self.bands {
            for ((i, j), v) in band.positions().zip(&band.values) {
                data[(i, j)] = *v;
            }
        }
        Ok(RepMatrix::new(data, tag))
    }
}
