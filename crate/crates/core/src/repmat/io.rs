use std::io::{Read, Write};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{BasisTag, RepMatrix};
use crate::error::{Error, Result};
use crate::export::fmt_f64;

const HEADER: [&str; 3] = ["rows", "cols", "basis_tag"];

/// JSON form of a [`RepMatrix`]; entries are row-major `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub basis_tag: String,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl From<&RepMatrix> for MatrixFile {
    fn from(m: &RepMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            basis_tag: m.tag.to_string(),
            entries: (0..m.rows()).map(|i| (0..m.cols()).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixFile> for RepMatrix {
    type Error = Error;
    fn try_from(file: MatrixFile) -> Result<Self> {
        let tag: BasisTag = file.basis_tag.parse()?;
        if file.entries.len() != file.rows || file.entries.iter().any(|r| r.len() != file.cols) {
            return Err(Error::Shape(format!("entries do not form a {}x{} matrix", file.rows, file.cols)));
        }
        let data = DMatrix::from_fn(file.rows, file.cols, |i, j| {
            let [re, im] = file.entries[i][j];
            Complex64::new(re, im)
        });
        Ok(RepMatrix::new(data, tag))
    }
}

impl RepMatrix {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&MatrixFile::from(self))?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<MatrixFile>(text)?.try_into()
    }

    /// Writes `# comment`, the `rows,cols,basis_tag` header and its values, then
    /// one record per matrix row holding `re,im` pairs.
    pub fn write_csv<W: Write>(&self, mut out: W, comment: &str) -> Result<()> {
        writeln!(out, "# {comment}")?;
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        w.write_record(HEADER)?;
        w.write_record([self.rows().to_string(), self.cols().to_string(), self.tag.to_string()])?;
        for i in 0..self.rows() {
            let record: Vec<String> = (0..self.cols())
                .flat_map(|j| {
                    let z = self.get(i, j);
                    [fmt_f64(z.re), fmt_f64(z.im)]
                })
                .collect();
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut reader =
            csv::ReaderBuilder::new().has_headers(false).flexible(true).comment(Some(b'#')).from_reader(input);
        let mut records = reader.records();
        let mut next = || -> Result<csv::StringRecord> {
            records.next().ok_or_else(|| Error::Parse("matrix CSV ended early".into()))?.map_err(Error::from)
        };
        let header = next()?;
        if header.iter().map(str::trim).ne(HEADER) {
            return Err(Error::Parse(format!("expected header rows,cols,basis_tag, got {:?}", header)));
        }
        let meta = next()?;
        let field = |k: usize| meta.get(k).map(str::trim).ok_or_else(|| Error::Parse("short shape record".into()));
        let rows: usize = field(0)?.parse().map_err(|_| Error::Parse("bad row count".into()))?;
        let cols: usize = field(1)?.parse().map_err(|_| Error::Parse("bad column count".into()))?;
        let tag: BasisTag = field(2)?.parse()?;
        let mut data = DMatrix::<Complex64>::zeros(rows, cols);
        for i in 0..rows {
            let rec = next()?;
            if rec.len() != 2 * cols {
                return Err(Error::Shape(format!("row {i} has {} fields, expected {}", rec.len(), 2 * cols)));
            }
            for j in 0..cols {
                let parse = |k: usize| -> Result<f64> {
                    rec[k].trim().parse().map_err(|_| Error::Parse(format!("bad number `{}`", &rec[k])))
                };
                data[(i, j)] = Complex64::new(parse(2 * j)?, parse(2 * j + 1)?);
            }
        }
        Ok(RepMatrix::new(data, tag))
    }
}
