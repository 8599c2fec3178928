use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{BasisTag, RepMatrix};
use crate::error::{Error, Result};
use crate::wick::OperatorPoly;

/// `√(top! / bottom!)` for `bottom ≤ top`.
fn sqrt_falling(top: usize, bottom: usize) -> f64 {
    ((bottom + 1)..=top).map(|k| (k as f64).sqrt()).product()
}

/// Matrix of `p` on the resolution-`s` slice of the n1-ascending position
/// basis. Columns index `n1` at resolution `s`, rows `n1` at `s + shift`.
pub fn evaluate(p: &OperatorPoly, s: usize) -> Result<RepMatrix> {
    let shift = p.resolution_shift().ok_or_else(|| Error::Shape(format!("polynomial mixes resolution shifts: {p}")))?;
    let s_out = s as i64 + shift;
    if s_out < 0 {
        return Err(Error::Domain(format!("polynomial lowers resolution {s} below zero")));
    }
    let s_out = s_out as usize;
    let mut data = DMatrix::<Complex64>::zeros(s_out + 1, s + 1);
    for (m, c) in p.terms() {
        let (p1, q2, r1, t2) = (m.p as usize, m.q as usize, m.r as usize, m.t as usize);
        let coeff = c.to_complex64();
        for n1 in 0..=s {
            let n2 = s - n1;
            if n1 < r1 || n2 < t2 {
                continue;
            }
            // A2^t, A1^r, then A2†^q, A1†^p on |n1, n2⟩.
            let amp = sqrt_falling(n2, n2 - t2)
                * sqrt_falling(n1, n1 - r1)
                * sqrt_falling(n2 - t2 + q2, n2 - t2)
                * sqrt_falling(n1 - r1 + p1, n1 - r1);
            data[(n1 - r1 + p1, n1)] += coeff * amp;
        }
    }
    Ok(RepMatrix::new(data, BasisTag::position(s, s_out)))
}
