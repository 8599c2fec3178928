//! CSV emission with fixed float formatting.

use std::io::Write;

use crate::coherent::CoherentFrame;
use crate::error::Result;
use crate::repmat::IndexConvention;
use crate::states::PositionState;

/// Round-trip-exact scientific notation with 17 significant digits; `-0` prints as `0`.
pub fn fmt_f64(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

fn grid_order(s: usize, convention: IndexConvention) -> Vec<usize> {
    match convention {
        IndexConvention::N1Ascending => (0..=s).collect(),
        IndexConvention::AppendixC => (0..=s).rev().collect(),
    }
}

fn comment<W: Write>(out: &mut W, text: &str) -> Result<()> {
    writeln!(out, "# {text}")?;
    Ok(())
}

/// Rows `s,n,n1,x,amplitude` for each `(n, α^n)` pair. Row order follows the
/// index convention; `n1` and `x` always hold the physical grid values.
pub fn write_wavefunctions<W: Write>(
    mut out: W,
    header: &str,
    states: &[(usize, PositionState)],
    convention: IndexConvention,
) -> Result<()> {
    comment(&mut out, header)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["s", "n", "n1", "x", "amplitude"])?;
    for (n, psi) in states {
        for n1 in grid_order(psi.s, convention) {
            w.write_record([
                psi.s.to_string(),
                n.to_string(),
                n1.to_string(),
                psi.x(n1).to_string(),
                fmt_f64(psi.amplitudes[n1].re),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Rows `t,beta_abs,beta_arg,s,n1,x,re_amp,im_amp,prob`.
/// Row order within each frame follows the index convention.
pub fn write_coherent_frames<W: Write>(
    mut out: W,
    header: &str,
    frames: &[CoherentFrame],
    convention: IndexConvention,
) -> Result<()> {
    comment(&mut out, header)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "beta_abs", "beta_arg", "s", "n1", "x", "re_amp", "im_amp", "prob"])?;
    for f in frames {
        let psi = &f.position;
        for n1 in grid_order(psi.s, convention) {
            let a = psi.amplitudes[n1];
            w.write_record([
                fmt_f64(f.t),
                fmt_f64(f.beta.norm()),
                fmt_f64(crate::coherent::beta_arg(f.beta)),
                psi.s.to_string(),
                n1.to_string(),
                psi.x(n1).to_string(),
                fmt_f64(a.re),
                fmt_f64(a.im),
                fmt_f64(a.norm_sqr()),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Rows `t,expected_x_closed,expected_x_oracle`.
pub fn write_coherent_summary<W: Write>(mut out: W, header: &str, frames: &[CoherentFrame]) -> Result<()> {
    comment(&mut out, header)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "expected_x_closed", "expected_x_oracle"])?;
    for f in frames {
        w.write_record([fmt_f64(f.t), fmt_f64(f.expected_x_closed), fmt_f64(f.expected_x_oracle)])?;
    }
    w.flush()?;
    Ok(())
}

/// Rows `n,eigenvalue`.
pub fn write_spectrum<W: Write>(mut out: W, header: &str, values: &[f64]) -> Result<()> {
    comment(&mut out, header)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "eigenvalue"])?;
    for (n, v) in values.iter().enumerate() {
        w.write_record([n.to_string(), fmt_f64(*v)])?;
    }
    w.flush()?;
    Ok(())
}
