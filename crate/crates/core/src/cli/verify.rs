//! Aggregate verification run behind `dqho verify`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coherent::{coherent_state, evolve, position_expectation_closed, CoherentMethod, EvolutionConvention};
use crate::error::Result;
use crate::repmat::{eigvals_sym_tridiag, evaluate, hamiltonian, hamiltonian_with, HamiltonianConvention, RepMatrix};
use crate::report::VerificationReport;
use crate::specfn::kravchuk_matrix;
use crate::states::{expectation_x, wavefunctions_float};
use crate::wick::{corrected_identities, named, structural_identities, verify_tables, NamedOp};

pub const CASIMIR_MAX_S: usize = 50;
pub const SPECTRUM_MAX_S: usize = 200;
pub const WAVEFUNCTION_MAX_S: usize = 40;
pub const COHERENT_S: [usize; 5] = [1, 2, 10, 50, 100];
pub const COHERENT_T: [f64; 4] = [0.0, 0.3, 1.0, 2.5];
pub const COHERENT_PHASES: [f64; 3] = [0.0, PI / 4.0, PI / 2.0];

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub hamiltonian: HamiltonianConvention,
    pub self_test_corrupt: bool,
}

/// `{0.05, 0.10, …, 0.70}`.
pub fn coherent_beta_grid() -> Vec<f64> {
    (1..=14).map(|k| 0.05 * k as f64).collect()
}

fn casimir(report: &mut VerificationReport) -> Result<()> {
    let omega = named(NamedOp::Omega);
    let mut worst = 0.0f64;
    for s in 1..=CASIMIR_MAX_S {
        let m = evaluate(&omega, s)?;
        let target = RepMatrix::identity(s + 1, m.tag).scale(Complex64::new((s * (s + 2)) as f64, 0.0));
        worst = worst.max(m.sub(&target)?.norm_inf());
    }
    report.push_numeric(format!("casimir matrix: ‖Ω - s(s+2)I‖∞, s = 1..{CASIMIR_MAX_S}"), worst, 1e-10);
    Ok(())
}

fn spectrum_deviation(values: &[f64], expected: impl Fn(usize) -> f64) -> f64 {
    values.iter().enumerate().map(|(k, v)| (v - expected(k)).abs()).fold(0.0, f64::max)
}

fn spectrum(report: &mut VerificationReport, convention: HamiltonianConvention) -> Result<()> {
    let mut worst = 0.0f64;
    let mut doubled = 0.0f64;
    for s in 0..=SPECTRUM_MAX_S {
        let values = eigvals_sym_tridiag(&hamiltonian_with(s, convention))?;
        worst = worst.max(spectrum_deviation(&values, |k| k as f64));
        doubled = doubled.max(spectrum_deviation(&values, |k| 2.0 * k as f64));
    }
    report.push_numeric(
        format!("spectrum: eig H = {{0..s}}, s = 0..{SPECTRUM_MAX_S}, {} convention", convention.as_str()),
        worst,
        1e-9,
    );
    if convention == HamiltonianConvention::Printed {
        report.push_flag(
            "spectrum: printed convention has eigenvalues {2(s-n)}, spacing 2",
            doubled <= 1e-9,
            format!("max deviation from {{2(s-n)}}: {doubled:.3e}"),
        );
    }
    Ok(())
}

fn wavefunctions(report: &mut VerificationReport) -> Result<()> {
    let mut worst = 0.0f64;
    let mut gram = 0.0f64;
    for s in 0..=WAVEFUNCTION_MAX_S {
        let ladder = wavefunctions_float(s, s);
        let oracle = kravchuk_matrix(s as u64);
        for (row, reference) in ladder.iter().zip(&oracle) {
            for (a, b) in row.iter().zip(reference) {
                worst = worst.max((a - b).abs());
            }
        }
        let alpha = DMatrix::from_fn(s + 1, s + 1, |n, n1| ladder[n][n1]);
        let g = &alpha * alpha.transpose() - DMatrix::identity(s + 1, s + 1);
        gram = gram.max(g.amax());
    }
    report.push_numeric(format!("wavefunctions: ladder = Kravchuk oracle, s = 0..{WAVEFUNCTION_MAX_S}"), worst, 1e-10);
    report.push_numeric(format!("wavefunctions: Gram matrix = I, s = 0..{WAVEFUNCTION_MAX_S}"), gram, 1e-10);
    Ok(())
}

fn coherent(report: &mut VerificationReport) -> Result<()> {
    for &s in &COHERENT_S {
        let mut worst = 0.0f64;
        for r in coherent_beta_grid() {
            for &phase in &COHERENT_PHASES {
                let beta = Complex64::from_polar(r, phase);
                let psi = coherent_state(beta, s, CoherentMethod::Oracle)?;
                for &t in &COHERENT_T {
                    let x = expectation_x(&evolve(&psi, t, EvolutionConvention::PaperPhase))?;
                    worst = worst.max((x - position_expectation_closed(beta, t, s)).abs());
                }
            }
        }
        report.push_numeric(format!("coherent: ⟨X(t)⟩ = s cos(2t - arg β) sin 4|β|, s = {s}"), worst, 1e-8 * s as f64);
    }
    Ok(())
}

/// Negative control: one off-diagonal sign flip of `H` is a similarity and
/// keeps the spectrum; a further magnitude change must be caught.
fn self_test(report: &mut VerificationReport) -> Result<()> {
    const S: usize = 8;
    let mut m = hamiltonian(S).into_matrix();
    m[(2, 3)] = -m[(2, 3)];
    m[(3, 2)] = -m[(3, 2)];
    let flipped = RepMatrix::new(m.clone(), hamiltonian(S).tag);
    let dev = spectrum_deviation(&eigvals_sym_tridiag(&flipped)?, |k| k as f64);
    report.push_numeric(format!("self-test: eig H = {{0..s}} after one sign flip, s = {S}"), dev, 1e-9);
    m[(4, 5)] *= 1.5;
    m[(5, 4)] *= 1.5;
    let broken = RepMatrix::new(m, hamiltonian(S).tag);
    let dev = spectrum_deviation(&eigvals_sym_tridiag(&broken)?, |k| k as f64);
    report.push_numeric(
        format!("self-test: eig H = {{0..s}} after sign flip and magnitude change, s = {S}"),
        dev,
        1e-9,
    );
    Ok(())
}

pub fn run_verification(opts: VerifyOptions) -> Result<VerificationReport> {
    let mut report = verify_tables();
    report.extend(corrected_identities());
    report.extend(structural_identities());
    casimir(&mut report)?;
    spectrum(&mut report, opts.hamiltonian)?;
    wavefunctions(&mut report)?;
    coherent(&mut report)?;
    if opts.self_test_corrupt {
        self_test(&mut report)?;
    }
    Ok(report)
}
