use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use super::verify::{run_verification, VerifyOptions};
use super::{
    CoherentArgs, Command, DilateArgs, Level, MatrixFormat, ScaleArgs, SpectrumArgs, Sweep, VerifyArgs,
    WavefunctionArgs, EXIT_OK, EXIT_VERIFY_FAILED, OUTPUT_DIR_ENV,
};
use crate::coherent::{beta_sweep, linspace, time_sweep};
use crate::error::{Error, Result};
use crate::export::{fmt_f64, write_coherent_frames, write_coherent_summary, write_spectrum, write_wavefunctions};
use crate::repmat::{
    build_with, eigvals_sym_tridiag, hamiltonian_with, spectral_norm, unitary_dilation, BasisTag, RepMatrix,
};
use crate::states::{
    rescale_resolution, wavefunctions_exact, wavefunctions_float, PositionState, State, WavefunctionBasis, EXACT_MAX_S,
};
use crate::wick::NamedOp;

pub(super) fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Verify(a) => verify(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Wavefunction(a) => wavefunction(a),
        Command::Coherent(a) => coherent(a),
        Command::Scale(a) => scale(a),
        Command::Dilate(a) => dilate(a),
    }
}

fn resolve(explicit: Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    explicit.or_else(|| {
        std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty()).map(|d| PathBuf::from(d).join(default_name))
    })
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            Box::new(BufWriter::new(fs::File::create(p)?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    let mut out = sink(path)?;
    write(&mut out)?;
    out.flush()?;
    if let Some(p) = path {
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn fmt_complex(z: Complex64) -> String {
    format!("{}{}{}i", fmt_f64(z.re), if z.im < 0.0 { "" } else { "+" }, fmt_f64(z.im))
}

fn verify(args: VerifyArgs) -> Result<i32> {
    let report = run_verification(VerifyOptions {
        hamiltonian: args.hamiltonian_convention,
        self_test_corrupt: args.self_test_corrupt,
    })?;
    let path = resolve(args.output, "verify_report.json");
    emit(path.as_deref(), |out| {
        writeln!(out, "{}", report.to_json()?)?;
        Ok(())
    })?;
    let failed: Vec<_> = report.failures().collect();
    for f in &failed {
        eprintln!("FAIL  {}  (residual {})", f.identity, f.residual);
    }
    eprintln!("{} checks, {} failed", report.len(), failed.len());
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn read_matrix(path: &Path) -> Result<RepMatrix> {
    let text = fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        RepMatrix::from_json(&text)
    } else {
        RepMatrix::read_csv(text.as_bytes())
    }
}

fn spectrum(args: SpectrumArgs) -> Result<i32> {
    let (m, header, name) = match (&args.matrix, args.s) {
        (Some(p), _) => (read_matrix(p)?, format!("dqho spectrum matrix={}", p.display()), "spectrum.csv".to_string()),
        (None, Some(s)) => {
            let conv = args.hamiltonian_convention;
            (
                hamiltonian_with(s, conv),
                format!("dqho spectrum s={s} hamiltonian-convention={}", conv.as_str()),
                format!("spectrum_s{s}.csv"),
            )
        }
        (None, None) => return Err(Error::Domain("either --s or --matrix is required".into())),
    };
    let values = eigvals_sym_tridiag(&m)?;
    let path = resolve(args.output, &name);
    emit(path.as_deref(), |out| write_spectrum(out, &header, &values))?;
    Ok(EXIT_OK)
}

fn wavefunction(args: WavefunctionArgs) -> Result<i32> {
    let s = args.s;
    let levels: Vec<usize> = match args.n {
        Level::All => (0..=s).collect(),
        Level::One(n) if n <= s => vec![n],
        Level::One(n) => return Err(Error::Domain(format!("energy index {n} outside 0..={s}"))),
    };
    let n_max = *levels.last().expect("nonempty");
    let chain: Vec<Vec<f64>> = if s <= EXACT_MAX_S {
        wavefunctions_exact(s, n_max).iter().map(|row| row.iter().map(|a| a.to_f64()).collect()).collect()
    } else {
        wavefunctions_float(s, n_max)
    };
    let states = levels.iter().map(|&n| Ok((n, PositionState::from_real(&chain[n])?))).collect::<Result<Vec<_>>>()?;
    let header = format!(
        "dqho wavefunction s={s} n={} index-convention={} arithmetic={}",
        args.n,
        args.index_convention.as_str(),
        if s <= EXACT_MAX_S { "exact" } else { "float" }
    );
    let path = resolve(args.output, &format!("wavefunction_s{s}_n{}.csv", args.n));
    emit(path.as_deref(), |out| write_wavefunctions(out, &header, &states, args.index_convention))?;
    Ok(EXIT_OK)
}

fn coherent(args: CoherentArgs) -> Result<i32> {
    let s = args.s;
    let (frames, header) = match args.sweep {
        Sweep::Time => {
            let beta = args.beta.ok_or_else(|| Error::Domain("--beta is required for a time sweep".into()))?;
            if args.t_steps == 0 {
                return Err(Error::Domain("--t-steps must be at least 1".into()));
            }
            let grid = linspace(args.t_min, args.t_max, args.t_steps);
            let header = format!(
                "dqho coherent sweep=time s={s} beta={} t=[{},{}] steps={} evolution={} index-convention={}",
                fmt_complex(beta),
                fmt_f64(args.t_min),
                fmt_f64(args.t_max),
                args.t_steps,
                args.evolution.as_str(),
                args.index_convention.as_str()
            );
            (time_sweep(beta, s, &grid, args.evolution)?, header)
        }
        Sweep::Beta => {
            if args.beta_steps == 0 {
                return Err(Error::Domain("--beta-steps must be at least 1".into()));
            }
            if args.beta_min < 0.0 || args.beta_max < 0.0 {
                return Err(Error::Domain("|β| bounds must be non-negative".into()));
            }
            let grid = linspace(args.beta_min, args.beta_max, args.beta_steps);
            let header = format!(
                "dqho coherent sweep=beta s={s} |beta|=[{},{}] arg={} t={} steps={} evolution={} index-convention={}",
                fmt_f64(args.beta_min),
                fmt_f64(args.beta_max),
                fmt_f64(args.beta_arg),
                fmt_f64(args.t_min),
                args.beta_steps,
                args.evolution.as_str(),
                args.index_convention.as_str()
            );
            (beta_sweep(&grid, args.beta_arg, s, args.t_min, args.evolution)?, header)
        }
    };
    let frames_path = resolve(args.output, "coherent_frames.csv");
    emit(frames_path.as_deref(), |out| write_coherent_frames(out, &header, &frames, args.index_convention))?;
    if let Some(p) = resolve(args.summary, "coherent_summary.csv") {
        emit(Some(&p), |out| write_coherent_summary(out, &header, &frames))?;
    }
    let worst = frames.iter().map(|f| (f.expected_x_closed - f.expected_x_oracle).abs()).fold(0.0, f64::max);
    eprintln!("max |⟨X⟩ closed - oracle| = {worst:.3e} over {} frames", frames.len());
    Ok(EXIT_OK)
}

fn scale(args: ScaleArgs) -> Result<i32> {
    let input = State::from_json(&fs::read_to_string(&args.input)?)?;
    let energy = match &input {
        State::Energy(e) => e.clone(),
        State::Position(p) => WavefunctionBasis::new(p.s).to_energy(p)?,
    };
    let rescaled = rescale_resolution(&energy, args.target_s, args.mode, args.force)?;
    let output = match input {
        State::Energy(_) => State::Energy(rescaled.state),
        State::Position(_) => State::Position(WavefunctionBasis::new(args.target_s).to_position(&rescaled.state)?),
    };
    let path = resolve(args.output, &format!("state_s{}.json", args.target_s));
    emit(path.as_deref(), |out| {
        writeln!(out, "{}", output.to_json()?)?;
        Ok(())
    })?;
    if rescaled.lost_norm > 0.0 {
        eprintln!("warning: discarded occupied levels; lost norm = {}", fmt_f64(rescaled.lost_norm));
    } else {
        eprintln!("lost norm = 0");
    }
    Ok(EXIT_OK)
}

fn dilate(args: DilateArgs) -> Result<i32> {
    let (m, label) = match (&args.matrix, &args.op, args.s) {
        (Some(p), _, _) => (read_matrix(p)?, format!("matrix={}", p.display())),
        (None, Some(name), Some(s)) if name == "zero" => {
            (RepMatrix::zeros(s + 1, s + 1, BasisTag::position(s, s)), format!("op=zero s={s}"))
        }
        (None, Some(name), Some(s)) => {
            let op: NamedOp = name.parse()?;
            (
                build_with(op, s, args.index_convention)?,
                format!("op={op} s={s} index-convention={}", args.index_convention.as_str()),
            )
        }
        _ => return Err(Error::Domain("either --op with --s, or --matrix, is required".into())),
    };
    let alpha = match args.alpha {
        Some(a) => a,
        None => {
            let norm = spectral_norm(&m);
            if norm > 0.0 {
                norm
            } else {
                1.0
            }
        }
    };
    let u = unitary_dilation(&m, alpha)?;
    let residual = u.adjoint().matmul(&u)?.sub(&RepMatrix::identity(u.rows(), u.tag))?.max_abs();
    let header = format!("dqho dilate {label} alpha={}", fmt_f64(alpha));
    let ext = match args.format {
        MatrixFormat::Csv => "csv",
        MatrixFormat::Json => "json",
    };
    let stem = args.op.as_deref().unwrap_or("matrix").replace('†', "dag");
    let path = resolve(args.output, &format!("dilation_{stem}.{ext}"));
    emit(path.as_deref(), |out| match args.format {
        MatrixFormat::Csv => u.write_csv(out, &header),
        MatrixFormat::Json => {
            writeln!(out, "{}", u.to_json()?)?;
            Ok(())
        }
    })?;
    eprintln!("unitarity residual max|U†U - I| = {residual:.3e}");
    Ok(EXIT_OK)
}
