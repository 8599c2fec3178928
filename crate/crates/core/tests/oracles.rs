//! Numerical constructions against independently computed references.

mod common;

use std::f64::consts::{FRAC_PI_8, PI};

use common::{close, hermite_closed, wavefunction, wavefunction_exact};
use dqho::coherent::{
    coherent_state, displacement_matrix, displacement_matrix_position, evolve, position_expectation_closed,
    position_expectation_closed_with, CoherentMethod, EvolutionConvention,
};
use dqho::repmat::{
    build, build_energy, build_with, eigvals_sym_tridiag, hamiltonian, hamiltonian_with, spectral_norm,
    HamiltonianConvention, IndexConvention,
};
use dqho::specfn::{hermite_function, kravchuk_wavefunction, kravchuk_wavefunction_exact, wigner_little_d_halfpi};
use dqho::states::{
    apply_ladder, expectation_x, ground_state_exact, uncertainty_floor, wavefunctions_exact, wavefunctions_float,
    EnergyState, LadderOp,
};
use dqho::wick::NamedOp;
use nalgebra::DMatrix;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn ladder_wavefunctions_match_generating_function() {
    for s in 0..=30u64 {
        let chain = wavefunctions_float(s as usize, s as usize);
        for n in 0..=s {
            for n1 in 0..=s {
                let got = chain[n as usize][n1 as usize];
                let want = wavefunction(n, n1, s);
                assert!(close(got, want, 1e-12), "s={s} n={n} n1={n1}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn exact_chain_squares_match_generating_function() {
    for s in 0..=12u64 {
        let chain = wavefunctions_exact(s as usize, s as usize);
        for n in 0..=s {
            for n1 in 0..=s {
                let a = &chain[n as usize][n1 as usize];
                let (sign, sq) = wavefunction_exact(n, n1, s);
                if sign == 0 {
                    assert!(a.is_zero());
                    continue;
                }
                assert_eq!(a.square_if_single().unwrap(), sq, "s={s} n={n} n1={n1}");
                assert_eq!(a.signum_if_single().unwrap(), sign);
            }
        }
    }
}

#[test]
fn hypergeometric_route_matches_generating_function() {
    for s in [0u64, 1, 5, 17, 40] {
        for n in 0..=s {
            for n1 in 0..=s {
                let (sign, sq) = kravchuk_wavefunction_exact(n, n1, s).unwrap();
                let (want_sign, want_sq) = wavefunction_exact(n, n1, s);
                assert_eq!((sign, &sq), (want_sign, &want_sq), "s={s} n={n} n1={n1}");
                assert!(close(kravchuk_wavefunction(n, n1, s).unwrap(), wavefunction(n, n1, s), 1e-14));
            }
        }
    }
}

#[test]
fn wigner_route_matches_generating_function() {
    for s in [1u64, 4, 9, 20] {
        for n in 0..=s {
            for n1 in 0..=s {
                let d = wigner_little_d_halfpi(s, s as i64 - 2 * n as i64, 2 * n1 as i64 - s as i64).unwrap();
                assert!(close(d, wavefunction(n, n1, s), 1e-13), "s={s} n={n} n1={n1}");
            }
        }
    }
}

#[test]
fn hermite_functions_match_closed_forms() {
    for n in 0..=3 {
        for k in -40..=40 {
            let xi = k as f64 * 0.15;
            assert!(close(hermite_function(n, xi), hermite_closed(n, xi), 1e-14), "n={n} xi={xi}");
        }
    }
}

#[test]
fn ground_state_is_binomial_with_double_factorial_norm() {
    for s in 0..=60u64 {
        let g = ground_state_exact(s as usize);
        assert_eq!(g.norm_squared, num_rational::BigRational::from_integer(common::double_factorial_even(s)));
        for (n1, a) in g.amplitudes.iter().enumerate() {
            let want = num_rational::BigRational::new(
                common::binom(s, n1 as u64),
                num_bigint::BigInt::from(1u8) << s as usize,
            );
            assert_eq!(a.square_if_single().unwrap(), want);
            assert_eq!(a.signum_if_single().unwrap(), 1);
        }
    }
}

#[test]
fn energy_basis_matrices_carry_ladder_factors() {
    for s in 1..=8usize {
        let ddag = build_energy(NamedOp::DDag, s).unwrap();
        let d = build_energy(NamedOp::D, s).unwrap();
        for n in 0..s {
            let h = (((s - n) * (n + 1)) as f64).sqrt();
            assert!(close(ddag.get(n + 1, n).re, 2.0 * h, 1e-14));
            assert!(close(d.get(n, n + 1).re, 2.0 * h, 1e-14));
        }
        for op in LadderOp::ALL {
            let m = build_energy(op.named(), s).unwrap();
            for n in 0..=s {
                let out = apply_ladder(op, &EnergyState::basis(s, n).unwrap()).unwrap();
                for row in 0..m.rows() {
                    assert!((out.amplitudes[row] - m.get(row, n)).norm() < 1e-14, "{op} s={s} n={n}");
                }
            }
        }
    }
}

#[test]
fn position_matrices_have_grid_diagonal() {
    for s in 0..=10usize {
        let x = build(NamedOp::X, s).unwrap();
        for n1 in 0..=s {
            assert!(close(x.get(n1, n1).re, 2.0 * n1 as f64 - s as f64, 1e-15));
        }
        let rev = build_with(NamedOp::X, s, IndexConvention::AppendixC).unwrap();
        for j in 0..=s {
            assert!(close(rev.get(j, j).re, s as f64 - 2.0 * j as f64, 1e-15));
        }
    }
}

#[test]
fn hamiltonian_spectrum_is_integer_ladder() {
    for s in 0..=40usize {
        let v = eigvals_sym_tridiag(&hamiltonian(s)).unwrap();
        for (k, e) in v.iter().enumerate() {
            assert!(close(*e, k as f64, 1e-10), "s={s} k={k} e={e}");
        }
        let printed = eigvals_sym_tridiag(&hamiltonian_with(s, HamiltonianConvention::Printed)).unwrap();
        for (k, e) in printed.iter().enumerate() {
            assert!(close(*e, 2.0 * k as f64, 1e-10));
        }
    }
}

#[test]
fn b1_norm_is_largest_ladder_factor() {
    for s in 1..=16usize {
        assert!(close(spectral_norm(&build(NamedOp::B1, s).unwrap()), (2.0 * s as f64).sqrt(), 1e-12));
    }
}

#[test]
fn displacement_matches_general_matrix_exponential() {
    for s in [1usize, 3, 8, 15] {
        for beta in [c(0.3, 0.0), c(0.1, -0.25), c(-0.4, 0.2), c(0.0, 0.7)] {
            let ddag = build_energy(NamedOp::DDag, s).unwrap().into_matrix();
            let d = build_energy(NamedOp::D, s).unwrap().into_matrix();
            let g: DMatrix<Complex64> = ddag * beta - d * beta.conj();
            let reference = g.exp();
            let ours = displacement_matrix(beta, s).unwrap();
            let diff = (ours.matrix() - &reference).camax();
            assert!(diff < 1e-11, "s={s} beta={beta}: {diff:e}");
        }
    }
}

#[test]
fn two_level_displacement_is_rotation() {
    for b in [0.0, 0.1, 0.5, 1.3, -0.7] {
        let psi = coherent_state(c(b, 0.0), 1, CoherentMethod::Oracle).unwrap();
        assert!((psi.amplitudes[0] - c((2.0 * b).cos(), 0.0)).norm() < 1e-14);
        assert!((psi.amplitudes[1] - c((2.0 * b).sin(), 0.0)).norm() < 1e-14);
        let x = expectation_x(&psi).unwrap();
        assert!(close(x, 2.0 * (2.0 * b).sin() * (2.0 * b).cos(), 1e-14));
        assert!(close(x, position_expectation_closed(c(b, 0.0), 0.0, 1), 1e-14));
    }
}

#[test]
fn ground_overlap_is_power_of_cosine() {
    for s in [1usize, 10, 100] {
        for r in [0.05, 0.3, 0.6, 1.1] {
            let psi = coherent_state(Complex64::from_polar(r, 0.4), s, CoherentMethod::Oracle).unwrap();
            let want = (2.0 * r).cos().powi(2 * s as i32);
            assert!(close(psi.amplitudes[0].norm_sqr(), want, 1e-12), "s={s} r={r}");
        }
    }
}

#[test]
fn bch_expansion_agrees_with_oracle() {
    for s in [1usize, 7, 50, 100] {
        for beta in [c(0.2, 0.0), Complex64::from_polar(0.7, 2.0), c(-0.3, -0.3)] {
            let a = coherent_state(beta, s, CoherentMethod::Oracle).unwrap();
            let b = coherent_state(beta, s, CoherentMethod::Bch).unwrap();
            let fidelity = a.inner(&b).unwrap().norm_sqr();
            assert!(fidelity >= 1.0 - 1e-10, "s={s} beta={beta}: {fidelity}");
        }
    }
    assert!(coherent_state(c(0.0, FRAC_PI_8 * 2.0), 4, CoherentMethod::Bch).is_err());
}

#[test]
fn imaginary_displacement_is_diagonal_in_position_basis() {
    for s in [1usize, 6, 20] {
        for r in [0.1, 0.4, 1.0] {
            let m = displacement_matrix_position(c(0.0, r), s).unwrap();
            for i in 0..=s {
                for j in 0..=s {
                    let want = if i == j {
                        Complex64::from_polar(1.0, 2.0 * r * (2.0 * i as f64 - s as f64))
                    } else {
                        c(0.0, 0.0)
                    };
                    assert!((m.get(i, j) - want).norm() < 1e-12, "s={s} r={r} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn frequency_two_evolution_at_pi_is_global_sign() {
    let psi = coherent_state(c(0.2, 0.1), 7, CoherentMethod::Oracle).unwrap();
    let out = evolve(&psi, PI, EvolutionConvention::PaperPhase);
    for (a, b) in out.amplitudes.iter().zip(&psi.amplitudes) {
        assert!((a + b).norm() < 1e-13);
    }
}

#[test]
fn hamiltonian_evolution_has_unit_frequency() {
    let beta = Complex64::from_polar(0.3, 0.5);
    let psi = coherent_state(beta, 12, CoherentMethod::Oracle).unwrap();
    for t in [0.0, 0.4, 1.7, 3.0] {
        let x = expectation_x(&evolve(&psi, t, EvolutionConvention::Hamiltonian)).unwrap();
        let want = 12.0 * (t - 0.5f64).cos() * (4.0 * 0.3f64).sin();
        assert!(close(x, want, 1e-10));
        assert!(close(want, position_expectation_closed_with(beta, t, 12, EvolutionConvention::Hamiltonian), 1e-12));
    }
}

#[test]
fn small_displacement_slope_is_four_s() {
    let h = 1e-4;
    for s in [1usize, 10, 100] {
        let x = |r: f64| expectation_x(&coherent_state(c(r, 0.0), s, CoherentMethod::Oracle).unwrap()).unwrap();
        let slope = (x(h) - x(-h)) / (2.0 * h);
        assert!((slope / (4.0 * s as f64) - 1.0).abs() < 0.01, "s={s}: slope {slope}");
    }
}

#[test]
fn sampled_expectation_is_harmonic() {
    let s = 30usize;
    let beta = Complex64::from_polar(0.25, 1.1);
    let psi = coherent_state(beta, s, CoherentMethod::Oracle).unwrap();
    let ts: Vec<f64> = (0..40).map(|k| k as f64 * 0.1).collect();
    let xs: Vec<f64> =
        ts.iter().map(|&t| expectation_x(&evolve(&psi, t, EvolutionConvention::PaperPhase)).unwrap()).collect();
    // least squares on {cos 2t, sin 2t}
    let (mut cc, mut ss, mut cs, mut xc, mut xsn) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (&t, &x) in ts.iter().zip(&xs) {
        let (co, si) = ((2.0 * t).cos(), (2.0 * t).sin());
        cc += co * co;
        ss += si * si;
        cs += co * si;
        xc += x * co;
        xsn += x * si;
    }
    let det = cc * ss - cs * cs;
    let a = (xc * ss - xsn * cs) / det;
    let b = (xsn * cc - xc * cs) / det;
    let resid =
        ts.iter().zip(&xs).map(|(&t, &x)| (x - a * (2.0 * t).cos() - b * (2.0 * t).sin()).abs()).fold(0.0, f64::max);
    assert!(resid <= 1e-8 * s as f64, "{resid:e}");
}

#[test]
fn uncertainty_floor_is_zero() {
    for s in [1usize, 2, 9, 30] {
        let f = uncertainty_floor(s).unwrap();
        assert_eq!(f.min_product, 0.0);
        assert!(f.energy_basis_residual < 1e-10, "s={s}: {}", f.energy_basis_residual);
    }
}
