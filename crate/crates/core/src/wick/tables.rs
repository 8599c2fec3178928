//! Commutator tables of the two-mode construction, stored as published and
//! checked symbolically.

use super::coeff::Coeff;
use super::named::{named, NamedOp};
use super::poly::OperatorPoly;
use crate::report::VerificationReport;

use NamedOp::{B1Dag, B2Dag, DDag, A1, A2, B1, B2, D, H, HI, I, S};

/// `Σ coeff · op` with small rational coefficients `(num, den)`.
type LinearCombo = &'static [(i64, i64, NamedOp)];

const ZERO: LinearCombo = &[];

/// Operators indexing the rows and columns of the resolution-algebra table.
pub const RESOLUTION_TABLE_OPS: [NamedOp; 7] = [H, S, B1, B1Dag, B2, B2Dag, I];

/// Entry `[row, col]` of the resolution-algebra table.
pub const RESOLUTION_TABLE: [[LinearCombo; 7]; 7] = [
    // H
    [ZERO, ZERO, ZERO, ZERO, &[(-1, 1, B2)], &[(1, 1, B2Dag)], ZERO],
    // S
    [ZERO, ZERO, &[(-1, 1, B1)], &[(1, 1, B1Dag)], &[(-1, 1, B2)], &[(1, 1, B2Dag)], ZERO],
    // B1
    [ZERO, &[(1, 1, B1)], ZERO, &[(2, 1, I)], ZERO, ZERO, ZERO],
    // B1†
    [ZERO, &[(-1, 1, B1Dag)], &[(-2, 1, I)], ZERO, ZERO, ZERO, ZERO],
    // B2
    [&[(1, 1, B2)], &[(1, 1, B2)], ZERO, ZERO, ZERO, &[(2, 1, I)], ZERO],
    // B2†
    [&[(-1, 1, B2Dag)], &[(-1, 1, B2Dag)], ZERO, ZERO, &[(-2, 1, I)], ZERO, ZERO],
    // I
    [ZERO; 7],
];

/// Operators indexing the rows and columns of the interaction-algebra table.
pub const INTERACTION_TABLE_OPS: [NamedOp; 6] = [HI, D, DDag, B1, B1Dag, I];

/// Entry `[row, col]` of the interaction-algebra table, as published. The
/// `[D, D†]` and `[D†, D]` entries carry the opposite sign of what the
/// definitions produce; see [`corrected_identities`].
pub const INTERACTION_TABLE: [[LinearCombo; 6]; 6] = [
    // H_I
    [ZERO, &[(-1, 1, D)], &[(1, 1, DDag)], &[(1, 2, B1)], &[(-1, 2, B1Dag)], ZERO],
    // D
    [&[(1, 1, D)], ZERO, &[(8, 1, HI)], &[(-2, 1, B2)], ZERO, ZERO],
    // D†
    [&[(-1, 1, DDag)], &[(-8, 1, HI)], ZERO, ZERO, &[(2, 1, B2Dag)], ZERO],
    // B1
    [&[(-1, 2, B1)], &[(2, 1, B2)], ZERO, ZERO, &[(2, 1, I)], ZERO],
    // B1†
    [&[(1, 2, B1Dag)], ZERO, &[(-2, 1, B2Dag)], &[(-2, 1, I)], ZERO, ZERO],
    // I
    [ZERO; 6],
];

/// Equations of motion `[lhs, rhs] = value`, as published. The `[H, A2]`
/// right-hand side is inconsistent with `[H, B1] = 0`; see [`corrected_identities`].
pub const EQUATIONS_OF_MOTION: [(NamedOp, NamedOp, LinearCombo); 4] = [
    (H, A1, &[(1, 2, A2), (-1, 2, A1)]),
    (H, A2, &[(1, 2, A1), (1, 2, A2)]),
    (HI, A1, &[(1, 2, A2)]),
    (HI, A2, &[(1, 2, A1)]),
];

/// Identities whose published form differs from the value the definitions
/// produce, stated with the derived right-hand side.
pub const CORRECTED_IDENTITIES: [(NamedOp, NamedOp, LinearCombo); 3] =
    [(D, DDag, &[(-8, 1, HI)]), (DDag, D, &[(8, 1, HI)]), (H, A2, &[(1, 2, A1), (-1, 2, A2)])];

pub fn combo(terms: LinearCombo) -> OperatorPoly {
    terms.iter().fold(OperatorPoly::zero(), |acc, &(num, den, op)| &acc + &named(op).scale(&Coeff::real(num, den)))
}

fn combo_label(terms: LinearCombo) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|&(num, den, op)| {
            let c = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
            match c.as_str() {
                "1" => op.to_string(),
                "-1" => format!("-{op}"),
                _ => format!("{c} {op}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn check_commutator(report: &mut VerificationReport, group: &str, lhs: NamedOp, rhs: NamedOp, expected: LinearCombo) {
    let computed = named(lhs).commutator(&named(rhs));
    let residual = &computed - &combo(expected);
    report.push_symbolic(format!("{group}: [{lhs}, {rhs}] = {}", combo_label(expected)), &residual);
}

/// Casimir residual `Ω − S(S+2)`.
pub fn casimir_residual() -> OperatorPoly {
    let s = named(S);
    let s_plus_two = &s + &OperatorPoly::identity().scale(&Coeff::real(2, 1));
    &named(NamedOp::Omega) - &s.multiply(&s_plus_two)
}

/// Checks every published table entry, the four equations of motion and the
/// Casimir relation. Failures are report entries carrying the residual.
pub fn verify_tables() -> VerificationReport {
    let mut report = VerificationReport::new();
    for (i, &row) in RESOLUTION_TABLE_OPS.iter().enumerate() {
        for (j, &col) in RESOLUTION_TABLE_OPS.iter().enumerate() {
            check_commutator(&mut report, "resolution algebra", row, col, RESOLUTION_TABLE[i][j]);
        }
    }
    for (i, &row) in INTERACTION_TABLE_OPS.iter().enumerate() {
        for (j, &col) in INTERACTION_TABLE_OPS.iter().enumerate() {
            check_commutator(&mut report, "interaction algebra", row, col, INTERACTION_TABLE[i][j]);
        }
    }
    for &(lhs, rhs, expected) in &EQUATIONS_OF_MOTION {
        check_commutator(&mut report, "equations of motion", lhs, rhs, expected);
    }
    report.push_symbolic("casimir: Ω - S(S+2) = 0", &casimir_residual());
    report
}

/// Checks the corrected forms of the three identities whose printed table
/// entries do not hold.
pub fn corrected_identities() -> VerificationReport {
    let mut report = VerificationReport::new();
    for &(lhs, rhs, expected) in &CORRECTED_IDENTITIES {
        check_commutator(&mut report, "derived", lhs, rhs, expected);
    }
    report
}

/// Structural identities of the algebra beyond the tables.
pub fn structural_identities() -> VerificationReport {
    let mut report = VerificationReport::new();
    let half = Coeff::real(1, 2);
    let x_number = &named(NamedOp::N1).scale(&Coeff::real(2, 1)) - &named(S);
    report.push_symbolic("X = ½(D† + D) = 2N1 - S", &(&named(NamedOp::X) - &x_number));
    let split = &named(S).scale(&half) + &named(HI);
    report.push_symbolic("H = ½S + H_I", &(&named(H) - &split));
    let via_b2 = named(B2Dag).multiply(&named(B2)).scale(&half);
    report.push_symbolic("H = ½B2†B2", &(&named(H) - &via_b2));
    let minus_i_p = named(NamedOp::P).scale(&Coeff::imag(-1, 1));
    report.push_symbolic("[H, X] = -iP", &(&named(H).commutator(&named(NamedOp::X)) - &minus_i_p));
    let i_x = named(NamedOp::X).scale(&Coeff::i());
    report.push_symbolic("[H, P] = iX", &(&named(H).commutator(&named(NamedOp::P)) - &i_x));
    for op in [H, S, HI, NamedOp::X, NamedOp::P, NamedOp::Omega] {
        let p = named(op);
        report.push_symbolic(format!("{op}† = {op}"), &(&p.adjoint() - &p));
    }
    report
}
