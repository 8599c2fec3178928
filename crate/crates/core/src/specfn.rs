//! Special-function oracles: terminating hypergeometric series, Kravchuk
//! polynomials and functions, Wigner little-d at π/2 and Hermite functions.
//!
//! Values that are square roots of rationals are carried as an exact square
//! plus a sign and only rounded once at the end.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type RationalValue = BigRational;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// `k!!`, the product of every integer of the same parity from `k` down.
pub fn double_factorial(k: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut j = k;
    while j > 1 {
        acc *= BigUint::from(j);
        j -= 2;
    }
    acc
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `₂F₁(−n, −x; −N; z)` summed exactly.
pub fn hyp2f1_terminating(n: u64, x: u64, big_n: u64, z: &BigRational) -> Result<RationalValue> {
    if n > big_n {
        return Err(Error::Pole { n, order: big_n });
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 0..n.min(x) {
        // (−n+k)(−x+k) / ((−N+k)(k+1)) · z
        let num = int(BigInt::from(n - k) * BigInt::from(x - k));
        let den = int(-(BigInt::from(big_n - k) * BigInt::from(k + 1)));
        term = term * num / den * z;
        sum += &term;
    }
    Ok(sum)
}

/// `k_n(x; p, N) = (−1)^n C(N, n) p^n ₂F₁(−n, −x; −N; 1/p)`.
pub fn kravchuk_polynomial(n: u64, x: u64, p: &BigRational, big_n: u64) -> Result<RationalValue> {
    if n > big_n || x > big_n {
        return Err(Error::Domain(format!("kravchuk_polynomial: need n, x <= N, got n={n}, x={x}, N={big_n}")));
    }
    if !p.is_positive() || *p >= BigRational::one() {
        return Err(Error::Domain(format!("kravchuk_polynomial: need 0 < p < 1, got p={p}")));
    }
    let f = hyp2f1_terminating(n, x, big_n, &p.recip())?;
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    Ok(sign * int(BigInt::from(binomial(big_n, n))) * num_traits::pow(p.clone(), n as usize) * f)
}

/// `√q · sign` rounded once.
fn signed_sqrt(sign: i32, square: &BigRational) -> f64 {
    let magnitude = square.to_f64().unwrap_or(f64::NAN).sqrt();
    if sign < 0 {
        -magnitude
    } else {
        magnitude
    }
}

fn sign_of(v: &BigRational) -> i32 {
    if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Normalized Kravchuk function `K_n(x) = √ρ(x) k_n(x) / d_n` with
/// `ρ(x) = C(N,x) p^x (1−p)^{N−x}` and `d_n² = C(N,n) (p(1−p))^n`.
pub fn kravchuk_function(n: u64, x: u64, p: &BigRational, big_n: u64) -> Result<f64> {
    let k = kravchuk_polynomial(n, x, p, big_n)?;
    let q = BigRational::one() - p;
    let rho = int(BigInt::from(binomial(big_n, x)))
        * num_traits::pow(p.clone(), x as usize)
        * num_traits::pow(q.clone(), (big_n - x) as usize);
    let d2 = int(BigInt::from(binomial(big_n, n))) * num_traits::pow(p * &q, n as usize);
    Ok(signed_sqrt(sign_of(&k), &(rho * &k * &k / d2)))
}

/// Exact square and sign of the eigenstate amplitude
/// `(−1)^n 2^{−s/2} √(C(s,n) C(s,n1)) ₂F₁(−n, −n1; −s; 2)`.
pub fn kravchuk_wavefunction_exact(n: u64, n1: u64, s: u64) -> Result<(i32, RationalValue)> {
    if n > s || n1 > s {
        return Err(Error::Domain(format!("kravchuk_wavefunction: need n, n1 <= s, got n={n}, n1={n1}, s={s}")));
    }
    let f = hyp2f1_terminating(n, n1, s, &int(2))?;
    if f.is_zero() {
        return Ok((0, BigRational::zero()));
    }
    let parity = if n.is_multiple_of(2) { 1 } else { -1 };
    let square = int(BigInt::from(binomial(s, n) * binomial(s, n1))) * &f * &f / int(BigInt::from(BigUint::one() << s));
    Ok((parity * sign_of(&f), square))
}

/// DQHO eigenstate amplitude `α^n_{n1,s}` from the hypergeometric closed form.
pub fn kravchuk_wavefunction(n: u64, n1: u64, s: u64) -> Result<f64> {
    let (sign, square) = kravchuk_wavefunction_exact(n, n1, s)?;
    Ok(signed_sqrt(sign, &square))
}

/// Full matrix `[α^n_{n1,s}]` indexed `[n][n1]`.
pub fn kravchuk_matrix(s: u64) -> Vec<Vec<f64>> {
    (0..=s).map(|n| (0..=s).map(|n1| kravchuk_wavefunction(n, n1, s).expect("indices in range")).collect()).collect()
}

/// `d^j_{m,m'}(π/2)` with doubled arguments `j2 = 2j`, `m2 = 2m`, `mp2 = 2m'`,
/// evaluated through the oscillator map `s = 2j`, `n = j − m`, `n1 = j + m'`.
pub fn wigner_little_d_halfpi(j2: u64, m2: i64, mp2: i64) -> Result<f64> {
    let j2i = j2 as i64;
    let valid = |v: i64| v.abs() <= j2i && (j2i - v) % 2 == 0;
    if !valid(m2) || !valid(mp2) {
        return Err(Error::Domain(format!("wigner_little_d_halfpi: m2={m2}, mp2={mp2} inconsistent with j2={j2}")));
    }
    let n = ((j2i - m2) / 2) as u64;
    let n1 = ((j2i + mp2) / 2) as u64;
    kravchuk_wavefunction(n, n1, j2)
}

/// Normalized Hermite function `π^{−1/4} (2^n n!)^{−1/2} H_n(ξ) e^{−ξ²/2}`.
pub fn hermite_function(n: u32, xi: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-0.5 * xi * xi).exp();
    for k in 0..n {
        let k = f64::from(k);
        let next = (2.0 / (k + 1.0)).sqrt() * xi * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(0), BigUint::one());
        assert_eq!(double_factorial(4), BigUint::from(8u32));
        assert_eq!(double_factorial(10), BigUint::from(3840u32));
        assert_eq!(double_factorial(7), BigUint::from(105u32));
    }

    #[test]
    fn hyp2f1_small_values() {
        assert_eq!(hyp2f1_terminating(0, 5, 7, &rat(2, 1)).unwrap(), rat(1, 1));
        assert_eq!(hyp2f1_terminating(1, 1, 2, &rat(2, 1)).unwrap(), rat(0, 1));
        assert!(matches!(hyp2f1_terminating(3, 1, 2, &rat(2, 1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn hyp2f1_reflection() {
        for s in 0..12u64 {
            for n1 in 0..=s {
                let expected = if n1 % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                assert_eq!(hyp2f1_terminating(s, n1, s, &rat(2, 1)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn first_kravchuk_polynomial() {
        let half = rat(1, 2);
        for big_n in 1..8u64 {
            for x in 0..=big_n {
                let k1 = kravchuk_polynomial(1, x, &half, big_n).unwrap();
                assert_eq!(k1, rat(x as i64, 1) - rat(big_n as i64, 2));
            }
        }
        assert!(kravchuk_polynomial(1, 0, &rat(1, 1), 3).is_err());
    }

    #[test]
    fn wigner_node_of_middle_state() {
        assert_eq!(wigner_little_d_halfpi(0, 0, 0).unwrap(), 1.0);
        assert_eq!(wigner_little_d_halfpi(2, 0, 0).unwrap(), 0.0);
        assert!(wigner_little_d_halfpi(2, 1, 0).is_err());
    }

    #[test]
    fn kravchuk_function_matches_wavefunction_at_half() {
        let half = rat(1, 2);
        for s in 1..10u64 {
            for n in 0..=s {
                for x in 0..=s {
                    let a = kravchuk_function(n, x, &half, s).unwrap();
                    let b = kravchuk_wavefunction(n, x, s).unwrap();
                    assert!((a - b).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn hermite_values() {
        assert!((hermite_function(0, 0.0) - std::f64::consts::PI.powf(-0.25)).abs() < 1e-15);
        assert_eq!(hermite_function(1, 0.0), 0.0);
    }
}
