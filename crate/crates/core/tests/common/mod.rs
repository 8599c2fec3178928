#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficient of `t^n` in `(1 + t)^{n1} (1 − t)^{s − n1}`.
pub fn generating_coeff(n: u64, n1: u64, s: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n.min(n1) {
        if n - k > s - n1 {
            continue;
        }
        let term = binom(n1, k) * binom(s - n1, n - k);
        if (n - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `α^n_{n1,s}` squared exactly, with its sign:
/// `2^{−s} C(s,n1) / C(s,n) · c²` where `c` is [`generating_coeff`].
pub fn wavefunction_exact(n: u64, n1: u64, s: u64) -> (i32, BigRational) {
    let c = generating_coeff(n, n1, s);
    let sign = if c.is_zero() {
        0
    } else if c.is_negative() {
        -1
    } else {
        1
    };
    let num = binom(s, n1) * &c * &c;
    let den = binom(s, n) * (BigInt::one() << s as usize);
    (sign, BigRational::new(num, den))
}

pub fn wavefunction(n: u64, n1: u64, s: u64) -> f64 {
    let (sign, sq) = wavefunction_exact(n, n1, s);
    sign as f64 * sq.to_f64().unwrap().sqrt()
}

/// Closed-form Hermite functions `π^{−1/4} e^{−ξ²/2} H_n(ξ) / √(2ⁿ n!)` for `n ≤ 3`.
pub fn hermite_closed(n: u32, xi: f64) -> f64 {
    let g = std::f64::consts::PI.powf(-0.25) * (-xi * xi / 2.0).exp();
    match n {
        0 => g,
        1 => g * 2.0 * xi / 2f64.sqrt(),
        2 => g * (4.0 * xi * xi - 2.0) / 8f64.sqrt(),
        3 => g * (8.0 * xi.powi(3) - 12.0 * xi) / 48f64.sqrt(),
        _ => panic!("closed form only for n <= 3"),
    }
}

/// `(2s)!! = 2^s s!`.
pub fn double_factorial_even(s: u64) -> BigInt {
    (1..=s).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k))
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
