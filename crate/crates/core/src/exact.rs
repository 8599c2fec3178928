//! Exact arithmetic in the field generated by square roots of integers.
//!
//! A [`Surd`] is `Σ q_r √r` over distinct square-free radicands `r` with exact
//! rational `q_r`. Square roots of distinct square-free integers are linearly
//! independent over ℚ, so the representation is canonical and equality is exact.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Surd {
    terms: BTreeMap<BigUint, BigRational>,
}

impl Surd {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        Self::term(q, BigUint::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `q √radicand` with `radicand` already square-free.
    fn term(q: BigRational, radicand: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(radicand, q);
        }
        Self { terms }
    }

    /// `√n` for a machine integer, extracting square factors by trial division.
    pub fn sqrt_u64(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut outside = 1u64;
        let mut inside = 1u64;
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            outside *= p.pow(e / 2);
            if e % 2 == 1 {
                inside *= p;
            }
            p += 1;
        }
        inside *= rest;
        Self::term(BigRational::from_integer(BigInt::from(outside)), BigUint::from(inside))
    }

    /// `√(Π p^e)` for a factored rational (exponents may be negative).
    pub fn sqrt_factored(factors: &[(u64, i64)]) -> Self {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut radicand = BigUint::one();
        for &(p, e) in factors {
            let half = e.div_euclid(2);
            let odd = e.rem_euclid(2) == 1;
            let pb = BigInt::from(p);
            if half >= 0 {
                num *= num_traits::pow(pb, half as usize);
            } else {
                den *= num_traits::pow(pb, (-half) as usize);
            }
            if odd {
                radicand *= BigUint::from(p);
            }
        }
        Self::term(BigRational::new(num, den), radicand)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact square when the value is a single `q √r`.
    pub fn square_if_single(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (r, q) = self.terms.iter().next()?;
                Some(q * q * BigRational::from_integer(BigInt::from(r.clone())))
            }
            _ => None,
        }
    }

    /// Sign of a single-term value; `None` for sums with mixed radicands.
    pub fn signum_if_single(&self) -> Option<i32> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.values().next().map(|q| if q.is_negative() { -1 } else { 1 }),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect() }
    }

    /// Exact inverse of a single-term value.
    pub fn inverse_single(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (r, q) = self.terms.iter().next()?;
        let rq = q * BigRational::from_integer(BigInt::from(r.clone()));
        Some(Self::term(rq.recip(), r.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| {
                let q = q.to_f64().unwrap_or(f64::NAN);
                let r = r.to_f64().unwrap_or(f64::INFINITY);
                q * r.sqrt()
            })
            .sum()
    }

    fn accumulate(&mut self, radicand: BigUint, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand.clone()).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.accumulate(r.clone(), q.clone());
        }
        out
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.accumulate(r.clone(), -q.clone());
        }
        out
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (ra, qa) in &self.terms {
            for (rb, qb) in &rhs.terms {
                // √a √b = g √((a/g)(b/g)) with g = gcd(a, b); the product stays square-free.
                let g = ra.gcd(rb);
                let radicand = (ra / &g) * (rb / &g);
                let factor = BigRational::from_integer(BigInt::from(g));
                out.accumulate(radicand, qa * qb * factor);
            }
        }
        out
    }
}

/// Primes up to `n` inclusive.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i as u64).collect()
}

/// Exponent of the prime `p` in `n!`.
pub fn factorial_valuation(n: u64, p: u64) -> i64 {
    let mut e = 0;
    let mut pk = p;
    while pk <= n {
        e += (n / pk) as i64;
        pk = match pk.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    e
}

/// Prime factorization of `C(n, k)`.
pub fn binomial_factors(n: u64, k: u64) -> Vec<(u64, i64)> {
    primes_up_to(n)
        .into_iter()
        .map(|p| {
            let e = factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p);
            (p, e)
        })
        .filter(|&(_, e)| e != 0)
        .collect()
}

/// Merges factor lists by adding exponents of equal primes.
pub fn merge_factors(a: &[(u64, i64)], b: &[(u64, i64)]) -> Vec<(u64, i64)> {
    let mut map: BTreeMap<u64, i64> = BTreeMap::new();
    for &(p, e) in a.iter().chain(b) {
        *map.entry(p).or_insert(0) += e;
    }
    map.into_iter().filter(|&(_, e)| e != 0).collect()
}
