use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::coeff::Coeff;

/// Normal-ordered word `(A1†)^p (A2†)^q (A1)^r (A2)^t`.
///
/// Creation generators stand left of annihilation generators and mode 1 stands
/// left of mode 2, so every operator word has exactly one such representative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BosonMonomial {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub t: u32,
}

impl BosonMonomial {
    pub const IDENTITY: BosonMonomial = BosonMonomial { p: 0, q: 0, r: 0, t: 0 };

    pub const fn new(p: u32, q: u32, r: u32, t: u32) -> Self {
        Self { p, q, r, t }
    }

    pub fn degree(&self) -> u32 {
        self.p + self.q + self.r + self.t
    }

    /// Net change of the total quanta `S` produced by this word.
    pub fn resolution_shift(&self) -> i64 {
        i64::from(self.p) + i64::from(self.q) - i64::from(self.r) - i64::from(self.t)
    }

    /// Hermitian conjugate: swaps creation and annihilation exponents mode by mode.
    pub fn adjoint(&self) -> Self {
        Self::new(self.r, self.t, self.p, self.q)
    }
}

impl fmt::Display for BosonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::IDENTITY {
            return write!(f, "I");
        }
        let mut factors = Vec::new();
        for (name, exp) in [("A1†", self.p), ("A2†", self.q), ("A1", self.r), ("A2", self.t)] {
            match exp {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", factors.join(" "))
    }
}

/// Coefficient of `(a†)^{m-k} a^{r-k}` in the normal-ordered form of `a^r (a†)^m`.
fn contraction_weight(r: u32, m: u32, k: u32) -> BigInt {
    binomial(r, k) * binomial(m, k) * factorial(k)
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Finite linear combination of normal-ordered two-mode boson words with exact
/// complex-rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorPoly {
    terms: BTreeMap<BosonMonomial, Coeff>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term(BosonMonomial::IDENTITY, Coeff::one())
    }

    pub fn term(monomial: BosonMonomial, coeff: Coeff) -> Self {
        let mut poly = Self::zero();
        poly.add_term(monomial, &coeff);
        poly
    }

    pub fn from_terms<I: IntoIterator<Item = (BosonMonomial, Coeff)>>(terms: I) -> Self {
        let mut poly = Self::zero();
        for (m, c) in terms {
            poly.add_term(m, &c);
        }
        poly
    }

    pub fn add_term(&mut self, monomial: BosonMonomial, coeff: &Coeff) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(monomial).or_insert_with(Coeff::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BosonMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &BosonMonomial) -> Option<&Coeff> {
        self.terms.get(monomial)
    }

    pub fn scale(&self, factor: &Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, c * factor)))
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(BosonMonomial::degree).max().unwrap_or(0)
    }

    /// Common resolution shift of every word, or `None` for mixed-shift polynomials.
    /// The zero polynomial has shift 0.
    pub fn resolution_shift(&self) -> Option<i64> {
        let mut shifts = self.terms.keys().map(BosonMonomial::resolution_shift);
        let first = shifts.next().unwrap_or(0);
        shifts.all(|s| s == first).then_some(first)
    }

    /// Normal-ordered product `self · rhs`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                // Only A1^r (A1†)^p' and A2^t (A2†)^q' need reordering.
                for k1 in 0..=ma.r.min(mb.p) {
                    let w1 = contraction_weight(ma.r, mb.p, k1);
                    for k2 in 0..=ma.t.min(mb.q) {
                        let w = &w1 * contraction_weight(ma.t, mb.q, k2);
                        let word =
                            BosonMonomial::new(ma.p + mb.p - k1, ma.q + mb.q - k2, ma.r - k1 + mb.r, ma.t - k2 + mb.t);
                        out.add_term(word, &(&c * &Coeff::from_int(w)));
                    }
                }
            }
        }
        out
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.multiply(rhs) - &rhs.multiply(self)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::identity(), |acc, _| acc.multiply(self))
    }
}

pub fn multiply(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    a.multiply(b)
}

pub fn commutator(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    a.commutator(b)
}

pub fn adjoint(a: &OperatorPoly) -> OperatorPoly {
    a.adjoint()
}

impl Add for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        self.scale(&Coeff::real(-1, 1))
    }
}

impl Mul for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        self.multiply(rhs)
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else if *m == BosonMonomial::IDENTITY {
                    c.to_string()
                } else {
                    format!("{c} {m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
