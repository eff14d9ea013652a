//! Exact arithmetic in two quadratic integer rings:
//!
//! - Z[φ], basis (1, φ) with φ² = φ + 1 (φ is the golden ratio (1+√5)/2;
//!   √5 itself is the element 2φ - 1);
//! - Z[√2], basis (1, √2); the silver ratio is the unit 1 + √2.
//!
//! Coordinates are arbitrary-precision integers, so Binet-type formulas and
//! power-sum identities are checked with zero floating-point error. Division
//! is never performed: every identity is compared by cross-multiplied
//! equality, and negative powers exist only for units (φ and 1+√2 both have
//! norm -1, with φ⁻¹ = φ - 1 and (1+√2)⁻¹ = √2 - 1).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::{self, SeqValue, SequenceFamily};

/// Which quadratic ring an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    /// Z[φ], φ² = φ + 1. Multiplication:
    /// (a+bφ)(c+dφ) = (ac+bd) + (ad+bc+bd)φ.
    Golden,
    /// Z[√2]. Multiplication: (a+b√2)(c+d√2) = (ac+2bd) + (ad+bc)√2.
    Silver,
}

impl RingTag {
    /// Printed symbol of the irrational basis element.
    pub fn symbol(self) -> &'static str {
        match self {
            RingTag::Golden => "φ",
            RingTag::Silver => "√2",
        }
    }

    fn omega_f64(self) -> f64 {
        match self {
            RingTag::Golden => (1.0 + 5.0_f64.sqrt()) / 2.0,
            RingTag::Silver => 2.0_f64.sqrt(),
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Golden => write!(f, "golden"),
            RingTag::Silver => write!(f, "silver"),
        }
    }
}

/// Exact ring element a + b·ω, where ω is φ or √2 depending on the tag.
/// The representation is unique because ω is irrational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub ring: RingTag,
    pub a: SeqValue,
    pub b: SeqValue,
}

impl QuadInt {
    pub fn new(ring: RingTag, a: impl Into<SeqValue>, b: impl Into<SeqValue>) -> Self {
        Self {
            ring,
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(ring: RingTag, x: impl Into<SeqValue>) -> Self {
        Self::new(ring, x, 0)
    }

    pub fn zero(ring: RingTag) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: RingTag) -> Self {
        Self::from_int(ring, 1)
    }

    /// The golden ratio φ as an element of Z[φ].
    pub fn phi() -> Self {
        Self::new(RingTag::Golden, 0, 1)
    }

    /// √5 = 2φ - 1.
    pub fn sqrt5() -> Self {
        Self::new(RingTag::Golden, -1, 2)
    }

    pub fn sqrt2() -> Self {
        Self::new(RingTag::Silver, 0, 1)
    }

    /// The silver ratio 1 + √2.
    pub fn silver_ratio() -> Self {
        Self::new(RingTag::Silver, 1, 1)
    }

    /// The distinguished unit ω of the ring: φ, or 1 + √2.
    pub fn omega(ring: RingTag) -> Self {
        match ring {
            RingTag::Golden => Self::phi(),
            RingTag::Silver => Self::silver_ratio(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the ω-coordinate vanishes (the element is a plain integer).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Ring conjugation: sends φ to 1 - φ, and √2 to -√2.
    /// A ring homomorphism; conj(conj(x)) = x.
    pub fn conj(&self) -> Self {
        match self.ring {
            RingTag::Golden => Self {
                ring: self.ring,
                a: &self.a + &self.b,
                b: -self.b.clone(),
            },
            RingTag::Silver => Self {
                ring: self.ring,
                a: self.a.clone(),
                b: -self.b.clone(),
            },
        }
    }

    /// Field norm x · conj(x): a² + ab - b² in Z[φ], a² - 2b² in Z[√2].
    pub fn norm(&self) -> SeqValue {
        match self.ring {
            RingTag::Golden => &self.a * &self.a + &self.a * &self.b - &self.b * &self.b,
            RingTag::Silver => &self.a * &self.a - SeqValue::from(2) * &self.b * &self.b,
        }
    }

    /// Multiplicative inverse, defined exactly for units (norm ±1).
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n == SeqValue::from(1) {
            Some(self.conj())
        } else if n == SeqValue::from(-1) {
            Some(-self.conj())
        } else {
            None
        }
    }

    /// Exact r-th power by square-and-multiply; negative r requires a unit.
    pub fn pow(&self, r: i64) -> Result<Self> {
        recurrence::check_cap(r, recurrence::index_cap())?;
        if r < 0 {
            let inv = self.inverse().ok_or(Error::NotAUnit)?;
            return Ok(inv.pow_unsigned(r.unsigned_abs()));
        }
        Ok(self.pow_unsigned(r as u64))
    }

    fn pow_unsigned(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiply by a plain integer.
    pub fn scale(&self, k: &SeqValue) -> Self {
        Self {
            ring: self.ring,
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Exact sign of the real value a + b·ω (ω > 0 irrational), computed in
    /// integers only. Writing the value as (u + v√d)/2 or u + v√d:
    /// mixed-sign coordinates reduce to comparing u² with d·v².
    pub fn sign_real(&self) -> Ordering {
        // Golden: 2(a + bφ) = (2a + b) + b√5. Silver: a + b√2 directly.
        let (u, v, d) = match self.ring {
            RingTag::Golden => (SeqValue::from(2) * &self.a + &self.b, self.b.clone(), 5),
            RingTag::Silver => (self.a.clone(), self.b.clone(), 2),
        };
        match (u.sign(), v.sign()) {
            (num_bigint::Sign::NoSign, num_bigint::Sign::NoSign) => Ordering::Equal,
            (num_bigint::Sign::Minus | num_bigint::Sign::NoSign, num_bigint::Sign::Minus)
            | (num_bigint::Sign::Minus, num_bigint::Sign::NoSign) => Ordering::Less,
            (num_bigint::Sign::Plus | num_bigint::Sign::NoSign, num_bigint::Sign::Plus)
            | (num_bigint::Sign::Plus, num_bigint::Sign::NoSign) => Ordering::Greater,
            // u > 0, v < 0: positive iff u² > d v² (equality impossible, √d irrational).
            (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
                (&u * &u).cmp(&(SeqValue::from(d) * &v * &v))
            }
            // u < 0, v > 0: positive iff d v² > u².
            (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
                (SeqValue::from(d) * &v * &v).cmp(&(&u * &u))
            }
        }
    }

    /// Exact order by real value. Elements of different rings do not compare.
    pub fn real_cmp(&self, other: &Self) -> Ordering {
        (self - other).sign_real()
    }

    /// Floating approximation, for display only.
    pub fn approx(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * self.ring.omega_f64()
    }
}

fn assert_same_ring(x: &QuadInt, y: &QuadInt) {
    assert_eq!(x.ring, y.ring, "cannot mix Z[φ] and Z[√2] elements");
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, other: &QuadInt) -> QuadInt {
        assert_same_ring(self, other);
        QuadInt {
            ring: self.ring,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, other: QuadInt) -> QuadInt {
        &self + &other
    }
}

impl AddAssign<&QuadInt> for QuadInt {
    fn add_assign(&mut self, other: &QuadInt) {
        assert_same_ring(self, other);
        self.a += &other.a;
        self.b += &other.b;
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, other: &QuadInt) -> QuadInt {
        assert_same_ring(self, other);
        QuadInt {
            ring: self.ring,
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, other: QuadInt) -> QuadInt {
        &self - &other
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            ring: self.ring,
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, other: &QuadInt) -> QuadInt {
        assert_same_ring(self, other);
        let (a, b, c, d) = (&self.a, &self.b, &other.a, &other.b);
        match self.ring {
            RingTag::Golden => QuadInt {
                ring: self.ring,
                a: a * c + b * d,
                b: a * d + b * c + b * d,
            },
            RingTag::Silver => QuadInt {
                ring: self.ring,
                a: a * c + SeqValue::from(2) * b * d,
                b: a * d + b * c,
            },
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, other: QuadInt) -> QuadInt {
        &self * &other
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.ring.symbol();
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = |b: &SeqValue| -> String {
            let mag = b.abs();
            if mag == SeqValue::from(1) {
                sym.to_string()
            } else {
                format!("{mag}{sym}")
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                return write!(f, "-{}", coeff(&self.b));
            }
            return write!(f, "{}", coeff(&self.b));
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}", self.a, op, coeff(&self.b))
    }
}

/// Selects the sequence/ring pairing used by power-sum checks and identity
/// discovery: Fibonacci with Z[φ], Pell with Z[√2].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerFamily {
    Fibonacci,
    Pell,
}

impl PowerFamily {
    pub fn ring(self) -> RingTag {
        match self {
            PowerFamily::Fibonacci => RingTag::Golden,
            PowerFamily::Pell => RingTag::Silver,
        }
    }

    pub fn omega(self) -> QuadInt {
        QuadInt::omega(self.ring())
    }

    pub fn sequence(self) -> SequenceFamily {
        match self {
            PowerFamily::Fibonacci => SequenceFamily::Fibonacci,
            PowerFamily::Pell => SequenceFamily::Pell,
        }
    }
}

impl fmt::Display for PowerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerFamily::Fibonacci => write!(f, "fibonacci"),
            PowerFamily::Pell => write!(f, "pell"),
        }
    }
}

/// Result of evaluating ω^r + ω^{-r} against S_{r+1} + S_{r-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSum {
    /// Rational coordinate of ω^r + ω^{-r}.
    pub value: SeqValue,
    /// ω-coordinate of the sum; zero exactly when r is even.
    pub omega_coefficient: SeqValue,
    /// True iff the sum is the plain integer S_{r+1} + S_{r-1}.
    pub holds: bool,
}

/// Computes ω^r + ω^{-r} and checks it equals S_{r+1} + S_{r-1}
/// (S = Fibonacci and ω = φ, or S = Pell and ω = 1+√2).
///
/// The identity holds exactly for even r. Odd r is still computed: the sum
/// then has a nonzero ω-coordinate and `holds` is false, which is the sharp
/// converse of the parity hypothesis.
pub fn lucas_power_sum(family: PowerFamily, r: i64) -> Result<PowerSum> {
    let omega = family.omega();
    let sum = &omega.pow(r)? + &omega.pow(-r)?;
    let seq = family.sequence();
    let expected = (recurrence::eval(&seq, r + 1)? + recurrence::eval(&seq, r - 1)?).to_integer();
    let holds = sum.b.is_zero() && sum.a == expected;
    Ok(PowerSum {
        value: sum.a,
        omega_coefficient: sum.b,
        holds,
    })
}

/// Exact check of the closed forms
///   F_n·√5 = φ^n - φ̄^n   and   P_n·2√2 = (1+√2)^n - (1-√2)^n
/// at a signed index, with F_n and P_n from the recurrence evaluator.
/// Division never happens; both sides are compared as ring elements.
pub fn binet_check(n: i64) -> Result<bool> {
    let phi = QuadInt::phi();
    let phi_bar = phi.conj();
    let f = recurrence::eval(&SequenceFamily::Fibonacci, n)?.to_integer();
    let golden_ok = &phi.pow(n)? - &phi_bar.pow(n)? == QuadInt::sqrt5().scale(&f);

    let sigma = QuadInt::silver_ratio();
    let sigma_bar = sigma.conj();
    let p = recurrence::eval(&SequenceFamily::Pell, n)?.to_integer();
    let silver_ok =
        &sigma.pow(n)? - &sigma_bar.pow(n)? == QuadInt::new(RingTag::Silver, 0, 2).scale(&p);

    Ok(golden_ok && silver_ok)
}
