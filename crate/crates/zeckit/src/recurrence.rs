//! Exact evaluation of k-th order integer linear recurrences
//!
//!   a_n = c_1 a_{n-1} + c_2 a_{n-2} + ... + c_k a_{n-k}
//!
//! at any integer index. Forward evaluation iterates the recurrence over a
//! rolling window of the last k values. Negative indices run the recurrence
//! backwards, solving a_{n-k} = (a_n - sum c_i a_{n-i}) / c_k exactly in
//! rationals; for second-order sequences with |t| = 1 (Fibonacci, Lucas, Pell,
//! Pell-Lucas) every backward step divides exactly and the result stays an
//! integer, e.g. F_{-n} = (-1)^{n+1} F_n.
//!
//! The second-order case u_{n+2} = s u_{n+1} + t u_n with u_0 = 1, u_1 = s
//! (the "tiling convention": u_n counts n-board tilings with s square colors
//! and t domino colors) additionally gets the addition formula
//!
//!   u_{m+n} = u_m u_n + t u_{m-1} u_{n-1}.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact sequence value: an arbitrary-precision signed integer.
pub type SeqValue = BigInt;

/// Exact rational value, always reduced, denominator positive.
/// Integer iff the denominator is 1.
pub type RatValue = BigRational;

/// Default guard against runaway indices (and multi-gigabyte integers).
pub const DEFAULT_INDEX_CAP: i64 = 1_000_000;

static INDEX_CAP: OnceLock<i64> = OnceLock::new();

/// The current index cap. [`DEFAULT_INDEX_CAP`] unless overridden once at
/// startup (the CLI does this from `ZECKIT_INDEX_CAP`).
pub fn index_cap() -> i64 {
    *INDEX_CAP.get().unwrap_or(&DEFAULT_INDEX_CAP)
}

/// Override the process-wide index cap. Takes effect only on the first call;
/// returns false if the cap had already been set.
pub fn set_index_cap(cap: i64) -> bool {
    INDEX_CAP.set(cap).is_ok()
}

pub(crate) fn check_cap(index: i64, cap: i64) -> Result<()> {
    if index.checked_abs().is_none_or(|a| a > cap) {
        Err(Error::IndexCapExceeded { index, cap })
    } else {
        Ok(())
    }
}

/// Coefficients and initial values defining a k-th order linear recurrence.
///
/// Invariants (enforced at construction): order k >= 1, exactly k
/// coefficients c_1..c_k and k initial values a_0..a_{k-1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct RecurrenceSpec {
    #[serde(with = "crate::json_num::bigint_vec")]
    coefficients: Vec<SeqValue>,
    #[serde(with = "crate::json_num::bigint_vec")]
    initials: Vec<SeqValue>,
}

#[derive(Deserialize)]
struct RawSpec {
    #[serde(with = "crate::json_num::bigint_vec")]
    coefficients: Vec<SeqValue>,
    #[serde(with = "crate::json_num::bigint_vec")]
    initials: Vec<SeqValue>,
}

impl TryFrom<RawSpec> for RecurrenceSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        RecurrenceSpec::new(raw.coefficients, raw.initials)
    }
}

impl RecurrenceSpec {
    pub fn new(coefficients: Vec<SeqValue>, initials: Vec<SeqValue>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        if initials.len() != coefficients.len() {
            return Err(Error::InvalidSpec(format!(
                "{} coefficients but {} initial values; counts must match",
                coefficients.len(),
                initials.len()
            )));
        }
        Ok(Self {
            coefficients,
            initials,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coefficients: &[i64], initials: &[i64]) -> Result<Self> {
        Self::new(
            coefficients.iter().copied().map(SeqValue::from).collect(),
            initials.iter().copied().map(SeqValue::from).collect(),
        )
    }

    /// Spec with the same coefficients and the initial values replaced by
    /// tiling counts: a_0 = 1 and a_j for j < k from the truncated recurrence
    /// a_j = c_1 a_{j-1} + ... + c_j a_0.
    pub fn tiling(coefficients: Vec<SeqValue>) -> Result<Self> {
        let initials = tiling_initials(&coefficients);
        Self::new(coefficients, initials)
    }

    pub fn tiling_from_ints(coefficients: &[i64]) -> Result<Self> {
        Self::tiling(coefficients.iter().copied().map(SeqValue::from).collect())
    }

    /// Same coefficients, initials replaced by the tiling-count values.
    pub fn tiling_variant(&self) -> Self {
        Self {
            coefficients: self.coefficients.clone(),
            initials: tiling_initials(&self.coefficients),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[SeqValue] {
        &self.coefficients
    }

    pub fn initials(&self) -> &[SeqValue] {
        &self.initials
    }

    pub fn trailing_coefficient(&self) -> &SeqValue {
        self.coefficients.last().expect("order >= 1")
    }

    /// (s, t) of a second-order recurrence u_{n+2} = s u_{n+1} + t u_n.
    pub fn second_order_coefficients(&self) -> Result<(&SeqValue, &SeqValue)> {
        if self.order() != 2 {
            return Err(Error::NotSecondOrder {
                order: self.order(),
            });
        }
        Ok((&self.coefficients[0], &self.coefficients[1]))
    }

    /// True when the initial values are exactly the tiling counts
    /// (for k = 2: u_0 = 1 and u_1 = s). Coefficient signs are not
    /// inspected here; enumeration additionally requires them nonnegative.
    pub fn has_tiling_initials(&self) -> bool {
        self.initials == tiling_initials(&self.coefficients)
    }

    pub(crate) fn check_tiling_initials(&self) -> Result<()> {
        if self.has_tiling_initials() {
            Ok(())
        } else {
            Err(Error::SpecNotTilingConvention(format!(
                "initial values {:?} differ from the tiling counts {:?}",
                self.initials,
                tiling_initials(&self.coefficients)
            )))
        }
    }
}

fn tiling_initials(coefficients: &[SeqValue]) -> Vec<SeqValue> {
    let k = coefficients.len();
    let mut values = Vec::with_capacity(k);
    values.push(SeqValue::one());
    for j in 1..k {
        let mut acc = SeqValue::zero();
        for i in 1..=j {
            acc += &coefficients[i - 1] * &values[j - i];
        }
        values.push(acc);
    }
    values
}

/// A named sequence or a user-defined recurrence.
///
/// The named tags expand to fixed second-order specs:
/// Fibonacci (s=1, t=1, 0, 1), Lucas (s=1, t=1, 2, 1),
/// Pell (s=2, t=1, 0, 1), Pell-Lucas (s=2, t=1, 2, 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceFamily {
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
    /// The given spec with its initials replaced by tiling counts (u_0 = 1).
    TilingOf(RecurrenceSpec),
    Custom(RecurrenceSpec),
}

impl SequenceFamily {
    /// Expand to the concrete recurrence definition.
    pub fn spec(&self) -> RecurrenceSpec {
        match self {
            Self::Fibonacci => RecurrenceSpec::from_ints(&[1, 1], &[0, 1]).unwrap(),
            Self::Lucas => RecurrenceSpec::from_ints(&[1, 1], &[2, 1]).unwrap(),
            Self::Pell => RecurrenceSpec::from_ints(&[2, 1], &[0, 1]).unwrap(),
            Self::PellLucas => RecurrenceSpec::from_ints(&[2, 1], &[2, 2]).unwrap(),
            Self::TilingOf(spec) => spec.tiling_variant(),
            Self::Custom(spec) => spec.clone(),
        }
    }

    /// One-letter symbol used when printing identities.
    pub fn symbol(&self) -> &'static str {
        match self {
            Self::Fibonacci => "F",
            Self::Lucas => "L",
            Self::Pell => "P",
            Self::PellLucas => "Q",
            Self::TilingOf(_) => "u",
            Self::Custom(_) => "S",
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fibonacci => write!(f, "fibonacci"),
            Self::Lucas => write!(f, "lucas"),
            Self::Pell => write!(f, "pell"),
            Self::PellLucas => write!(f, "pell-lucas"),
            Self::TilingOf(_) => write!(f, "tiling-of-custom"),
            Self::Custom(_) => write!(f, "custom"),
        }
    }
}

/// Exact value of the sequence at any signed index, under the default cap.
///
/// Nonnegative indices iterate forward; negative indices run the recurrence
/// backwards and require a nonzero trailing coefficient. The result is a
/// rational; it is an integer whenever every backward step divides exactly
/// (always, for second order with |t| = 1).
pub fn eval(family: &SequenceFamily, n: i64) -> Result<RatValue> {
    eval_with_cap(family, n, index_cap())
}

/// [`eval`] with an explicit index cap.
pub fn eval_with_cap(family: &SequenceFamily, n: i64, cap: i64) -> Result<RatValue> {
    check_cap(n, cap)?;
    let spec = family.spec();
    if n >= 0 {
        return Ok(RatValue::from_integer(forward(&spec, n as u64)));
    }
    if spec.trailing_coefficient().is_zero() {
        return Err(Error::NegativeIndexUnsupported { index: n });
    }
    Ok(backward(&spec, n))
}

/// Exact forward evaluation of a k-th order recurrence at n >= 0.
pub fn eval_general(spec: &RecurrenceSpec, n: u64) -> Result<SeqValue> {
    eval_general_with_cap(spec, n, index_cap())
}

/// [`eval_general`] with an explicit index cap.
pub fn eval_general_with_cap(spec: &RecurrenceSpec, n: u64, cap: i64) -> Result<SeqValue> {
    if i64::try_from(n).map_or(true, |i| i > cap) {
        return Err(Error::IndexCapExceeded {
            index: i64::try_from(n).unwrap_or(i64::MAX),
            cap,
        });
    }
    Ok(forward(spec, n))
}

fn forward(spec: &RecurrenceSpec, n: u64) -> SeqValue {
    let k = spec.order();
    if (n as usize) < k {
        return spec.initials()[n as usize].clone();
    }
    // Rolling window of the last k values; window[i % k] holds a_i.
    let mut window = spec.initials().to_vec();
    for step in k as u64..=n {
        let mut next = SeqValue::zero();
        for (i, c) in spec.coefficients().iter().enumerate() {
            next += c * &window[((step - 1 - i as u64) % k as u64) as usize];
        }
        window[(step % k as u64) as usize] = next;
    }
    window[(n % k as u64) as usize].clone()
}

fn backward(spec: &RecurrenceSpec, n: i64) -> RatValue {
    debug_assert!(n < 0);
    let k = spec.order();
    let c_last = RatValue::from_integer(spec.trailing_coefficient().clone());
    // window holds [a_m, a_{m+1}, ..., a_{m+k-1}], starting at m = 0.
    let mut window: VecDeque<RatValue> = spec
        .initials()
        .iter()
        .cloned()
        .map(RatValue::from_integer)
        .collect();
    for _ in 0..n.unsigned_abs() {
        // a_{m-1} = (a_{m+k-1} - sum_{i=1}^{k-1} c_i a_{m+k-1-i}) / c_k
        let mut acc = window[k - 1].clone();
        for i in 1..k {
            acc -= RatValue::from_integer(spec.coefficients()[i - 1].clone())
                * &window[k - 1 - i];
        }
        window.pop_back();
        window.push_front(acc / &c_last);
    }
    window.pop_front().expect("order >= 1")
}

/// Addition-formula evaluation u_{m+n} = u_m u_n + t u_{m-1} u_{n-1} for a
/// second-order spec in tiling convention (u_0 = 1, u_1 = s); m, n >= 1.
/// Agrees with [`eval_general`] at m + n.
pub fn add_formula(spec: &RecurrenceSpec, m: u64, n: u64) -> Result<SeqValue> {
    let (_, t) = spec.second_order_coefficients()?;
    spec.check_tiling_initials()?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "addition formula requires m >= 1 and n >= 1",
        ));
    }
    let u = |i: u64| eval_general(spec, i);
    Ok(u(m)? * u(n)? + t * u(m - 1)? * u(n - 1)?)
}
