//! Integer codecs over Fibonacci terms.
//!
//! Zeckendorf form writes a positive integer as a sum of Fibonacci numbers
//! with indices ≥ 2 and pairwise index gaps ≥ 2 (no two consecutive
//! Fibonacci numbers). Negafibonacci form writes any signed integer as a sum
//! of negative-index Fibonacci numbers, again with no two consecutive
//! indices. Both representations are unique; the test suite proves this at
//! desk scale by exhausting every valid index subset.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::{self, SeqValue, SequenceFamily};

/// Which index range a representation draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReprKind {
    /// Positive-index form: indices ≥ 2, gaps ≥ 2. Defined for n ≥ 1.
    Zeckendorf,
    /// Negative-index form: indices ≤ -1, gaps ≥ 2. Defined for every
    /// integer; zero is the empty sum.
    Negafibonacci,
}

impl fmt::Display for ReprKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReprKind::Zeckendorf => write!(f, "zeckendorf"),
            ReprKind::Negafibonacci => write!(f, "negafibonacci"),
        }
    }
}

/// A sum of Fibonacci terms identified by index, stored ascending.
/// Display order is descending (largest term first), matching the usual
/// written form `F[10]+F[8]+F[4]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Representation {
    kind: ReprKind,
    indices: Vec<i64>,
}

impl Representation {
    /// Builds a representation from indices in any order, enforcing the
    /// kind's index bounds and the gap-≥-2 rule.
    pub fn new(kind: ReprKind, indices: impl Into<Vec<i64>>) -> Result<Self> {
        let mut indices = indices.into();
        indices.sort_unstable();
        let rep = Self { kind, indices };
        rep.validate()?;
        Ok(rep)
    }

    pub fn kind(&self) -> ReprKind {
        self.kind
    }

    /// Indices in ascending order.
    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn validate(&self) -> Result<()> {
        if !is_zeckendorf_form(&self.indices, false) {
            return Err(Error::InvalidRepresentation(format!(
                "indices must be strictly ascending with gaps >= 2, got {:?}",
                self.indices
            )));
        }
        match self.kind {
            ReprKind::Zeckendorf => {
                if self.indices.first().is_some_and(|&k| k < 2) {
                    return Err(Error::InvalidRepresentation(format!(
                        "zeckendorf indices must be >= 2, got {:?}",
                        self.indices
                    )));
                }
            }
            ReprKind::Negafibonacci => {
                if self.indices.last().is_some_and(|&k| k > -1) {
                    return Err(Error::InvalidRepresentation(format!(
                        "negafibonacci indices must be <= -1, got {:?}",
                        self.indices
                    )));
                }
            }
        }
        Ok(())
    }

    /// The integer this representation stands for.
    pub fn value(&self) -> Result<SeqValue> {
        decode(self)
    }
}

// Deserialization revalidates, so hand-written JSON cannot smuggle in
// consecutive indices.
impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            kind: ReprKind,
            indices: Vec<i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Representation::new(raw.kind, raw.indices).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .indices
            .iter()
            .rev()
            .map(|k| format!("F[{k}]"))
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl FromStr for Representation {
    type Err = Error;

    /// Parses the written form, e.g. `F[10]+F[8]+F[4]` or `F[-5]+F[-7]`.
    /// The kind is inferred from the index signs; `0` is the empty
    /// negafibonacci sum.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Representation::new(ReprKind::Negafibonacci, vec![]);
        }
        let mut indices = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let inner = term
                .strip_prefix("F[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| {
                    Error::InvalidRepresentation(format!(
                        "expected a term of the form F[k], got {term:?}"
                    ))
                })?;
            let k: i64 = inner.trim().parse().map_err(|_| {
                Error::InvalidRepresentation(format!("bad index in term {term:?}"))
            })?;
            indices.push(k);
        }
        let kind = if indices.iter().all(|&k| k >= 2) {
            ReprKind::Zeckendorf
        } else if indices.iter().all(|&k| k <= -1) {
            ReprKind::Negafibonacci
        } else {
            return Err(Error::InvalidRepresentation(format!(
                "indices mix positive and negative ranges: {indices:?}"
            )));
        };
        Representation::new(kind, indices)
    }
}

/// True iff `indices` is strictly ascending with every gap ≥ 2.
/// With `strict` set, additionally requires every index ≥ 2 (the
/// positive-form bound). Offset lists of identities mix signs, so the
/// non-strict mode checks only spacing.
pub fn is_zeckendorf_form(indices: &[i64], strict: bool) -> bool {
    if strict && indices.first().is_some_and(|&k| k < 2) {
        return false;
    }
    indices.windows(2).all(|w| w[1] >= w[0] + 2)
}

/// Fibonacci numbers F_2, F_3, ... as (index, value), ascending, covering
/// every value ≤ `limit`.
fn fib_ladder(limit: &SeqValue) -> Vec<(i64, SeqValue)> {
    let mut ladder = Vec::new();
    let (mut prev, mut cur) = (SeqValue::from(1), SeqValue::from(1)); // F_1, F_2
    let mut k = 2i64;
    while &cur <= limit {
        ladder.push((k, cur.clone()));
        let next = &prev + &cur;
        prev = cur;
        cur = next;
        k += 1;
    }
    ladder
}

/// Greedy positive-form encoder: repeatedly takes the largest F_k ≤
/// remainder. The greedy choice always leaves a remainder below F_{k-1},
/// which yields the gap rule for free and makes the result the unique
/// valid representation.
pub fn zeck_encode(n: &SeqValue) -> Result<Representation> {
    if !n.is_positive() {
        return Err(Error::NonPositiveInput(n.to_string()));
    }
    let ladder = fib_ladder(n);
    let mut rem = n.clone();
    let mut indices = Vec::new();
    for (k, f) in ladder.iter().rev() {
        if rem.is_zero() {
            break;
        }
        if f <= &rem {
            indices.push(*k);
            rem -= f;
        }
    }
    debug_assert!(rem.is_zero());
    indices.reverse();
    Ok(Representation {
        kind: ReprKind::Zeckendorf,
        indices,
    })
}

/// Sums the indexed Fibonacci values after revalidating the representation.
pub fn decode(rep: &Representation) -> Result<SeqValue> {
    rep.validate()?;
    let mut sum = SeqValue::zero();
    for &k in &rep.indices {
        // Index gaps keep |k| modest; per-index evaluation is cheap.
        sum += recurrence::eval(&SequenceFamily::Fibonacci, k)?.to_integer();
    }
    Ok(sum)
}

/// Representable range with indices drawn from {-m, ..., -1}: positive mass
/// comes from odd |k| (F_{-1}=1, F_{-3}=2, F_{-5}=5, ...), negative mass
/// from even |k|. Telescoping those alternating sums gives closed bounds.
fn window_range(fib: &[SeqValue], m: usize) -> (SeqValue, SeqValue) {
    let one = SeqValue::one();
    let (lo, hi) = if m % 2 == 0 {
        (-(&fib[m + 1] - &one), fib[m].clone())
    } else {
        (-(&fib[m] - &one), fib[m + 1].clone())
    };
    (lo, hi)
}

/// Negative-index encoder, total on the integers. Works outside-in: the
/// smallest window of indices {-m, ..., -1} whose representable range
/// contains N must use F_{-m} (uniqueness forces it), so take it and recurse
/// on the remainder with indices limited to {-(m-2), ..., -1}.
pub fn nega_encode(n: &SeqValue) -> Representation {
    let mut indices = Vec::new();
    let mut rem = n.clone();

    // fib[i] = F_i, grown on demand.
    let mut fib: Vec<SeqValue> = vec![SeqValue::zero(), SeqValue::from(1)];
    let grow_to = |fib: &mut Vec<SeqValue>, i: usize| {
        while fib.len() <= i {
            let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
            fib.push(next);
        }
    };

    while !rem.is_zero() {
        let mut m = 1usize;
        loop {
            grow_to(&mut fib, m + 1);
            let (lo, hi) = window_range(&fib, m);
            if lo <= rem && rem <= hi {
                break;
            }
            m += 1;
        }
        // F_{-m} = (-1)^{m+1} F_m.
        let value = if m % 2 == 1 {
            fib[m].clone()
        } else {
            -fib[m].clone()
        };
        rem -= value;
        indices.push(-(m as i64));
    }

    // Each chosen |index| shrinks by at least 2, so pushes arrive in
    // ascending index order already.
    debug_assert!(is_zeckendorf_form(&indices, false));
    Representation {
        kind: ReprKind::Negafibonacci,
        indices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(n: i64) -> Vec<i64> {
        zeck_encode(&n.into()).unwrap().indices().to_vec()
    }

    fn nenc(n: i64) -> Vec<i64> {
        nega_encode(&n.into()).indices().to_vec()
    }

    #[test]
    fn encode_worked_examples() {
        assert_eq!(enc(79), vec![4, 8, 10]); // 3 + 21 + 55
        assert_eq!(enc(65), vec![3, 6, 10]); // 2 + 8 + 55
        assert_eq!(enc(105), vec![4, 7, 11]); // 3 + 13 + 89
        assert_eq!(enc(1), vec![2]);
        assert_eq!(enc(2), vec![3]);
        assert_eq!(enc(100), vec![4, 6, 11]); // 3 + 8 + 89
    }

    #[test]
    fn encode_rejects_non_positive() {
        assert!(matches!(
            zeck_encode(&0.into()),
            Err(Error::NonPositiveInput(_))
        ));
        assert!(zeck_encode(&(-5).into()).is_err());
    }

    #[test]
    fn decode_worked_examples() {
        let rep = Representation::new(ReprKind::Zeckendorf, vec![4, 8, 10]).unwrap();
        assert_eq!(decode(&rep).unwrap(), SeqValue::from(79));
        let one = Representation::new(ReprKind::Zeckendorf, vec![2]).unwrap();
        assert_eq!(decode(&one).unwrap(), SeqValue::from(1));
        let neg = Representation::new(ReprKind::Negafibonacci, vec![-10, -7, -5]).unwrap();
        assert_eq!(decode(&neg).unwrap(), SeqValue::from(-37)); // -55 + 13 + 5
    }

    #[test]
    fn construction_rejects_bad_indices() {
        assert!(Representation::new(ReprKind::Zeckendorf, vec![3, 4]).is_err());
        assert!(Representation::new(ReprKind::Zeckendorf, vec![1, 5]).is_err());
        assert!(Representation::new(ReprKind::Zeckendorf, vec![4, 4]).is_err());
        assert!(Representation::new(ReprKind::Negafibonacci, vec![-3, 0]).is_err());
        assert!(Representation::new(ReprKind::Negafibonacci, vec![-3, -2]).is_err());
        // Order of the input list does not matter; value gaps do.
        assert!(Representation::new(ReprKind::Zeckendorf, vec![10, 4, 8]).is_ok());
    }

    #[test]
    fn nega_worked_examples() {
        assert_eq!(nenc(-37), vec![-10, -7, -5]);
        assert_eq!(nenc(0), Vec::<i64>::new());
        assert_eq!(nenc(1), vec![-1]);
        assert_eq!(nenc(-1), vec![-2]);
        assert_eq!(nenc(4), vec![-5, -2]); // 5 - 1
        assert_eq!(nenc(-12), vec![-6, -4, -2]); // -8 - 3 - 1
    }

    #[test]
    fn nega_round_trip_small() {
        for n in -120..=120i64 {
            let rep = nega_encode(&n.into());
            assert_eq!(decode(&rep).unwrap(), SeqValue::from(n), "n = {n}");
        }
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=1000i64 {
            let rep = zeck_encode(&n.into()).unwrap();
            assert_eq!(decode(&rep).unwrap(), SeqValue::from(n), "n = {n}");
        }
    }

    #[test]
    fn greedy_dominance() {
        // Largest chosen index k has F_k <= n < F_{k+1}.
        for n in 1..=500i64 {
            let rep = zeck_encode(&n.into()).unwrap();
            let top = *rep.indices().last().unwrap();
            let f_top = recurrence::eval(&SequenceFamily::Fibonacci, top)
                .unwrap()
                .to_integer();
            let f_next = recurrence::eval(&SequenceFamily::Fibonacci, top + 1)
                .unwrap()
                .to_integer();
            assert!(f_top <= SeqValue::from(n) && SeqValue::from(n) < f_next, "n = {n}");
        }
    }

    #[test]
    fn form_predicate() {
        assert!(is_zeckendorf_form(&[4, 8, 10], false));
        assert!(is_zeckendorf_form(&[4, 8, 10], true));
        assert!(!is_zeckendorf_form(&[3, 4], false));
        assert!(is_zeckendorf_form(&[-4, -1, 3], false));
        assert!(!is_zeckendorf_form(&[-4, -1, 3], true));
        assert!(!is_zeckendorf_form(&[1, 5], true));
        assert!(is_zeckendorf_form(&[], true));
        assert!(!is_zeckendorf_form(&[8, 4], false)); // not ascending
    }

    #[test]
    fn display_and_parse() {
        let rep = zeck_encode(&79.into()).unwrap();
        assert_eq!(rep.to_string(), "F[10]+F[8]+F[4]");
        assert_eq!("F[10]+F[8]+F[4]".parse::<Representation>().unwrap(), rep);
        assert_eq!(
            " F[10] + F[8] + F[4] ".parse::<Representation>().unwrap(),
            rep
        );

        let neg = nega_encode(&(-37).into());
        assert_eq!(neg.to_string(), "F[-5]+F[-7]+F[-10]");
        assert_eq!("F[-5]+F[-7]+F[-10]".parse::<Representation>().unwrap(), neg);

        assert_eq!(nega_encode(&0.into()).to_string(), "0");
        assert_eq!(
            "0".parse::<Representation>().unwrap(),
            nega_encode(&0.into())
        );

        assert!("F[3]+F[4]".parse::<Representation>().is_err());
        assert!("F[3]+F[-2]".parse::<Representation>().is_err());
        assert!("G[3]".parse::<Representation>().is_err());
    }

    #[test]
    fn json_shape_is_fixed() {
        let rep = zeck_encode(&79.into()).unwrap();
        assert_eq!(
            serde_json::to_string(&rep).unwrap(),
            r#"{"kind":"zeckendorf","indices":[4,8,10]}"#
        );
        let back: Representation =
            serde_json::from_str(r#"{"kind":"zeckendorf","indices":[4,8,10]}"#).unwrap();
        assert_eq!(back, rep);
        // Deserialization enforces the invariants too.
        assert!(
            serde_json::from_str::<Representation>(r#"{"kind":"zeckendorf","indices":[3,4]}"#)
                .is_err()
        );
        let neg = nega_encode(&(-37).into());
        assert_eq!(
            serde_json::to_string(&neg).unwrap(),
            r#"{"kind":"negafibonacci","indices":[-10,-7,-5]}"#
        );
    }

    #[test]
    fn big_inputs_round_trip() {
        let big: SeqValue = SeqValue::from(10).pow(40) + 12345;
        let rep = zeck_encode(&big).unwrap();
        assert_eq!(decode(&rep).unwrap(), big);
        let neg_big = -big.clone();
        assert_eq!(decode(&nega_encode(&neg_big)).unwrap(), neg_big);
    }
}
