//! Identities of the shape c·S_n = Σ_i S_{n+e_i} over a second-order
//! sequence S: representation, numeric spot-checking, symbolic proof,
//! generation of the two-term family c·S_n = S_{n+r} + S_{n-r}, and
//! discovery of offset sets from exact golden/silver-ratio power sums.
//!
//! The symbolic route rewrites every shifted term through the fundamental
//! sequence U (same recurrence, U_0 = 0, U_1 = 1):
//!
//!   S(n+e) = U(e+1)·S(n) + t·U(e)·S(n-1)
//!
//! valid for every integer n once the sequence is extended through negative
//! indices. Summing the (α, β) pairs over all offsets reduces the identity
//! to Σα = c and Σβ = 0, which is a proof for the whole claimed range, not a
//! sample.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{PowerFamily, QuadInt};
use crate::recurrence::{self, RatValue, RecurrenceSpec, SeqValue, SequenceFamily};

/// Search guard for [`discover`]: offsets are drawn from [-window, window].
pub const MAX_WINDOW: i64 = 16;

/// A claimed identity c·S_n = Σ_i S_{n+e_i} for n ≥ min_n.
///
/// Offsets are distinct and stored in descending order. By default min_n is
/// the smallest n keeping every touched index nonnegative; a lower value may
/// be set explicitly, since the sequences extend below zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IdentityPattern {
    family: SequenceFamily,
    #[serde(with = "crate::json_num::bigint")]
    multiplier: SeqValue,
    offsets: Vec<i64>,
    min_n: i64,
}

impl IdentityPattern {
    pub fn new(
        family: SequenceFamily,
        multiplier: impl Into<SeqValue>,
        offsets: impl Into<Vec<i64>>,
    ) -> Result<Self> {
        let multiplier = multiplier.into();
        if !multiplier.is_positive() {
            return Err(Error::NonPositiveInput(multiplier.to_string()));
        }
        let mut offsets = offsets.into();
        if offsets.is_empty() {
            return Err(Error::InvalidArgument(
                "an identity needs at least one offset",
            ));
        }
        offsets.sort_unstable_by(|a, b| b.cmp(a));
        if offsets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("offsets must be distinct"));
        }
        let min_n = default_min_n(&offsets);
        Ok(Self {
            family,
            multiplier,
            offsets,
            min_n,
        })
    }

    /// Overrides the claimed starting index.
    pub fn with_min_n(mut self, min_n: i64) -> Self {
        self.min_n = min_n;
        self
    }

    pub fn family(&self) -> &SequenceFamily {
        &self.family
    }

    pub fn multiplier(&self) -> &SeqValue {
        &self.multiplier
    }

    /// Descending.
    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn min_n(&self) -> i64 {
        self.min_n
    }
}

/// Smallest n for which every index n + e_i stays nonnegative.
fn default_min_n(offsets_desc: &[i64]) -> i64 {
    offsets_desc.last().map_or(0, |&e| (-e).max(0))
}

impl<'de> Deserialize<'de> for IdentityPattern {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            family: SequenceFamily,
            #[serde(with = "crate::json_num::bigint")]
            multiplier: SeqValue,
            offsets: Vec<i64>,
            min_n: Option<i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let pattern = IdentityPattern::new(raw.family, raw.multiplier, raw.offsets)
            .map_err(serde::de::Error::custom)?;
        Ok(match raw.min_n {
            Some(m) => pattern.with_min_n(m),
            None => pattern,
        })
    }
}

impl fmt::Display for IdentityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.family.symbol();
        write!(f, "{}·{sym}(n) = ", self.multiplier)?;
        for (i, &e) in self.offsets.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e.cmp(&0) {
                Ordering::Greater => write!(f, "{sym}(n+{e})")?,
                Ordering::Equal => write!(f, "{sym}(n)")?,
                Ordering::Less => write!(f, "{sym}(n-{})", -e)?,
            }
        }
        write!(f, " (n ≥ {})", self.min_n)
    }
}

/// Coefficients of the normal form S(n+e) = alpha·S(n) + beta·S(n-1).
/// Exact rationals; integers whenever |t| = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub alpha: RatValue,
    pub beta: RatValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    /// Linear-form reduction; a proof for the whole range.
    Symbolic,
    /// Exact evaluation at each index of a finite range.
    Numeric,
}

/// A failing index with the two side values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: i64,
    #[serde(with = "rat_str")]
    pub lhs: RatValue,
    #[serde(with = "rat_str")]
    pub rhs: RatValue,
}

/// Rationals serialize as exact strings ("8", "8/3"): JSON numbers cannot
/// carry a denominator.
mod rat_str {
    use serde::Serializer;

    use crate::recurrence::RatValue;

    pub fn serialize<S: Serializer>(v: &RatValue, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub mode: VerifyMode,
    /// Present exactly when a numeric check failed.
    pub witness: Option<Witness>,
}

/// Checks c·S(n) = Σ S(n+e) by exact evaluation for every n in
/// [n_lo, n_hi], recording the first failure.
pub fn verify_numeric(p: &IdentityPattern, n_lo: i64, n_hi: i64) -> Result<Verdict> {
    if n_lo < p.min_n {
        return Err(Error::RangeBelowMinN {
            lo: n_lo,
            min_n: p.min_n,
        });
    }
    if n_hi < n_lo {
        return Err(Error::InvalidArgument(
            "range end must not precede range start",
        ));
    }
    let c = RatValue::from_integer(p.multiplier.clone());
    for n in n_lo..=n_hi {
        let lhs = &c * recurrence::eval(&p.family, n)?;
        let mut rhs = RatValue::zero();
        for &e in &p.offsets {
            rhs += recurrence::eval(&p.family, n + e)?;
        }
        if lhs != rhs {
            return Ok(Verdict {
                holds: false,
                mode: VerifyMode::Numeric,
                witness: Some(Witness { n, lhs, rhs }),
            });
        }
    }
    Ok(Verdict {
        holds: true,
        mode: VerifyMode::Numeric,
        witness: None,
    })
}

/// The family's recurrence with initial values 0, 1.
fn fundamental(spec: &RecurrenceSpec) -> SequenceFamily {
    SequenceFamily::Custom(
        RecurrenceSpec::new(
            spec.coefficients().to_vec(),
            vec![SeqValue::zero(), SeqValue::one()],
        )
        .expect("two coefficients, two initials"),
    )
}

/// Normal form of a single shifted term: S(n+e) = U(e+1)·S(n) + t·U(e)·S(n-1),
/// with U the fundamental (0, 1) sequence of the same recurrence. Negative e
/// goes through the exact rational negative-index extension.
pub fn reduce_to_linear_form(family: &SequenceFamily, e: i64) -> Result<LinearForm> {
    let spec = family.spec();
    let (_, t) = spec.second_order_coefficients()?;
    let t = RatValue::from_integer(t.clone());
    recurrence::check_cap(e, recurrence::index_cap())?;
    let u = fundamental(&spec);
    let alpha = recurrence::eval(&u, e + 1)?;
    let beta = t * recurrence::eval(&u, e)?;
    Ok(LinearForm { alpha, beta })
}

/// Sums the linear forms of all offsets: the identity holds for every
/// n ≥ min_n iff Σα = c and Σβ = 0.
pub fn verify_symbolic(p: &IdentityPattern) -> Result<Verdict> {
    let mut alpha = RatValue::zero();
    let mut beta = RatValue::zero();
    for &e in &p.offsets {
        let form = reduce_to_linear_form(&p.family, e)?;
        alpha += form.alpha;
        beta += form.beta;
    }
    let holds = alpha == RatValue::from_integer(p.multiplier.clone()) && beta.is_zero();
    Ok(Verdict {
        holds,
        mode: VerifyMode::Symbolic,
        witness: None,
    })
}

/// Generates the two-term identity (U(r+1) + U(r-1))·S_n = S_{n+r} + S_{n-r}
/// for a second-order family with t = 1 and even r ≥ 2. The result always
/// passes [`verify_symbolic`]; for odd r the analogous pattern provably
/// fails (Σβ = 2·U(r) ≠ 0), which is why odd r is rejected here.
pub fn family_generate(family: &SequenceFamily, r: i64) -> Result<IdentityPattern> {
    let spec = family.spec();
    let (_, t) = spec.second_order_coefficients()?;
    if !t.is_one() {
        return Err(Error::TNotOne { t: t.to_string() });
    }
    if r < 2 || r % 2 != 0 {
        return Err(Error::InvalidR { r });
    }
    let u = fundamental(&spec);
    let c = (recurrence::eval(&u, r + 1)? + recurrence::eval(&u, r - 1)?).to_integer();
    IdentityPattern::new(family.clone(), c, vec![r, -r])
}

/// Finds every offset set E ⊆ [-window, window] with pairwise gaps ≥ min_gap
/// whose golden- or silver-ratio powers sum exactly to c:
///
///   Σ_{e∈E} ω^e = c  in the ring  ⟺  c·S_n = Σ_{e∈E} S_{n+e}.
///
/// The default gap is 2 for Fibonacci (the nonadjacency of Zeckendorf
/// indices, making the result unique) and 1 for Pell, whose known offset
/// sets contain adjacent exponents.
pub fn discover(family: PowerFamily, c: &SeqValue, window: i64) -> Result<Vec<IdentityPattern>> {
    let gap = match family {
        PowerFamily::Fibonacci => 2,
        PowerFamily::Pell => 1,
    };
    discover_with_gap(family, c, window, gap)
}

/// [`discover`] with an explicit minimum gap between chosen exponents.
pub fn discover_with_gap(
    family: PowerFamily,
    c: &SeqValue,
    window: i64,
    min_gap: i64,
) -> Result<Vec<IdentityPattern>> {
    if window > MAX_WINDOW {
        return Err(Error::WindowTooLarge {
            window,
            max: MAX_WINDOW,
        });
    }
    if window < 1 || min_gap < 1 {
        return Err(Error::InvalidArgument(
            "window and gap must both be at least 1",
        ));
    }
    if !c.is_positive() {
        return Err(Error::NonPositiveInput(c.to_string()));
    }

    let ring = family.ring();
    let omega = family.omega();
    let idx = |e: i64| (e + window) as usize;
    let powers: Vec<QuadInt> = (-window..=window)
        .map(|e| omega.pow(e).expect("ω is a unit"))
        .collect();
    // densest[idx(e)]: largest sum still reachable from exponent e downward,
    // packing every min_gap steps. Monotone in e, which lets the search cut
    // whole exponent ranges at once.
    let mut densest: Vec<QuadInt> = vec![QuadInt::zero(ring); powers.len()];
    for e in -window..=window {
        let mut s = powers[idx(e)].clone();
        if e - min_gap >= -window {
            s += &densest[idx(e - min_gap)];
        }
        densest[idx(e)] = s;
    }

    let target = QuadInt::from_int(ring, c.clone());
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut chosen: Vec<i64> = Vec::new();
    search(
        &SearchCtx {
            window,
            min_gap,
            powers: &powers,
            densest: &densest,
            target: &target,
        },
        window,
        &QuadInt::zero(ring),
        &mut chosen,
        &mut found,
    );

    let mut out = Vec::with_capacity(found.len());
    for offsets in found {
        out.push(IdentityPattern::new(family.sequence(), c.clone(), offsets)?);
    }
    out.sort_by(|a, b| a.offsets.cmp(&b.offsets));
    Ok(out)
}

struct SearchCtx<'a> {
    window: i64,
    min_gap: i64,
    powers: &'a [QuadInt],
    densest: &'a [QuadInt],
    target: &'a QuadInt,
}

/// Depth-first subset search over descending exponents. Every ω^e is a
/// positive real, so a partial sum exceeding the target is dead, and once
/// even the densest remaining packing falls short the whole branch (and all
/// lower starting exponents) can be dropped. Comparisons are exact.
fn search(
    ctx: &SearchCtx<'_>,
    start: i64,
    partial: &QuadInt,
    chosen: &mut Vec<i64>,
    found: &mut Vec<Vec<i64>>,
) {
    if partial == ctx.target {
        found.push(chosen.clone());
        return;
    }
    if partial.real_cmp(ctx.target) == Ordering::Greater {
        return;
    }
    let idx = |e: i64| (e + ctx.window) as usize;
    for e in (-ctx.window..=start).rev() {
        let reach = partial + &ctx.densest[idx(e)];
        if reach.real_cmp(ctx.target) == Ordering::Less {
            break;
        }
        chosen.push(e);
        let next = partial + &ctx.powers[idx(e)];
        search(ctx, e - ctx.min_gap, &next, chosen, found);
        chosen.pop();
    }
}

/// The two Diophantine characterizations tied to these sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiophantineKind {
    /// x² - 5y² = 4·(-1)ⁿ at (x, y) = (L_n, F_n).
    FibLucas,
    /// x² - 2y² = (-1)ⁿ at (x, y) = (Q_n/2, P_n).
    PellPellLucas,
}

impl fmt::Display for DiophantineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FibLucas => write!(f, "fib-lucas"),
            Self::PellPellLucas => write!(f, "pell-pell-lucas"),
        }
    }
}

/// Evaluates the chosen characterization at index n ≥ 0, exactly.
pub fn diophantine_check(kind: DiophantineKind, n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::InvalidArgument(
            "the Diophantine characterizations are stated for n >= 0",
        ));
    }
    let sign = SeqValue::from(if n % 2 == 0 { 1 } else { -1 });
    match kind {
        DiophantineKind::FibLucas => {
            let l = recurrence::eval(&SequenceFamily::Lucas, n)?.to_integer();
            let f = recurrence::eval(&SequenceFamily::Fibonacci, n)?.to_integer();
            Ok(&l * &l - SeqValue::from(5) * &f * &f == SeqValue::from(4) * sign)
        }
        DiophantineKind::PellPellLucas => {
            let q = recurrence::eval(&SequenceFamily::PellLucas, n)?.to_integer();
            let p = recurrence::eval(&SequenceFamily::Pell, n)?.to_integer();
            if !(&q % 2u8).is_zero() {
                return Err(Error::OddPellLucasValue {
                    n,
                    value: q.to_string(),
                });
            }
            let x = q / 2;
            Ok(&x * &x - SeqValue::from(2) * &p * &p == sign)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib(c: i64, offsets: &[i64]) -> IdentityPattern {
        IdentityPattern::new(SequenceFamily::Fibonacci, c, offsets).unwrap()
    }

    fn pell(c: i64, offsets: &[i64]) -> IdentityPattern {
        IdentityPattern::new(SequenceFamily::Pell, c, offsets).unwrap()
    }

    fn rat(x: i64) -> RatValue {
        RatValue::from_integer(SeqValue::from(x))
    }

    #[test]
    fn pattern_normalizes_offsets_and_min_n() {
        let p = fib(5, &[-4, 3, -1]);
        assert_eq!(p.offsets(), &[3, -1, -4]);
        assert_eq!(p.min_n(), 4);
        assert_eq!(fib(4, &[2, 0, -2]).min_n(), 2);
        assert_eq!(fib(3, &[2, 4]).min_n(), 0);
        assert_eq!(fib(3, &[2, 4]).with_min_n(1).min_n(), 1);
    }

    #[test]
    fn pattern_construction_errors() {
        assert!(IdentityPattern::new(SequenceFamily::Fibonacci, 0, vec![1]).is_err());
        assert!(IdentityPattern::new(SequenceFamily::Fibonacci, -3, vec![1]).is_err());
        assert!(IdentityPattern::new(SequenceFamily::Fibonacci, 3, vec![2, 2]).is_err());
        assert!(IdentityPattern::new(SequenceFamily::Fibonacci, 3, Vec::<i64>::new()).is_err());
    }

    #[test]
    fn pattern_json_shape_is_fixed() {
        let p = pell(20, &[3, 2, -3, -4]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"family":"pell","multiplier":20,"offsets":[3,2,-3,-4],"min_n":4}"#
        );
        let back: IdentityPattern =
            serde_json::from_str(r#"{"family":"pell","multiplier":20,"offsets":[3,2,-3,-4],"min_n":4}"#)
                .unwrap();
        assert_eq!(back, p);
        // min_n may be omitted; the default rule fills it in.
        let defaulted: IdentityPattern =
            serde_json::from_str(r#"{"family":"pell","multiplier":20,"offsets":[3,2,-3,-4]}"#)
                .unwrap();
        assert_eq!(defaulted, p);
    }

    #[test]
    fn numeric_verification() {
        let four_f = fib(4, &[2, 0, -2]);
        assert!(verify_numeric(&four_f, 2, 30).unwrap().holds);

        let five_f = fib(5, &[3, -1, -4]);
        let v = verify_numeric(&five_f, 10, 10).unwrap();
        assert!(v.holds); // 5·55 = 233 + 34 + 8

        // As printed, 4·P_n = P_{n+1} + P_{n-1} + P_{n-2} is false.
        let four_p = pell(4, &[1, -1, -2]);
        let v = verify_numeric(&four_p, 2, 10).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.n, w.lhs, w.rhs), (2, rat(8), rat(6)));
    }

    #[test]
    fn numeric_range_guards() {
        let p = fib(5, &[3, -1, -4]);
        assert!(matches!(
            verify_numeric(&p, 3, 10),
            Err(Error::RangeBelowMinN { lo: 3, min_n: 4 })
        ));
        assert!(verify_numeric(&p, 5, 4).is_err());
        // Lowering min_n explicitly lets the range extend below zero.
        let wide = fib(5, &[3, -1, -4]).with_min_n(-10);
        assert!(verify_numeric(&wide, -10, 10).unwrap().holds);
    }

    #[test]
    fn linear_form_examples() {
        let f = reduce_to_linear_form(&SequenceFamily::Pell, 3).unwrap();
        assert_eq!((f.alpha, f.beta), (rat(12), rat(5)));
        let f = reduce_to_linear_form(&SequenceFamily::Pell, -3).unwrap();
        assert_eq!((f.alpha, f.beta), (rat(-2), rat(5)));
        let f = reduce_to_linear_form(&SequenceFamily::Lucas, 0).unwrap();
        assert_eq!((f.alpha, f.beta), (rat(1), rat(0)));

        let third = SequenceFamily::Custom(
            RecurrenceSpec::from_ints(&[1, 1, 1], &[1, 1, 2]).unwrap(),
        );
        assert!(matches!(
            reduce_to_linear_form(&third, 2),
            Err(Error::NotSecondOrder { order: 3 })
        ));
    }

    #[test]
    fn linear_form_is_sound() {
        for family in [SequenceFamily::Fibonacci, SequenceFamily::Lucas, SequenceFamily::Pell] {
            for e in -10..=10i64 {
                let form = reduce_to_linear_form(&family, e).unwrap();
                for n in 1.max(1 - e)..=30 {
                    let direct = recurrence::eval(&family, n + e).unwrap();
                    let s_n = recurrence::eval(&family, n).unwrap();
                    let s_prev = recurrence::eval(&family, n - 1).unwrap();
                    assert_eq!(
                        direct,
                        &form.alpha * s_n + &form.beta * s_prev,
                        "family {family}, e = {e}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn symbolic_verification() {
        // Σα = 12 + 5 - 2 + 5 = 20, Σβ = 5 + 2 + 5 - 12 = 0.
        assert!(verify_symbolic(&pell(20, &[3, 2, -3, -4])).unwrap().holds);
        assert!(verify_symbolic(&fib(3, &[2, -2])).unwrap().holds);
        assert!(verify_symbolic(&fib(57, &[8, 4, 2, -2, -4, -8])).unwrap().holds);
        assert!(!verify_symbolic(&pell(4, &[1, -1, -2])).unwrap().holds);
        assert!(verify_symbolic(&pell(3, &[1, -1, -2])).unwrap().holds);
    }

    #[test]
    fn generated_family_matches_known_multipliers() {
        let p = family_generate(&SequenceFamily::Fibonacci, 4).unwrap();
        assert_eq!(p.multiplier(), &SeqValue::from(7));
        assert_eq!(p.offsets(), &[4, -4]);
        assert_eq!(p.min_n(), 4);

        let p = family_generate(&SequenceFamily::Pell, 6).unwrap();
        assert_eq!(p.multiplier(), &SeqValue::from(198));

        let p = family_generate(&SequenceFamily::Fibonacci, 2).unwrap();
        assert_eq!(p.multiplier(), &SeqValue::from(3));
        assert!(verify_symbolic(&p).unwrap().holds);

        // Any t = 1 family qualifies, not just the fundamental ones.
        let p = family_generate(&SequenceFamily::Lucas, 2).unwrap();
        assert_eq!(p.multiplier(), &SeqValue::from(3));
        assert!(verify_symbolic(&p).unwrap().holds);
    }

    #[test]
    fn generator_guards() {
        assert!(matches!(
            family_generate(&SequenceFamily::Fibonacci, 3),
            Err(Error::InvalidR { r: 3 })
        ));
        assert!(family_generate(&SequenceFamily::Fibonacci, 0).is_err());
        assert!(family_generate(&SequenceFamily::Fibonacci, -2).is_err());
        let t2 = SequenceFamily::Custom(RecurrenceSpec::from_ints(&[1, 2], &[0, 1]).unwrap());
        assert!(matches!(
            family_generate(&t2, 2),
            Err(Error::TNotOne { .. })
        ));
    }

    #[test]
    fn odd_r_patterns_fail_symbolically() {
        for family in [SequenceFamily::Fibonacci, SequenceFamily::Pell] {
            let u = fundamental(&family.spec());
            for r in (1..=19i64).step_by(2) {
                let c = (recurrence::eval(&u, r + 1).unwrap()
                    + recurrence::eval(&u, r - 1).unwrap())
                .to_integer();
                let p = IdentityPattern::new(family.clone(), c, vec![r, -r]).unwrap();
                assert!(!verify_symbolic(&p).unwrap().holds, "family {family}, r = {r}");
            }
        }
    }

    #[test]
    fn discovery_examples() {
        let hits = discover(PowerFamily::Fibonacci, &5.into(), 8).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].offsets(), &[3, -1, -4]);

        let hits = discover(PowerFamily::Fibonacci, &1.into(), 8).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].offsets(), &[0]);

        let hits = discover(PowerFamily::Fibonacci, &6.into(), 8).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].offsets(), &[3, 1, -4]);

        let hits = discover(PowerFamily::Pell, &20.into(), 8).unwrap();
        assert!(hits.iter().any(|p| p.offsets() == [3, 2, -3, -4]));
    }

    #[test]
    fn discovered_patterns_verify() {
        for c in 1..=40i64 {
            for hit in discover(PowerFamily::Fibonacci, &c.into(), 10).unwrap() {
                assert!(verify_symbolic(&hit).unwrap().holds, "c = {c}");
            }
            for hit in discover(PowerFamily::Pell, &c.into(), 6).unwrap() {
                assert!(verify_symbolic(&hit).unwrap().holds, "c = {c}");
            }
        }
    }

    #[test]
    fn discovery_guards() {
        assert!(matches!(
            discover(PowerFamily::Fibonacci, &5.into(), 17),
            Err(Error::WindowTooLarge { window: 17, max: 16 })
        ));
        assert!(discover(PowerFamily::Fibonacci, &0.into(), 8).is_err());
        assert!(discover_with_gap(PowerFamily::Fibonacci, &5.into(), 8, 0).is_err());
    }

    #[test]
    fn diophantine_examples() {
        assert!(diophantine_check(DiophantineKind::FibLucas, 0).unwrap()); // 4 - 0 = 4
        assert!(diophantine_check(DiophantineKind::FibLucas, 3).unwrap()); // 16 - 20 = -4
        assert!(diophantine_check(DiophantineKind::PellPellLucas, 2).unwrap()); // 9 - 8 = 1
        for n in 0..=20 {
            assert!(diophantine_check(DiophantineKind::FibLucas, n).unwrap());
            assert!(diophantine_check(DiophantineKind::PellPellLucas, n).unwrap());
        }
        assert!(diophantine_check(DiophantineKind::FibLucas, -1).is_err());
    }

    #[test]
    fn pattern_display() {
        assert_eq!(
            fib(5, &[3, -1, -4]).to_string(),
            "5·F(n) = F(n+3) + F(n-1) + F(n-4) (n ≥ 4)"
        );
        assert_eq!(
            fib(4, &[2, 0, -2]).to_string(),
            "4·F(n) = F(n+2) + F(n) + F(n-2) (n ≥ 2)"
        );
    }
}
