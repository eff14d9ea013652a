//! Exact arithmetic in Z[φ] and Z[√2]: unit powers, inverses, conjugates,
//! and the Binet closed forms checked without a single float.
//!
//!     cargo run --example golden_powers

use zeckit::quad::{binet_check, QuadInt, RingTag};
use zeckit::recurrence::{self, SequenceFamily};

fn main() -> zeckit::Result<()> {
    let phi = QuadInt::phi();

    // φ^n = F(n-1) + F(n)·φ, for negative n too.
    println!("n     φ^n            coords");
    for n in [-6i64, -2, -1, 0, 1, 2, 6, 10] {
        let p = phi.pow(n)?;
        println!("{n:>3}   {:<14} ({}, {})", p.to_string(), p.a, p.b);
        let f_prev = recurrence::eval(&SequenceFamily::Fibonacci, n - 1)?.to_integer();
        let f_n = recurrence::eval(&SequenceFamily::Fibonacci, n)?.to_integer();
        assert_eq!((p.a, p.b), (f_prev, f_n));
    }

    // Units have norm ±1 and an exact inverse; φ·φ^-1 = 1.
    let inv = phi.inverse().expect("φ is a unit");
    assert_eq!(&phi * &inv, QuadInt::one(RingTag::Golden));
    println!("\nφ^-1 = {inv}, norm(φ) = {}", phi.norm());

    // Z[√2]: the silver ratio 1+√2 plays the same role for Pell numbers.
    let sigma = QuadInt::silver_ratio();
    println!("(1+√2)^5 = {}", sigma.pow(5)?);
    println!("(1+√2)^-5 = {}", sigma.pow(-5)?);
    // 3+2√2 is a unit (norm 1); 1+2√2 is not (norm -7), so no integer power
    // of it can be inverted.
    let not_unit = QuadInt::new(RingTag::Silver, 1, 2);
    println!("norm(1+2√2) = {}, invertible: {}", not_unit.norm(), not_unit.inverse().is_some());

    // Binet both ways: φ^n - φ̄^n = √5·F(n) and the Pell analogue, exact.
    for n in -30..=30 {
        assert!(binet_check(n)?);
    }
    println!("\nBinet forms agree on [-30, 30]");

    // Exact ordering without floats: sign analysis plus cross-squaring.
    let a = QuadInt::new(RingTag::Golden, -4, 3); // -4+3φ ≈ 0.854
    let b = QuadInt::new(RingTag::Golden, 2, -1); // 2-φ ≈ 0.382
    println!("-4+3φ > 2-φ: {:?}", a.real_cmp(&b));

    Ok(())
}
