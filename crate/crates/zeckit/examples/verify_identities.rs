//! Checking identities c·S(n) = Σ S(n+e_i) two ways: a numeric sweep that
//! hunts witnesses, and a symbolic reduction that proves the whole range.
//!
//!     cargo run --example verify_identities

use zeckit::identity::{reduce_to_linear_form, verify_numeric, verify_symbolic, IdentityPattern};
use zeckit::SequenceFamily;

fn main() -> zeckit::Result<()> {
    // 5F(n) = F(n+3) + F(n-1) + F(n-4), valid from n = 4 on.
    let five_f = IdentityPattern::new(SequenceFamily::Fibonacci, 5, vec![3, -1, -4])?;
    println!("{five_f}");
    println!("  symbolic: {}", verify_symbolic(&five_f)?.holds);
    println!("  numeric [4, 104]: {}", verify_numeric(&five_f, 4, 104)?.holds);

    // Every shifted term reduces to α·S(n) + β·S(n-1); the identity is the
    // statement Σα = c, Σβ = 0. For Pell and e = ±3:
    for e in [3i64, -3] {
        let form = reduce_to_linear_form(&SequenceFamily::Pell, e)?;
        println!("P(n{e:+}) = {}·P(n) + {}·P(n-1)", form.alpha, form.beta);
    }

    // A broken claim: as printed, 4P(n) = P(n+1) + P(n-1) + P(n-2) fails.
    // The numeric sweep pins the first counterexample.
    let four_p = IdentityPattern::new(SequenceFamily::Pell, 4, vec![1, -1, -2])?;
    let verdict = verify_numeric(&four_p, 2, 52)?;
    println!("\n{four_p}");
    let w = verdict.witness.expect("refuted");
    println!("  fails at n = {}: {} != {}", w.n, w.lhs, w.rhs);
    // ... and the same offsets with multiplier 3 hold.
    let three_p = IdentityPattern::new(SequenceFamily::Pell, 3, vec![1, -1, -2])?;
    println!("{three_p}\n  symbolic: {}", verify_symbolic(&three_p)?.holds);

    // The symbolic route covers any second-order family, Lucas included.
    let lucas = IdentityPattern::new(SequenceFamily::Lucas, 7, vec![4, -4])?;
    println!("{lucas}\n  symbolic: {}", verify_symbolic(&lucas)?.holds);

    Ok(())
}
