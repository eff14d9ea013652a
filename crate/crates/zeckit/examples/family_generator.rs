//! The two-term family: for t = 1 recurrences and even r,
//! (U(r+1) + U(r-1))·S(n) = S(n+r) + S(n-r). Odd r genuinely fails.
//!
//!     cargo run --example family_generator

use zeckit::identity::{family_generate, verify_symbolic, IdentityPattern};
use zeckit::recurrence::{self, RecurrenceSpec, SequenceFamily};

fn main() -> zeckit::Result<()> {
    for family in [SequenceFamily::Fibonacci, SequenceFamily::Pell] {
        println!("{family}:");
        for r in [2i64, 4, 6, 8] {
            let p = family_generate(&family, r)?;
            assert!(verify_symbolic(&p)?.holds);
            println!("  {p}");
        }
    }

    // The multiplier sequence is U(r+1) + U(r-1): Lucas numbers for the
    // Fibonacci family (3, 7, 18, 47) and 6, 34, 198, 1154 for Pell.

    // Sharpness: at odd r the same shape has Σβ = 2·U(r) != 0, so the
    // generator refuses, and building the pattern by hand confirms why.
    println!("\nodd r = 5 rejected: {:?}", family_generate(&SequenceFamily::Fibonacci, 5).unwrap_err());
    let u5_plus_u3 = recurrence::eval(&SequenceFamily::Fibonacci, 6)?
        + recurrence::eval(&SequenceFamily::Fibonacci, 4)?;
    let odd = IdentityPattern::new(
        SequenceFamily::Fibonacci,
        u5_plus_u3.to_integer(),
        vec![5, -5],
    )?;
    println!("{odd} -> symbolic holds: {}", verify_symbolic(&odd)?.holds);

    // t != 1 is out of scope for this family and is rejected up front.
    let t2 = SequenceFamily::Custom(RecurrenceSpec::from_ints(&[1, 2], &[0, 1])?);
    println!("t = 2 rejected: {:?}", family_generate(&t2, 4).unwrap_err());

    Ok(())
}
