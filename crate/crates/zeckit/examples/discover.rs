//! Discovering identities from scratch: write the multiplier c as an exact
//! sum of powers of φ (or 1+√2). Each solution Σ ω^e = c is an identity
//! c·S(n) = Σ S(n+e), no sampling involved.
//!
//!     cargo run --example discover

use zeckit::identity::{discover, discover_with_gap, verify_symbolic};
use zeckit::quad::PowerFamily;

fn main() -> zeckit::Result<()> {
    // Fibonacci side, nonadjacent exponents (gap 2): the expansion is
    // unique, a two-sided Zeckendorf representation of c.
    for c in [1u32, 3, 4, 5, 6, 7, 11, 57] {
        for p in discover(PowerFamily::Fibonacci, &c.into(), 10)? {
            assert!(verify_symbolic(&p)?.holds);
            println!("{p}");
        }
    }

    // Pell side allows adjacent exponents (gap 1); 20 = σ^3 + σ^2 + σ^-3 + σ^-4.
    println!();
    for c in [3u32, 6, 20, 34, 40] {
        for p in discover(PowerFamily::Pell, &c.into(), 8)? {
            println!("{p}");
        }
    }

    // Forcing a wider gap can empty the solution set: with nonadjacent
    // silver powers there is no expansion of 20 inside this window.
    let strict = discover_with_gap(PowerFamily::Pell, &20u32.into(), 8, 2)?;
    println!("\npell 20 with gap 2: {} solutions", strict.len());

    Ok(())
}
