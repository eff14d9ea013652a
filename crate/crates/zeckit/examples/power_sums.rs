//! ω^r + ω^(-r) collapses to an integer exactly when r is even:
//! φ^r + φ^(-r) = F(r+1) + F(r-1) and (1+√2)^r + (1+√2)^(-r) = P(r+1) + P(r-1).
//! Odd r leaves a nonzero ω-coordinate, which is the sharp converse.
//!
//!     cargo run --example power_sums

use zeckit::quad::{lucas_power_sum, PowerFamily, QuadInt};

fn main() -> zeckit::Result<()> {
    println!("  r   φ-sum                 (1+√2)-sum");
    for r in 1..=10i64 {
        let f = lucas_power_sum(PowerFamily::Fibonacci, r)?;
        let p = lucas_power_sum(PowerFamily::Pell, r)?;
        let show = |s: &zeckit::quad::PowerSum, fam: PowerFamily| {
            if s.holds {
                format!("{}", s.value)
            } else {
                let full = QuadInt::new(fam.ring(), s.value.clone(), s.omega_coefficient.clone());
                format!("{full} (no)")
            }
        };
        println!(
            "{r:>3}   {:<21} {}",
            show(&f, PowerFamily::Fibonacci),
            show(&p, PowerFamily::Pell)
        );
    }

    // The even column is 3, 7, 18, 47, ... for φ (Lucas numbers) and
    // 6, 34, 198, ... for 1+√2 (even-index Pell-Lucas values).
    assert_eq!(lucas_power_sum(PowerFamily::Fibonacci, 2)?.value, 3.into());
    assert_eq!(lucas_power_sum(PowerFamily::Pell, 2)?.value, 6.into());
    assert_eq!(lucas_power_sum(PowerFamily::Pell, 4)?.value, 34.into());

    Ok(())
}
