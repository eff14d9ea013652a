//! Evaluating the built-in and custom recurrences at signed indices.
//!
//!     cargo run --example sequences

use zeckit::recurrence::{self, add_formula, RecurrenceSpec, SequenceFamily};

fn main() -> zeckit::Result<()> {
    for family in [
        SequenceFamily::Fibonacci,
        SequenceFamily::Lucas,
        SequenceFamily::Pell,
        SequenceFamily::PellLucas,
    ] {
        let row: Vec<String> = (0..=10)
            .map(|n| recurrence::eval(&family, n).map(|v| v.to_string()))
            .collect::<zeckit::Result<_>>()?;
        println!("{:<10} {}", family.to_string(), row.join(" "));
    }

    // Negative indices run the recurrence backwards, exactly.
    // F(-n) = (-1)^(n+1) F(n); Lucas keeps its sign pattern shifted.
    println!();
    for n in (-8..=8).rev() {
        print!("F({n})={} ", recurrence::eval(&SequenceFamily::Fibonacci, n)?);
    }
    println!();

    // A custom third-order recurrence: a_n = a_{n-1} + a_{n-2} + a_{n-3}.
    // Backward evaluation divides by the trailing coefficient, so values at
    // negative indices can be proper rationals for |c_k| != 1 specs.
    let tribonacci = SequenceFamily::Custom(RecurrenceSpec::from_ints(&[1, 1, 1], &[0, 0, 1])?);
    let forward: Vec<String> = (0..=12)
        .map(|n| recurrence::eval(&tribonacci, n).map(|v| v.to_string()))
        .collect::<zeckit::Result<_>>()?;
    println!("\ntribonacci  {}", forward.join(" "));

    let halved = SequenceFamily::Custom(RecurrenceSpec::from_ints(&[1, 2], &[0, 1])?);
    println!(
        "a(n) = a(n-1) + 2a(n-2) at n = -4: {}",
        recurrence::eval(&halved, -4)?
    );

    // The addition formula u(m+n) = u(m)u(n) + t·u(m-1)u(n-1) holds for
    // tiling-convention initials; here with the Pell board (2 square colors).
    let pell_board = RecurrenceSpec::tiling_from_ints(&[2, 1])?;
    let direct = recurrence::eval_general(&pell_board, 9)?;
    let split = add_formula(&pell_board, 4, 5)?;
    println!("\npell board u(9): direct {direct}, via u(4),u(5): {split}");
    assert_eq!(direct, split);

    Ok(())
}
