//! The combinatorial side: sequence values are counts of colored board
//! tilings, and the enumerator is an independent oracle for the recurrence.
//!
//!     cargo run --example tilings

use zeckit::recurrence::{eval_general, RecurrenceSpec};
use zeckit::tiling::{break_at, count, enumerate, fibonacci_board_spec, pell_board_spec};
use zeckit::SeqValue;

fn main() -> zeckit::Result<()> {
    // All five tilings of the 4-board with one square and one domino color.
    let fib = fibonacci_board_spec();
    for t in enumerate(&fib, 4)? {
        println!("{t}");
    }

    // Counts match the recurrence for every n: the streaming counter walks
    // the same tree without materializing tilings.
    let pell = pell_board_spec();
    for n in 0..=12u64 {
        assert_eq!(count(&pell, n)?, eval_general(&pell, n)?);
    }
    println!("\npell board count(12) = {}", count(&pell, 12)?);

    // Breakability at cell m factors the count: breakables split into two
    // independent boards, unbreakables carry a domino across the boundary.
    let n = 10;
    for m in 1..n {
        let part = break_at(&fib, n, m)?;
        let (b, u) = (part.breakable.len(), part.unbreakable.len());
        let left = eval_general(&fib, m)?;
        let right = eval_general(&fib, n - m)?;
        assert_eq!(SeqValue::from(b), &left * &right);
        println!("n={n} m={m}: {b} breakable = {left}·{right}, {u} unbreakable");
    }

    // A three-colors-of-squares, two-of-dominoes board, same machinery.
    let wide = RecurrenceSpec::tiling_from_ints(&[3, 2])?;
    println!("\n(3,2) board count(6) = {}", count(&wide, 6)?);

    Ok(())
}
