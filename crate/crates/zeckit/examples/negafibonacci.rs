//! Negafibonacci encoding: every integer, zero and negatives included, is a
//! unique sum of nonconsecutive F_k with k <= -1. No sign bit anywhere.
//!
//!     cargo run --example negafibonacci

use zeckit::zeck::{decode, nega_encode};
use zeckit::SeqValue;

fn main() -> zeckit::Result<()> {
    // F(-1)=1, F(-2)=-1, F(-3)=2, F(-4)=-3, F(-5)=5, F(-6)=-8, ...
    for n in [-37i64, -1, 0, 1, 4, -12, 11] {
        let rep = nega_encode(&n.into());
        println!("{n:>4} = {rep}");
    }

    // Total and injective over a window; decode inverts exactly.
    for n in -500..=500i64 {
        let rep = nega_encode(&n.into());
        assert_eq!(decode(&rep)?, SeqValue::from(n), "round trip at {n}");
    }
    println!("\nround trip checked on [-500, 500]");

    Ok(())
}
