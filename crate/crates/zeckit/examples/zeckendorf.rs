//! Zeckendorf encoding: every positive integer is a unique sum of
//! nonconsecutive Fibonacci numbers F_k, k >= 2.
//!
//!     cargo run --example zeckendorf

use zeckit::zeck::{decode, zeck_encode};
use zeckit::SeqValue;

fn main() -> zeckit::Result<()> {
    for n in [79u32, 65, 105, 1, 2, 12, 100] {
        let rep = zeck_encode(&n.into())?;
        println!("{n:>4} = {rep}");
    }

    // Round trip, including a number that would overflow any machine word.
    let big: SeqValue = SeqValue::from(10u8).pow(40) + 7;
    let rep = zeck_encode(&big)?;
    println!("\n10^40 + 7 uses {} terms, top index {}", rep.indices().len(), rep.indices().last().unwrap());
    assert_eq!(decode(&rep)?, big);

    // The JSON form is what the CLI's --json mode embeds.
    println!("{}", serde_json::to_string(&zeck_encode(&79.into())?).unwrap());

    // Adjacent indices are rejected on construction and on decode.
    let bad = serde_json::from_str::<zeckit::Representation>(
        r#"{"kind":"zeckendorf","indices":[4,5]}"#,
    );
    println!("F[5]+F[4] rejected: {}", bad.is_err());

    Ok(())
}
