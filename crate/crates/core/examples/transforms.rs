//! Forward and inverse of both transforms on a short phrase.
//!
//! ```bash
//! cargo run -p bwts --example transforms -- "any text you like"
//! ```

use bwts::{bwt_forward, bwt_inverse_indexed, bwts_forward, bwts_inverse, OrderKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "now is the time for the truly nice people to come to the party".into());
    let s = text.as_bytes();

    let bwt = bwt_forward(s)?;
    let bwts = bwts_forward(s, OrderKind::InfinitePeriodic)?;
    println!("input : {text}");
    println!(
        "bwt   : {} (index {})",
        String::from_utf8_lossy(&bwt.transform),
        bwt.index
    );
    println!("bwts  : {}", String::from_utf8_lossy(&bwts));

    let differing = bwt
        .transform
        .iter()
        .zip(&bwts)
        .filter(|(a, b)| a != b)
        .count();
    println!("the two differ in {differing} of {} positions", s.len());

    // The BWT needs its index back; the S-transform needs nothing.
    assert_eq!(bwt_inverse_indexed(&bwt.transform, bwt.index)?, s);
    assert_eq!(bwts_inverse(&bwts)?, s);
    println!("both invert");
    Ok(())
}
