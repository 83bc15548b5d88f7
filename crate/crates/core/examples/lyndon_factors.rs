//! Lyndon factorization of a string, printed one factor per line.

use bwts::{is_lyndon, lyndon_factorize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "banana".into());
    let s = text.as_bytes();
    let f = lyndon_factorize(s)?;
    println!("{text:?}: {} factors", f.len());
    for (range, w) in f.ranges().zip(f.factors(s)) {
        // Factors never increase, and each is strictly smaller than its rotations.
        assert!(is_lyndon(w));
        println!(
            "  {:>4}..{:<4} {}",
            range.start,
            range.end,
            String::from_utf8_lossy(w)
        );
    }
    Ok(())
}
