//! The two rotation orders side by side. They only disagree when one word
//! is a proper prefix of another; the periodic order compares `u^ω` with
//! `v^ω`, which is what makes the S-transform invertible.

use bwts::{bwts_forward, compare_rotations, sort_all_rotations, OrderKind, Rotation};

fn first(word: &[u8], id: usize) -> Rotation {
    Rotation {
        word_id: id,
        offset: 0,
        length: word.len(),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs: [(&[u8], &[u8]); 3] = [(b"ab", b"aba"), (b"a", b"ab"), (b"aab", b"ab")];
    for (u, v) in pairs {
        let words = [u, v];
        let lex = compare_rotations(&words, &first(u, 0), &first(v, 1), OrderKind::StandardLex);
        let per = compare_rotations(
            &words,
            &first(u, 0),
            &first(v, 1),
            OrderKind::InfinitePeriodic,
        );
        println!(
            "{:>4} vs {:<4} lex {lex:?}, periodic {per:?}",
            String::from_utf8_lossy(u),
            String::from_utf8_lossy(v)
        );
    }

    let words: [&[u8]; 2] = [b"ab", b"aab"];
    for kind in [OrderKind::StandardLex, OrderKind::InfinitePeriodic] {
        let sorted: Vec<String> = sort_all_rotations(&words, kind)?
            .iter()
            .map(|r| String::from_utf8_lossy(&r.materialize(words[r.word_id])).into_owned())
            .collect();
        println!("{kind:?}: {}", sorted.join(" "));
    }

    // Under lex order different inputs can collide.
    let a = bwts_forward(b"cababcaba", OrderKind::StandardLex)?;
    println!(
        "lex S-transform of cababcaba: {}",
        String::from_utf8_lossy(&a)
    );
    Ok(())
}
