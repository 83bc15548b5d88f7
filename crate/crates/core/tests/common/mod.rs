//! Brute-force oracles and input generators shared by the integration tests.
//!
//! Every oracle here materializes strings and sorts them directly. None of it
//! calls into the library's sorting or threading code.

#![allow(dead_code)]

use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const PHRASE: &[u8] = b"now is the time for the truly nice people to come to the party";
pub const PHRASE_BWT: &[u8] = b"oewyeeosreeeepi mhchlmhp tttnt puio yttcefn  ooati       rrolt";
pub const PHRASE_BWTS: &[u8] = b"yoeyeeosreeeepi mhchlmhp tttnt puio wttcefn  ooati       rrotl";

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rotate(s: &[u8], k: usize) -> Vec<u8> {
    let mut r = s[k..].to_vec();
    r.extend_from_slice(&s[..k]);
    r
}

pub fn min_rotation(s: &[u8]) -> Vec<u8> {
    (0..s.len()).map(|k| rotate(s, k)).min().unwrap()
}

/// Compares `a^|b|` with `b^|a|`.
pub fn periodic_cmp(a: &[u8], b: &[u8]) -> Ordering {
    a.repeat(b.len()).cmp(&b.repeat(a.len()))
}

pub fn lex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    a.cmp(b)
}

/// BWT by materializing and sorting all rotations; ties by offset.
pub fn bwt_oracle(s: &[u8]) -> (Vec<u8>, usize) {
    let mut rots: Vec<(Vec<u8>, usize)> = (0..s.len()).map(|k| (rotate(s, k), k)).collect();
    rots.sort();
    let last = rots.iter().map(|(r, _)| *r.last().unwrap()).collect();
    let index = rots.iter().position(|(_, k)| *k == 0).unwrap();
    (last, index)
}

pub fn is_lyndon_oracle(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &rotate(w, k)[..])
}

/// Every factorization of `s` into Lyndon words with non-increasing factors.
pub fn lyndon_factorizations(s: &[u8]) -> Vec<Vec<Vec<u8>>> {
    fn go(rest: &[u8], prev: Option<&[u8]>, acc: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for cut in 1..=rest.len() {
            let head = &rest[..cut];
            if !is_lyndon_oracle(head) || prev.is_some_and(|p| p < head) {
                continue;
            }
            acc.push(head.to_vec());
            go(&rest[cut..], Some(head), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(s, None, &mut Vec::new(), &mut out);
    out
}

/// The Lyndon factorization found by exhaustive search; it must be unique.
pub fn lyndon_oracle(s: &[u8]) -> Vec<Vec<u8>> {
    let mut all = lyndon_factorizations(s);
    assert_eq!(
        all.len(),
        1,
        "factorization of {:?} is not unique",
        String::from_utf8_lossy(s)
    );
    all.pop().unwrap()
}

/// Sorts all rotations of all words by materializing them; each entry is
/// `(rotation, word index, offset)`.
pub fn sorted_rotations_oracle(words: &[Vec<u8>], periodic: bool) -> Vec<(Vec<u8>, usize, usize)> {
    let mut rots: Vec<(Vec<u8>, usize, usize)> = words
        .iter()
        .enumerate()
        .flat_map(|(w, word)| (0..word.len()).map(move |k| (rotate(word, k), w, k)))
        .collect();
    rots.sort_by(|a, b| {
        let ord = if periodic {
            periodic_cmp(&a.0, &b.0)
        } else {
            lex_cmp(&a.0, &b.0)
        };
        ord.then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2))
    });
    rots
}

/// S-transform computed from the brute-force factorization and sort.
pub fn bwts_oracle(s: &[u8], periodic: bool) -> Vec<u8> {
    let words = lyndon_oracle_fast(s);
    sorted_rotations_oracle(&words, periodic)
        .iter()
        .map(|(r, _, _)| *r.last().unwrap())
        .collect()
}

/// Lyndon factorization by repeatedly splitting off the smallest suffix,
/// which is the last factor. Quadratic, independent of Duval's algorithm.
pub fn lyndon_oracle_fast(s: &[u8]) -> Vec<Vec<u8>> {
    let mut end = s.len();
    let mut factors = Vec::new();
    while end > 0 {
        let start = (0..end).min_by(|&a, &b| s[a..end].cmp(&s[b..end])).unwrap();
        factors.push(s[start..end].to_vec());
        end = start;
    }
    factors.reverse();
    factors
}

pub fn brute_suffix_array(s: &[u8]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..s.len()).collect();
    sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
    sa
}

/// All strings over `alphabet` of length `len`, in counting order.
pub fn all_strings(alphabet: &[u8], len: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
    let k = alphabet.len();
    let total = k.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut s = vec![0u8; len];
        for slot in s.iter_mut() {
            *slot = alphabet[code % k];
            code /= k;
        }
        s
    })
}

/// Random string with a randomly chosen character distribution: uniform
/// bytes, small alphabets, long runs, or a power of a short word.
pub fn mixed_string(rng: &mut StdRng, len: usize) -> Vec<u8> {
    match rng.random_range(0..6) {
        0 => (0..len).map(|_| rng.random()).collect(),
        1 => (0..len).map(|_| b'a' + rng.random_range(0..2)).collect(),
        2 => (0..len).map(|_| b'a' + rng.random_range(0..4)).collect(),
        3 => {
            let mut s = Vec::with_capacity(len);
            while s.len() < len {
                let b: u8 = rng.random_range(0..3);
                let run = rng.random_range(1..40).min(len - s.len());
                s.extend(std::iter::repeat_n(b, run));
            }
            s
        }
        4 => {
            let p = rng.random_range(1..=len.clamp(1, 7));
            let root: Vec<u8> = (0..p).map(|_| b'a' + rng.random_range(0..3)).collect();
            root.iter().copied().cycle().take(len).collect()
        }
        _ => synthetic_text(rng, len),
    }
}

const WORDS: &[&str] = &[
    "the", "of", "and", "to", "a", "in", "is", "it", "that", "was", "for", "on", "are", "with",
    "as", "his", "they", "be", "at", "one", "have", "this", "from", "or", "had", "by", "word",
    "but", "what", "some", "we", "can", "out", "other", "were", "all", "there", "when", "up",
    "use", "your", "how", "said", "an", "each", "she", "which", "do", "their", "time", "if",
    "will", "way", "about", "many", "then", "them", "write", "would", "like", "so", "these", "her",
    "long", "make", "thing", "see", "him", "two", "has", "look", "more", "day", "could", "go",
    "come", "did", "number", "sound", "no", "most", "people", "my", "over", "know", "water",
    "than", "call", "first", "who", "may", "down", "side", "been", "now", "find", "any", "new",
    "work", "part", "take", "get", "place", "made", "live", "where", "after", "back", "little",
    "only", "round", "man", "year", "came", "show", "every", "good", "me", "give", "our", "under",
    "name", "very", "through", "just", "form", "sentence", "great", "think", "say", "help", "low",
    "line", "differ", "turn", "cause", "much", "mean", "before", "move", "right", "boy", "old",
    "too", "same", "tell", "does", "set", "three", "want", "air", "well", "also", "play", "small",
    "end", "put", "home", "read", "hand", "port", "large", "spell", "add", "even", "land", "here",
    "must", "big", "high", "such", "follow", "act", "why", "ask", "men", "change", "went", "light",
    "kind", "off", "need", "house", "picture", "try", "us", "again", "animal", "point", "mother",
    "world", "near", "build", "self", "earth", "father", "head", "stand", "own", "page", "should",
    "country", "found", "answer", "school", "grow", "study", "still", "learn", "plant", "cover",
    "food", "sun", "four", "between", "state", "keep", "eye", "never", "last", "let", "thought",
    "city", "tree", "cross", "farm", "hard", "start", "might", "story", "saw", "far", "sea",
    "draw", "left", "late", "run", "while", "press", "close", "night", "real", "life", "few",
    "north", "open", "seem", "together", "next", "white", "children", "begin", "got", "walk",
    "example", "ease", "paper", "group", "always", "music", "those", "both", "mark", "often",
    "letter", "until", "mile", "river", "car", "feet", "care", "second", "book", "carry", "took",
    "science", "eat", "room", "friend", "began", "idea", "fish", "mountain", "stop", "once",
    "base", "hear", "horse", "cut", "sure", "watch", "color", "face", "wood", "main", "enough",
    "plain", "girl", "usual", "young", "ready", "above", "ever", "red", "list", "though", "feel",
    "talk", "bird", "soon", "body", "dog", "family",
];

/// English-like prose: Zipf-weighted words from a fixed vocabulary, with
/// sentences, punctuation and wrapped lines.
pub fn synthetic_text(rng: &mut StdRng, len: usize) -> Vec<u8> {
    // Zipf weights 1/(rank+1), sampled by inverting the cumulative sum.
    let cumulative: Vec<f64> = WORDS
        .iter()
        .enumerate()
        .scan(0.0, |acc, (i, _)| {
            *acc += 1.0 / (i as f64 + 1.0);
            Some(*acc)
        })
        .collect();
    let total = *cumulative.last().unwrap();
    let mut out = Vec::with_capacity(len + 16);
    let mut line = 0;
    let mut sentence_start = true;
    while out.len() < len {
        let x = rng.random::<f64>() * total;
        let idx = cumulative.partition_point(|&c| c < x).min(WORDS.len() - 1);
        let word = WORDS[idx].as_bytes();
        if line + word.len() + 1 > 72 {
            out.push(b'\n');
            line = 0;
        } else if !out.is_empty() {
            out.push(b' ');
            line += 1;
        }
        if sentence_start {
            out.push(word[0].to_ascii_uppercase());
            out.extend_from_slice(&word[1..]);
            sentence_start = false;
        } else {
            out.extend_from_slice(word);
        }
        line += word.len();
        match rng.random_range(0..100) {
            0..=6 => {
                out.push(b'.');
                sentence_start = true;
            }
            7..=11 => out.push(b','),
            12 => {
                out.push(b'?');
                sentence_start = true;
            }
            _ => {}
        }
    }
    out.truncate(len);
    out
}

/// Source-code-like text: indented lines of identifiers and operators.
pub fn synthetic_code(rng: &mut StdRng, len: usize) -> Vec<u8> {
    const IDENTS: &[&str] = &[
        "count", "index", "value", "buffer", "result", "node", "next", "len", "data", "offset",
        "table", "state",
    ];
    const KEYWORDS: &[&str] = &["if", "while", "for", "return", "let", "fn", "match", "else"];
    let mut out = Vec::with_capacity(len + 64);
    let mut depth: usize = 0;
    while out.len() < len {
        out.extend(std::iter::repeat_n(b' ', depth * 4));
        let kw = KEYWORDS[rng.random_range(0..KEYWORDS.len())];
        let a = IDENTS[rng.random_range(0..IDENTS.len())];
        let b = IDENTS[rng.random_range(0..IDENTS.len())];
        let n: u16 = rng.random_range(0..1000);
        let line = match rng.random_range(0..4) {
            0 if depth < 5 => {
                depth += 1;
                format!("{kw} {a} < {b} + {n} {{\n")
            }
            1 if depth > 0 => {
                depth -= 1;
                "}\n".to_string()
            }
            _ => format!("{a} = {b}[{n}] + {a};\n"),
        };
        out.extend_from_slice(line.as_bytes());
    }
    out.truncate(len);
    out
}
