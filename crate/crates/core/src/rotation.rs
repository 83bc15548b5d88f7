//! Rotations of words and the two orders used to sort them together.
//!
//! A [`Rotation`] never copies characters: it names a word in a caller-owned
//! table together with a starting offset. Rotations of words with different
//! lengths are compared either by ordinary lexicographic order (a proper
//! prefix is smaller) or by comparing their infinite periodic repetitions.

use std::cmp::Ordering;

use crate::error::TransformError;

/// How rotations of unequal length are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    /// Finite strings, a proper prefix sorts first.
    StandardLex,
    /// Infinite repetitions `a a a ...` versus `b b b ...`.
    #[default]
    InfinitePeriodic,
}

/// Rotation `offset` of word `word_id`, of `length` characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub word_id: usize,
    pub offset: usize,
    pub length: usize,
}

impl Rotation {
    /// Character `j` of this rotation, indices taken modulo the length, so
    /// `char_at(word, -1)` is the last character.
    pub fn char_at(&self, word: &[u8], j: isize) -> u8 {
        debug_assert_eq!(word.len(), self.length);
        let len = self.length as isize;
        let idx = (self.offset as isize + j).rem_euclid(len);
        word[idx as usize]
    }

    /// Copies the rotation out as a string.
    pub fn materialize(&self, word: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.length);
        out.extend_from_slice(&word[self.offset..]);
        out.extend_from_slice(&word[..self.offset]);
        out
    }
}

/// All `|s|` rotations of `s`, as word 0. Duplicates of a non-primitive
/// string are kept.
pub fn cyclic_rotations(s: &[u8]) -> Result<Vec<Rotation>, TransformError> {
    if s.is_empty() {
        return Err(TransformError::Empty);
    }
    let length = s.len();
    Ok((0..length)
        .map(|offset| Rotation {
            word_id: 0,
            offset,
            length,
        })
        .collect())
}

/// Compares two rotations under `kind`.
pub fn compare_rotations(words: &[&[u8]], a: &Rotation, b: &Rotation, kind: OrderKind) -> Ordering {
    compare_rotations_counted(words, a, b, kind).0
}

/// Like [`compare_rotations`], also returning how many character pairs were
/// inspected.
pub fn compare_rotations_counted(
    words: &[&[u8]],
    a: &Rotation,
    b: &Rotation,
    kind: OrderKind,
) -> (Ordering, usize) {
    compare_views(words[a.word_id], a.offset, words[b.word_id], b.offset, kind)
}

/// Rotation `ia` of word `a` against rotation `ib` of word `b`.
pub(crate) fn compare_views(
    a: &[u8],
    ia: usize,
    b: &[u8],
    ib: usize,
    kind: OrderKind,
) -> (Ordering, usize) {
    match kind {
        // Two periodic sequences agreeing on |a| + |b| positions agree everywhere.
        OrderKind::InfinitePeriodic => {
            let (ord, seen) = walk(a, ia, b, ib, a.len() + b.len());
            (ord, seen)
        }
        OrderKind::StandardLex => {
            let limit = a.len().min(b.len());
            match walk(a, ia, b, ib, limit) {
                (Ordering::Equal, seen) => (a.len().cmp(&b.len()), seen),
                other => other,
            }
        }
    }
}

/// Compares the cyclic sequences starting at `a[ia]` and `b[ib]` over at most
/// `limit` positions.
#[inline]
fn walk(a: &[u8], mut ia: usize, b: &[u8], mut ib: usize, limit: usize) -> (Ordering, usize) {
    let mut done = 0;
    while done < limit {
        let step = (limit - done).min(a.len() - ia).min(b.len() - ib);
        let x = &a[ia..ia + step];
        let y = &b[ib..ib + step];
        let common = common_prefix(x, y);
        if common < step {
            return (x[common].cmp(&y[common]), done + common + 1);
        }
        done += step;
        ia += step;
        if ia == a.len() {
            ia = 0;
        }
        ib += step;
        if ib == b.len() {
            ib = 0;
        }
    }
    (Ordering::Equal, done)
}

#[inline]
fn common_prefix(x: &[u8], y: &[u8]) -> usize {
    let n = x.len().min(y.len());
    let mut i = 0;
    while i + 8 <= n {
        let p = u64::from_le_bytes(x[i..i + 8].try_into().unwrap());
        let q = u64::from_le_bytes(y[i..i + 8].try_into().unwrap());
        let diff = p ^ q;
        if diff != 0 {
            return i + (diff.trailing_zeros() / 8) as usize;
        }
        i += 8;
    }
    while i < n && x[i] == y[i] {
        i += 1;
    }
    i
}

/// Sorts `rotations` under `kind`, ties broken by `(word_id, offset)`.
pub fn sort_rotations(words: &[&[u8]], rotations: &mut [Rotation], kind: OrderKind) {
    rotations.sort_unstable_by(|a, b| {
        compare_rotations(words, a, b, kind)
            .then(a.word_id.cmp(&b.word_id))
            .then(a.offset.cmp(&b.offset))
    });
}

/// Every rotation of every word, sorted together under `kind`.
pub fn sort_all_rotations(
    words: &[&[u8]],
    kind: OrderKind,
) -> Result<Vec<Rotation>, TransformError> {
    if words.iter().any(|w| w.is_empty()) {
        return Err(TransformError::Empty);
    }
    let mut rotations: Vec<Rotation> = words
        .iter()
        .enumerate()
        .flat_map(|(word_id, w)| {
            (0..w.len()).map(move |offset| Rotation {
                word_id,
                offset,
                length: w.len(),
            })
        })
        .collect();
    sort_rotations(words, &mut rotations, kind);
    Ok(rotations)
}

/// Sorts `rotations` and returns their last characters in sorted order.
pub fn last_column(
    words: &[&[u8]],
    mut rotations: Vec<Rotation>,
    kind: OrderKind,
) -> Result<Vec<u8>, TransformError> {
    if rotations.is_empty() {
        return Err(TransformError::Empty);
    }
    sort_rotations(words, &mut rotations, kind);
    Ok(rotations
        .iter()
        .map(|r| r.char_at(words[r.word_id], -1))
        .collect())
}

/// A text cut into consecutive words, with rotations addressed by their
/// global start position. Uses 32-bit positions to keep the sort at
/// 8 bytes of bookkeeping per character.
pub(crate) struct FactoredText<'a> {
    text: &'a [u8],
    bounds: Vec<u32>,
    word_of: Vec<u32>,
}

impl<'a> FactoredText<'a> {
    /// `bounds` are ascending cut positions from 0 to `text.len()`.
    pub(crate) fn new(text: &'a [u8], bounds: Vec<u32>) -> Self {
        let mut word_of = Vec::with_capacity(text.len());
        for (w, pair) in bounds.windows(2).enumerate() {
            word_of.resize(pair[1] as usize, w as u32);
        }
        Self {
            text,
            bounds,
            word_of,
        }
    }

    #[inline]
    fn word_span(&self, pos: u32) -> (usize, usize) {
        let w = self.word_of[pos as usize] as usize;
        (self.bounds[w] as usize, self.bounds[w + 1] as usize)
    }

    #[inline]
    fn view(&self, pos: u32) -> (&[u8], usize) {
        let (start, end) = self.word_span(pos);
        (&self.text[start..end], pos as usize - start)
    }

    /// Last character of the rotation starting at `pos`.
    #[inline]
    pub(crate) fn last_char(&self, pos: u32) -> u8 {
        let (start, end) = self.word_span(pos);
        let p = pos as usize;
        if p == start {
            self.text[end - 1]
        } else {
            self.text[p - 1]
        }
    }

    /// Rotation start positions in sorted order; ties by position, which is
    /// the same as by (word, offset).
    pub(crate) fn sorted_positions(&self, kind: OrderKind) -> Vec<u32> {
        let n = self.text.len();
        // Bucket by the leading characters both orders agree on, then sort
        // each bucket with the full comparator.
        let key = |pos: u32| -> usize {
            let c0 = self.text[pos as usize] as usize;
            match kind {
                OrderKind::StandardLex => c0,
                OrderKind::InfinitePeriodic => {
                    let (start, end) = self.word_span(pos);
                    let next = if pos as usize + 1 == end {
                        start
                    } else {
                        pos as usize + 1
                    };
                    (c0 << 8) | self.text[next] as usize
                }
            }
        };
        let buckets = match kind {
            OrderKind::StandardLex => 256,
            OrderKind::InfinitePeriodic => 1 << 16,
        };
        let mut starts = vec![0u32; buckets + 1];
        for pos in 0..n as u32 {
            starts[key(pos) + 1] += 1;
        }
        for b in 0..buckets {
            starts[b + 1] += starts[b];
        }
        let mut fill = starts.clone();
        let mut positions = vec![0u32; n];
        for pos in 0..n as u32 {
            let k = key(pos);
            positions[fill[k] as usize] = pos;
            fill[k] += 1;
        }
        drop(fill);
        for b in 0..buckets {
            let (lo, hi) = (starts[b] as usize, starts[b + 1] as usize);
            if hi - lo > 1 {
                positions[lo..hi].sort_unstable_by(|&x, &y| {
                    let (wa, ia) = self.view(x);
                    let (wb, ib) = self.view(y);
                    compare_views(wa, ia, wb, ib, kind).0.then(x.cmp(&y))
                });
            }
        }
        positions
    }
}
