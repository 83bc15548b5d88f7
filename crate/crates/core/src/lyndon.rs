//! Chen-Fox-Lyndon factorization.

use std::ops::Range;

use crate::error::TransformError;

/// The unique factorization of a string into a non-increasing sequence of
/// Lyndon words.
///
/// `boundaries` holds `m + 1` ascending cut positions, starting at `0` and
/// ending at the input length; factor `i` spans `boundaries[i]..boundaries[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    boundaries: Vec<usize>,
}

impl LyndonFactorization {
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ranges(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.boundaries.windows(2).map(|w| w[0]..w[1])
    }

    pub fn factor_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundaries.windows(2).map(|w| w[1] - w[0])
    }

    /// Slices `s` into its factors. `s` must be the factorized string.
    pub fn factors<'s>(&self, s: &'s [u8]) -> Vec<&'s [u8]> {
        self.ranges().map(|r| &s[r]).collect()
    }
}

/// Duval's algorithm. Calls `emit(start, len)` once per factor, left to right.
pub(crate) fn for_each_factor(s: &[u8], mut emit: impl FnMut(usize, usize)) {
    let n = s.len();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            emit(i, period);
            i += period;
        }
    }
}

/// Computes the Lyndon factorization of `s` in linear time.
pub fn lyndon_factorize(s: &[u8]) -> Result<LyndonFactorization, TransformError> {
    if s.is_empty() {
        return Err(TransformError::Empty);
    }
    let mut boundaries = vec![0];
    for_each_factor(s, |start, len| boundaries.push(start + len));
    Ok(LyndonFactorization { boundaries })
}

/// True if `w` is strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|r| {
        let rotated = w[r..].iter().chain(&w[..r]);
        w.iter().lt(rotated)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_strings(s: &[u8]) -> Vec<&[u8]> {
        let f = lyndon_factorize(s).unwrap();
        f.factors(s)
    }

    #[test]
    fn banana() {
        assert_eq!(
            factor_strings(b"banana"),
            vec![&b"b"[..], b"an", b"an", b"a"]
        );
    }

    #[test]
    fn lyndon_word_is_single_factor() {
        assert_eq!(factor_strings(b"aab"), vec![&b"aab"[..]]);
    }

    #[test]
    fn decreasing_letters() {
        assert_eq!(factor_strings(b"bbaa"), vec![&b"b"[..], b"b", b"a", b"a"]);
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(lyndon_factorize(b""), Err(TransformError::Empty));
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(b"a"));
        assert!(is_lyndon(b"aab"));
        assert!(is_lyndon(b"abb"));
        assert!(!is_lyndon(b"aa"));
        assert!(!is_lyndon(b"ba"));
        assert!(!is_lyndon(b"abab"));
    }
}
