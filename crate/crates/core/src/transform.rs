//! Forward and inverse Burrows-Wheeler transform and its bijective variant.
//!
//! Both inversions share one permutation, [`Theta`], built by
//! [`match_permutation`]: for every position `k` of a transform it gives the
//! position holding the character that cyclically precedes `η[k]` in its
//! source word. Following it from a single start recovers a rotation of a BWT
//! input ([`thread_from`]); following every cycle recovers the Lyndon factors
//! of an S-transform input ([`multi_thread`]).

use crate::conjugates;
use crate::error::TransformError;
use crate::lyndon;
use crate::rotation::{FactoredText, OrderKind};
use crate::suffix_array::suffix_array;
use crate::walk;

const VISITED: u32 = u32::MAX;

/// A permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta(Vec<u32>);

impl Theta {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Lengths of the cycles, ordered by their smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                len += 1;
                k = self.get(k);
            }
            lengths.push(len);
        }
        lengths
    }
}

impl TryFrom<Vec<usize>> for Theta {
    type Error = TransformError;

    fn try_from(map: Vec<usize>) -> Result<Self, Self::Error> {
        let n = map.len();
        if n >= VISITED as usize {
            return Err(TransformError::TooLong(n));
        }
        let mut hit = vec![false; n];
        for &v in &map {
            if v >= n || std::mem::replace(&mut hit[v], true) {
                return Err(TransformError::NotAPermutation(n));
            }
        }
        Ok(Theta(map.into_iter().map(|v| v as u32).collect()))
    }
}

/// Output of [`bwt_forward`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtOutput {
    pub transform: Vec<u8>,
    /// Rank of the input among its sorted rotations.
    pub index: usize,
}

fn check_len(n: usize) -> Result<(), TransformError> {
    if n == 0 {
        Err(TransformError::Empty)
    } else if n >= VISITED as usize {
        Err(TransformError::TooLong(n))
    } else {
        Ok(())
    }
}

/// Builds θ from a transform: θ(i) = (occurrences of characters smaller than
/// `η[i]`) + (occurrences of `η[i]` before position `i`).
pub fn match_permutation(eta: &[u8]) -> Result<Theta, TransformError> {
    if eta.len() >= VISITED as usize {
        return Err(TransformError::TooLong(eta.len()));
    }
    Ok(Theta(theta_values(eta).collect()))
}

/// θ(0), θ(1), … computed on the fly.
fn theta_values(eta: &[u8]) -> impl Iterator<Item = u32> + '_ {
    let mut counts = [0u32; 256];
    for &c in eta {
        counts[c as usize] += 1;
    }
    let mut next = [0u32; 256];
    for c in 1..256 {
        next[c] = next[c - 1] + counts[c - 1];
    }
    eta.iter().map(move |&c| {
        let v = next[c as usize];
        next[c as usize] += 1;
        v
    })
}

/// Follows θ from `start`, writing the output last character first.
///
/// With `start = 0` on a BWT image this yields the smallest rotation of the
/// source; with the rotation index it yields the source itself.
pub fn thread_from(eta: &[u8], theta: &Theta, start: usize) -> Result<Vec<u8>, TransformError> {
    let n = eta.len();
    if theta.len() != n {
        return Err(TransformError::LengthMismatch {
            theta: theta.len(),
            len: n,
        });
    }
    if start >= n {
        return Err(TransformError::IndexOutOfRange {
            index: start,
            len: n,
        });
    }
    let mut out = vec![0u8; n];
    let mut k = start;
    for slot in out.iter_mut().rev() {
        *slot = eta[k];
        k = theta.get(k);
    }
    Ok(out)
}

/// Walks every cycle of θ, each from its smallest unvisited index, filling
/// the output from the back. Each cycle produces one word, last character
/// first.
pub fn multi_thread(eta: &[u8], theta: Theta) -> Result<Vec<u8>, TransformError> {
    let n = eta.len();
    if theta.len() != n {
        return Err(TransformError::LengthMismatch {
            theta: theta.len(),
            len: n,
        });
    }
    let mut next = theta.0;
    let mut out = vec![0u8; n];
    let mut i = n;
    for j in 0..n {
        let mut k = j;
        while next[k] != VISITED {
            i -= 1;
            out[i] = eta[k];
            k = std::mem::replace(&mut next[k], VISITED) as usize;
        }
    }
    debug_assert_eq!(i, 0);
    Ok(out)
}

/// Length of the primitive root of `s` (the shortest `p` with `s = u^(n/p)`).
fn primitive_root_len(s: &[u8]) -> usize {
    let n = s.len();
    let mut fail = vec![0usize; n];
    for i in 1..n {
        let mut k = fail[i - 1];
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let period = n - fail[n - 1];
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

/// Burrows-Wheeler transform: the last column of the sorted rotations of `s`
/// and the rank of `s` among them. Equal rotations of a non-primitive string
/// are ordered by offset.
pub fn bwt_forward(s: &[u8]) -> Result<BwtOutput, TransformError> {
    check_len(s.len())?;
    let n = s.len();
    let p = primitive_root_len(s);
    let copies = n / p;

    // Rotations of the primitive root are distinct, so sorting the suffixes
    // of root·root that start inside the first copy orders them.
    let mut doubled = Vec::with_capacity(2 * p);
    doubled.extend_from_slice(&s[..p]);
    doubled.extend_from_slice(&s[..p]);
    let sa = suffix_array(&doubled)?;

    let mut transform = Vec::with_capacity(n);
    let mut index = 0;
    for offset in sa.into_iter().filter(|&o| o < p) {
        if offset == 0 {
            index = transform.len();
        }
        let last = s[(offset + p - 1) % p];
        transform.extend(std::iter::repeat_n(last, copies));
    }
    Ok(BwtOutput { transform, index })
}

/// Inverse BWT without an index: the lexicographically smallest string whose
/// transform is `eta`.
pub fn bwt_inverse(eta: &[u8]) -> Result<Vec<u8>, TransformError> {
    check_len(eta.len())?;
    thread_from(eta, &match_permutation(eta)?, 0)
}

/// Exact inverse of [`bwt_forward`] given the stored rotation index.
pub fn bwt_inverse_indexed(eta: &[u8], index: usize) -> Result<Vec<u8>, TransformError> {
    check_len(eta.len())?;
    thread_from(eta, &match_permutation(eta)?, index)
}

/// The bijective S-transform: Lyndon-factorize `s`, sort the rotations of all
/// factors together under `order`, and take the last characters.
///
/// Only [`OrderKind::InfinitePeriodic`] yields a bijection; under
/// [`OrderKind::StandardLex`] distinct inputs can collide.
pub fn bwts_forward(s: &[u8], order: OrderKind) -> Result<Vec<u8>, TransformError> {
    check_len(s.len())?;
    let mut bounds = vec![0u32];
    lyndon::for_each_factor(s, |start, len| bounds.push((start + len) as u32));
    match order {
        OrderKind::InfinitePeriodic => {
            Ok(conjugates::bwts_periodic(s, &bounds[..bounds.len() - 1]))
        }
        OrderKind::StandardLex => {
            let text = FactoredText::new(s, bounds);
            let positions = text.sorted_positions(order);
            Ok(positions.into_iter().map(|p| text.last_char(p)).collect())
        }
    }
}

/// Inverse of [`bwts_forward`] under the infinite-periodic order. Defined for
/// every non-empty string.
pub fn bwts_inverse(eta: &[u8]) -> Result<Vec<u8>, TransformError> {
    check_len(eta.len())?;
    let out = walk::unthread(eta, theta_values(eta), walk::default_stride(eta.len()));
    Ok(out)
}
