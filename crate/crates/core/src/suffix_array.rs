//! Suffix array construction by induced sorting (SA-IS).

use crate::error::TransformError;

const NONE: usize = usize::MAX;

/// Start positions of the suffixes of `s` in ascending lexicographic order.
pub fn suffix_array(s: &[u8]) -> Result<Vec<usize>, TransformError> {
    if s.is_empty() {
        return Err(TransformError::Empty);
    }
    let symbols: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    Ok(sa_is(&symbols, 255))
}

/// `s` holds symbols in `0..=upper`.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // is_s[i]: suffix i is smaller than suffix i + 1.
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] {
            is_s[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // sum_l[c]: start of bucket c; sum_s[c]: start of the S part of bucket c.
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if is_s[i] {
            sum_l[s[i] + 1] += 1;
        } else {
            sum_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        sum_l[c + 1] += sum_s[c];
    }

    let induce = |lms: &[usize], sa: &mut [usize]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !is_s[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && is_s[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_index = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !is_s[i - 1] && is_s[i] {
            lms_index[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    let mut sa = vec![NONE; n];
    induce(&lms, &mut sa);

    if m > 0 {
        let mut sorted_lms: Vec<usize> = sa
            .iter()
            .copied()
            .filter(|&v| lms_index[v] != NONE)
            .collect();
        // Name the LMS substrings; equal substrings share a name.
        let mut names = vec![0usize; m];
        let mut name = 0;
        names[lms_index[sorted_lms[0]]] = 0;
        for i in 1..m {
            let mut l = sorted_lms[i - 1];
            let mut r = sorted_lms[i];
            let end_l = if lms_index[l] + 1 < m {
                lms[lms_index[l] + 1]
            } else {
                n
            };
            let end_r = if lms_index[r] + 1 < m {
                lms[lms_index[r] + 1]
            } else {
                n
            };
            let same = if end_l - l != end_r - r {
                false
            } else {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                l != n && s[l] == s[r]
            };
            if !same {
                name += 1;
            }
            names[lms_index[sorted_lms[i]]] = name;
        }
        let reduced = sa_is(&names, name);
        for (slot, &r) in sorted_lms.iter_mut().zip(&reduced) {
            *slot = lms[r];
        }
        induce(&sorted_lms, &mut sa);
    }
    sa
}
