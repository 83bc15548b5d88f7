//! Run-length coding with a mandatory count after every three equal bytes.
//!
//! After three identical literals the encoder writes one count octet, the
//! number of further repetitions (0..=255). A run of more than 258 bytes
//! restarts the scheme with fresh literals.

use crate::error::FormatError;

const MAX_EXTRA: usize = 255;

pub fn rle_encode(data: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(data.len() + data.len() / 64);
    let mut i = 0;
    while i < data.len() {
        let b = data[i];
        let run = data[i..].iter().take_while(|&&c| c == b).count();
        let mut left = run;
        while left >= 3 {
            let extra = (left - 3).min(MAX_EXTRA);
            out.extend_from_slice(&[b, b, b, extra as u8]);
            left -= 3 + extra;
        }
        out.extend(std::iter::repeat_n(b, left));
        i += run;
    }
    out
}

pub fn rle_decode(data: &[u8]) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::with_capacity(data.len() + data.len() / 4);
    let mut prev: Option<u8> = None;
    let mut run = 0;
    let mut bytes = data.iter();
    while let Some(&b) = bytes.next() {
        out.push(b);
        if prev == Some(b) {
            run += 1;
        } else {
            prev = Some(b);
            run = 1;
        }
        if run == 3 {
            let &extra = bytes
                .next()
                .ok_or(FormatError::Truncated("run-length count"))?;
            out.extend(std::iter::repeat_n(b, extra as usize));
            prev = None;
            run = 0;
        }
    }
    Ok(out)
}
