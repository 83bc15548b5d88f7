//! Adaptive order-0 arithmetic coder.
//!
//! 257 symbols: the 256 octet values plus an end-of-stream marker. Every
//! frequency starts at 1 and grows by 1 per coded symbol; once the total
//! exceeds 2^14 all frequencies are halved, rounding up. The coder keeps
//! 32-bit `low`/`high` registers and defers straddling bits (underflow)
//! until the next decided bit resolves them.

use crate::error::FormatError;

const SYMBOLS: usize = 257;
const EOS: usize = 256;
const MAX_TOTAL: u32 = 1 << 14;

const TOP: u64 = (1 << 32) - 1;
const HALF: u64 = 1 << 31;
const FIRST_QTR: u64 = 1 << 30;
const THIRD_QTR: u64 = 3 << 30;

/// Bits the encoder appends when it terminates the stream.
const FLUSH_BITS: u64 = 2;

struct Model {
    freq: [u32; SYMBOLS],
    total: u32,
}

impl Model {
    fn new() -> Self {
        Self {
            freq: [1; SYMBOLS],
            total: SYMBOLS as u32,
        }
    }

    /// `(cum_low, cum_high)` of `sym`.
    fn interval(&self, sym: usize) -> (u32, u32) {
        let low: u32 = self.freq[..sym].iter().sum();
        (low, low + self.freq[sym])
    }

    /// Symbol whose interval contains `target`, with that interval.
    fn find(&self, target: u32) -> (usize, u32, u32) {
        let mut low = 0;
        for (sym, &f) in self.freq.iter().enumerate() {
            if target < low + f {
                return (sym, low, low + f);
            }
            low += f;
        }
        unreachable!("target below total")
    }

    fn update(&mut self, sym: usize) {
        self.freq[sym] += 1;
        self.total += 1;
        if self.total > MAX_TOTAL {
            self.total = 0;
            for f in self.freq.iter_mut() {
                *f = f.div_ceil(2);
                self.total += *f;
            }
        }
    }
}

struct BitWriter {
    out: Vec<u8>,
    acc: u8,
    filled: u8,
}

impl BitWriter {
    fn put(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.filled += 1;
        if self.filled == 8 {
            self.out.push(self.acc);
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.filled > 0 {
            self.out.push(self.acc << (8 - self.filled));
        }
        self.out
    }
}

struct Encoder {
    low: u64,
    high: u64,
    pending: u64,
    bits: BitWriter,
}

impl Encoder {
    fn new(capacity: usize) -> Self {
        Self {
            low: 0,
            high: TOP,
            pending: 0,
            bits: BitWriter {
                out: Vec::with_capacity(capacity),
                acc: 0,
                filled: 0,
            },
        }
    }

    fn emit(&mut self, bit: bool) {
        self.bits.put(bit);
        for _ in 0..self.pending {
            self.bits.put(!bit);
        }
        self.pending = 0;
    }

    fn encode(&mut self, cum_low: u32, cum_high: u32, total: u32) {
        let range = self.high - self.low + 1;
        self.high = self.low + range * cum_high as u64 / total as u64 - 1;
        self.low += range * cum_low as u64 / total as u64;
        loop {
            if self.high < HALF {
                self.emit(false);
            } else if self.low >= HALF {
                self.emit(true);
                self.low -= HALF;
                self.high -= HALF;
            } else if self.low >= FIRST_QTR && self.high < THIRD_QTR {
                self.pending += 1;
                self.low -= FIRST_QTR;
                self.high -= FIRST_QTR;
            } else {
                break;
            }
            self.low <<= 1;
            self.high = (self.high << 1) | 1;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        self.pending += 1;
        let bit = self.low >= FIRST_QTR;
        self.emit(bit);
        self.bits.finish()
    }
}

pub fn ac_encode(data: &[u8]) -> Vec<u8> {
    let mut model = Model::new();
    let mut enc = Encoder::new(data.len() / 2 + 16);
    for &b in data {
        let (lo, hi) = model.interval(b as usize);
        enc.encode(lo, hi, model.total);
        model.update(b as usize);
    }
    let (lo, hi) = model.interval(EOS);
    enc.encode(lo, hi, model.total);
    enc.finish()
}

struct BitReader<'a> {
    data: &'a [u8],
    /// Bits consumed so far, including zero bits read past the end.
    pos: u64,
}

impl BitReader<'_> {
    fn next(&mut self) -> u64 {
        let byte = (self.pos / 8) as usize;
        let bit = match self.data.get(byte) {
            Some(b) => (b >> (7 - self.pos % 8)) & 1,
            None => 0,
        };
        self.pos += 1;
        bit as u64
    }

    fn overrun(&self) -> u64 {
        self.pos.saturating_sub(self.data.len() as u64 * 8)
    }
}

/// Decodes up to the end-of-stream symbol. When `expected_len` is given the
/// decoded length must match it.
///
/// The stream must be exactly as long as the encoder wrote it: missing bytes
/// are reported as truncation, extra bytes as corruption.
pub fn ac_decode(data: &[u8], expected_len: Option<usize>) -> Result<Vec<u8>, FormatError> {
    // A complete stream never makes the decoder read more than this many
    // bits past its end: 32 bits of lookahead minus the flush bits.
    const MAX_OVERRUN: u64 = 32 - FLUSH_BITS;

    let mut model = Model::new();
    let mut reader = BitReader { data, pos: 0 };
    let mut low = 0u64;
    let mut high = TOP;
    let mut value = 0u64;
    for _ in 0..32 {
        value = (value << 1) | reader.next();
    }

    let mut out = Vec::with_capacity(expected_len.unwrap_or(data.len() * 2));
    loop {
        if reader.overrun() > MAX_OVERRUN {
            return Err(FormatError::Truncated("entropy-coded payload"));
        }
        let range = high - low + 1;
        let total = model.total as u64;
        let target = ((value - low + 1) * total - 1) / range;
        let (sym, cum_low, cum_high) = model.find(target as u32);
        high = low + range * cum_high as u64 / total - 1;
        low += range * cum_low as u64 / total;
        loop {
            if high < HALF {
            } else if low >= HALF {
                value -= HALF;
                low -= HALF;
                high -= HALF;
            } else if low >= FIRST_QTR && high < THIRD_QTR {
                value -= FIRST_QTR;
                low -= FIRST_QTR;
                high -= FIRST_QTR;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | reader.next();
        }

        if sym == EOS {
            break;
        }
        if expected_len.is_some_and(|n| out.len() == n) {
            return Err(FormatError::Corrupt("missing end-of-stream symbol"));
        }
        out.push(sym as u8);
        model.update(sym);
    }

    // The encoder wrote (shifts + flush bits) rounded up to whole bytes; the
    // decoder has read 32 bits beyond the shifts.
    let shifts = reader.pos - 32;
    let written = (shifts + FLUSH_BITS).div_ceil(8);
    let actual = data.len() as u64;
    if actual < written {
        return Err(FormatError::Truncated("entropy-coded payload"));
    }
    if actual > written {
        return Err(FormatError::Corrupt("trailing bytes after end-of-stream"));
    }
    if let Some(n) = expected_len {
        if out.len() != n {
            return Err(FormatError::LengthMismatch {
                expected: n as u64,
                actual: out.len() as u64,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_stream() {
        let enc = ac_encode(b"");
        assert!(!enc.is_empty());
        assert_eq!(ac_decode(&enc, Some(0)).unwrap(), b"");
        assert_eq!(ac_decode(&enc, None).unwrap(), b"");
    }

    #[test]
    fn small_roundtrips() {
        for data in [&b"a"[..], b"banana", b"\x00\xff\x00\xff", b"abracadabra"] {
            let enc = ac_encode(data);
            assert_eq!(ac_decode(&enc, Some(data.len())).unwrap(), data);
        }
    }

    #[test]
    fn rescaling_keeps_roundtrip() {
        let data: Vec<u8> = (0..100_000u32).map(|i| (i * 7 % 13) as u8).collect();
        let enc = ac_encode(&data);
        assert_eq!(ac_decode(&enc, None).unwrap(), data);
    }

    #[test]
    fn halving_rounds_up() {
        let mut m = Model::new();
        for _ in 0..(MAX_TOTAL as usize - SYMBOLS + 1) {
            m.update(0);
        }
        // 16385 > 2^14: freq[0] was 16129 -> 8065, others 1 -> 1.
        assert_eq!(m.freq[0], 8065);
        assert_eq!(m.freq[1], 1);
        assert_eq!(m.total, 8065 + 256);
    }

    #[test]
    fn detects_truncation_and_trailing_bytes() {
        let data: Vec<u8> = b"the quick brown fox jumps over the lazy dog".repeat(20);
        let enc = ac_encode(&data);
        for cut in 1..=4 {
            let err = ac_decode(&enc[..enc.len() - cut], None).unwrap_err();
            assert_eq!(err, FormatError::Truncated("entropy-coded payload"));
        }
        let mut longer = enc.clone();
        longer.push(0);
        assert_eq!(
            ac_decode(&longer, None),
            Err(FormatError::Corrupt("trailing bytes after end-of-stream"))
        );
    }

    #[test]
    fn expected_length_mismatch() {
        let enc = ac_encode(b"abc");
        assert_eq!(
            ac_decode(&enc, Some(5)),
            Err(FormatError::LengthMismatch {
                expected: 5,
                actual: 3
            })
        );
        assert_eq!(
            ac_decode(&enc, Some(2)),
            Err(FormatError::Corrupt("missing end-of-stream symbol"))
        );
    }

    /// Code length an ideal coder needs under the same adaptive model, in bits.
    fn model_cost_bits(data: &[u8]) -> f64 {
        let mut model = Model::new();
        let mut bits = 0.0;
        for &b in data {
            bits -= (model.freq[b as usize] as f64 / model.total as f64).log2();
            model.update(b as usize);
        }
        bits - (model.freq[EOS] as f64 / model.total as f64).log2()
    }

    #[test]
    fn constant_block_size() {
        let data = vec![0u8; 4096];
        let enc = ac_encode(&data);
        let ideal = model_cost_bits(&data) / 8.0;
        // Within a few bytes of the model's own code length.
        assert!((enc.len() as f64) < ideal + 4.0, "{} vs {ideal}", enc.len());
        assert_eq!(enc.len(), 177);
        assert_eq!(ac_decode(&enc, Some(4096)).unwrap(), data);
    }
}
