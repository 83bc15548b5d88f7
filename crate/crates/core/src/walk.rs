//! The multi-thread walk of the S-inverse, arranged so that many cache
//! misses are in flight at once.
//!
//! Following θ is a chain of dependent loads, which runs at memory latency
//! once θ outgrows the cache. Here every `stride`-th index is a sample, and
//! the pieces of cycle between consecutive samples are walked side by side,
//! round-robin, so their loads overlap. Each piece collects its letters in
//! its own buffer, along with the smallest index it passed. Afterwards the
//! cycles are laid out exactly as `multi_thread` lays them out, by copying
//! whole pieces. Cycles that contain no sample are short and are walked one
//! at a time.
//!

const NONE: u32 = u32::MAX;

/// θ(k) and η[k] side by side, so a step touches one line. Packed to five
/// bytes: the walk is bound by cache and TLB misses, not by alignment.
#[derive(Clone, Copy)]
#[repr(C, packed)]
struct Entry {
    next: u32,
    letter: u8,
}

/// One bit per index; small enough to stay cached while the walk runs.
struct Marks(Vec<u64>);

impl Marks {
    fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    #[inline]
    fn set(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }

    #[inline]
    fn get(&self, k: usize) -> bool {
        self.0[k / 64] >> (k % 64) & 1 != 0
    }
}

struct Piece {
    /// Sample at which the walk from this sample stops.
    next: u32,
    /// Smallest index on the piece and its offset from the sample.
    min: u32,
    min_at: u32,
    /// Letters in walk order.
    letters: Vec<u8>,
}

struct Cycle {
    min: u32,
    len: u32,
    /// Piece holding `min`, or `NONE` for a cycle without samples.
    piece: u32,
}

/// Default sample spacing: about 512 walkers, and at least 64 steps each.
pub(crate) fn default_stride(n: usize) -> usize {
    (n / 512).next_power_of_two().max(64)
}

/// Same output as `multi_thread(eta, θ)`. `stride` must be a power of two.
pub(crate) fn unthread(eta: &[u8], theta: impl IntoIterator<Item = u32>, stride: usize) -> Vec<u8> {
    debug_assert!(stride.is_power_of_two());
    let entries: Vec<Entry> = theta
        .into_iter()
        .zip(eta)
        .map(|(next, &letter)| Entry { next, letter })
        .collect();
    let n = entries.len();
    debug_assert_eq!(n, eta.len());
    let mut visited = Marks::new(n);
    let mask = stride - 1;
    let samples = n.div_ceil(stride);

    let mut pieces: Vec<Piece> = (0..samples)
        .map(|_| Piece {
            next: 0,
            min: NONE,
            min_at: 0,
            letters: Vec::with_capacity(stride),
        })
        .collect();
    let mut cursor: Vec<u32> = (0..samples).map(|s| (s * stride) as u32).collect();
    let mut active: Vec<u32> = (0..samples as u32).collect();
    while !active.is_empty() {
        let mut i = 0;
        while i < active.len() {
            let w = active[i] as usize;
            let p = cursor[w];
            let piece = &mut pieces[w];
            if p < piece.min {
                piece.min = p;
                piece.min_at = piece.letters.len() as u32;
            }
            let entry = entries[p as usize];
            visited.set(p as usize);
            piece.letters.push(entry.letter);
            let next = entry.next;
            if next as usize & mask == 0 {
                piece.next = next / stride as u32;
                active.swap_remove(i);
            } else {
                cursor[w] = next;
                i += 1;
            }
        }
    }
    drop(cursor);
    drop(active);

    // Group pieces into cycles, then find the cycles without samples.
    let mut cycles = Vec::new();
    let mut grouped = vec![false; samples];
    for s in 0..samples {
        if grouped[s] {
            continue;
        }
        let (mut len, mut best) = (0, s);
        let mut k = s;
        while !grouped[k] {
            grouped[k] = true;
            len += pieces[k].letters.len() as u32;
            if pieces[k].min < pieces[best].min {
                best = k;
            }
            k = pieces[k].next as usize;
        }
        cycles.push(Cycle {
            min: pieces[best].min,
            len,
            piece: best as u32,
        });
    }
    drop(grouped);
    for j in 0..n {
        let mut len = 0;
        let mut k = j;
        while !visited.get(k) {
            visited.set(k);
            len += 1;
            k = entries[k].next as usize;
        }
        if len > 0 {
            cycles.push(Cycle {
                min: j as u32,
                len,
                piece: NONE,
            });
        }
    }

    // Cycles fill the output from the back in order of their minimum, each
    // written last letter first, starting from the minimum.
    cycles.sort_unstable_by_key(|c| c.min);
    let mut out = vec![0u8; n];
    let mut end = n;
    for cycle in &cycles {
        let lo = end - cycle.len as usize;
        let block = &mut out[lo..end];
        if cycle.piece == NONE {
            let mut k = cycle.min as usize;
            for slot in block.iter_mut().rev() {
                *slot = entries[k].letter;
                k = entries[k].next as usize;
            }
        } else {
            let first = cycle.piece as usize;
            let at = pieces[first].min_at as usize;
            let mut fill = block.iter_mut().rev();
            let mut emit = |letters: &[u8]| {
                for (&c, slot) in letters.iter().zip(&mut fill) {
                    *slot = c;
                }
            };
            emit(&pieces[first].letters[at..]);
            let mut k = pieces[first].next as usize;
            while k != first {
                emit(&std::mem::take(&mut pieces[k].letters));
                k = pieces[k].next as usize;
            }
            emit(&pieces[first].letters[..at]);
            pieces[first].letters = Vec::new();
        }
        end = lo;
    }
    out
}
