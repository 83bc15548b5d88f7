//! Linear-time sorting of the conjugates of a sequence of Lyndon words under
//! the infinite-periodic order.
//!
//! Position `i` of word `w` stands for the infinite word `X_i` read
//! cyclically through `w` from `i`. Because `X_i = s[i] · X_next(i)`, with
//! `next` wrapping back to the start of the word, the L/S typing and induced
//! sorting of SA-IS carry over unchanged:
//!
//! - a word start is always S-type (a Lyndon word is its own least
//!   conjugate) and its cyclic predecessor is L-type, so every word of length
//!   at least two holds an LMS position;
//! - the LMS substrings of a word, renamed by rank, form a shorter Lyndon
//!   word, so the reduced problem has the same shape and is solved
//!   recursively;
//! - a one-letter word `c` is the fixed point `c^ω` and sits between the L
//!   and S parts of bucket `c`.
//!
//! Two conjugates are equal only when they come from identical words. Those
//! keep ascending position order, which induced sorting preserves.

const EMPTY: u32 = u32::MAX;

const S_TYPE: u8 = 1;
const SINGLE: u8 = 2;
const START: u8 = 4;
const LMS: u8 = 8;

pub(crate) trait Symbol: Copy + Eq {
    fn index(self) -> usize;
}

impl Symbol for u8 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl Symbol for u32 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

/// How many suffix-array slots ahead induction prefetches cells.
const PREFETCH_DISTANCE: usize = 32;

#[inline(always)]
fn prefetch<T>(r: &T) {
    #[cfg(target_arch = "x86_64")]
    // SAFETY: a prefetch is only a hint; it never faults or changes memory.
    unsafe {
        use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        _mm_prefetch::<_MM_HINT_T0>((r as *const T).cast());
    }
    #[cfg(not(target_arch = "x86_64"))]
    let _ = r;
}

/// A symbol stored next to its flags, so induction touches one cache line
/// per position rather than two. Packed, since in the recursion the cells
/// outgrow the cache and every byte saved is fewer misses.
#[derive(Clone, Copy)]
#[repr(C, packed)]
struct Cell<T> {
    sym: T,
    flags: u8,
}

struct Words<'a, T> {
    cells: Vec<Cell<T>>,
    starts: &'a [u32],
    /// Bucket of symbol `c` is `bounds[c]..bounds[c + 1]`.
    bounds: Vec<u32>,
}

impl<'a, T: Symbol> Words<'a, T> {
    fn new(s: &[T], upper: usize, starts: &'a [u32]) -> Self {
        let n = s.len();
        let mut cells: Vec<Cell<T>> = s.iter().map(|&sym| Cell { sym, flags: 0 }).collect();
        for (w, &a) in starts.iter().enumerate() {
            let a = a as usize;
            let b = starts.get(w + 1).map_or(n, |&e| e as usize);
            cells[a].flags |= START;
            if b - a == 1 {
                cells[a].flags |= SINGLE;
                continue;
            }
            cells[a].flags |= S_TYPE | LMS;
            // Right to left, carrying the type of the cyclic successor.
            let (mut next_sym, mut next_s) = (s[a].index(), S_TYPE);
            for i in (a + 1..b).rev() {
                let c = s[i].index();
                let this_s = ((c < next_sym) as u8) | ((c == next_sym) as u8 & next_s);
                // The successor is LMS when it is S and this one is L.
                if i + 1 < b {
                    cells[i + 1].flags |= LMS * (next_s & !this_s);
                }
                cells[i].flags |= this_s;
                (next_sym, next_s) = (c, this_s);
            }
        }

        let mut bounds = vec![0u32; upper + 1];
        for cell in &cells {
            bounds[cell.sym.index() + 1] += 1;
        }
        for c in 1..=upper {
            bounds[c] += bounds[c - 1];
        }
        Self {
            cells,
            starts,
            bounds,
        }
    }

    fn len(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    fn word_end(&self, w: usize) -> usize {
        self.starts.get(w + 1).map_or(self.len(), |&e| e as usize)
    }

    #[inline]
    fn word_of(&self, i: usize) -> usize {
        self.starts.partition_point(|&p| p as usize <= i) - 1
    }

    #[inline]
    fn next(&self, i: usize) -> usize {
        let j = i + 1;
        if j < self.len() && self.cells[j].flags & START == 0 {
            j
        } else {
            self.starts[self.word_of(i)] as usize
        }
    }

    /// Cyclic predecessor of `i` with its cell.
    #[inline]
    fn prev(&self, i: usize) -> (usize, Cell<T>) {
        let q = if self.cells[i].flags & START == 0 {
            i - 1
        } else {
            self.word_end(self.word_of(i)) - 1
        };
        (q, self.cells[q])
    }

    #[inline]
    fn is_lms(&self, i: usize) -> bool {
        self.cells[i].flags & LMS != 0
    }

    fn lms_positions(&self) -> Vec<u32> {
        (0..self.len())
            .filter(|&i| self.is_lms(i))
            .map(|i| i as u32)
            .collect()
    }

    /// Hints the cell before `p`, which induction will read shortly.
    #[inline(always)]
    fn prefetch_prev(&self, p: u32) {
        if p != EMPTY {
            prefetch(&self.cells[(p as usize).saturating_sub(1)]);
        }
    }

    /// Hints the bucket cursor that `p`'s predecessor will move. Its cell was
    /// prefetched a round earlier, so reading it here is usually a hit. With
    /// the large alphabets of the recursion the cursors are a miss of their own.
    #[inline(always)]
    fn prefetch_cursor(&self, p: u32, cursor: &[u32]) {
        if p != EMPTY {
            let (_, cell) = self.prev(p as usize);
            prefetch(&cursor[cell.sym.index()]);
        }
    }

    /// Induced sort seeded with LMS positions in `seeds` order; one-letter
    /// words are left out (their slots stay `EMPTY`). With `collect`, the
    /// seed buffer comes back holding the LMS positions in induced order.
    fn induce(&self, sa: &mut [u32], mut seeds: Vec<u32>, collect: bool) -> Vec<u32> {
        sa.fill(EMPTY);
        let mut cursor = self.bounds[1..].to_vec();
        let tail = &mut cursor;
        for &p in seeds.iter().rev() {
            let c = self.cells[p as usize].sym.index();
            tail[c] -= 1;
            sa[tail[c] as usize] = p;
        }
        seeds.clear();
        let lms = &mut seeds;
        cursor.copy_from_slice(&self.bounds[..self.bounds.len() - 1]);
        let head = &mut cursor;
        for i in 0..sa.len() {
            if let Some(&ahead) = sa.get(i + 2 * PREFETCH_DISTANCE) {
                self.prefetch_prev(ahead);
            }
            if let Some(&ahead) = sa.get(i + PREFETCH_DISTANCE) {
                self.prefetch_cursor(ahead, head);
            }
            let p = sa[i];
            if p == EMPTY {
                continue;
            }
            let (q, cell) = self.prev(p as usize);
            if cell.flags & (S_TYPE | SINGLE) == 0 {
                let c = cell.sym.index();
                sa[head[c] as usize] = q as u32;
                head[c] += 1;
            }
        }
        cursor.copy_from_slice(&self.bounds[1..]);
        let tail = &mut cursor;
        // Bucket of slot `i`. Slots at or above their bucket's tail hold
        // S-type positions, and an S-type position is LMS exactly when its
        // predecessor is L-type, which this pass reads anyway.
        let mut bucket = self.bounds.len() - 2;
        for i in (0..sa.len()).rev() {
            while (i as u32) < self.bounds[bucket] {
                bucket -= 1;
            }
            if let Some(&ahead) = i.checked_sub(2 * PREFETCH_DISTANCE).map(|j| &sa[j]) {
                self.prefetch_prev(ahead);
            }
            if let Some(&ahead) = i.checked_sub(PREFETCH_DISTANCE).map(|j| &sa[j]) {
                self.prefetch_cursor(ahead, tail);
            }
            let p = sa[i];
            if p == EMPTY {
                continue;
            }
            let (q, cell) = self.prev(p as usize);
            if cell.flags & S_TYPE != 0 {
                let c = cell.sym.index();
                tail[c] -= 1;
                sa[tail[c] as usize] = q as u32;
            } else if collect && i as u32 >= tail[bucket] {
                lms.push(p);
            }
        }
        seeds.reverse();
        seeds
    }

    /// One-letter words fill the gaps that induction leaves between the L
    /// and S parts of their buckets, ascending by letter, then position.
    fn place_singles(&self, sa: &mut [u32]) {
        let mut singles: Vec<u32> = self
            .starts
            .iter()
            .copied()
            .filter(|&a| self.cells[a as usize].flags & SINGLE != 0)
            .collect();
        singles.sort_by_key(|&a| self.cells[a as usize].sym.index());
        let mut next = singles.into_iter();
        for slot in sa.iter_mut().filter(|slot| **slot == EMPTY) {
            *slot = next.next().expect("one gap slot per one-letter word");
        }
    }

    /// Whether the LMS substrings at `p` and `q` (through the next LMS
    /// position, inclusive) agree in letters and types.
    fn same_lms_substring(&self, p: usize, q: usize) -> bool {
        let same =
            |a: Cell<T>, b: Cell<T>| { a.sym } == { b.sym } && a.flags & S_TYPE == b.flags & S_TYPE;
        let (mut i, mut j) = (p, q);
        loop {
            if !same(self.cells[i], self.cells[j]) {
                return false;
            }
            i = self.next(i);
            j = self.next(j);
            match (self.is_lms(i), self.is_lms(j)) {
                (false, false) => {}
                (true, true) => return same(self.cells[i], self.cells[j]),
                _ => return false,
            }
        }
    }
}

/// Sorts every position of `s` by the infinite periodic word of its
/// conjugate. `starts` lists the (ascending) starting positions of the Lyndon
/// words covering `s`, beginning with 0; symbols are below `upper`. Ties,
/// which only occur between identical words, go by position.
pub(crate) fn sort_conjugates<T: Symbol>(s: &[T], upper: usize, starts: &[u32]) -> Vec<u32> {
    sort_words(Words::new(s, upper, starts))
}

fn sort_words<T: Symbol>(words: Words<'_, T>) -> Vec<u32> {
    let n = words.len();
    let mut sa = vec![EMPTY; n];

    // Sort the LMS substrings and name them by rank.
    let sorted = words.induce(&mut sa, words.lms_positions(), true);
    let nl = sorted.len();
    sa[..nl].copy_from_slice(&sorted);
    drop(sorted);
    // LMS positions are at least two apart, so p/2 gives each its own slot.
    sa[nl..].fill(EMPTY);
    let mut name = 0u32;
    for k in 0..nl {
        if k + PREFETCH_DISTANCE < nl {
            let ahead = sa[k + PREFETCH_DISTANCE] as usize;
            prefetch(&words.cells[ahead]);
            prefetch(&sa[nl + ahead / 2]);
        }
        let p = sa[k] as usize;
        if k > 0 && !words.same_lms_substring(sa[k - 1] as usize, p) {
            name += 1;
        }
        sa[nl + p / 2] = name;
    }
    let names = if nl == 0 { 0 } else { name as usize + 1 };

    // Reduced words, one per word of length two or more, in position order.
    let mut reduced = Vec::with_capacity(nl);
    let mut reduced_starts = Vec::new();
    for p in 0..n {
        if words.is_lms(p) {
            if words.cells[p].flags & START != 0 {
                reduced_starts.push(reduced.len() as u32);
            }
            reduced.push(sa[nl + p / 2]);
        }
    }
    drop(sa);

    let mut order = if names == nl {
        let mut inv = vec![0u32; nl];
        for (k, &r) in reduced.iter().enumerate() {
            inv[r as usize] = k as u32;
        }
        inv
    } else {
        let sub = Words::new(&reduced, names, &reduced_starts);
        drop(reduced);
        sort_words(sub)
    };

    let lms = words.lms_positions();
    for i in 0..order.len() {
        if let Some(&ahead) = order.get(i + PREFETCH_DISTANCE) {
            prefetch(&lms[ahead as usize]);
        }
        order[i] = lms[order[i] as usize];
    }
    drop(lms);

    let mut sa = vec![EMPTY; n];
    words.induce(&mut sa, order, false);
    words.place_singles(&mut sa);
    sa
}

/// The periodic S-transform from the sorted conjugates: the letter cyclically
/// preceding each one.
pub(crate) fn bwts_periodic(s: &[u8], starts: &[u32]) -> Vec<u8> {
    let sa = sort_conjugates(s, 256, starts);
    let mut before = Vec::with_capacity(s.len());
    for (w, &a) in starts.iter().enumerate() {
        let b = starts.get(w + 1).map_or(s.len(), |&e| e as usize);
        let a = a as usize;
        before.push(s[b - 1]);
        before.extend_from_slice(&s[a..b - 1]);
    }
    (0..sa.len())
        .map(|i| {
            if let Some(&ahead) = sa.get(i + PREFETCH_DISTANCE) {
                prefetch(&before[ahead as usize]);
            }
            before[sa[i] as usize]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::for_each_factor;
    use crate::rotation::{FactoredText, OrderKind};

    fn starts_of(s: &[u8]) -> Vec<u32> {
        let mut starts = Vec::new();
        for_each_factor(s, |start, _| starts.push(start as u32));
        starts
    }

    fn comparator_sort(s: &[u8]) -> Vec<u32> {
        let mut bounds = starts_of(s);
        bounds.push(s.len() as u32);
        FactoredText::new(s, bounds).sorted_positions(OrderKind::InfinitePeriodic)
    }

    #[test]
    fn banana() {
        let s = b"banana";
        assert_eq!(sort_conjugates(s, 256, &starts_of(s)), comparator_sort(s));
        assert_eq!(bwts_periodic(s, &starts_of(s)), b"annbaa");
    }

    #[test]
    fn agrees_with_comparator_sort_exhaustively() {
        for len in 1..=10u32 {
            for code in 0..3usize.pow(len) {
                let mut c = code;
                let s: Vec<u8> = (0..len)
                    .map(|_| {
                        let ch = b'a' + (c % 3) as u8;
                        c /= 3;
                        ch
                    })
                    .collect();
                assert_eq!(
                    sort_conjugates(&s, 256, &starts_of(&s)),
                    comparator_sort(&s),
                    "{s:?}"
                );
            }
        }
    }

    #[test]
    fn agrees_on_repetitive_inputs() {
        let mut inputs: Vec<Vec<u8>> = vec![
            b"aaaaaaaaaa".to_vec(),
            b"zyxwvutsrq".to_vec(),
            b"abababababab".to_vec(),
            b"ababbababbabab".to_vec(),
            b"mississippi".to_vec(),
            b"now is the time for the truly nice people to come to the party".to_vec(),
        ];
        let fib = {
            let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
            while b.len() < 3000 {
                let next = [b.clone(), a].concat();
                a = b;
                b = next;
            }
            b
        };
        inputs.push(fib.clone());
        inputs.push(fib.iter().rev().copied().collect());
        inputs.push(b"abcab".repeat(300));
        inputs.push([b"ba".repeat(200), b"b".repeat(50), b"ab".repeat(100)].concat());
        for s in &inputs {
            assert_eq!(sort_conjugates(s, 256, &starts_of(s)), comparator_sort(s));
        }
    }
}
