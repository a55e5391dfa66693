//! Multi-word bitset rows.
//!
//! Adjacency rows are stored as `&[u64]` slices; these free functions are the
//! only bit fiddling the rest of the crate does. Rows for graphs with
//! `n <= 64` occupy a single word, which the DP and canonical-form code
//! accesses directly via [`crate::graph::Graph::row_mask64`].

pub const WORD_BITS: usize = 64;

/// Number of 64-bit words needed for `n` bits.
pub fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

pub fn test_bit(row: &[u64], i: usize) -> bool {
    (row[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
}

pub fn set_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

pub fn clear_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

pub fn count_ones(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// `dst = a & b` elementwise.
pub fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// Clears bits `0..=i` in `row` (keeps only indices strictly above `i`).
pub fn keep_above(row: &mut [u64], i: usize) {
    let w = i / WORD_BITS;
    for word in row.iter_mut().take(w) {
        *word = 0;
    }
    let r = i % WORD_BITS;
    if r == WORD_BITS - 1 {
        row[w] = 0;
    } else {
        row[w] &= !((1u64 << (r + 1)) - 1);
    }
}

/// Iterator over the set bit indices of a row, ascending.
pub struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl<'a> Ones<'a> {
    pub fn new(row: &'a [u64]) -> Self {
        Ones {
            row,
            word: 0,
            bits: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * WORD_BITS + tz)
    }
}

pub fn ones(row: &[u64]) -> Ones<'_> {
    Ones::new(row)
}
