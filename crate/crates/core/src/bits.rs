//! Packed GF(2) vectors and the bit-matrix routines the code analysis needs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

/// A fixed-length GF(2) vector packed into 64-bit words. Bits past `len` in
/// the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                v.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        v
    }

    /// Parses a string of `'0'`/`'1'` characters.
    pub fn parse01(s: &str) -> Option<Self> {
        let bytes = s.as_bytes();
        if bytes.iter().any(|&c| c != b'0' && c != b'1') {
            return None;
        }
        Some(Self::from_fn(bytes.len(), |i| bytes[i] == b'1'))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1 << (i % WORD);
        if bit {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// True when `supp(self) ⊆ supp(other)`.
    pub fn is_covered_by(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<BitVec>) -> Vec<usize> {
    let Some(n) = rows.first().map(BitVec::len) else {
        return Vec::new();
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[BitVec]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work).len()
}

/// Basis of `{v : row · v = 0 for every row}` in `GF(2)^n`.
pub fn null_space(rows: &[BitVec], n: usize) -> Vec<BitVec> {
    let mut work = rows.to_vec();
    let pivots = row_reduce(&mut work);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVec::zeros(n);
            v.set(free, true);
            for (row, &p) in work.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}
