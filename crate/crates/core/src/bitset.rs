//! Fixed-width bitset over `0..len`, with the shift-or sumset used by the
//! gap-sum machinery.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = BitSet::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Panics if `i >= len`.
    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range 0..{}", self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i >> 6] &= !(1 << (i & 63));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// `self |= other << shift`, truncated to `self.len`.
    pub fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        let n = self.words.len();
        for (k, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let dst = k + word_shift;
            if dst >= n {
                break;
            }
            self.words[dst] |= w << bit_shift;
            if bit_shift != 0 && dst + 1 < n {
                self.words[dst + 1] |= w >> (64 - bit_shift);
            }
        }
        self.trim();
    }

    /// Minkowski sum `{a + b : a ∈ self, b ∈ other}` as a set of width `len`.
    pub fn sumset(&self, other: &BitSet, len: usize) -> BitSet {
        let mut out = BitSet::new(len);
        let (small, large) = if self.count() <= other.count() {
            (self, other)
        } else {
            (other, self)
        };
        for b in small.iter() {
            out.or_shifted(large, b);
        }
        out
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    fn trim(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
