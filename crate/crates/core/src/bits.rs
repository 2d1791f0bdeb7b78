//! Compact fixed-length bit vectors.
//!
//! Subsets of the universe and rows of relation matrices are all `BitVec`s.
//! Universes handled by this crate are small (the enumeration caps bite long
//! before 64 elements), so a short vector of machine words with word-parallel
//! operations covers everything.

use std::fmt;

const WORD_BITS: usize = 64;

/// Fixed-length bit vector. Binary operations require equal lengths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The empty set over `len` points.
    pub fn new(len: usize) -> Self {
        let n = len.div_ceil(WORD_BITS).max(1);
        BitVec { len, words: vec![0; n] }
    }

    /// The full set over `len` points.
    pub fn full(len: usize) -> Self {
        let mut bv = Self::new(len);
        for w in &mut bv.words {
            *w = !0;
        }
        bv.trim();
        bv
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut bv = Self::new(len);
        bv.set(i, true);
        bv
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut bv = Self::new(len);
        for i in indices {
            bv.set(i, true);
        }
        bv
    }

    /// Interprets the low `len` bits of `word` as a set. Handy for counting
    /// through all subsets of a small universe.
    pub fn from_word(len: usize, word: u64) -> Self {
        debug_assert!(len <= WORD_BITS);
        let mut bv = Self::new(len);
        bv.words[0] = word;
        bv.trim();
        bv
    }

    fn trim(&mut self) {
        let used = self.len % WORD_BITS;
        if used != 0 {
            let last = self.len / WORD_BITS;
            self.words[last] &= (1u64 << used) - 1;
        }
        for w in &mut self.words[self.len.div_ceil(WORD_BITS).max(1)..] {
            *w = 0;
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn inter(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    /// Complement within the universe of `len` points.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }
}

/// Numeric order: a `BitVec` compares as the integer whose binary digits are
/// its membership bits (element 0 least significant). This gives subsets of a
/// fixed universe a stable, counting-order total order.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_on_small_sets() {
        let a = BitVec::from_indices(5, [0, 2, 4]);
        let b = BitVec::from_indices(5, [1, 2]);
        assert_eq!(a.union(&b), BitVec::from_indices(5, [0, 1, 2, 4]));
        assert_eq!(a.inter(&b), BitVec::from_indices(5, [2]));
        assert_eq!(a.minus(&b), BitVec::from_indices(5, [0, 4]));
        assert_eq!(a.complement(), BitVec::from_indices(5, [1, 3]));
        assert!(a.inter(&b).is_subset(&a));
        assert!(a.intersects(&b));
        assert_eq!(a.count(), 3);
    }

    #[test]
    fn complement_stays_inside_universe() {
        let empty = BitVec::new(7);
        let full = empty.complement();
        assert_eq!(full.count(), 7);
        assert!(full.is_full());
        assert_eq!(full, BitVec::full(7));
        assert_eq!(full.complement(), empty);
    }

    #[test]
    fn word_boundary_sizes() {
        for len in [63, 64, 65, 130] {
            let full = BitVec::full(len);
            assert_eq!(full.count(), len);
            let mut bv = BitVec::new(len);
            bv.set(len - 1, true);
            assert!(bv.get(len - 1));
            assert_eq!(bv.iter_ones().collect::<Vec<_>>(), vec![len - 1]);
            assert_eq!(bv.complement().count(), len - 1);
        }
    }

    #[test]
    fn numeric_order_counts_like_binary() {
        // {} < {a} < {b} < {a,b} < {c} < ...
        let mut subsets: Vec<BitVec> = (0u64..8).map(|w| BitVec::from_word(3, w)).collect();
        let mut sorted = subsets.clone();
        sorted.sort();
        assert_eq!(subsets, sorted);
        subsets.reverse();
        subsets.sort();
        assert_eq!(subsets, sorted);
    }

    #[test]
    fn iter_ones_crosses_words() {
        let bv = BitVec::from_indices(100, [0, 63, 64, 99]);
        assert_eq!(bv.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 99]);
        assert_eq!(bv.first_one(), Some(0));
        assert_eq!(BitVec::new(100).first_one(), None);
    }
}
