//! Fixed-capacity bit sets used for vertex and candidate masks.
//!
//! Grids handled by the exact machinery never exceed [`Mask::CAPACITY`]
//! vertices, so a flat `[u64; 4]` keeps every set operation branch-free
//! and allocation-free.

/// A set of up to 256 small indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mask {
    words: [u64; 4],
}

impl Mask {
    pub const CAPACITY: usize = 256;

    pub const EMPTY: Mask = Mask { words: [0; 4] };

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < Self::CAPACITY);
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < Self::CAPACITY);
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < Self::CAPACITY);
        self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words == [0; 4]
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn union(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn intersect(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        out
    }

    /// Elements of `self` not in `other`.
    #[inline]
    pub fn minus(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn union_in_place(&mut self, other: &Mask) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Set containing `0..n`.
    pub fn all_below(n: usize) -> Mask {
        debug_assert!(n <= Self::CAPACITY);
        let mut out = Mask::EMPTY;
        let full = n >> 6;
        for w in 0..full {
            out.words[w] = u64::MAX;
        }
        let rem = n & 63;
        if rem != 0 {
            out.words[full] = (1u64 << rem) - 1;
        }
        out
    }

    /// Index of the lowest set bit.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some((w << 6) + word.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn iter(&self) -> MaskIter {
        MaskIter {
            words: self.words,
            word_ix: 0,
        }
    }

    /// Raw words, used for hashing and serialization.
    pub fn words(&self) -> &[u64; 4] {
        &self.words
    }
}

impl std::fmt::Debug for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut out = Mask::EMPTY;
        for i in iter {
            out.insert(i);
        }
        out
    }
}

pub struct MaskIter {
    words: [u64; 4],
    word_ix: usize,
}

impl Iterator for MaskIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word_ix < 4 {
            let w = self.words[self.word_ix];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word_ix] = w & (w - 1);
                return Some((self.word_ix << 6) + bit);
            }
            self.word_ix += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut m = Mask::EMPTY;
        for i in [0usize, 1, 63, 64, 100, 255] {
            m.insert(i);
        }
        assert_eq!(m.len(), 6);
        assert!(m.contains(63));
        assert!(!m.contains(62));
        let got: Vec<usize> = m.iter().collect();
        assert_eq!(got, vec![0, 1, 63, 64, 100, 255]);
    }

    #[test]
    fn subset_and_ops() {
        let a: Mask = [1usize, 2, 3].into_iter().collect();
        let b: Mask = [1usize, 2, 3, 9].into_iter().collect();
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(b.minus(&a).iter().collect::<Vec<_>>(), vec![9]);
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersect(&b), a);
    }

    #[test]
    fn all_below_boundaries() {
        assert_eq!(Mask::all_below(0).len(), 0);
        assert_eq!(Mask::all_below(64).len(), 64);
        assert_eq!(Mask::all_below(65).len(), 65);
        assert_eq!(Mask::all_below(256).len(), 256);
        assert!(Mask::all_below(130).contains(129));
        assert!(!Mask::all_below(130).contains(130));
    }
}
