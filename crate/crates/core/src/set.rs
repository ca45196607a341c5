//! Fixed-universe bit sets over carrier indices.

use std::fmt;

/// A subset of `0..universe`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, iter: I) -> Self {
        let mut s = Self::new(universe);
        for x in iter {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x >> 6] & (1 << (x & 63)) != 0
    }

    /// Returns true if `x` was newly inserted.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.universe,
            "element {x} outside universe {}",
            self.universe
        );
        let w = &mut self.words[x >> 6];
        let bit = 1 << (x & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x >> 6] &= !(1 << (x & 63));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Ascending member list.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under an index map into another universe.
    pub fn map(&self, universe: usize, f: impl Fn(usize) -> usize) -> ElementSet {
        ElementSet::from_iter(universe, self.iter().map(f))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElementSet::from_iter(100, [1, 5, 64, 99]);
        let b = ElementSet::from_iter(100, [5, 64, 70]);
        assert_eq!(a.len(), 4);
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 64]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 5, 64, 70, 99]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 99]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(!a.contains(100));
    }

    #[test]
    fn full_and_empty() {
        let f = ElementSet::full(81);
        assert!(f.is_full());
        assert_eq!(f.len(), 81);
        let e = ElementSet::new(81);
        assert!(e.is_empty());
        assert!(e.is_subset(&f));
        assert!(e.is_disjoint(&f));
    }
}
