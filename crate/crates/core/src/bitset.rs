use std::cmp::Ordering;
use std::fmt;

const WORD: usize = u64::BITS as usize;

/// A subset of `{0, .., domain-1}`, stored as a dense bitset.
///
/// Ordering compares domains first and then the sets as binary numbers with
/// position 0 as the least significant bit, which is the canonical
/// "sorted-bitmask" order used when listing subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    domain: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(domain: usize) -> Self {
        ElemSet {
            domain,
            words: vec![0; domain.div_ceil(WORD)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::empty(domain);
        for (i, w) in s.words.iter_mut().enumerate() {
            let remaining = domain - i * WORD;
            *w = if remaining >= WORD {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        s
    }

    pub fn singleton(domain: usize, pos: usize) -> Self {
        let mut s = Self::empty(domain);
        s.insert(pos);
        s
    }

    /// Panics if a position is outside the domain.
    pub fn from_positions(domain: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(domain);
        for p in positions {
            s.insert(p);
        }
        s
    }

    /// Low `domain` bits of `mask`; only valid for `domain <= 64`.
    pub fn from_mask(domain: usize, mask: u64) -> Self {
        assert!(domain <= WORD);
        let mut s = Self::empty(domain);
        if domain > 0 {
            s.words[0] = mask & Self::full(domain).words[0];
        }
        s
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos < self.domain && self.words[pos / WORD] & (1 << (pos % WORD)) != 0
    }

    pub fn insert(&mut self, pos: usize) -> bool {
        assert!(pos < self.domain, "position {pos} outside domain {}", self.domain);
        let w = &mut self.words[pos / WORD];
        let before = *w;
        *w |= 1 << (pos % WORD);
        *w != before
    }

    pub fn remove(&mut self, pos: usize) -> bool {
        if pos >= self.domain {
            return false;
        }
        let w = &mut self.words[pos / WORD];
        let before = *w;
        *w &= !(1 << (pos % WORD));
        *w != before
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.domain)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.domain, other.domain);
        ElemSet {
            domain: self.domain,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.domain, other.domain);
        ElemSet {
            domain: self.domain,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Positions in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sets_only_low_bits() {
        for d in [0, 1, 7, 63, 64, 65, 130] {
            let f = ElemSet::full(d);
            assert_eq!(f.count(), d);
            assert_eq!(f.iter().collect::<Vec<_>>(), (0..d).collect::<Vec<_>>());
        }
    }

    #[test]
    fn mask_order() {
        let a = ElemSet::from_mask(4, 0b0101);
        let b = ElemSet::from_mask(4, 0b0011);
        let c = ElemSet::from_mask(4, 0b1000);
        let mut v = vec![c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![b, a, c]);

        let wide_lo = ElemSet::from_positions(70, [0, 1, 2]);
        let wide_hi = ElemSet::from_positions(70, [69]);
        assert!(wide_lo < wide_hi);
    }

    #[test]
    fn subset_and_ops() {
        let a = ElemSet::from_positions(10, [1, 3, 5]);
        let b = ElemSet::from_positions(10, [1, 3, 5, 9]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersection(&b), a);
        assert!(ElemSet::empty(10).is_subset(&a));
        let mut c = a.clone();
        assert!(c.remove(3));
        assert!(!c.remove(3));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![1, 5]);
    }
}
