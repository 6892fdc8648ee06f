use alloc::vec;
use alloc::vec::Vec;

/// Fixed-capacity set of small integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(capacity: usize) -> BitSet {
        BitSet { words: vec![0; capacity.div_ceil(64)] }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    /// Returns true if `i` was not present before.
    pub fn insert(&mut self, i: usize) -> bool {
        let mask = 1u64 << (i % 64);
        let w = &mut self.words[i / 64];
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Adds `other` into `self` and returns the members that were new.
    pub fn union_new(&mut self, other: &BitSet) -> BitSet {
        let mut fresh = BitSet { words: vec![0; self.words.len()] };
        for ((a, b), f) in self.words.iter_mut().zip(&other.words).zip(&mut fresh.words) {
            *f = *b & !*a;
            *a |= *b;
        }
        fresh
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_union() {
        let mut a = BitSet::new(130);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        a.insert(129);
        let mut b = BitSet::new(130);
        b.insert(3);
        b.insert(64);
        let fresh = a.union_new(&b);
        assert_eq!(fresh.iter().collect::<Vec<_>>(), vec![64]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert!(a.intersects(&b));
        assert!(!BitSet::new(130).intersects(&b));
    }
}
