//! Small sets of point indices packed into a `u64`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Hard ceiling on the number of labelled elements any structure may hold.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `0..64`.
///
/// `Ord` is the lexicographic order of the sorted index lists, so `{0, 5}`
/// sorts before `{1}` and every set sorts after each of its proper prefixes.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS);
        IndexSet(1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ELEMENTS);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_ELEMENTS {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Re-indexes `self ⊆ universe` onto `0..universe.len()`, preserving order.
    pub fn compress(self, universe: IndexSet) -> IndexSet {
        debug_assert!(self.is_subset(universe));
        let mut out = IndexSet::EMPTY;
        for (pos, i) in universe.iter().enumerate() {
            if self.contains(i) {
                out.insert(pos);
            }
        }
        out
    }

    /// Lexicographic enumeration of all subsets of `0..n`, starting at `∅`.
    pub fn lex_subsets(n: usize) -> LexSubsets {
        assert!(n < MAX_ELEMENTS);
        LexSubsets {
            n,
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// All `m`-subsets of `universe`, in lexicographic order.
    pub fn combinations(universe: IndexSet, m: usize) -> impl Iterator<Item = IndexSet> {
        use itertools::Itertools;
        universe
            .to_vec()
            .into_iter()
            .combinations(m)
            .map(|c| c.into_iter().collect())
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        let above = if p == 63 { 0 } else { u64::MAX << (p + 1) };
        let (has, lacks) = if self.0 >> p & 1 == 1 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if lacks & above == 0 {
            // the set lacking `p` stops here, so it is a proper prefix of the other
            has.reverse()
        } else {
            has
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IndexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct LexSubsets {
    n: usize,
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for LexSubsets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(IndexSet::EMPTY);
        }
        match self.stack.last().copied() {
            None if self.n == 0 => {
                self.done = true;
                return None;
            }
            None => self.stack.push(0),
            Some(last) if last + 1 < self.n => self.stack.push(last + 1),
            Some(_) => {
                self.stack.pop();
                match self.stack.last_mut() {
                    Some(e) => *e += 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
        Some(self.stack.iter().collect())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!(
                "index {bad} exceeds {}",
                MAX_ELEMENTS - 1
            )));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_order_matches_sorted_lists() {
        let a: IndexSet = [0, 5].into_iter().collect();
        let b: IndexSet = [1].into_iter().collect();
        let c: IndexSet = [0].into_iter().collect();
        assert!(a < b);
        assert!(c < a);
        assert!(IndexSet::EMPTY < c);
    }

    #[test]
    fn lex_subsets_enumerates_everything_in_order() {
        let all: Vec<_> = IndexSet::lex_subsets(4).collect();
        assert_eq!(all.len(), 16);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[1].to_vec(), vec![0]);
        assert_eq!(all[2].to_vec(), vec![0, 1]);
        assert_eq!(all.last().unwrap().to_vec(), vec![3]);
        assert_eq!(IndexSet::lex_subsets(0).count(), 1);
    }

    #[test]
    fn compress_reindexes() {
        let universe: IndexSet = [1, 4, 6].into_iter().collect();
        let s: IndexSet = [4, 6].into_iter().collect();
        assert_eq!(s.compress(universe).to_vec(), vec![1, 2]);
    }

    proptest! {
        #[test]
        fn ord_agrees_with_vec_ord(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (IndexSet::from_bits(a), IndexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
