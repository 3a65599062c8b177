use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

/// Bitset over positive-root indices. Every supported system has at most
/// 120 positive roots, so a single `u128` suffices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> RootSet {
        assert!(n <= 128);
        if n == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> RootSet {
        it.into_iter().fold(RootSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> RootSet {
        RootSet(self.0 | 1u128 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> RootSet {
        RootSet(self.0 & !(1u128 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn minus(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> RootSetIter {
        RootSetIter(self.0)
    }

    /// Members with index `>= start`.
    pub fn at_or_above(self, start: usize) -> RootSet {
        if start >= 128 {
            RootSet::EMPTY
        } else {
            RootSet(self.0 & (u128::MAX << start))
        }
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct RootSetIter(u128);

impl Iterator for RootSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        RootSet::from_indices(iter)
    }
}

impl BitOr for RootSet {
    type Output = RootSet;
    fn bitor(self, rhs: RootSet) -> RootSet {
        RootSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for RootSet {
    fn bitor_assign(&mut self, rhs: RootSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for RootSet {
    type Output = RootSet;
    fn bitand(self, rhs: RootSet) -> RootSet {
        RootSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for RootSet {
    fn bitand_assign(&mut self, rhs: RootSet) {
        self.0 &= rhs.0;
    }
}

impl Not for RootSet {
    type Output = RootSet;
    fn not(self) -> RootSet {
        RootSet(!self.0)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Lowercase hex rendering of the mask, no prefix.
impl fmt::LowerHex for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}
