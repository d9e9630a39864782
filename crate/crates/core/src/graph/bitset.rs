use std::fmt;

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: $name = $name(0);

            /// The set `{0, .., n-1}`.
            pub fn full(n: usize) -> Self {
                if n >= 64 {
                    $name(u64::MAX)
                } else {
                    $name((1u64 << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                $name(1u64 << i)
            }

            pub fn bits(self) -> u64 {
                self.0
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn contains(self, i: usize) -> bool {
                i < 64 && self.0 >> i & 1 == 1
            }

            pub fn insert(&mut self, i: usize) {
                self.0 |= 1u64 << i;
            }

            pub fn remove(&mut self, i: usize) {
                self.0 &= !(1u64 << i);
            }

            pub fn with(self, i: usize) -> Self {
                $name(self.0 | 1u64 << i)
            }

            pub fn union(self, o: Self) -> Self {
                $name(self.0 | o.0)
            }

            pub fn intersection(self, o: Self) -> Self {
                $name(self.0 & o.0)
            }

            pub fn difference(self, o: Self) -> Self {
                $name(self.0 & !o.0)
            }

            pub fn is_subset(self, o: Self) -> bool {
                self.0 & !o.0 == 0
            }

            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn last(self) -> Option<usize> {
                (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
            }

            pub fn iter(self) -> BitIter {
                BitIter(self.0)
            }

            /// Every subset of `self`, including empty and `self`.
            pub fn subsets(self) -> impl Iterator<Item = $name> {
                let full = self.0;
                let mut cur = Some(0u64);
                std::iter::from_fn(move || {
                    let s = cur?;
                    cur = if s == full { None } else { Some((s | !full).wrapping_add(1) & full) };
                    Some($name(s))
                })
            }
        }

        impl IntoIterator for $name {
            type Item = usize;
            type IntoIter = BitIter;
            fn into_iter(self) -> BitIter {
                BitIter(self.0)
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = $name::EMPTY;
                for i in iter {
                    s.insert(i);
                }
                s
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset!(
    /// Subset of the vertex set, bit `v` for vertex `v`.
    VertexSet
);
bitset!(
    /// Subset of the edge set, bit `i` for the edge of rank `i`.
    EdgeSet
);

pub struct BitIter(u64);

impl Iterator for BitIter {
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

impl ExactSizeIterator for BitIter {}
