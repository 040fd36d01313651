use std::cmp::Ordering;
use std::fmt;

/// Maximum number of generators a graph may have. Simplices are bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A subset of the generating set, stored as a bitmask over vertex indices.
///
/// The empty simplex is a legitimate cell of `K_W`. Ordering is by
/// cardinality first, then lexicographic on the sorted vertex lists, which is
/// the ordinal order used for every matrix in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex index {v} out of range");
            bits |= 1 << v;
        }
        Simplex(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        Simplex(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        Simplex(self.0 & !(1 << v))
    }

    /// `σ ⊻ v`: add `v` if absent, remove it if present.
    pub fn toggle(self, v: usize) -> Self {
        Simplex(self.0 ^ (1 << v))
    }

    pub fn union(self, other: Simplex) -> Self {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Self {
        Simplex(self.0 & other.0)
    }

    pub fn difference(self, other: Simplex) -> Self {
        Simplex(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Simplex) -> Self {
        Simplex(self.0 ^ other.0)
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// True when `face` is obtained from `self` by removing exactly one vertex.
    pub fn covers(self, face: Simplex) -> bool {
        face.is_subset(self) && self.len() == face.len() + 1
    }

    /// The vertex removed when passing from `self` to the codimension-one
    /// face `face`.
    pub fn removed_vertex(self, face: Simplex) -> Option<usize> {
        if self.covers(face) {
            Some((self.0 ^ face.0).trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Codimension-one faces, in order of the removed vertex.
    pub fn facets(self) -> impl Iterator<Item = Simplex> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Position of `v` among the vertices of `self` (0-based).
    pub fn position(self, v: usize) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        let below = self.0 & ((1u64 << v) - 1);
        Some(below.count_ones() as usize)
    }

    /// Lexicographic comparison of the sorted vertex lists.
    pub fn lex_cmp(self, other: Simplex) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        // The lists agree below `low`. Whoever holds `low` sorts first unless
        // the other list has already ended (it is then a prefix).
        if self.0 & low != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v.iter().copied())
    }

    #[test]
    fn toggle_adds_and_removes() {
        assert_eq!(s(&[0, 2]).toggle(1), s(&[0, 1, 2]));
        assert_eq!(s(&[0, 2]).toggle(2), s(&[0]));
    }

    #[test]
    fn position_counts_smaller_vertices() {
        let sigma = s(&[1, 4, 6]);
        assert_eq!(sigma.position(1), Some(0));
        assert_eq!(sigma.position(4), Some(1));
        assert_eq!(sigma.position(6), Some(2));
        assert_eq!(sigma.position(5), None);
    }

    #[test]
    fn lexicographic_order_within_a_level() {
        let mut level = vec![s(&[1, 2]), s(&[0, 2]), s(&[0, 1]), s(&[0, 3])];
        level.sort();
        assert_eq!(level, vec![s(&[0, 1]), s(&[0, 2]), s(&[0, 3]), s(&[1, 2])]);
        assert!(Simplex::EMPTY < s(&[5]));
    }

    proptest! {
        #[test]
        fn lex_order_matches_sorted_vectors(a in 0u64..4096, b in 0u64..4096) {
            let (x, y) = (Simplex::from_bits(a), Simplex::from_bits(b));
            let xv: Vec<usize> = x.vertices().collect();
            let yv: Vec<usize> = y.vertices().collect();
            prop_assert_eq!(x.lex_cmp(y), xv.cmp(&yv));
        }
    }
}
