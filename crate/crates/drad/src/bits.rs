//! Packed bit vectors over a group's element index space.
//!
//! A `SubsetBits` identifies a subset of a group with the set of element
//! indices it contains. Difference sets, subgroups and cosets are all
//! carried around in this form.

/// A subset of `{0, 1, .., len-1}` stored as packed 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetBits {
    len: usize,
    blocks: Vec<u64>,
}

impl SubsetBits {
    pub fn new(len: usize) -> Self {
        SubsetBits {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::new(len);
        s.insert(i);
        s
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::new(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Universe size (the group order), not the cardinality.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        SubsetBits {
            len: self.len,
            blocks,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        SubsetBits {
            len: self.len,
            blocks,
        }
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & !b)
            .collect();
        SubsetBits {
            len: self.len,
            blocks,
        }
    }

    pub fn complement(&self) -> Self {
        let mut s = SubsetBits {
            len: self.len,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        s.clear_tail();
        s
    }

    fn clear_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn min_element(&self) -> Option<usize> {
        for (w, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(w * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Order by member list, lowest differing element first. Used wherever a
/// deterministic ordering of subgroups or witnesses is required.
impl Ord for SubsetBits {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            if a != b {
                // The set whose lowest differing bit is present comes first.
                let diff = a ^ b;
                let low = diff.trailing_zeros();
                return if a >> low & 1 == 1 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for SubsetBits {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SubsetBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = SubsetBits::from_indices(100, &[0, 3, 64, 99]);
        let b = SubsetBits::from_indices(100, &[3, 5, 64]);
        assert_eq!(a.count(), 4);
        assert_eq!(a.union(&b).count(), 5);
        assert_eq!(a.intersect(&b).to_indices(), vec![3, 64]);
        assert_eq!(a.minus(&b).to_indices(), vec![0, 99]);
        assert_eq!(a.complement().count(), 96);
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.union(&a), a);
        assert_eq!(a.intersect(&a), a);
        assert!(a.intersect(&b).is_subset_of(&a));
        assert_eq!(a.min_element(), Some(0));
        assert_eq!(SubsetBits::new(10).min_element(), None);
    }

    #[test]
    fn ordering_by_member_list() {
        let a = SubsetBits::from_indices(70, &[0, 69]);
        let b = SubsetBits::from_indices(70, &[1, 2]);
        // {0, 69} sorts before {1, 2}: lowest differing element 0 is in `a`.
        assert!(a < b);
        let c = SubsetBits::from_indices(70, &[0, 5]);
        assert!(c < a); // {0,5} vs {0,69}: element 5 differs, in c
    }
}
