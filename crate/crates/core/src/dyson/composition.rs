use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|v|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `v+`, the weakly decreasing rearrangement.
    pub fn sorted_desc(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `v+` with trailing zeros removed, i.e. the partition it determines.
    pub fn partition(&self) -> Vec<u32> {
        let mut v = self.sorted_desc();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// `v^(k)`: deletes the entry at 1-based position `k`.
    pub fn delete(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(k - 1);
        Self(v)
    }

    /// `v^(I)`: deletes every position in `set`.
    pub fn delete_set(&self, set: &IndexSet) -> Self {
        Self(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !set.contains(i + 1))
                .map(|(_, &x)| x)
                .collect(),
        )
    }

    /// Part at 1-based position `k`.
    pub fn at(&self, k: usize) -> u32 {
        self.0[k - 1]
    }

    /// `sum_{j > k} a_j` for 1-based `k`.
    pub fn tail_sum(&self, k: usize) -> u32 {
        self.0[k..].iter().sum()
    }

    /// `a_S = sum_{j in S} a_j`.
    pub fn sum_over(&self, set: &IndexSet) -> u32 {
        set.iter().map(|k| self.at(k)).sum()
    }

    /// The largest part `r` and the set of positions attaining it.
    pub fn max_part_set(&self) -> Result<(u32, IndexSet)> {
        if self.is_zero() {
            return Err(Error::invalid("max part set of a zero composition"));
        }
        let r = self.max_part();
        let set = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == r)
            .map(|(i, _)| i + 1)
            .collect();
        Ok((r, IndexSet(set)))
    }

    /// This composition with `extra` appended, e.g. `(a, r - 1)`.
    pub fn appended(&self, extra: u32) -> Vec<u32> {
        let mut v = self.0.clone();
        v.push(extra);
        v
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Self(v.to_vec())
    }
}

impl std::ops::Deref for Composition {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A sorted set of 1-based positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if positions.first() == Some(&0) {
            return Err(Error::invalid("index sets are 1-based"));
        }
        Ok(Self(positions))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(k: usize) -> Self {
        Self(vec![k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&k| other.contains(k))
    }

    pub fn without(&self, k: usize) -> Self {
        Self(self.0.iter().copied().filter(|&x| x != k).collect())
    }

    pub fn difference(&self, other: &IndexSet) -> Self {
        Self(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    /// Positions after deleting entry `k` from the underlying sequence:
    /// `k` is dropped and later positions move down by one.
    pub fn after_deleting(&self, k: usize) -> Self {
        Self(
            self.0
                .iter()
                .filter(|&&x| x != k)
                .map(|&x| if x > k { x - 1 } else { x })
                .collect(),
        )
    }

    /// All subsets, in binary-counter order over the sorted elements.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSet> + '_ {
        let n = self.0.len();
        (0u64..(1u64 << n)).map(move |mask| {
            IndexSet(
                (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| self.0[b])
                    .collect(),
            )
        })
    }

    /// All non-empty subsets.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = IndexSet> + '_ {
        self.subsets().skip(1)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn max_part_set_examples() {
        let v = Composition::new(vec![0, 2, 3, 2, 3, 1]);
        let (r, i) = v.max_part_set().unwrap();
        assert_eq!((r, i.clone()), (3, set(&[3, 5])));
        assert_eq!(v.sorted_desc(), vec![3, 3, 2, 2, 1, 0]);
        assert_eq!(v.delete_set(&i), Composition::new(vec![0, 2, 2, 1]));
        assert_eq!(Composition::new(vec![4]).max_part_set().unwrap(), (4, set(&[1])));
        assert_eq!(Composition::new(vec![1, 1]).max_part_set().unwrap(), (1, set(&[1, 2])));
        assert!(Composition::new(vec![0, 0]).max_part_set().is_err());
    }

    #[test]
    fn relabel_after_delete() {
        assert_eq!(set(&[2, 3, 5]).after_deleting(3), set(&[2, 4]));
        assert_eq!(set(&[1, 4]).after_deleting(2), set(&[1, 3]));
    }

    #[test]
    fn subset_enumeration() {
        let s = set(&[2, 5, 7]);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(s.nonempty_subsets().count(), 7);
        assert!(s.nonempty_subsets().all(|j| !j.is_empty() && j.is_subset_of(&s)));
    }

    #[test]
    fn zero_position_rejected() {
        assert!(IndexSet::new(vec![0, 1]).is_err());
    }
}
