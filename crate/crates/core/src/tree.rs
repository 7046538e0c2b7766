//! Vertex arithmetic for spherically homogeneous rooted trees.
//!
//! A tree is described by its degree sequence: the number of children of a
//! vertex depends only on its level. Vertices are digit words, level-n
//! vertices are numbered in mixed-radix order, which is the point set every
//! finite quotient acts on.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Per-level branching degrees: a finite prefix followed by a repeating tail.
///
/// Every entry is at least 2; a level of degree 1 would not contribute to the
/// automorphism group and is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    prefix: Arc<[u32]>,
    start: usize,
    tail: u32,
}

impl DegreeSequence {
    /// The constant sequence `k, k, k, ...`.
    pub fn constant(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::DegreeTooSmall { value: k, level: 0 });
        }
        Ok(DegreeSequence {
            prefix: Arc::from(&[][..]),
            start: 0,
            tail: k,
        })
    }

    /// Sequence given by explicit leading entries; the last entry repeats.
    pub fn from_levels(levels: &[u32]) -> Result<Self> {
        let (&tail, prefix) = levels.split_last().ok_or(Error::EmptyDegreeSequence)?;
        for (level, &value) in levels.iter().enumerate() {
            if value < 2 {
                return Err(Error::DegreeTooSmall { value, level });
            }
        }
        Ok(DegreeSequence {
            prefix: Arc::from(prefix),
            start: 0,
            tail,
        })
    }

    /// Degree at the given level.
    pub fn degree(&self, level: usize) -> u32 {
        self.prefix
            .get(self.start + level)
            .copied()
            .unwrap_or(self.tail)
    }

    /// The sequence seen from level `k` downwards (for sections of elements).
    pub fn shift(&self, k: usize) -> Self {
        DegreeSequence {
            prefix: Arc::clone(&self.prefix),
            start: (self.start + k).min(self.prefix.len()),
            tail: self.tail,
        }
    }

    /// `Some(k)` when every level has degree `k`.
    pub fn constant_degree(&self) -> Option<u32> {
        if self.prefix[self.start..].iter().all(|&d| d == self.tail) {
            Some(self.tail)
        } else {
            None
        }
    }

    /// Number of vertices at level `n`, i.e. the product of the first `n` degrees.
    pub fn level_size(&self, n: usize) -> BigUint {
        let mut size = BigUint::one();
        for i in 0..n {
            size *= BigUint::from(self.degree(i));
        }
        size
    }

    /// Level descriptor: level number together with its exact vertex count.
    pub fn level_index(&self, n: usize) -> LevelIndex {
        LevelIndex {
            level: n,
            size: self.level_size(n),
        }
    }

    /// Level size as a machine integer, checked against a point budget.
    pub fn level_points(&self, n: usize, budget: usize) -> Result<usize> {
        let mut size: usize = 1;
        for i in 0..n {
            size = size
                .checked_mul(self.degree(i) as usize)
                .filter(|&s| s <= budget)
                .ok_or_else(|| Error::PointBudgetExceeded {
                    level: n,
                    size: self.level_size(n).to_string(),
                    budget,
                })?;
        }
        Ok(size)
    }

    /// Leading entries still relevant to validation (prefix before the tail).
    pub fn prefix_len(&self) -> usize {
        self.prefix.len().saturating_sub(self.start)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.prefix[self.start..] {
            write!(f, "{d},")?;
        }
        write!(f, "{}...", self.tail)
    }
}

/// A level together with its vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelIndex {
    pub level: usize,
    pub size: BigUint,
}

/// A vertex of the tree: a digit word, one digit per level.
///
/// The empty word is the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vertex {
    digits: Vec<u32>,
}

impl Vertex {
    pub fn root() -> Self {
        Vertex { digits: Vec::new() }
    }

    pub fn from_digits(digits: Vec<u32>) -> Self {
        Vertex { digits }
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Level of the vertex = length of its digit word.
    pub fn level(&self) -> usize {
        self.digits.len()
    }

    pub fn is_root(&self) -> bool {
        self.digits.is_empty()
    }

    /// The child reached by appending `digit`.
    pub fn child(&self, digit: u32) -> Vertex {
        let mut digits = self.digits.clone();
        digits.push(digit);
        Vertex { digits }
    }

    /// Checks digit bounds against the degree sequence.
    pub fn validate(&self, seq: &DegreeSequence) -> Result<()> {
        for (position, &digit) in self.digits.iter().enumerate() {
            let degree = seq.degree(position);
            if digit >= degree {
                return Err(Error::InvalidVertex {
                    digit,
                    position,
                    degree,
                });
            }
        }
        Ok(())
    }

    /// True when `self` lies on the path from the root to `other`
    /// (equivalently, `other` belongs to the tree below `self`).
    pub fn is_prefix_of(&self, other: &Vertex) -> bool {
        other.digits.len() >= self.digits.len()
            && self.digits == other.digits[..self.digits.len()]
    }

    /// Mixed-radix numbering of this vertex within its level.
    pub fn to_index(&self, seq: &DegreeSequence) -> Result<u128> {
        self.validate(seq)?;
        let mut index: u128 = 0;
        for (position, &digit) in self.digits.iter().enumerate() {
            index = index
                .checked_mul(seq.degree(position) as u128)
                .and_then(|i| i.checked_add(digit as u128))
                .ok_or_else(|| Error::Invalid("vertex index exceeds u128".into()))?;
        }
        Ok(index)
    }

    /// Inverse of [`Vertex::to_index`] at a fixed level.
    pub fn from_index(index: u128, level: usize, seq: &DegreeSequence) -> Result<Vertex> {
        let size = seq.level_size(level);
        if BigUint::from(index) >= size {
            return Err(Error::InvalidIndex {
                index,
                level,
                size: size.to_string(),
            });
        }
        let mut digits = vec![0u32; level];
        let mut rem = index;
        for position in (0..level).rev() {
            let degree = seq.degree(position) as u128;
            digits[position] = (rem % degree) as u32;
            rem /= degree;
        }
        Ok(Vertex { digits })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "r");
        }
        if self.digits.iter().all(|&d| d < 10) {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq5() -> DegreeSequence {
        DegreeSequence::constant(5).unwrap()
    }

    fn seq2() -> DegreeSequence {
        DegreeSequence::constant(2).unwrap()
    }

    #[test]
    fn root_maps_to_index_zero() {
        assert_eq!(Vertex::root().to_index(&seq5()).unwrap(), 0);
        assert_eq!(
            Vertex::from_index(0, 0, &seq5()).unwrap(),
            Vertex::root()
        );
    }

    #[test]
    fn mixed_radix_examples() {
        let v = Vertex::from_digits(vec![3, 1]);
        assert_eq!(v.to_index(&seq5()).unwrap(), 16);
        assert_eq!(Vertex::from_index(16, 2, &seq5()).unwrap(), v);

        let w = Vertex::from_digits(vec![1, 0, 1]);
        assert_eq!(w.to_index(&seq2()).unwrap(), 5);
        assert_eq!(Vertex::from_index(5, 3, &seq2()).unwrap(), w);
    }

    #[test]
    fn digit_out_of_range_is_rejected() {
        let v = Vertex::from_digits(vec![5]);
        assert!(matches!(
            v.to_index(&seq5()),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        assert!(matches!(
            Vertex::from_index(25, 2, &seq5()),
            Err(Error::InvalidIndex { .. })
        ));
    }

    #[test]
    fn prefix_relation() {
        let root = Vertex::root();
        let v = Vertex::from_digits(vec![2]);
        let w = Vertex::from_digits(vec![2, 4]);
        let u = Vertex::from_digits(vec![3]);
        assert!(root.is_prefix_of(&w));
        assert!(v.is_prefix_of(&w));
        assert!(!u.is_prefix_of(&w));
        assert!(!w.is_prefix_of(&v));
        assert!(w.is_prefix_of(&w));
    }

    #[test]
    fn degree_one_is_rejected() {
        assert!(DegreeSequence::constant(1).is_err());
        assert!(DegreeSequence::from_levels(&[2, 1, 2]).is_err());
    }

    #[test]
    fn eventually_constant_shift() {
        let seq = DegreeSequence::from_levels(&[3, 2]).unwrap();
        assert_eq!(seq.degree(0), 3);
        assert_eq!(seq.degree(1), 2);
        assert_eq!(seq.degree(7), 2);
        let shifted = seq.shift(1);
        assert_eq!(shifted.degree(0), 2);
        assert_eq!(shifted.constant_degree(), Some(2));
        assert_eq!(seq.constant_degree(), None);
    }

    #[test]
    fn level_sizes_multiply() {
        let seq = DegreeSequence::from_levels(&[3, 2]).unwrap();
        for n in 0..8 {
            let expected = seq.level_size(n) * BigUint::from(seq.degree(n));
            assert_eq!(seq.level_size(n + 1), expected);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let seq = seq5();
        assert!(seq.level_points(8, 390_625).is_ok());
        assert!(matches!(
            seq.level_points(9, 390_625),
            Err(Error::PointBudgetExceeded { .. })
        ));
    }
}
