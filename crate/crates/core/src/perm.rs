//! Permutations of `[0, m)` in image-table form.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the points `0..m`, stored as its image table.
///
/// Composition is in left-action order: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from its image table, checking bijectivity.
    pub fn new(img: Vec<u32>) -> Result<Self> {
        let m = img.len();
        let mut seen = vec![false; m];
        for &x in &img {
            let x = x as usize;
            if x >= m {
                return Err(Error::MalformedPermutation(format!(
                    "image {x} out of range for degree {m}"
                )));
            }
            if seen[x] {
                return Err(Error::MalformedPermutation(format!(
                    "image {x} repeated"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(m: usize) -> Self {
        Perm {
            img: (0..m as u32).collect(),
        }
    }

    /// Parses disjoint-cycle notation such as `"(0 1)(2 3 4)"`; `"()"` is the identity.
    pub fn from_cycles(m: usize, text: &str) -> Result<Self> {
        let mut img: Vec<u32> = (0..m as u32).collect();
        let trimmed = text.trim();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| {
                Error::MalformedPermutation(format!("expected '(' in cycle text `{trimmed}`"))
            })?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::MalformedPermutation(format!(
                    "unexpected text before cycle in `{trimmed}`"
                )));
            }
            let close = rest[open..].find(')').ok_or_else(|| {
                Error::MalformedPermutation(format!("unbalanced '(' in `{trimmed}`"))
            })? + open;
            let body = &rest[open + 1..close];
            let points: Vec<usize> = body
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::MalformedPermutation(format!("bad point `{s}` in `{trimmed}`"))
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p >= m {
                    return Err(Error::MalformedPermutation(format!(
                        "point {p} out of range for degree {m}"
                    )));
                }
            }
            for i in 0..points.len() {
                let from = points[i];
                let to = points[(i + 1) % points.len()];
                if img[from] != from as u32 {
                    return Err(Error::MalformedPermutation(format!(
                        "point {from} appears in two cycles in `{trimmed}`"
                    )));
                }
                img[from] = to as u32;
            }
            rest = &rest[close + 1..];
        }
        Perm::new(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.img[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    /// Left-action composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.img.len(), other.img.len());
        let img = other
            .img
            .iter()
            .map(|&x| self.img[x as usize])
            .collect();
        Perm { img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    /// `by ∘ self ∘ by⁻¹`.
    pub fn conjugate_by(&self, by: &Perm) -> Perm {
        by.compose(self).compose(&by.inverse())
    }

    /// `self ∘ other ∘ self⁻¹ ∘ other⁻¹`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// First point moved by the permutation, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().find_map(|(i, &x)| {
            if i as u32 != x {
                Some(i)
            } else {
                None
            }
        })
    }

    /// Disjoint-cycle rendering, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.img.len()];
        let mut out = String::new();
        for start in 0..self.img.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                first = false;
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_action() {
        let a = Perm::from_cycles(3, "(0 1)").unwrap();
        let b = Perm::from_cycles(3, "(1 2)").unwrap();
        let ab = a.compose(&b);
        // b first, then a: 1 -> 2 -> 2, so (a∘b)(1) = 2.
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.apply(0), 1);
    }

    #[test]
    fn inverse_cancels() {
        let p = Perm::from_cycles(9, "(0 1 2 3)(4 7)(5 8 6)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn cycle_round_trip() {
        let p = Perm::from_cycles(5, "(0 1 2 3 4)").unwrap();
        assert_eq!(p.cycle_string(), "(0 1 2 3 4)");
        let q = Perm::from_cycles(5, &p.cycle_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(Perm::identity(4).cycle_string(), "()");
    }

    #[test]
    fn malformed_rejected() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![2, 0]).is_err());
        assert!(Perm::from_cycles(3, "(0 5)").is_err());
        assert!(Perm::from_cycles(3, "(0 1)(1 2)").is_err());
    }

    #[test]
    fn five_cycle_inverse() {
        let p = Perm::from_cycles(5, "(0 1 2 3 4)").unwrap();
        assert_eq!(p.inverse().cycle_string(), "(0 4 3 2 1)");
    }
}
