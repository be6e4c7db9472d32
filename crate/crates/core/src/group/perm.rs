//! Permutations on `0..degree`, written 1-based in cycle notation for display.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image vector. Composition follows the
/// right-action convention: `(p * q)(i) = q(p(i))`, i.e. apply `p` first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from 0-based images, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Builds a permutation from 1-based cycles. Cycles are composed left to
    /// right, so `(1 2)(2 3)` applies `(1 2)` first.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Perm::identity(degree);
        for cycle in cycles {
            let mut seen = Vec::with_capacity(cycle.len());
            for &pt in cycle {
                if pt == 0 || pt > degree || seen.contains(&pt) {
                    return Err(Error::MalformedElement(format!(
                        "cycle {cycle:?} is not valid on 1..{degree}"
                    )));
                }
                seen.push(pt);
            }
            let mut c: Vec<u32> = (0..degree as u32).collect();
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                c[pt - 1] = (next - 1) as u32;
            }
            p = p.compose(&Perm(c));
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = self.0[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::from_cycles(4, &[vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.inverse().compose(&p), Perm::identity(4));
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1 2) then (2 3) sends 1 -> 2 -> 3.
        let p = Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.to_string(), "(1 3 2)");
    }

    #[test]
    fn rejects_bad_points() {
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 1]]).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_none());
    }
}
