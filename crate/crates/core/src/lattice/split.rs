use super::{hnf, lattice_contains, snf, unimodular_inverse, IntScalar, Matrix};
use crate::error::{Error, Result};

/// A subgroup of `Z^r` spanned by the columns of `generators` (`r` rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSubgroup<T> {
    ambient_rank: usize,
    generators: Matrix<T>,
}

impl<T: IntScalar> LatticeSubgroup<T> {
    pub fn new(ambient_rank: usize, generators: Matrix<T>) -> Result<Self> {
        if generators.rows() != ambient_rank {
            return Err(Error::DimensionMismatch(format!(
                "generator matrix has {} rows for ambient rank {}",
                generators.rows(),
                ambient_rank
            )));
        }
        Ok(LatticeSubgroup {
            ambient_rank,
            generators,
        })
    }

    pub fn from_columns(ambient_rank: usize, cols: &[Vec<T>]) -> Result<Self> {
        Self::new(ambient_rank, Matrix::from_columns(ambient_rank, cols)?)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &Matrix<T> {
        &self.generators
    }

    /// Canonical basis: the nonzero columns of the HNF.
    pub fn basis(&self) -> Vec<Vec<T>> {
        let (h, _) = hnf(&self.generators);
        (0..h.cols())
            .map(|j| h.column(j))
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let (h, _) = hnf(&self.generators);
        v.len() == self.ambient_rank && lattice_contains(&h, v)
    }

    /// Same column lattice, by mutual membership of generators.
    pub fn same_lattice(&self, other: &LatticeSubgroup<T>) -> bool {
        let mine = (0..self.generators.cols()).all(|j| other.contains(&self.generators.column(j)));
        let theirs =
            (0..other.generators.cols()).all(|j| self.contains(&other.generators.column(j)));
        mine && theirs
    }
}

/// `Z^r = ⟨e'_1, ..., e'_r⟩` (the columns of `basis_change`) with
/// `C = ⟨d_1 e'_1, ..., d_k e'_k⟩` and `H = ⟨e'_{k+1}, ..., e'_r⟩`, so that
/// `A_1 = C ⊕ H` has index `d_1 ⋯ d_k` in `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSplit<T> {
    pub basis_change: Matrix<T>,
    /// Inverse of `basis_change`: maps a vector to its coordinates in the new basis.
    pub coordinates: Matrix<T>,
    pub divisors: Vec<T>,
    pub c_basis: Vec<Vec<T>>,
    pub h_basis: Vec<Vec<T>>,
    pub index: T,
    /// Lexicographic in the new coordinates, mapped back to `Z^r`.
    pub coset_reps: Vec<Vec<T>>,
}

impl<T: IntScalar> IndexSplit<T> {
    /// Image of `x` in `Z^r / A_1 ≅ ⊕ Z/d_i`, as residues `0 <= y_i < d_i`.
    pub fn residue(&self, x: &[T]) -> Result<Vec<T>> {
        let y = self.coordinates.mul_vec(x)?;
        Ok(y.iter()
            .zip(&self.divisors)
            .map(|(yi, d)| yi.mod_floor(d))
            .collect())
    }

    pub fn in_a1(&self, x: &[T]) -> Result<bool> {
        Ok(self.residue(x)?.iter().all(|r| r.is_zero()))
    }
}

/// Splits off `C ≤ Z^r` as a direct factor of a finite-index subgroup.
/// At most `max_reps` coset representatives are enumerated.
pub fn finite_index_split<T: IntScalar>(
    r: usize,
    c: &LatticeSubgroup<T>,
    max_reps: usize,
) -> Result<IndexSplit<T>> {
    if c.ambient_rank() != r {
        return Err(Error::DimensionMismatch(format!(
            "subgroup of Z^{} passed for Z^{}",
            c.ambient_rank(),
            r
        )));
    }
    let s = snf(c.generators());
    let k = s.rank();
    let basis_change = unimodular_inverse(&s.u).expect("SNF row transform is unimodular");
    let divisors = s.invariant_factors.clone();
    let c_basis = (0..k)
        .map(|i| {
            basis_change
                .column(i)
                .into_iter()
                .map(|x| x * divisors[i].clone())
                .collect()
        })
        .collect();
    let h_basis = (k..r).map(|i| basis_change.column(i)).collect();
    let index = divisors.iter().fold(T::one(), |a, d| a * d.clone());
    let count = index.to_usize().filter(|&n| n <= max_reps).ok_or(
        Error::ClosureCapExceeded {
            cap: max_reps,
            reached: index.to_usize().unwrap_or(usize::MAX),
        },
    )?;
    let mut coset_reps = Vec::with_capacity(count);
    let mut digits = vec![T::zero(); r];
    for _ in 0..count {
        coset_reps.push(basis_change.mul_vec(&digits)?);
        // increment, last coordinate fastest
        for i in (0..k).rev() {
            digits[i] = digits[i].clone() + T::one();
            if digits[i] < divisors[i] {
                break;
            }
            digits[i] = T::zero();
        }
    }
    Ok(IndexSplit {
        basis_change,
        coordinates: s.u,
        divisors,
        c_basis,
        h_basis,
        index,
        coset_reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(r: usize, cols: &[&[i64]]) -> LatticeSubgroup<i64> {
        LatticeSubgroup::from_columns(r, &cols.iter().map(|c| c.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn index_two_in_the_plane() {
        let s = finite_index_split(2, &lat(2, &[&[2, 0]]), 100).unwrap();
        assert_eq!(s.index, 2);
        assert_eq!(s.coset_reps, vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(s.h_basis, vec![vec![0, 1]]);
        assert_eq!(s.c_basis, vec![vec![2, 0]]);
    }

    #[test]
    fn whole_lattice_has_index_one() {
        let s = finite_index_split(2, &lat(2, &[&[1, 0], &[0, 1]]), 100).unwrap();
        assert_eq!(s.index, 1);
        assert!(s.h_basis.is_empty());
        assert_eq!(s.coset_reps, vec![vec![0, 0]]);
    }

    #[test]
    fn rank_one() {
        let s = finite_index_split(1, &lat(1, &[&[3]]), 100).unwrap();
        assert_eq!(s.index, 3);
        assert_eq!(s.coset_reps, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn trivial_subgroup_is_degenerate() {
        let c = LatticeSubgroup::new(2, Matrix::<i64>::zeros(2, 0)).unwrap();
        let s = finite_index_split(2, &c, 100).unwrap();
        assert_eq!(s.index, 1);
        assert_eq!(s.h_basis.len(), 2);
    }

    #[test]
    fn skew_subgroup_reconstructs() {
        let c = lat(3, &[&[2, 4, 6], &[0, 3, 3], &[2, 7, 9]]);
        let s = finite_index_split(3, &c, 1000).unwrap();
        let rebuilt = LatticeSubgroup::from_columns(3, &s.c_basis).unwrap();
        assert!(rebuilt.same_lattice(&c));
        assert_eq!(s.coset_reps.len() as i64, s.index);
        for (i, a) in s.coset_reps.iter().enumerate() {
            for b in &s.coset_reps[..i] {
                let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                assert!(!s.in_a1(&diff).unwrap());
            }
        }
    }

    #[test]
    fn representative_cap() {
        let err = finite_index_split(1, &lat(1, &[&[50]]), 10).unwrap_err();
        assert!(matches!(err, Error::ClosureCapExceeded { cap: 10, .. }));
    }
}
