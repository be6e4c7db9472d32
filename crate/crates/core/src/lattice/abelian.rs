use super::{snf, IntScalar, Matrix};
use crate::error::{Error, Result};

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t` with `1 < d_1 | d_2 | ... | d_t`.
///
/// Elements are coordinate vectors: free coordinates first, then residues
/// `0 <= x < d_i` for the torsion coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelian<T> {
    free_rank: usize,
    torsion: Vec<T>,
}

impl<T: IntScalar> FgAbelian<T> {
    pub fn new(free_rank: usize, torsion: Vec<T>) -> Result<Self> {
        if torsion.iter().any(|d| *d <= T::one()) {
            return Err(Error::InvalidGroup("torsion invariants must exceed 1".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidGroup(
                "torsion invariants must form a divisibility chain".into(),
            ));
        }
        Ok(FgAbelian { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelian {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    /// Number of coordinates (= number of standard generators).
    pub fn dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Modulus of each coordinate, `0` for free coordinates.
    pub fn moduli(&self) -> Vec<T> {
        std::iter::repeat_n(T::zero(), self.free_rank)
            .chain(self.torsion.iter().cloned())
            .collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<T> {
        (self.free_rank == 0).then(|| self.torsion.iter().fold(T::one(), |a, d| a * d.clone()))
    }

    pub fn identity(&self) -> Vec<T> {
        vec![T::zero(); self.dim()]
    }

    pub fn normalize(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, group has {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(v.iter()
            .enumerate()
            .map(|(i, x)| {
                if i < self.free_rank {
                    x.clone()
                } else {
                    x.mod_floor(&self.torsion[i - self.free_rank])
                }
            })
            .collect())
    }

    /// Whether `v` is already a normalized element.
    pub fn contains(&self, v: &[T]) -> bool {
        self.normalize(v).is_ok_and(|n| n == v)
    }

    pub fn op(&self, a: &[T], b: &[T]) -> Vec<T> {
        let sum: Vec<T> = a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect();
        self.normalize(&sum).expect("operands of matching length")
    }

    pub fn neg(&self, a: &[T]) -> Vec<T> {
        let n: Vec<T> = a.iter().map(|x| -x.clone()).collect();
        self.normalize(&n).expect("operand of matching length")
    }

    pub fn scale(&self, a: &[T], k: &T) -> Vec<T> {
        let n: Vec<T> = a.iter().map(|x| x.clone() * k.clone()).collect();
        self.normalize(&n).expect("operand of matching length")
    }

    pub fn is_identity(&self, a: &[T]) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// `None` for elements of infinite order.
    pub fn element_order(&self, a: &[T]) -> Option<T> {
        if a[..self.free_rank].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(
            a[self.free_rank..]
                .iter()
                .zip(&self.torsion)
                .fold(T::one(), |acc, (x, d)| acc.lcm(&(d.clone() / x.gcd(d)))),
        )
    }

    /// Standard generator `e_i`.
    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        let mut v = self.identity();
        v[i] = T::one();
        v
    }

    /// Relation columns `d_i e_{free_rank + i}` as a `dim × t` matrix.
    pub fn relation_matrix(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.dim(), self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m[(self.free_rank + i, i)] = d.clone();
        }
        m
    }
}

/// Abelian group on `ngens` generators subject to the given relators, each an
/// exponent vector of length `ngens`.
pub fn abelianization_from_presentation<T: IntScalar>(
    ngens: usize,
    relators: &[Vec<T>],
) -> Result<FgAbelian<T>> {
    if let Some(r) = relators.iter().find(|r| r.len() != ngens) {
        return Err(Error::DimensionMismatch(format!(
            "relator of length {} for {} generators",
            r.len(),
            ngens
        )));
    }
    let mut m = Matrix::zeros(relators.len(), ngens);
    for (i, r) in relators.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    let s = snf(&m);
    let torsion = s
        .invariant_factors
        .iter()
        .filter(|d| **d > T::one())
        .cloned()
        .collect();
    FgAbelian::new(ngens - s.rank(), torsion)
}
