//! Exact integer-matrix algebra and finitely generated abelian groups.
//!
//! Everything here is generic over the integer scalar (`i64`, `i128`,
//! `BigInt`, ...). The crate root fixes `BigInt` for the aliases used by the
//! rest of the library so that intermediate coefficient growth never
//! overflows.

mod abelian;
mod hnf;
mod matrix;
mod snf;
mod split;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use abelian::{abelianization_from_presentation, FgAbelian};
pub use hnf::{hnf, lattice_contains, pivot_rows, reduce_mod_hnf};
pub use matrix::Matrix;
pub use snf::{snf, SnfDecomposition};
pub use split::{finite_index_split, IndexSplit, LatticeSubgroup};

/// Integer scalars the lattice algorithms run over.
pub trait IntScalar:
    Clone + Debug + Display + Hash + Ord + Integer + Signed + FromPrimitive + ToPrimitive
{
}

impl<T> IntScalar for T where
    T: Clone + Debug + Display + Hash + Ord + Integer + Signed + FromPrimitive + ToPrimitive
{
}

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b) >= 0`.
pub fn ext_gcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.clone() / r.clone();
        let nr = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, nr);
        let ns = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, ns);
        let nt = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of a unimodular matrix, read off from its column HNF (which is
/// the identity).
pub fn unimodular_inverse<T: IntScalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if m.rows() != m.cols() {
        return None;
    }
    let (h, u) = hnf(m);
    (h == Matrix::identity(m.rows())).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn ext_gcd_cases() {
        for (a, b) in [(12i64, 18), (-4, 6), (0, -5), (7, 0), (0, 0), (17, 5)] {
            let (g, x, y) = ext_gcd(&a, &b);
            assert_eq!(x * a + y * b, g);
            assert_eq!(g, a.gcd(&b));
        }
    }

    #[test]
    fn inverse_of_unimodular() {
        let m: Matrix<BigInt> = Matrix::from_i64_rows(&[&[2, 3], &[1, 2]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        let s: Matrix<BigInt> = Matrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert!(unimodular_inverse(&s).is_none());
    }
}
