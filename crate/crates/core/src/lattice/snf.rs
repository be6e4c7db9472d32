use super::{IntScalar, Matrix};

/// `U·M·V = D` with `U`, `V` unimodular and `D` rectangular-diagonal whose
/// nonzero entries `d_1 | d_2 | ... | d_r` come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    /// The nonzero diagonal entries, all positive, including any ones.
    pub invariant_factors: Vec<T>,
}

impl<T: IntScalar> SnfDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

pub fn snf<T: IntScalar>(m: &Matrix<T>) -> SnfDecomposition<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut factors = Vec::new();

    for k in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, factors);
            };
            a.swap_rows(k, pi);
            u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let p = a[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..rows {
                let q = a[(i, k)].clone() / p.clone();
                if !q.is_zero() {
                    let f = -q;
                    a.add_row_multiple(i, k, &f);
                    u.add_row_multiple(i, k, &f);
                }
                clean &= a[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                let q = a[(k, j)].clone() / p.clone();
                if !q.is_zero() {
                    let f = -q;
                    a.add_col_multiple(j, k, &f);
                    v.add_col_multiple(j, k, &f);
                }
                clean &= a[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
        factors.push(a[(k, k)].clone());
    }
    finish(a, u, v, factors)
}

fn finish<T: IntScalar>(
    d: Matrix<T>,
    u: Matrix<T>,
    v: Matrix<T>,
    invariant_factors: Vec<T>,
) -> SnfDecomposition<T> {
    SnfDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check<T: IntScalar>(m: &Matrix<T>, s: &SnfDecomposition<T>) {
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn examples() {
        let m: Matrix<i64> = Matrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        let s = snf(&m);
        check(&m, &s);
        assert_eq!(s.invariant_factors, vec![2, 4]);

        let m: Matrix<i64> = Matrix::identity(2);
        assert_eq!(snf(&m).invariant_factors, vec![1, 1]);

        let m: Matrix<i64> = Matrix::from_i64_rows(&[&[6]]);
        assert_eq!(snf(&m).invariant_factors, vec![6]);

        let m: Matrix<i64> = Matrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let s = snf(&m);
        check(&m, &s);
        assert_eq!(s.invariant_factors, vec![1, 6]);
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let m: Matrix<i64> = Matrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let s = snf(&m);
        check(&m, &s);
        assert_eq!(s.invariant_factors, vec![1]);
        let z: Matrix<i64> = Matrix::zeros(2, 3);
        assert_eq!(snf(&z).rank(), 0);
        let e: Matrix<i64> = Matrix::zeros(0, 3);
        assert_eq!(snf(&e).rank(), 0);
    }
}
