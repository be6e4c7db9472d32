use super::{ext_gcd, IntScalar, Matrix};

/// Column Hermite normal form: returns `(H, U)` with `M·U = H`, `U`
/// unimodular. `H` is lower echelon (each nonzero column starts strictly
/// below the previous one, zero columns last), pivots are positive, and
/// entries left of a pivot in its row lie in `[0, pivot)`.
pub fn hnf<T: IntScalar>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = Matrix::identity(cols);
    let mut pc = 0;
    for r in 0..rows {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            let a = h[(r, pc)].clone();
            let b = h[(r, j)].clone();
            let (g, x, y) = ext_gcd(&a, &b);
            let z = -(b / g.clone());
            let w = a / g;
            h.combine_cols(pc, j, [&x, &y, &z, &w]);
            u.combine_cols(pc, j, [&x, &y, &z, &w]);
        }
        if h[(r, pc)].is_zero() {
            continue;
        }
        if h[(r, pc)].is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let p = h[(r, pc)].clone();
        for j in 0..pc {
            let q = h[(r, j)].div_floor(&p);
            if !q.is_zero() {
                let f = -q;
                h.add_col_multiple(j, pc, &f);
                u.add_col_multiple(j, pc, &f);
            }
        }
        pc += 1;
    }
    (h, u)
}

/// Pivot rows of an HNF, one per nonzero column in order.
pub fn pivot_rows<T: IntScalar>(h: &Matrix<T>) -> Vec<usize> {
    (0..h.cols())
        .map_while(|j| (0..h.rows()).find(|&i| !h[(i, j)].is_zero()))
        .collect()
}

/// Reduces `v` modulo the column lattice of an HNF. Returns the canonical
/// representative and the coefficients `z` with `v = rep + H·z`.
pub fn reduce_mod_hnf<T: IntScalar>(h: &Matrix<T>, v: &[T]) -> (Vec<T>, Vec<T>) {
    let mut rep = v.to_vec();
    let mut coeffs = vec![T::zero(); h.cols()];
    for (j, &r) in pivot_rows(h).iter().enumerate() {
        let q = rep[r].div_floor(&h[(r, j)]);
        if q.is_zero() {
            continue;
        }
        for (i, x) in rep.iter_mut().enumerate() {
            *x = x.clone() - q.clone() * h[(i, j)].clone();
        }
        coeffs[j] = q;
    }
    (rep, coeffs)
}

/// Whether `v` lies in the column lattice of the HNF `h`.
pub fn lattice_contains<T: IntScalar>(h: &Matrix<T>, v: &[T]) -> bool {
    reduce_mod_hnf(h, v).0.iter().all(|x| x.is_zero())
}
