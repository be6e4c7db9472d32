//! Small named groups used by tests, the catalog and the DSL.

use super::{FiniteGroup, Limits, Perm};

fn limits() -> Limits {
    Limits::default()
}

/// Cyclic group of order `n >= 1` with generator `g` at index 1.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs positive order");
    let table = (0..n).flat_map(|x| (0..n).map(move |y| (x + y) % n)).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    FiniteGroup::from_table(n, table, gens, Some(labels), &limits()).expect("cyclic table")
}

/// Dihedral group of order `2n`, acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3, "dihedral group needs n >= 3");
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let gens = [
        Perm::from_images(rotation).unwrap(),
        Perm::from_images(reflection).unwrap(),
    ];
    FiniteGroup::from_permutations(n, &gens, &limits()).expect("dihedral closure")
}

/// Quaternion group `{±1, ±i, ±j, ±k}` with generators `i`, `j`.
pub fn quaternion() -> FiniteGroup {
    // (sign, unit) with unit 0..4 = 1, i, j, k.
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, u) | (u, 0) => (false, u),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let encode = |neg: bool, u: usize| 2 * u + usize::from(neg);
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (nx, ux) = (x % 2 == 1, x / 2);
            let (ny, uy) = (y % 2 == 1, y / 2);
            let (nz, uz) = unit_mul(ux, uy);
            table[x * 8 + y] = encode(nx ^ ny ^ nz, uz);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table(8, table, vec![2, 4], Some(labels), &limits()).expect("quaternion table")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    if n == 1 {
        return FiniteGroup::from_permutations(1, &[], &limits()).unwrap();
    }
    let mut gens = vec![Perm::from_cycles(n, &[vec![1, 2]]).unwrap()];
    if n > 2 {
        gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
    }
    FiniteGroup::from_permutations(n, &gens, &limits()).expect("symmetric closure")
}

pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let gens: Vec<Perm> = (3..=n)
        .map(|k| Perm::from_cycles(n, &[vec![1, 2, k]]).unwrap())
        .collect();
    FiniteGroup::from_permutations(n, &gens, &limits()).expect("alternating closure")
}

/// `C2^k` as a permutation group on `2k` points.
pub fn elementary_abelian(k: usize) -> FiniteGroup {
    if k == 0 {
        return cyclic(1);
    }
    let gens: Vec<Perm> = (0..k)
        .map(|i| Perm::from_cycles(2 * k, &[vec![2 * i + 1, 2 * i + 2]]).unwrap())
        .collect();
    FiniteGroup::from_permutations(2 * k, &gens, &limits()).expect("elementary abelian closure")
}
