//! Finite groups given by full multiplication tables.
//!
//! Elements are canonical indices `0..order` with the identity at index 0.
//! Permutation or label data attached to a group is display metadata only;
//! every computation goes through the table.
//!
//! The derived series is 1-indexed throughout: `δ_1 G = G` and
//! `δ_{k+1} G = [δ_k G, δ_k G]`, so an element of depth `m` lies in `δ_m`
//! but not in `δ_{m+1}`.

mod hom;
mod lattice;
mod named;
mod perm;
mod products;
mod series;
mod subgroup;

use std::collections::{HashMap, VecDeque};

pub use hom::{exhaustive_injectivity, GroupHom};
pub use lattice::{all_subgroups, frattini, maximal_subgroups};
pub use named::{
    alternating, cyclic, dihedral, elementary_abelian, quaternion, symmetric,
};
pub use perm::Perm;
pub use products::{
    abelian_invariants, direct_product, quotient_group, DirectProduct, Quotient,
};
pub use series::{
    derived_depth, derived_length, is_nilpotent, is_solvable, series, SeriesChain, SeriesKind,
};
pub use subgroup::{
    center, commutator_subgroup, normal_closure, subgroup_closure, Closure, Subgroup,
};

use crate::error::{Error, Result};

/// Size limits for exhaustive constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group the closure and product constructions may build.
    pub max_order: usize,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub lattice_cap: usize,
    /// Verify associativity when a table is constructed. Turning this off is
    /// only sound for tables that are known to come from a group.
    pub check_associativity: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 5000,
            lattice_cap: 256,
            check_associativity: true,
        }
    }
}

/// Below this order associativity is checked on every triple; above it the
/// check runs over (x, s, y) with `s` a generator, which is equivalent for a
/// table whose generators generate it.
const FULL_ASSOCIATIVITY_LIMIT: usize = 128;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
}

/// Groups are equal when their tables are equal; labels and the chosen
/// generators do not participate.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a row-major table with the identity at index 0,
    /// verifying the group axioms and that `generators` generate.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
        limits: &Limits,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("order must be positive".into()));
        }
        if order > limits.max_order {
            return Err(Error::ClosureCapExceeded {
                cap: limits.max_order,
                reached: order,
            });
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidGroup("label count differs from order".into()));
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(Error::ElementOutOfRange { element: g, order });
        }
        let table: Vec<u32> = table.into_iter().map(|x| x as u32).collect();
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        let mut g = FiniteGroup {
            order,
            table,
            inverses: Vec::new(),
            generators,
            labels,
        };
        g.verify_axioms(limits.check_associativity)?;
        Ok(g)
    }

    fn verify_axioms(&mut self, check_associativity: bool) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not a two-sided identity (fails at {x})"
                )));
            }
        }
        let mut seen = vec![usize::MAX; n];
        let mut inverses = vec![0u32; n];
        for x in 0..n {
            for y in 0..n {
                let z = self.mul(x, y);
                if seen[z] == x {
                    return Err(Error::InvalidGroup(format!(
                        "row {x} repeats element {z}"
                    )));
                }
                seen[z] = x;
                if z == 0 {
                    inverses[x] = y as u32;
                }
            }
        }
        for x in 0..n {
            if self.mul(inverses[x] as usize, x) != 0 {
                return Err(Error::InvalidGroup(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
        }
        self.inverses = inverses;

        let closure = subgroup::close(self, &self.generators);
        if closure.order() != n {
            return Err(Error::InvalidGroup(format!(
                "generators produce {} of {} elements",
                closure.order(),
                n
            )));
        }

        if check_associativity {
            let middles: Vec<usize> = if n <= FULL_ASSOCIATIVITY_LIMIT {
                (0..n).collect()
            } else {
                self.generators.clone()
            };
            for x in 0..n {
                for &s in &middles {
                    let xs = self.mul(x, s);
                    for y in 0..n {
                        if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({x}, {s}, {y})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Closure of a set of permutations of `0..degree`, with labels in cycle
    /// notation. Element 0 is the identity and the generators keep the order
    /// they were given in.
    pub fn from_permutations(degree: usize, generators: &[Perm], limits: &Limits) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::NotAPermutation { index: i, degree });
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for (gi, g) in generators.iter().enumerate() {
                let y = elements[x].compose(g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= limits.max_order {
                            return Err(Error::ClosureCapExceeded {
                                cap: limits.max_order,
                                reached: i + 1,
                            });
                        }
                        index.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((x, gi));
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx);
            }
            // BFS pops in index order, so `right[x]` lines up with `x`.
            right.push(row);
        }
        let n = elements.len();
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            table[x * n] = x;
            for y in 1..n {
                let (p, gi) = parent[y];
                table[x * n + y] = right[table[x * n + p]][gi];
            }
        }
        let gens = generators.iter().map(|g| index[g]).collect();
        let labels = elements.iter().map(|p| p.to_string()).collect();
        FiniteGroup::from_table(n, table, gens, Some(labels), limits)
    }

    /// Convenience wrapper taking 1-based cycle lists per generator.
    pub fn from_cycles(degree: usize, generators: &[Vec<Vec<usize>>], limits: &Limits) -> Result<Self> {
        let perms = generators
            .iter()
            .map(|c| Perm::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_permutations(degree, &perms, limits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(a, self.mul(x, y))
    }

    /// `y^-1 x y`
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs() % self.element_order(x) as u64;
        let mut acc = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        Subgroup::from_mask(mask)
    }

    /// Exhaustive check of every axiom, independent of how the group was
    /// built. Runs in `O(n^3)`.
    pub fn verify_exhaustively(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| self.mul(0, x) == x && self.mul(x, 0) == x)
            && (0..n).all(|x| self.mul(x, self.inv(x)) == 0 && self.mul(self.inv(x), x) == 0)
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    let xy = self.mul(x, y);
                    (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
                })
            })
    }

    /// Re-labels the elements. Used for presentation only.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidGroup("label count differs from order".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// A subgroup re-indexed as a group in its own right, together with the
    /// inclusion map into `self` (sorted element order, identity first).
    pub fn subgroup_as_group(&self, h: &Subgroup, limits: &Limits) -> Result<(FiniteGroup, GroupHom)> {
        let elems = h.elements().to_vec();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &x in &elems {
            for &y in &elems {
                let z = self.mul(x, y);
                if pos[z] == usize::MAX {
                    return Err(Error::InvalidGroup("subset is not closed".into()));
                }
                table.push(pos[z]);
            }
        }
        let gens = (1..m).collect();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let sub = FiniteGroup::from_table(m, table, gens, Some(labels), limits)?;
        let inclusion = GroupHom::new(&sub, self, elems)?;
        Ok((sub, inclusion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_cycles(3, &[vec![vec![1, 2]], vec![vec![1, 2, 3]]], &Limits::default())
            .unwrap()
    }

    #[test]
    fn s3_from_permutations() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert!(g.verify_exhaustively());
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_group_from_empty_generators() {
        let g = FiniteGroup::from_permutations(1, &[], &Limits::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.verify_exhaustively());
    }

    #[test]
    fn dihedral_of_square() {
        let g = FiniteGroup::from_cycles(
            4,
            &[vec![vec![1, 2, 3, 4]], vec![vec![1, 3]]],
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let limits = Limits {
            max_order: 10,
            ..Limits::default()
        };
        let err = FiniteGroup::from_cycles(
            4,
            &[vec![vec![1, 2]], vec![vec![1, 2, 3, 4]]],
            &limits,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ClosureCapExceeded { cap: 10, .. }));
    }

    #[test]
    fn degree_mismatch_is_not_a_permutation() {
        let p = Perm::identity(2);
        let err = FiniteGroup::from_permutations(3, &[p], &Limits::default()).unwrap_err();
        assert_eq!(err, Error::NotAPermutation { index: 0, degree: 3 });
    }

    #[test]
    fn rejects_non_associative_table() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.iter().flatten().copied().collect();
        let err = FiniteGroup::from_table(5, table, vec![1, 2], None, &Limits::default());
        assert!(matches!(err, Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn rejects_non_generating_set() {
        let c4 = cyclic(4);
        let table = (0..4)
            .flat_map(|x| (0..4).map(move |y| (x + y) % 4))
            .collect();
        let err = FiniteGroup::from_table(4, table, vec![2], None, &Limits::default());
        assert!(matches!(err, Err(Error::InvalidGroup(_))));
        assert_eq!(c4.order(), 4);
    }

    #[test]
    fn powers_and_orders() {
        let g = s3();
        let r = g.find_label("(1 2 3)").unwrap();
        assert_eq!(g.element_order(r), 3);
        assert_eq!(g.pow(r, 3), 0);
        assert_eq!(g.pow(r, -1), g.inv(r));
    }

    #[test]
    fn subgroup_as_group_keeps_structure() {
        let g = s3();
        let r = g.find_label("(1 2 3)").unwrap();
        let h = subgroup_closure(&g, &[r]).unwrap();
        let (sub, inc) = g.subgroup_as_group(&h, &Limits::default()).unwrap();
        assert_eq!(sub.order(), 3);
        assert!(inc.is_injective());
    }
}
