use super::{commutator_subgroup, FiniteGroup, GroupHom, Limits, Subgroup};
use crate::error::{Error, Result};

/// `G/N` together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    /// Smallest element of each coset, indexed by coset.
    pub representatives: Vec<usize>,
}

/// Coset group of a normal subgroup. Coset `k` is the `k`-th coset met when
/// scanning elements in ascending order, so the identity coset is 0.
pub fn quotient_group(g: &FiniteGroup, n: &Subgroup, limits: &Limits) -> Result<Quotient> {
    if n.parent_order() != g.order() {
        return Err(Error::DimensionMismatch("subgroup of another group".into()));
    }
    for &x in n.elements() {
        for y in g.elements() {
            if !n.contains(g.conjugate(x, y)) {
                return Err(Error::NotNormal {
                    element: x,
                    conjugator: y,
                });
            }
        }
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(x, m)] = k;
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    for &s in g.generators() {
        let c = coset_of[s];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let labels = reps
        .iter()
        .map(|&r| {
            if n.is_trivial() {
                g.label(r).to_string()
            } else {
                format!("[{}]", g.label(r))
            }
        })
        .collect();
    let group = FiniteGroup::from_table(q, table, gens, Some(labels), limits)?;
    let projection = GroupHom::new(g, &group, coset_of)?;
    Ok(Quotient {
        group,
        projection,
        representatives: reps,
    })
}

/// Direct product with canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub injections: Vec<GroupHom>,
    pub projections: Vec<GroupHom>,
    orders: Vec<usize>,
}

impl DirectProduct {
    /// Index of a tuple; the first component is the most significant digit.
    pub fn encode(&self, components: &[usize]) -> usize {
        encode(&self.orders, components)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        decode(&self.orders, x)
    }
}

fn encode(orders: &[usize], components: &[usize]) -> usize {
    components
        .iter()
        .zip(orders)
        .fold(0, |acc, (&c, &n)| acc * n + c)
}

fn decode(orders: &[usize], mut x: usize) -> Vec<usize> {
    let mut out = vec![0; orders.len()];
    for (i, &n) in orders.iter().enumerate().rev() {
        out[i] = x % n;
        x /= n;
    }
    out
}

pub fn direct_product(factors: &[&FiniteGroup], limits: &Limits) -> Result<DirectProduct> {
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let mut total: usize = 1;
    for &n in &orders {
        total = total.checked_mul(n).filter(|&t| t <= limits.max_order).ok_or(
            Error::ClosureCapExceeded {
                cap: limits.max_order,
                reached: total.saturating_mul(n),
            },
        )?;
    }
    let tuples: Vec<Vec<usize>> = (0..total).map(|x| decode(&orders, x)).collect();
    let mut table = Vec::with_capacity(total * total);
    let mut buf = vec![0; factors.len()];
    for a in &tuples {
        for b in &tuples {
            for (i, g) in factors.iter().enumerate() {
                buf[i] = g.mul(a[i], b[i]);
            }
            table.push(encode(&orders, &buf));
        }
    }
    let mut gens = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        for &s in g.generators() {
            let mut t = vec![0; factors.len()];
            t[i] = s;
            gens.push(encode(&orders, &t));
        }
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(factors)
                .map(|(&c, g)| g.label(c))
                .collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    let group = FiniteGroup::from_table(total, table, gens, Some(labels), limits)?;
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        let inj = g
            .elements()
            .map(|x| {
                let mut t = vec![0; factors.len()];
                t[i] = x;
                encode(&orders, &t)
            })
            .collect();
        injections.push(GroupHom::new(g, &group, inj)?);
        let proj = tuples.iter().map(|t| t[i]).collect();
        projections.push(GroupHom::new(&group, g, proj)?);
    }
    Ok(DirectProduct {
        group,
        injections,
        projections,
        orders,
    })
}

/// Invariant factors `d_1 | d_2 | ...` (all `> 1`) of `G/[G,G]`.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<usize> {
    let whole = g.whole();
    let derived = commutator_subgroup(g, &whole, &whole);
    let limits = Limits {
        check_associativity: false,
        ..Limits::default()
    };
    let q = quotient_group(g, &derived, &limits).expect("derived subgroup is normal");
    finite_abelian_invariants(&q.group)
}

/// Invariant factors of a finite abelian group, read off from how many
/// elements are killed by each prime power.
fn finite_abelian_invariants(a: &FiniteGroup) -> Vec<usize> {
    let n = a.order();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // per prime: exponents of the cyclic p-factors, descending
    let mut partitions: Vec<(usize, Vec<u32>)> = Vec::new();
    for &p in &primes {
        let mut counts = vec![1usize]; // elements killed by p^0
        let mut pk = 1;
        loop {
            pk *= p;
            let c = a.elements().filter(|&x| a.pow(x, pk as i64) == 0).count();
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        // number of cyclic factors of order >= p^k
        let at_least: Vec<u32> = counts
            .windows(2)
            .map(|w| ilog(w[1] / w[0], p))
            .collect();
        let parts = at_least[0] as usize;
        let exps = (1..=parts)
            .map(|j| at_least.iter().filter(|&&c| c as usize >= j).count() as u32)
            .collect();
        partitions.push((p, exps));
    }
    let len = partitions.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..len)
        .map(|j| {
            partitions
                .iter()
                .map(|(p, e)| p.pow(e.get(j).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, quaternion, symmetric};

    #[test]
    fn quotient_examples() {
        let lim = Limits::default();
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let a3 = crate::group::subgroup_closure(&s3, &[r]).unwrap();
        assert_eq!(quotient_group(&s3, &a3, &lim).unwrap().group.order(), 2);

        let triv = s3.trivial_subgroup();
        let q = quotient_group(&s3, &triv, &lim).unwrap();
        assert_eq!(q.group, s3);

        let q8 = quaternion();
        let z = crate::group::center(&q8);
        let k = quotient_group(&q8, &z, &lim).unwrap();
        assert_eq!(k.group.order(), 4);
        assert!(k.group.is_abelian());
        assert!(k.group.elements().all(|x| k.group.mul(x, x) == 0));

        let t = s3.find_label("(1 2)").unwrap();
        let h = crate::group::subgroup_closure(&s3, &[t]).unwrap();
        assert!(matches!(quotient_group(&s3, &h, &lim), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(abelian_invariants(&symmetric(3)), vec![2]);
        assert_eq!(abelian_invariants(&quaternion()), vec![2, 2]);
        assert_eq!(abelian_invariants(&cyclic(6)), vec![6]);
        assert_eq!(abelian_invariants(&cyclic(1)), Vec::<usize>::new());
        assert_eq!(abelian_invariants(&symmetric(4)), vec![2]);
        assert_eq!(abelian_invariants(&dihedral(4)), vec![2, 2]);
        assert_eq!(abelian_invariants(&elementary_abelian(3)), vec![2, 2, 2]);
    }

    #[test]
    fn mixed_abelian_invariants() {
        let lim = Limits::default();
        let c4 = cyclic(4);
        let c6 = cyclic(6);
        let p = direct_product(&[&c4, &c6], &lim).unwrap();
        // C4 x C6 = C2 x C12
        assert_eq!(abelian_invariants(&p.group), vec![2, 12]);
        let c9 = cyclic(9);
        let c3 = cyclic(3);
        let p = direct_product(&[&c3, &c9], &lim).unwrap();
        assert_eq!(abelian_invariants(&p.group), vec![3, 9]);
    }

    #[test]
    fn product_examples() {
        let lim = Limits::default();
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        let p = direct_product(&[&c2, &c3], &lim).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(p.group.elements().any(|x| p.group.element_order(x) == 6));

        let s3 = symmetric(3);
        let t = cyclic(1);
        let p = direct_product(&[&s3, &t], &lim).unwrap();
        assert_eq!(p.group, s3);

        let p = direct_product(&[&s3, &s3], &lim).unwrap();
        assert_eq!(p.group.order(), 36);
        for i in 0..2 {
            let back = p.injections[i].then(&p.projections[i]);
            assert_eq!(back, GroupHom::identity(&s3));
        }
        assert_eq!(p.decode(p.encode(&[3, 4])), vec![3, 4]);

        let small = Limits {
            max_order: 30,
            ..Limits::default()
        };
        assert!(matches!(
            direct_product(&[&s3, &s3], &small),
            Err(Error::ClosureCapExceeded { .. })
        ));
    }

    #[test]
    fn quotient_by_derived_matches_invariants() {
        let lim = Limits::default();
        for g in [symmetric(4), quaternion(), dihedral(6)] {
            let w = g.whole();
            let d = commutator_subgroup(&g, &w, &w);
            let q = quotient_group(&g, &d, &lim).unwrap();
            assert_eq!(abelian_invariants(&q.group), abelian_invariants(&g));
        }
    }
}
