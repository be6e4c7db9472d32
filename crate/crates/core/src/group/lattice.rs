use std::collections::HashSet;

use super::{Closure, FiniteGroup, Limits, Subgroup};
use crate::error::{Error, Result};

/// Every subgroup of `g`, sorted by order and then by element list.
///
/// Grows subgroups one generator at a time from the trivial group; for each
/// subgroup `H` only one element per right coset `Hx` is tried, since
/// `<H, hx> = <H, x>`.
pub fn all_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if g.order() > limits.lattice_cap {
        return Err(Error::ClosureCapExceeded {
            cap: limits.lattice_cap,
            reached: g.order(),
        });
    }
    let trivial = g.trivial_subgroup();
    let mut seen: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        let mut covered = vec![false; g.order()];
        for x in g.elements() {
            if covered[x] {
                continue;
            }
            for &e in h.elements() {
                covered[g.mul(e, x)] = true;
            }
            if h.contains(x) {
                continue;
            }
            let mut c = Closure::from_subgroup(g, &h);
            c.add(x);
            let k = c.finish();
            if seen.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut all: Vec<Subgroup> = seen.into_iter().collect();
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(all)
}

/// Maximal proper subgroups, in the order of [`all_subgroups`].
pub fn maximal_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    let all = all_subgroups(g, limits)?;
    let proper: Vec<&Subgroup> = all.iter().filter(|h| !h.is_whole()).collect();
    Ok(proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subset_of(k))
        })
        .map(|h| (*h).clone())
        .collect())
}

/// Intersection of the maximal subgroups; the whole group when there are none.
pub fn frattini(g: &FiniteGroup, limits: &Limits) -> Result<Subgroup> {
    let maximal = maximal_subgroups(g, limits)?;
    Ok(maximal
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, quaternion, symmetric};

    #[test]
    fn subgroup_counts() {
        let lim = Limits::default();
        assert_eq!(all_subgroups(&symmetric(3), &lim).unwrap().len(), 6);
        assert_eq!(all_subgroups(&quaternion(), &lim).unwrap().len(), 6);
        assert_eq!(all_subgroups(&dihedral(4), &lim).unwrap().len(), 10);
        assert_eq!(all_subgroups(&symmetric(4), &lim).unwrap().len(), 30);
        assert_eq!(all_subgroups(&cyclic(12), &lim).unwrap().len(), 6);
    }

    #[test]
    fn frattini_examples() {
        let lim = Limits::default();
        let q8 = quaternion();
        let phi = frattini(&q8, &lim).unwrap();
        assert_eq!(phi.elements(), &[0, 1]);
        assert!(frattini(&elementary_abelian(2), &lim).unwrap().is_trivial());
        assert!(frattini(&cyclic(1), &lim).unwrap().is_trivial());
        assert_eq!(frattini(&cyclic(8), &lim).unwrap().order(), 4);
        assert!(frattini(&symmetric(3), &lim).unwrap().is_trivial());
        assert_eq!(maximal_subgroups(&elementary_abelian(2), &lim).unwrap().len(), 3);
    }

    #[test]
    fn lattice_cap() {
        let lim = Limits {
            lattice_cap: 4,
            ..Limits::default()
        };
        assert!(matches!(
            frattini(&symmetric(3), &lim),
            Err(Error::ClosureCapExceeded { cap: 4, .. })
        ));
    }
}
