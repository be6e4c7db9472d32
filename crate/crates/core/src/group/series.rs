use super::{commutator_subgroup, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending series starting at the whole group and stopping at the first
/// repeated term (which is not stored twice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
}

impl SeriesChain {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    pub fn reaches_trivial(&self) -> bool {
        self.terms.last().is_some_and(Subgroup::is_trivial)
    }

    /// The `k`-th term, 1-indexed; past the end the series is stable.
    pub fn term(&self, k: usize) -> &Subgroup {
        assert!(k >= 1, "series terms are 1-indexed");
        let i = (k - 1).min(self.terms.len() - 1);
        &self.terms[i]
    }
}

pub fn series(g: &FiniteGroup, kind: SeriesKind) -> SeriesChain {
    let whole = g.whole();
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Derived => commutator_subgroup(g, last, last),
            SeriesKind::LowerCentral => commutator_subgroup(g, &whole, last),
        };
        if next == *last {
            break;
        }
        terms.push(next);
    }
    SeriesChain { kind, terms }
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    series(g, SeriesKind::Derived).reaches_trivial()
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    series(g, SeriesKind::LowerCentral).reaches_trivial()
}

/// Number of strict steps from `G` down to the trivial group, or `None` when
/// the group is not solvable.
pub fn derived_length(g: &FiniteGroup) -> Option<usize> {
    let s = series(g, SeriesKind::Derived);
    s.reaches_trivial().then(|| s.terms.len() - 1)
}

/// The unique `m >= 1` with `x ∈ δ_m G \ δ_{m+1} G`.
pub fn derived_depth(g: &FiniteGroup, x: usize) -> Result<usize> {
    g.check_element(x)?;
    if x == 0 {
        return Err(Error::IdentityElement);
    }
    let s = series(g, SeriesKind::Derived);
    if !s.reaches_trivial() {
        return Err(Error::NotSolvable);
    }
    let m = s
        .terms
        .iter()
        .rposition(|t| t.contains(x))
        .expect("whole group contains every element");
    Ok(m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, dihedral, quaternion, symmetric};

    #[test]
    fn derived_series_orders() {
        assert_eq!(series(&symmetric(4), SeriesKind::Derived).orders(), vec![24, 12, 4, 1]);
        assert_eq!(series(&symmetric(3), SeriesKind::Derived).orders(), vec![6, 3, 1]);
        assert_eq!(series(&cyclic(6), SeriesKind::Derived).orders(), vec![6, 1]);
        assert_eq!(series(&quaternion(), SeriesKind::Derived).orders(), vec![8, 2, 1]);
        assert_eq!(series(&cyclic(1), SeriesKind::Derived).orders(), vec![1]);
    }

    #[test]
    fn perfect_group_stops_without_repeating() {
        let a5 = alternating(5);
        let s = series(&a5, SeriesKind::Derived);
        assert_eq!(s.orders(), vec![60]);
        assert!(!is_solvable(&a5));
        assert_eq!(derived_length(&a5), None);
    }

    #[test]
    fn solvable_and_nilpotent() {
        let s4 = symmetric(4);
        assert!(is_solvable(&s4) && !is_nilpotent(&s4));
        let q8 = quaternion();
        assert!(is_solvable(&q8) && is_nilpotent(&q8));
        let t = cyclic(1);
        assert!(is_solvable(&t) && is_nilpotent(&t));
        assert!(is_nilpotent(&dihedral(4)));
        assert!(!is_nilpotent(&dihedral(3)));
        assert_eq!(
            series(&s4, SeriesKind::LowerCentral).orders(),
            vec![24, 12]
        );
    }

    #[test]
    fn derived_terms_are_normal_in_whole_group() {
        for g in [symmetric(4), quaternion(), dihedral(6), alternating(4)] {
            let s = series(&g, SeriesKind::Derived);
            for w in s.terms.windows(2) {
                assert!(w[1].is_subset_of(&w[0]));
            }
            for t in &s.terms {
                assert!(g.elements().all(|y| t
                    .elements()
                    .iter()
                    .all(|&n| t.contains(g.conjugate(n, y)))));
            }
        }
    }

    #[test]
    fn depth_examples() {
        let s3 = symmetric(3);
        assert_eq!(derived_depth(&s3, s3.find_label("(1 2)").unwrap()), Ok(1));
        assert_eq!(derived_depth(&s3, s3.find_label("(1 2 3)").unwrap()), Ok(2));
        let q8 = quaternion();
        assert_eq!(derived_depth(&q8, q8.find_label("-1").unwrap()), Ok(2));
        assert_eq!(derived_depth(&q8, 0), Err(Error::IdentityElement));
        let a5 = alternating(5);
        assert_eq!(derived_depth(&a5, 1), Err(Error::NotSolvable));
    }
}
