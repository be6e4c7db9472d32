use super::FiniteGroup;
use crate::error::Result;

/// A subgroup stored as a sorted element list plus a membership mask over the
/// parent's elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let elements = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { elements, mask }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    /// Ascending element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup::from_mask(mask)
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .all(|&n| g.generators().iter().all(|&s| self.contains(g.conjugate(n, s))))
    }
}

/// Incremental subgroup closure: a growing generator list together with the
/// subgroup it generates.
#[derive(Clone, Debug)]
pub struct Closure<'g> {
    group: &'g FiniteGroup,
    gens: Vec<usize>,
    mask: Vec<bool>,
    elements: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub fn trivial(group: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        Closure {
            group,
            gens: Vec::new(),
            mask,
            elements: vec![0],
        }
    }

    pub fn from_subgroup(group: &'g FiniteGroup, h: &Subgroup) -> Self {
        Closure {
            group,
            gens: h.elements().iter().copied().filter(|&x| x != 0).collect(),
            mask: h.mask.clone(),
            elements: h.elements().to_vec(),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Adds `x` and closes. Returns whether the subgroup grew.
    pub fn add(&mut self, x: usize) -> bool {
        if self.mask[x] {
            return false;
        }
        self.gens.push(x);
        // Right-multiplying everything by every generator until nothing new
        // appears yields the generated subgroup (finite, so no inverses needed).
        let mut i = 0;
        let mut queue = self.elements.clone();
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for &s in &self.gens {
                let y = self.group.mul(e, s);
                if !self.mask[y] {
                    self.mask[y] = true;
                    self.elements.push(y);
                    queue.push(y);
                }
            }
        }
        true
    }

    pub fn finish(self) -> Subgroup {
        Subgroup::from_mask(self.mask)
    }
}

pub(crate) fn close(g: &FiniteGroup, seeds: &[usize]) -> Subgroup {
    let mut c = Closure::trivial(g);
    for &s in seeds {
        c.add(s);
    }
    c.finish()
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_closure(g: &FiniteGroup, seeds: &[usize]) -> Result<Subgroup> {
    for &s in seeds {
        g.check_element(s)?;
    }
    Ok(close(g, seeds))
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure(g: &FiniteGroup, seeds: &[usize]) -> Result<Subgroup> {
    for &s in seeds {
        g.check_element(s)?;
    }
    let mut c = Closure::trivial(g);
    for &s in seeds {
        c.add(s);
    }
    // Closed under conjugation by the generators of `g` implies normal.
    let mut i = 0;
    while i < c.generators().len() {
        let n = c.generators()[i];
        i += 1;
        for &s in g.generators() {
            let conj = g.conjugate(n, s);
            c.add(conj);
        }
    }
    Ok(c.finish())
}

/// `[H, K]`, the subgroup generated by all `h^-1 k^-1 h k`.
pub fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let mut c = Closure::trivial(g);
    for &x in h.elements() {
        for &y in k.elements() {
            c.add(g.commutator(x, y));
        }
    }
    c.finish()
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let mask = g
        .elements()
        .map(|z| g.generators().iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
        .collect();
    Subgroup::from_mask(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, quaternion, symmetric};

    /// Conjugate every seed by every element, then close.
    fn normal_closure_oracle(g: &FiniteGroup, seeds: &[usize]) -> Subgroup {
        let mut all = Vec::new();
        for &s in seeds {
            for y in g.elements() {
                all.push(g.conjugate(s, y));
            }
        }
        close(g, &all)
    }

    #[test]
    fn closure_examples() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        assert_eq!(subgroup_closure(&s3, &[r]).unwrap().order(), 3);
        assert!(subgroup_closure(&s3, &[]).unwrap().is_trivial());
        let a = s3.find_label("(1 2)").unwrap();
        let b = s3.find_label("(1 3)").unwrap();
        assert!(subgroup_closure(&s3, &[a, b]).unwrap().is_whole());
        assert!(subgroup_closure(&s3, &[17]).is_err());
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        assert_eq!(normal_closure(&s3, &[r]).unwrap().order(), 3);
        assert!(normal_closure(&s3, &[0]).unwrap().is_trivial());

        let s4 = symmetric(4);
        let v = s4.find_label("(1 2)(3 4)").unwrap();
        let n = normal_closure(&s4, &[v]).unwrap();
        assert_eq!(n.order(), 4);
        assert_eq!(n, normal_closure_oracle(&s4, &[v]));

        let t = s4.find_label("(1 2)").unwrap();
        assert_eq!(normal_closure(&s4, &[t]).unwrap().order(), 24);
    }

    #[test]
    fn commutator_examples() {
        let s3 = symmetric(3);
        let w = s3.whole();
        assert_eq!(commutator_subgroup(&s3, &w, &w).order(), 3);
        let c6 = cyclic(6);
        let w6 = c6.whole();
        assert!(commutator_subgroup(&c6, &w6, &w6).is_trivial());
        let q8 = quaternion();
        let wq = q8.whole();
        let d = commutator_subgroup(&q8, &wq, &wq);
        assert_eq!(d.order(), 2);
        assert!(d.contains(q8.find_label("-1").unwrap()));
    }

    #[test]
    fn center_examples() {
        let q8 = quaternion();
        let z = center(&q8);
        assert_eq!(z.order(), 2);
        assert!(z.contains(q8.find_label("-1").unwrap()));
        assert!(center(&cyclic(5)).is_whole());
        assert!(center(&symmetric(3)).is_trivial());
    }
}
