use std::collections::VecDeque;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism between finite groups, stored as a total image table and
/// verified multiplicative on every pair when constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    images: Vec<usize>,
    target_order: usize,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        for &y in &images {
            target.check_element(y)?;
        }
        for x in source.elements() {
            let fx = images[x];
            for y in source.elements() {
                if images[source.mul(x, y)] != target.mul(fx, images[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(GroupHom {
            images,
            target_order: target.order(),
        })
    }

    /// Extends images of `source.generators()` along the Cayley graph, then
    /// verifies the result exhaustively.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        generator_images: &[usize],
    ) -> Result<Self> {
        let gens = source.generators();
        if gens.len() != generator_images.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} generator images for {} generators",
                generator_images.len(),
                gens.len()
            )));
        }
        for &y in generator_images {
            target.check_element(y)?;
        }
        let mut images = vec![usize::MAX; source.order()];
        images[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&s, &fs) in gens.iter().zip(generator_images) {
                let y = source.mul(x, s);
                let fy = target.mul(images[x], fs);
                if images[y] == usize::MAX {
                    images[y] = fy;
                    queue.push_back(y);
                } else if images[y] != fy {
                    return Err(Error::NotHomomorphism { x, y: s });
                }
            }
        }
        GroupHom::new(source, target, images)
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            images: g.elements().collect(),
            target_order: g.order(),
        }
    }

    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> Self {
        GroupHom {
            images: vec![0; source.order()],
            target_order: target.order(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            images: self.images.iter().map(|&y| other.apply(y)).collect(),
            target_order: other.target_order,
        }
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_mask(self.images.iter().map(|&y| y == 0).collect())
    }

    pub fn image(&self) -> Subgroup {
        let mut mask = vec![false; self.target_order];
        for &y in &self.images {
            mask[y] = true;
        }
        Subgroup::from_mask(mask)
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().skip(1).all(|&y| y != 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }
}

/// Checks `h(x) = h(y) ⇒ x = y` over `domain`, returning the first collision
/// `(later, earlier)` in ascending element order.
pub fn exhaustive_injectivity(h: &GroupHom, domain: &Subgroup) -> std::result::Result<(), (usize, usize)> {
    let mut first_preimage = vec![usize::MAX; h.target_order()];
    for &x in domain.elements() {
        let y = h.apply(x);
        if first_preimage[y] != usize::MAX {
            return Err((x, first_preimage[y]));
        }
        first_preimage[y] = x;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn sign_map_is_homomorphism() {
        let s3 = symmetric(3);
        let c2 = cyclic(2);
        let gens: Vec<usize> = s3
            .generators()
            .iter()
            .map(|&g| if s3.element_order(g) == 2 { 1 } else { 0 })
            .collect();
        let sign = GroupHom::from_generator_images(&s3, &c2, &gens).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert!(sign.is_surjective());
        assert!(!sign.is_injective());
        let r = s3.find_label("(1 2 3)").unwrap();
        assert_eq!(exhaustive_injectivity(&sign, &s3.whole()), Err((r, 0)));
    }

    #[test]
    fn inconsistent_generator_images_fail() {
        let c4 = cyclic(4);
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        assert!(matches!(
            GroupHom::from_generator_images(&c4, &s3, &[r]),
            Err(Error::NotHomomorphism { .. })
        ));
    }

    #[test]
    fn identity_and_composition() {
        let s3 = symmetric(3);
        let id = GroupHom::identity(&s3);
        assert!(id.is_injective());
        assert_eq!(id.then(&id), id);
        assert!(exhaustive_injectivity(&id, &s3.whole()).is_ok());
    }
}
