use crate::amalgam::{AmalgamSpec, AmalgamWord};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Generator limit for extracted presentations.
pub const MAX_GENERATORS: usize = 64;

/// One letter of a relator: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }
}

/// Finite presentation of an amalgam of finite groups: one generator per
/// nonidentity factor element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Vec<Letter>>,
    /// `(factor, element)` behind each generator.
    pub generator_source: Vec<(usize, usize)>,
    /// Order of each generator's source element.
    pub generator_orders: Vec<usize>,
    /// How many relators come from multiplication tables; the rest identify
    /// amalgam images.
    pub cayley_relators: usize,
}

impl Presentation {
    /// Generator standing for `x` in factor `i`, `None` for the identity.
    pub fn generator(&self, i: usize, x: usize) -> Option<usize> {
        self.generator_source.iter().position(|&s| s == (i, x))
    }

    /// Letters of a word, identity syllables dropped.
    pub fn word(&self, w: &AmalgamWord) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for (i, x) in &w.syllables {
            let x = x
                .index()
                .ok_or_else(|| Error::MalformedElement(format!("{x} in a finite factor")))?;
            if x != 0 {
                let g = self.generator(*i, x).ok_or(Error::ElementOutOfRange {
                    element: x,
                    order: 0,
                })?;
                out.push(Letter::new(g));
            }
        }
        Ok(out)
    }

    pub fn identification_relators(&self) -> &[Vec<Letter>] {
        &self.relators[self.cayley_relators..]
    }
}

pub fn presentation_of_amalgam(spec: &AmalgamSpec) -> Result<Presentation> {
    let mut factors: Vec<&FiniteGroup> = Vec::new();
    for i in 0..spec.num_factors() {
        factors.push(spec.factor(i).as_finite().ok_or_else(|| {
            Error::Unsupported(format!("factor {i} is not finite"))
        })?);
    }
    let ngens: usize = factors.iter().map(|f| f.order() - 1).sum();
    if ngens > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: ngens,
            limit: MAX_GENERATORS,
        });
    }
    let mut generator_source = Vec::with_capacity(ngens);
    let mut generator_orders = Vec::with_capacity(ngens);
    let mut offset = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        offset.push(generator_source.len());
        for x in 1..f.order() {
            generator_source.push((i, x));
            generator_orders.push(f.element_order(x));
        }
    }
    let gen = |i: usize, x: usize| offset[i] + x - 1;
    let mut relators = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for x in 1..f.order() {
            for y in 1..f.order() {
                let z = f.mul(x, y);
                let mut r = vec![Letter::new(gen(i, x)), Letter::new(gen(i, y))];
                if z != 0 {
                    r.push(Letter::inv(gen(i, z)));
                }
                relators.push(r);
            }
        }
    }
    let cayley_relators = relators.len();
    if let Some(c) = spec.amalgam().elements() {
        for cx in c.iter().skip(1) {
            let x0 = spec.embed(0, cx).index().expect("finite");
            for j in 1..factors.len() {
                let xj = spec.embed(j, cx).index().expect("finite");
                relators.push(vec![Letter::new(gen(0, x0)), Letter::inv(gen(j, xj))]);
            }
        }
    }
    Ok(Presentation {
        ngens,
        relators,
        generator_source,
        generator_orders,
        cayley_relators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{Element, GroupRep};
    use crate::group::{cyclic, symmetric};

    #[test]
    fn s3_double_counts() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(s3.clone()), GroupRep::Finite(s3)],
            GroupRep::Finite(cyclic(3)),
            vec![vec![Element::Index(r)], vec![Element::Index(r)]],
        )
        .unwrap();
        let p = presentation_of_amalgam(&spec).unwrap();
        assert_eq!(p.ngens, 10);
        assert_eq!(p.cayley_relators, 50);
        assert_eq!(p.identification_relators().len(), 2);
    }

    #[test]
    fn free_product_and_cap() {
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(cyclic(2)), GroupRep::Finite(cyclic(2))],
            GroupRep::Finite(cyclic(1)),
            vec![vec![], vec![]],
        )
        .unwrap();
        let p = presentation_of_amalgam(&spec).unwrap();
        assert_eq!((p.ngens, p.identification_relators().len()), (2, 0));
        let big = AmalgamSpec::new(
            vec![GroupRep::Finite(symmetric(4)), GroupRep::Finite(symmetric(4)), GroupRep::Finite(symmetric(4))],
            GroupRep::Finite(cyclic(1)),
            vec![vec![], vec![], vec![]],
        )
        .unwrap();
        assert!(matches!(
            presentation_of_amalgam(&big),
            Err(Error::TooManyGenerators { count: 69, limit: 64 })
        ));
    }
}
