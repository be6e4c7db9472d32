use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::rep::{Element, GroupRep};
use super::spec::AmalgamSpec;
use super::word::{AmalgamWord, NormalForm};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};

/// A homomorphism from one factor into the common finite target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorMap {
    Finite(GroupHom),
    /// Images of the standard generators of an abelian factor.
    Abelian(Vec<usize>),
}

/// The homomorphism `G → target` induced by factor maps that agree on the
/// amalgamated subgroup.
#[derive(Clone, Debug)]
pub struct WordHom {
    target: FiniteGroup,
    maps: Vec<FactorMap>,
}

impl WordHom {
    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn maps(&self) -> &[FactorMap] {
        &self.maps
    }

    pub fn eval_element(&self, i: usize, x: &Element) -> usize {
        match (&self.maps[i], x) {
            (FactorMap::Finite(h), Element::Index(a)) => h.apply(*a),
            (FactorMap::Abelian(imgs), Element::Vector(v)) => eval_vector(&self.target, imgs, v),
            _ => panic!("element kind does not match factor map"),
        }
    }

    pub fn eval_word(&self, w: &AmalgamWord) -> usize {
        w.syllables.iter().fold(self.target.identity(), |acc, (i, x)| {
            self.target.mul(acc, self.eval_element(*i, x))
        })
    }

    pub fn eval_normal_form(&self, spec: &AmalgamSpec, nf: &NormalForm) -> usize {
        self.eval_word(&nf.to_word(spec))
    }

    /// `(factor, generator, image)` for every stored generator of every factor.
    pub fn generator_table(&self, spec: &AmalgamSpec) -> Vec<(usize, Element, usize)> {
        let mut out = Vec::new();
        for (i, f) in spec.factors().iter().enumerate() {
            for g in f.generators() {
                let y = self.eval_element(i, &g);
                out.push((i, g, y));
            }
        }
        out
    }
}

fn eval_vector(target: &FiniteGroup, imgs: &[usize], v: &[BigInt]) -> usize {
    let mut acc = target.identity();
    for (&g, k) in imgs.iter().zip(v) {
        let ord = BigInt::from(target.element_order(g));
        let e = k.mod_floor(&ord).to_i64().expect("reduced exponent fits");
        acc = target.mul(acc, target.pow(g, e));
    }
    acc
}

/// Builds the induced homomorphism after checking that every map is a
/// homomorphism from its factor and that all maps agree on `C`.
pub fn induce_hom(spec: &AmalgamSpec, target: &FiniteGroup, maps: Vec<FactorMap>) -> Result<WordHom> {
    if maps.len() != spec.num_factors() {
        return Err(Error::IncompatibleAmalgam(format!(
            "{} maps for {} factors",
            maps.len(),
            spec.num_factors()
        )));
    }
    for (i, (m, f)) in maps.iter().zip(spec.factors()).enumerate() {
        match (m, f) {
            (FactorMap::Finite(h), GroupRep::Finite(g)) => {
                if h.source_order() != g.order() || h.target_order() != target.order() {
                    return Err(Error::IncompatibleAmalgam(format!(
                        "map {i} has the wrong source or target"
                    )));
                }
            }
            (FactorMap::Abelian(imgs), GroupRep::Abelian(a)) => {
                if imgs.len() != a.dim() {
                    return Err(Error::IncompatibleAmalgam(format!(
                        "map {i} gives {} images for {} generators",
                        imgs.len(),
                        a.dim()
                    )));
                }
                for &y in imgs {
                    target.check_element(y)?;
                }
                for (p, &x) in imgs.iter().enumerate() {
                    for &y in &imgs[p + 1..] {
                        if target.mul(x, y) != target.mul(y, x) {
                            return Err(Error::NotHomomorphism { x, y });
                        }
                    }
                }
                for (k, d) in a.torsion().iter().enumerate() {
                    let y = imgs[a.free_rank() + k];
                    let o = BigInt::from(target.element_order(y));
                    if !d.is_multiple_of(&o) {
                        return Err(Error::NotHomomorphism { x: y, y });
                    }
                }
            }
            _ => {
                return Err(Error::IncompatibleAmalgam(format!(
                    "map {i} does not match the kind of factor {i}"
                )))
            }
        }
    }
    let hom = WordHom {
        target: target.clone(),
        maps,
    };
    // agreement on C: every element when finite, the standard basis otherwise
    let cs = spec
        .amalgam()
        .elements()
        .unwrap_or_else(|| spec.amalgam().generators());
    for c in &cs {
        let first = hom.eval_element(0, &spec.embed(0, c));
        for j in 1..spec.num_factors() {
            if hom.eval_element(j, &spec.embed(j, c)) != first {
                return Err(Error::DisagreeOnAmalgam {
                    c: spec.amalgam().label(c),
                    i: 0,
                    j,
                });
            }
        }
    }
    Ok(hom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::word::reduce;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn retraction_of_the_s3_double() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(s3.clone()), GroupRep::Finite(s3.clone())],
            GroupRep::Finite(cyclic(3)),
            vec![vec![Element::Index(r)], vec![Element::Index(r)]],
        )
        .unwrap();
        let id = GroupHom::identity(&s3);
        let psi = induce_hom(&spec, &s3, vec![FactorMap::Finite(id.clone()), FactorMap::Finite(id)]).unwrap();
        let t = Element::Index(s3.find_label("(1 2)").unwrap());
        let w = AmalgamWord::new(vec![(0, t.clone()), (1, t)]);
        assert_eq!(psi.eval_word(&w), 0);
        let nf = reduce(&spec, &w).unwrap();
        assert!(!nf.is_identity(&spec));
        assert_eq!(psi.eval_normal_form(&spec, &nf), 0);
    }

    #[test]
    fn disagreement_detected() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(s3.clone()), GroupRep::Finite(s3.clone())],
            GroupRep::Finite(cyclic(3)),
            vec![vec![Element::Index(r)], vec![Element::Index(r)]],
        )
        .unwrap();
        let id = GroupHom::identity(&s3);
        let triv = GroupHom::trivial(&s3, &s3);
        let err = induce_hom(&spec, &s3, vec![FactorMap::Finite(id), FactorMap::Finite(triv)]).unwrap_err();
        assert!(matches!(err, Error::DisagreeOnAmalgam { i: 0, j: 1, .. }));
    }

    #[test]
    fn abelian_map_into_c2() {
        use crate::amalgam::spec::vector;
        use crate::FgAbelian;
        let spec = AmalgamSpec::new(
            vec![GroupRep::Abelian(FgAbelian::free(2)), GroupRep::Abelian(FgAbelian::free(1))],
            GroupRep::Abelian(FgAbelian::free(1)),
            vec![vec![vector(&[2, 0])], vec![vector(&[1])]],
        )
        .unwrap();
        let c2 = cyclic(2);
        let h = induce_hom(
            &spec,
            &c2,
            vec![FactorMap::Abelian(vec![1, 0]), FactorMap::Abelian(vec![0])],
        )
        .unwrap();
        assert_eq!(h.eval_element(0, &vector(&[-3, 5])), 1);
        assert_eq!(h.eval_element(0, &vector(&[4, 5])), 0);
        // the B-side generator must map to the image of (2,0), which is trivial
        assert!(induce_hom(
            &spec,
            &c2,
            vec![FactorMap::Abelian(vec![1, 0]), FactorMap::Abelian(vec![1])],
        )
        .is_err());
    }
}
