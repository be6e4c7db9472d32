use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::rep::{Element, GroupRep};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::lattice::{hnf, reduce_mod_hnf, Matrix};
use crate::IntMatrix;

/// How the amalgamated subgroup sits inside one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// Finite amalgam into a finite factor.
    Finite(GroupHom),
    /// Abelian amalgam into an abelian factor: column `j` is the image of the
    /// amalgam's `j`-th standard generator.
    Lattice(IntMatrix),
    /// Trivial amalgam.
    Trivial,
}

/// Right-coset factorization `x = φ(c)·t` with `t` the chosen transversal
/// element of the coset `φ(C)·x`.
#[derive(Clone, Debug)]
enum Transversal {
    Trivial,
    /// Minimal element index per coset.
    Finite { head: Vec<usize>, rep: Vec<usize> },
    /// HNF-reduced vector per coset of `φ(C) + relations`.
    Lattice {
        hnf: IntMatrix,
        transform: IntMatrix,
        amalgam_dim: usize,
    },
}

/// A generalized free product `{ *A_i ; C }` with verified injective
/// embeddings and precomputed transversals.
#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    factors: Vec<GroupRep>,
    amalgam: GroupRep,
    embeddings: Vec<Embedding>,
    transversals: Vec<Transversal>,
}

impl AmalgamSpec {
    /// Validates the amalgam given the images of the amalgam's generators
    /// ([`GroupRep::generators`]) in each factor.
    pub fn new(
        factors: Vec<GroupRep>,
        amalgam: GroupRep,
        generator_images: Vec<Vec<Element>>,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::IncompatibleAmalgam("no factors".into()));
        }
        if generator_images.len() != factors.len() {
            return Err(Error::IncompatibleAmalgam(format!(
                "{} embeddings for {} factors",
                generator_images.len(),
                factors.len()
            )));
        }
        let mut embeddings = Vec::with_capacity(factors.len());
        for (i, (factor, images)) in factors.iter().zip(&generator_images).enumerate() {
            embeddings.push(build_embedding(i, factor, &amalgam, images)?);
        }
        Self::assemble(factors, amalgam, embeddings)
    }

    /// Finite amalgam with embeddings given as homomorphisms.
    pub fn from_homs(
        factors: Vec<FiniteGroup>,
        amalgam: FiniteGroup,
        embeddings: Vec<GroupHom>,
    ) -> Result<Self> {
        if embeddings.len() != factors.len() {
            return Err(Error::IncompatibleAmalgam(format!(
                "{} embeddings for {} factors",
                embeddings.len(),
                factors.len()
            )));
        }
        if factors.is_empty() {
            return Err(Error::IncompatibleAmalgam("no factors".into()));
        }
        let mut embs = Vec::new();
        for (i, (f, h)) in factors.iter().zip(embeddings).enumerate() {
            if h.source_order() != amalgam.order() || h.target_order() != f.order() {
                return Err(Error::IncompatibleAmalgam(format!(
                    "embedding {i} has the wrong source or target"
                )));
            }
            if !h.is_injective() {
                return Err(Error::NotInjective(i));
            }
            embs.push(if amalgam.order() == 1 {
                Embedding::Trivial
            } else {
                Embedding::Finite(h)
            });
        }
        Self::assemble(
            factors.into_iter().map(GroupRep::Finite).collect(),
            GroupRep::Finite(amalgam),
            embs,
        )
    }

    fn assemble(
        factors: Vec<GroupRep>,
        amalgam: GroupRep,
        embeddings: Vec<Embedding>,
    ) -> Result<Self> {
        let transversals = factors
            .iter()
            .zip(&embeddings)
            .map(|(f, e)| build_transversal(f, &amalgam, e))
            .collect();
        Ok(AmalgamSpec {
            factors,
            amalgam,
            embeddings,
            transversals,
        })
    }

    pub fn factors(&self) -> &[GroupRep] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &GroupRep {
        &self.factors[i]
    }

    pub fn amalgam(&self) -> &GroupRep {
        &self.amalgam
    }

    pub fn embeddings(&self) -> &[Embedding] {
        &self.embeddings
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// `φ_i(c)`
    pub fn embed(&self, i: usize, c: &Element) -> Element {
        let factor = &self.factors[i];
        match &self.embeddings[i] {
            Embedding::Trivial => factor.identity(),
            Embedding::Finite(h) => Element::Index(h.apply(c.index().expect("finite amalgam"))),
            Embedding::Lattice(m) => {
                let v = m.mul_vec(c.vector().expect("abelian amalgam")).expect("shape checked");
                Element::Vector(factor.as_abelian().unwrap().normalize(&v).unwrap())
            }
        }
    }

    /// Whether `x` lies in `φ_i(C)`.
    pub fn in_amalgam(&self, i: usize, x: &Element) -> bool {
        let (_, t) = self.split(i, x);
        self.factors[i].is_identity(&t)
    }

    /// `x = φ_i(c)·t` with `t` the transversal element of `x`'s coset.
    pub fn split(&self, i: usize, x: &Element) -> (Element, Element) {
        match &self.transversals[i] {
            Transversal::Trivial => (self.amalgam.identity(), x.clone()),
            Transversal::Finite { head, rep } => {
                let xi = x.index().expect("finite factor");
                (Element::Index(head[xi]), Element::Index(rep[xi]))
            }
            Transversal::Lattice {
                hnf,
                transform,
                amalgam_dim,
            } => {
                let v = x.vector().expect("abelian factor");
                let (t, z) = reduce_mod_hnf(hnf, v);
                let w = transform.mul_vec(&z).expect("shape");
                let c_raw = &w[..*amalgam_dim];
                let c = self
                    .amalgam
                    .as_abelian()
                    .expect("abelian amalgam")
                    .normalize(c_raw)
                    .expect("shape");
                let t = self.factors[i].as_abelian().unwrap().normalize(&t).unwrap();
                (Element::Vector(c), Element::Vector(t))
            }
        }
    }

    /// Transversal elements of a finite factor, ascending.
    pub fn transversal(&self, i: usize) -> Option<Vec<usize>> {
        match &self.transversals[i] {
            Transversal::Finite { rep, .. } => {
                let mut r: Vec<usize> = rep.clone();
                r.sort_unstable();
                r.dedup();
                Some(r)
            }
            Transversal::Trivial => self.factors[i]
                .as_finite()
                .map(|g| g.elements().collect()),
            Transversal::Lattice { .. } => None,
        }
    }

    pub fn check_syllable(&self, i: usize, x: &Element) -> Result<()> {
        if i >= self.factors.len() {
            return Err(Error::IncompatibleAmalgam(format!(
                "no factor {i} (amalgam has {})",
                self.factors.len()
            )));
        }
        self.factors[i].check(x)
    }

    pub fn all_finite(&self) -> bool {
        self.factors.iter().all(|f| f.as_finite().is_some())
            && (self.amalgam.as_finite().is_some() || self.amalgam.is_trivial())
    }
}

fn build_embedding(
    i: usize,
    factor: &GroupRep,
    amalgam: &GroupRep,
    images: &[Element],
) -> Result<Embedding> {
    let gens = amalgam.generators();
    if images.len() != gens.len() {
        return Err(Error::IncompatibleAmalgam(format!(
            "embedding {i} gives {} images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    for y in images {
        factor.check(y)?;
    }
    if amalgam.is_trivial() {
        if images.iter().any(|y| !factor.is_identity(y)) {
            return Err(Error::NotInjective(i));
        }
        return Ok(Embedding::Trivial);
    }
    for (g, y) in gens.iter().zip(images) {
        if amalgam.element_order(g) != factor.element_order(y) {
            return Err(Error::NotInjective(i));
        }
    }
    match (amalgam, factor) {
        (GroupRep::Finite(c), GroupRep::Finite(a)) => {
            let imgs: Vec<usize> = images.iter().map(|y| y.index().unwrap()).collect();
            let h = GroupHom::from_generator_images(c, a, &imgs)?;
            if !h.is_injective() {
                return Err(Error::NotInjective(i));
            }
            Ok(Embedding::Finite(h))
        }
        (GroupRep::Abelian(c), GroupRep::Abelian(a)) => {
            let cols: Vec<Vec<BigInt>> = images
                .iter()
                .map(|y| y.vector().unwrap().to_vec())
                .collect();
            let e = Matrix::from_columns(a.dim(), &cols)?;
            // relations of C must die in A
            for (j, d) in c.torsion().iter().enumerate() {
                let col = &cols[c.free_rank() + j];
                if !a.is_identity(&a.scale(col, d)) {
                    return Err(Error::IncompatibleAmalgam(format!(
                        "embedding {i}: torsion generator {j} of C does not map to an element of order dividing {d}"
                    )));
                }
            }
            // kernel of Z^dim(C) -> A must lie in C's relation lattice
            let combined = hcat(&e, &a.relation_matrix());
            let (h, u) = hnf(&combined);
            let rank = (0..h.cols())
                .take_while(|&j| (0..h.rows()).any(|r| !h[(r, j)].is_zero()))
                .count();
            for j in rank..h.cols() {
                let kernel_vec = u.column(j);
                for (k, x) in kernel_vec[..c.dim()].iter().enumerate() {
                    let ok = if k < c.free_rank() {
                        x.is_zero()
                    } else {
                        x.is_multiple_of(&c.torsion()[k - c.free_rank()])
                    };
                    if !ok {
                        return Err(Error::NotInjective(i));
                    }
                }
            }
            Ok(Embedding::Lattice(e))
        }
        _ => Err(Error::IncompatibleAmalgam(format!(
            "factor {i} and the amalgamated subgroup are of different kinds"
        ))),
    }
}

fn hcat(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut m = Matrix::zeros(a.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m[(r, c)] = a[(r, c)].clone();
        }
        for c in 0..b.cols() {
            m[(r, a.cols() + c)] = b[(r, c)].clone();
        }
    }
    m
}

fn build_transversal(factor: &GroupRep, amalgam: &GroupRep, emb: &Embedding) -> Transversal {
    match (emb, factor) {
        (Embedding::Trivial, _) => Transversal::Trivial,
        (Embedding::Finite(h), GroupRep::Finite(a)) => {
            let n = a.order();
            let mut head = vec![usize::MAX; n];
            let mut rep = vec![usize::MAX; n];
            for t in a.elements() {
                if rep[t] != usize::MAX {
                    continue;
                }
                // ascending scan: `t` is the least element of its coset
                for c in 0..h.source_order() {
                    let y = a.mul(h.apply(c), t);
                    head[y] = c;
                    rep[y] = t;
                }
            }
            Transversal::Finite { head, rep }
        }
        (Embedding::Lattice(e), GroupRep::Abelian(a)) => {
            let combined = hcat(e, &a.relation_matrix());
            let (h, u) = hnf(&combined);
            Transversal::Lattice {
                hnf: h,
                transform: u,
                amalgam_dim: amalgam.as_abelian().map_or(0, |c| c.dim()),
            }
        }
        _ => unreachable!("embedding kind validated against factor kind"),
    }
}

/// Convenience: `BigInt` vector from small integers.
pub fn vector(xs: &[i64]) -> Element {
    Element::Vector(xs.iter().map(|&x| BigInt::from(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::FgAbelian;

    fn s3_over_c3() -> AmalgamSpec {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        AmalgamSpec::new(
            vec![GroupRep::Finite(s3.clone()), GroupRep::Finite(s3)],
            GroupRep::Finite(cyclic(3)),
            vec![vec![Element::Index(r)], vec![Element::Index(r)]],
        )
        .unwrap()
    }

    #[test]
    fn s3_double_transversal_has_two_cosets() {
        let spec = s3_over_c3();
        assert_eq!(spec.transversal(0).unwrap().len(), 2);
        assert_eq!(spec.transversal(1).unwrap(), vec![0, 1]);
        for x in 0..6 {
            let (c, t) = spec.split(0, &Element::Index(x));
            let back = spec.factor(0).mul(&spec.embed(0, &c), &t);
            assert_eq!(back, Element::Index(x));
        }
    }

    #[test]
    fn trivial_amalgam_is_free_product() {
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(cyclic(4)), GroupRep::Finite(symmetric(3))],
            GroupRep::Finite(cyclic(1)),
            vec![vec![], vec![]],
        )
        .unwrap();
        assert_eq!(spec.transversal(0).unwrap().len(), 4);
    }

    #[test]
    fn order_mismatch_is_not_injective() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let err = AmalgamSpec::new(
            vec![GroupRep::Finite(s3)],
            GroupRep::Finite(cyclic(4)),
            vec![vec![Element::Index(r)]],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotInjective(0));
    }

    #[test]
    fn kind_mismatch_is_incompatible() {
        let err = AmalgamSpec::new(
            vec![GroupRep::Abelian(FgAbelian::free(1))],
            GroupRep::Finite(cyclic(2)),
            vec![vec![vector(&[1])]],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::NotInjective(0) | Error::IncompatibleAmalgam(_)
        ));
    }

    #[test]
    fn lattice_split_in_the_plane() {
        let spec = AmalgamSpec::new(
            vec![
                GroupRep::Abelian(FgAbelian::free(2)),
                GroupRep::Abelian(FgAbelian::free(1)),
            ],
            GroupRep::Abelian(FgAbelian::free(1)),
            vec![vec![vector(&[2, 0])], vec![vector(&[1])]],
        )
        .unwrap();
        let (c, t) = spec.split(0, &vector(&[5, -3]));
        assert_eq!(c, vector(&[2]));
        assert_eq!(t, vector(&[1, -3]));
        assert!(spec.in_amalgam(0, &vector(&[-4, 0])));
        assert!(!spec.in_amalgam(0, &vector(&[1, 0])));
        assert!(spec.in_amalgam(1, &vector(&[7])));
    }

    #[test]
    fn lattice_embedding_must_be_injective() {
        // Z -> Z/4 is never injective
        let err = AmalgamSpec::new(
            vec![GroupRep::Abelian(FgAbelian::new(0, vec![BigInt::from(4)]).unwrap())],
            GroupRep::Abelian(FgAbelian::free(1)),
            vec![vec![vector(&[1])]],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotInjective(0));
        // C2 -> Z ⊕ C2 onto the torsion part is fine
        let spec = AmalgamSpec::new(
            vec![GroupRep::Abelian(FgAbelian::new(1, vec![BigInt::from(2)]).unwrap())],
            GroupRep::Abelian(FgAbelian::new(0, vec![BigInt::from(2)]).unwrap()),
            vec![vec![vector(&[0, 1])]],
        )
        .unwrap();
        let (c, t) = spec.split(0, &vector(&[3, 1]));
        assert_eq!((c, t), (vector(&[1]), vector(&[3, 0])));
    }
}
