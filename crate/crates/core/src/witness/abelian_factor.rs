use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::certificate::{hom_table, Certificate, CertificateKind, Detail, GroupDescription};
use super::common::list;
use crate::amalgam::{induce_hom, AmalgamSpec, Embedding, FactorMap, GroupRep, WordHom};
use crate::error::{Error, Result};
use crate::group::{cyclic, direct_product, subgroup_closure, FiniteGroup, GroupHom, Limits};
use crate::lattice::{finite_index_split, Matrix};
use crate::{IndexSplit, LatticeSubgroup};

/// Index of the free abelian factor `A` the engine projects from: the first
/// abelian factor.
pub fn abelian_factor_index(spec: &AmalgamSpec) -> Result<usize> {
    let i = spec
        .factors()
        .iter()
        .position(|f| f.as_abelian().is_some())
        .ok_or_else(|| Error::Unsupported("no abelian factor".into()))?;
    if !spec.factor(i).as_abelian().unwrap().is_torsion_free() {
        return Err(Error::NotTorsionFree);
    }
    Ok(i)
}

/// Maps `G` onto `A/A_1`, where `A = Z^r` is the first abelian factor and
/// `A_1 ⊇ C` is the finite-index subgroup splitting off `C` as a direct
/// factor. Every other factor is killed.
pub fn abelian_factor_quotient(spec: &AmalgamSpec, limits: &Limits) -> Result<(Certificate, WordHom, IndexSplit)> {
    let ai = abelian_factor_index(spec)?;
    let r = spec.factor(ai).as_abelian().unwrap().free_rank();
    match spec.amalgam() {
        GroupRep::Abelian(c) if !c.is_torsion_free() => {
            return Err(Error::EmbeddingTypeMismatch(
                "the amalgamated subgroup has torsion but sits in a free abelian group".into(),
            ))
        }
        GroupRep::Finite(c) if c.order() > 1 => {
            return Err(Error::EmbeddingTypeMismatch(
                "a nontrivial finite subgroup cannot sit in a free abelian group".into(),
            ))
        }
        _ => {}
    }
    let e = match &spec.embeddings()[ai] {
        Embedding::Lattice(m) => m.clone(),
        _ => Matrix::zeros(r, 0),
    };
    let c_lattice = LatticeSubgroup::new(r, e.clone())?;
    let split = finite_index_split(r, &c_lattice, limits.max_order)?;

    let moduli: Vec<usize> = split
        .divisors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_usize().expect("index below the order cap"))
        .collect();
    let cyclics: Vec<FiniteGroup> = moduli.iter().map(|&d| cyclic(d)).collect();
    let q = if cyclics.is_empty() {
        cyclic(1)
    } else {
        direct_product(&cyclics.iter().collect::<Vec<_>>(), limits)?.group
    };
    let encode = |residue: &[BigInt]| -> usize {
        residue
            .iter()
            .zip(&split.divisors)
            .filter(|(_, d)| !d.is_one())
            .zip(&moduli)
            .fold(0, |acc, ((x, _), &m)| acc * m + x.to_usize().unwrap())
    };
    let mut gen_images = Vec::with_capacity(r);
    for j in 0..r {
        let mut v = vec![BigInt::from(0); r];
        v[j] = BigInt::one();
        gen_images.push(encode(&split.residue(&v)?));
    }
    let maps = spec
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| match f {
            _ if i == ai => FactorMap::Abelian(gen_images.clone()),
            GroupRep::Finite(g) => FactorMap::Finite(GroupHom::trivial(g, &q)),
            GroupRep::Abelian(a) => FactorMap::Abelian(vec![0; a.dim()]),
        })
        .collect();

    let mut cert = Certificate::new(CertificateKind::AbelianFactor, GroupDescription::of(&q));
    let survivors: Vec<usize> = (0..e.cols())
        .filter(|&j| !split.in_a1(&e.column(j)).unwrap_or(false))
        .collect();
    cert.check(
        "kills_C",
        survivors.is_empty(),
        if survivors.is_empty() {
            format!("all {} generators of C lie in A_1", e.cols())
        } else {
            format!("C generators {} leave A_1", list(&survivors))
        },
    );
    let hom = induce_hom(spec, &q, maps)?;
    cert.hom = hom_table(spec, &hom);
    let index = split.index.to_usize().expect("index below the order cap");
    cert.check(
        "image_order",
        q.order() == index,
        format!("|A/A_1| = {}, product of divisors = {}", q.order(), index),
    );
    let image = subgroup_closure(&q, &gen_images)?;
    cert.check(
        "epimorphism",
        image.order() == q.order(),
        format!("images of the {r} generators of A generate a subgroup of order {}", image.order()),
    );
    if index == 1 {
        cert.flags.push("vacuous quotient".into());
    }
    cert.claim("the kernel is K = {∗ B^{a_i} ∗ A_1 ; C} over coset representatives a_i (Neumann)");
    cert.claim("G is (residually solvable)-by-abelian");
    cert.detail("index", Detail::Int(split.index.clone()));
    cert.detail("divisors", Detail::Ints(split.divisors.clone()));
    cert.detail("coset_reps", Detail::Vectors(split.coset_reps.clone()));
    cert.detail("c_basis", Detail::Vectors(split.c_basis.clone()));
    cert.detail("h_basis", Detail::Vectors(split.h_basis.clone()));
    cert.detail("abelian_factor", ai);
    Ok((cert, hom, split))
}
