use crate::amalgam::{AmalgamSpec, Embedding};
use crate::error::{Error, Result};
use crate::group::{cyclic, FiniteGroup, GroupHom};

pub(crate) fn finite_factors(spec: &AmalgamSpec) -> Result<Vec<&FiniteGroup>> {
    (0..spec.num_factors())
        .map(|i| {
            spec.factor(i)
                .as_finite()
                .ok_or_else(|| Error::Unsupported(format!("factor {i} is not a finite group")))
        })
        .collect()
}

/// The amalgamated subgroup as a finite group (a trivial abelian one becomes
/// the trivial finite group).
pub(crate) fn finite_amalgam(spec: &AmalgamSpec) -> Result<FiniteGroup> {
    match spec.amalgam().as_finite() {
        Some(c) => Ok(c.clone()),
        None if spec.amalgam().is_trivial() => Ok(cyclic(1)),
        None => Err(Error::Unsupported(
            "the amalgamated subgroup is not a finite group".into(),
        )),
    }
}

/// `φ_i` as homomorphisms of finite groups.
pub(crate) fn embedding_homs(spec: &AmalgamSpec, c: &FiniteGroup) -> Result<Vec<GroupHom>> {
    let factors = finite_factors(spec)?;
    Ok(spec
        .embeddings()
        .iter()
        .zip(factors)
        .map(|(e, a)| match e {
            Embedding::Finite(h) => h.clone(),
            _ => GroupHom::trivial(c, a),
        })
        .collect())
}

/// Elements of `φ_i(C)`.
pub(crate) fn amalgam_image(phi: &GroupHom) -> Vec<usize> {
    let mut v = phi.images().to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

pub(crate) fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
