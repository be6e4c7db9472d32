use crate::error::{Error, Result};
use crate::group::{
    center, direct_product, normal_closure, quotient_group, DirectProduct, FiniteGroup, GroupHom,
    Limits, Subgroup,
};

/// `(∏ A_i) / N` with `N` generated by `inj_i(φ_i(c))·inj_j(φ_j(c))⁻¹`.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: FiniteGroup,
    /// `μ_i : A_i → S`
    pub mus: Vec<GroupHom>,
    pub mu_injective: Vec<bool>,
    pub product: DirectProduct,
    pub kernel: Subgroup,
    pub projection: GroupHom,
}

pub fn build_generalized_central_product(
    factors: &[FiniteGroup],
    c: &FiniteGroup,
    embeddings: &[GroupHom],
    limits: &Limits,
) -> Result<CentralProduct> {
    if factors.is_empty() || embeddings.len() != factors.len() {
        return Err(Error::IncompatibleAmalgam(format!(
            "{} embeddings for {} factors",
            embeddings.len(),
            factors.len()
        )));
    }
    for (i, (a, phi)) in factors.iter().zip(embeddings).enumerate() {
        if phi.source_order() != c.order() || phi.target_order() != a.order() {
            return Err(Error::IncompatibleAmalgam(format!(
                "embedding {i} has the wrong source or target"
            )));
        }
        let z = center(a);
        if c.elements().any(|x| !z.contains(phi.apply(x))) {
            return Err(Error::NotCentral(i));
        }
    }
    let refs: Vec<&FiniteGroup> = factors.iter().collect();
    let product = direct_product(&refs, limits)?;
    let p = &product.group;
    let mut seeds = Vec::new();
    for x in c.elements().skip(1) {
        let first = product.injections[0].apply(embeddings[0].apply(x));
        for j in 1..factors.len() {
            let other = product.injections[j].apply(embeddings[j].apply(x));
            seeds.push(p.mul(first, p.inv(other)));
        }
    }
    let kernel = normal_closure(p, &seeds)?;
    let q = quotient_group(p, &kernel, limits)?;
    let mus: Vec<GroupHom> = product
        .injections
        .iter()
        .map(|inj| inj.then(&q.projection))
        .collect();
    let mu_injective = mus.iter().map(|m| m.is_injective()).collect();
    Ok(CentralProduct {
        group: q.group,
        mus,
        mu_injective,
        product,
        kernel,
        projection: q.projection,
    })
}

/// `(X × Y) / N` with `N` the normal closure of `(x, y⁻¹)`. No centrality is
/// assumed.
#[derive(Clone, Debug)]
pub struct IdentifiedQuotient {
    pub group: FiniteGroup,
    pub product: DirectProduct,
    pub kernel: Subgroup,
    /// `X × Y → D`
    pub projection: GroupHom,
    /// `X → D` and `Y → D`
    pub left: GroupHom,
    pub right: GroupHom,
}

pub fn identified_direct_quotient(
    x_group: &FiniteGroup,
    y_group: &FiniteGroup,
    x: usize,
    y: usize,
    limits: &Limits,
) -> Result<IdentifiedQuotient> {
    x_group.check_element(x)?;
    y_group.check_element(y)?;
    let product = direct_product(&[x_group, y_group], limits)?;
    let seed = product.encode(&[x, y_group.inv(y)]);
    let kernel = normal_closure(&product.group, &[seed])?;
    let q = quotient_group(&product.group, &kernel, limits)?;
    let left = product.injections[0].then(&q.projection);
    let right = product.injections[1].then(&q.projection);
    Ok(IdentifiedQuotient {
        group: q.group,
        product,
        kernel,
        projection: q.projection,
        left,
        right,
    })
}
