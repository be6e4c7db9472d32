use super::certificate::{hom_table, Certificate, CertificateKind, GroupDescription};
use super::common::{amalgam_image, embedding_homs, finite_amalgam, finite_factors, list};
use crate::amalgam::{induce_hom, AmalgamSpec, FactorMap, WordHom};
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants, commutator_subgroup, direct_product, frattini, is_nilpotent,
    quotient_group, subgroup_closure, FiniteGroup, Limits,
};

/// Maps the amalgam onto `D = ∏ (A_i)_ab / ⟨image of C⟩`, an abelian group
/// that is nontrivial whenever the amalgamated subgroup is proper in every
/// factor.
pub fn not_perfect_certificate(spec: &AmalgamSpec, limits: &Limits) -> Result<(Certificate, WordHom)> {
    let factors = finite_factors(spec)?;
    if factors.len() < 2 {
        return Err(Error::Unsupported("needs at least two factors".into()));
    }
    let c = finite_amalgam(spec)?;
    let phis = embedding_homs(spec, &c)?;
    let mut quotients = Vec::new();
    let mut nested = Vec::new();
    for (i, (a, phi)) in factors.iter().zip(&phis).enumerate() {
        let image = amalgam_image(phi);
        if image.len() == a.order() {
            return Err(Error::NotProperSubgroup(i));
        }
        let whole = a.whole();
        let derived = commutator_subgroup(a, &whole, &whole);
        let mut seeds = image.clone();
        seeds.extend_from_slice(derived.elements());
        let n = subgroup_closure(a, &seeds)?;
        nested.push((derived, n.clone()));
        quotients.push(quotient_group(a, &n, limits)?);
    }
    let qrefs: Vec<&FiniteGroup> = quotients.iter().map(|q| &q.group).collect();
    let d = direct_product(&qrefs, limits)?;
    let maps = quotients
        .iter()
        .zip(&d.injections)
        .map(|(q, inj)| FactorMap::Finite(q.projection.then(inj)))
        .collect();
    let hom = induce_hom(spec, &d.group, maps)?;

    let mut cert = Certificate::new(CertificateKind::NotPerfect, GroupDescription::of(&d.group));
    cert.hom = hom_table(spec, &hom);
    let inv = abelian_invariants(&d.group);
    cert.check(
        "D_nontrivial",
        d.group.order() > 1,
        format!("|D| = {}, invariants {}", d.group.order(), list(&inv)),
    );
    cert.check(
        "hom_respects_amalgam",
        true,
        format!("all factor maps agree on the {} elements of C", c.order()),
    );
    for (i, (a, (derived, n))) in factors.iter().zip(&nested).enumerate() {
        if !is_nilpotent(a) {
            continue;
        }
        let phi = frattini(a, limits)?;
        cert.check(
            &format!("hirsch_inclusion_{i}"),
            derived.is_subset_of(&phi),
            format!("|[A,A]| = {}, |Frattini| = {}", derived.order(), phi.order()),
        );
        cert.check(
            &format!("frattini_argument_{i}"),
            n.order() < a.order(),
            format!("|<C, [A,A]>| = {} in |A| = {}", n.order(), a.order()),
        );
    }
    let per_factor: Vec<String> = quotients
        .iter()
        .map(|q| list(&abelian_invariants(&q.group)))
        .collect();
    cert.detail("factor_quotient_invariants", crate::witness::Detail::Texts(per_factor));
    cert.detail(
        "factor_quotient_orders",
        quotients.iter().map(|q| q.group.order()).collect::<Vec<_>>(),
    );
    Ok((cert, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{Element, GroupRep};
    use crate::group::{cyclic, quaternion, symmetric};

    fn spec(a: FiniteGroup, b: FiniteGroup, c: FiniteGroup, x: &[usize], y: &[usize]) -> AmalgamSpec {
        AmalgamSpec::new(
            vec![GroupRep::Finite(a), GroupRep::Finite(b)],
            GroupRep::Finite(c),
            vec![
                x.iter().map(|&i| Element::Index(i)).collect(),
                y.iter().map(|&i| Element::Index(i)).collect(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn three_configurations() {
        let limits = Limits::default();
        let c4 = cyclic(4);
        let sq = c4.pow(1, 2);
        let (cert, _) = not_perfect_certificate(&spec(c4.clone(), c4, cyclic(2), &[sq], &[sq]), &limits).unwrap();
        assert_eq!(cert.quotient.abelian_invariants, vec![2, 2]);
        assert!(cert.passed());
        assert!(cert.check_named("frattini_argument_0").unwrap().passed);

        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let (cert, _) = not_perfect_certificate(&spec(s3.clone(), s3.clone(), cyclic(3), &[r], &[r]), &limits).unwrap();
        assert_eq!(cert.quotient.abelian_invariants, vec![2, 2]);
        assert!(cert.check_named("hirsch_inclusion_0").is_none());

        let t = s3.find_label("(1 2)").unwrap();
        let (cert, _) = not_perfect_certificate(&spec(quaternion(), s3, cyclic(2), &[1], &[t]), &limits).unwrap();
        assert_eq!(cert.quotient.abelian_invariants, vec![2, 2]);
        assert!(cert.passed());
    }

    #[test]
    fn whole_factor_rejected() {
        let c2 = cyclic(2);
        let err = not_perfect_certificate(&spec(c2.clone(), cyclic(4), c2, &[1], &[2]), &Limits::default()).unwrap_err();
        assert_eq!(err, Error::NotProperSubgroup(0));
    }
}
