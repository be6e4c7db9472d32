use super::certificate::{hom_table, Certificate, CertificateKind, GroupDescription};
use super::common::{embedding_homs, finite_amalgam, finite_factors};
use crate::amalgam::{
    identified_direct_quotient, induce_hom, AmalgamSpec, Element, FactorMap, GroupRep, WordHom,
};
use crate::error::{Error, Result};
use crate::group::{
    cyclic, derived_depth, derived_length, quotient_group, series, FiniteGroup, Limits, SeriesKind,
};

/// `{A * B ; ⟨a⟩ = ⟨b⟩}` with `a ↦ b`.
pub fn cyclic_amalgam_spec(a_group: &FiniteGroup, b_group: &FiniteGroup, a: usize, b: usize) -> Result<AmalgamSpec> {
    a_group.check_element(a)?;
    b_group.check_element(b)?;
    if a == 0 || b == 0 {
        return Err(Error::IdentityElement);
    }
    let (m, n) = (a_group.element_order(a), b_group.element_order(b));
    if m != n {
        return Err(Error::OrderMismatch { left: m, right: n });
    }
    AmalgamSpec::new(
        vec![GroupRep::Finite(a_group.clone()), GroupRep::Finite(b_group.clone())],
        GroupRep::Finite(cyclic(m)),
        vec![vec![Element::Index(a)], vec![Element::Index(b)]],
    )
}

pub fn cyclic_amalgam_quotient(
    a_group: &FiniteGroup,
    b_group: &FiniteGroup,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<(Certificate, WordHom, AmalgamSpec)> {
    let spec = cyclic_amalgam_spec(a_group, b_group, a, b)?;
    let (cert, hom) = cyclic_amalgam_certificate(&spec, limits)?;
    Ok((cert, hom, spec))
}

/// Maps `{A * B ; C}`, `C = ⟨c⟩` cyclic, into
/// `D = (A/δ_{m+1}A × B/δ_{n+1}B) / ⟨⟨(ā, b̄⁻¹)⟩⟩` where `a = φ_A(c)` lies in
/// `δ_m A \ δ_{m+1} A` and likewise for `b`. Whether `C` survives is tested,
/// not assumed.
pub fn cyclic_amalgam_certificate(spec: &AmalgamSpec, limits: &Limits) -> Result<(Certificate, WordHom)> {
    let factors = finite_factors(spec)?;
    if factors.len() != 2 {
        return Err(Error::Unsupported("needs exactly two factors".into()));
    }
    let c = finite_amalgam(spec)?;
    let gen = c
        .elements()
        .find(|&x| c.element_order(x) == c.order())
        .ok_or_else(|| Error::Unsupported("the amalgamated subgroup is not cyclic".into()))?;
    if gen == 0 {
        return Err(Error::IdentityElement);
    }
    let phis = embedding_homs(spec, &c)?;
    let (ga, gb) = (factors[0], factors[1]);
    let (a, b) = (phis[0].apply(gen), phis[1].apply(gen));
    let m = derived_depth(ga, a)?;
    let n = derived_depth(gb, b)?;
    let qa = quotient_group(ga, series(ga, SeriesKind::Derived).term(m + 1), limits)?;
    let qb = quotient_group(gb, series(gb, SeriesKind::Derived).term(n + 1), limits)?;
    let (abar, bbar) = (qa.projection.apply(a), qb.projection.apply(b));
    let d = identified_direct_quotient(&qa.group, &qb.group, abar, bbar, limits)?;
    let maps = vec![
        FactorMap::Finite(qa.projection.then(&d.left)),
        FactorMap::Finite(qb.projection.then(&d.right)),
    ];
    let hom = induce_hom(spec, &d.group, maps)?;

    let mut cert = Certificate::new(CertificateKind::CyclicAmalgam, GroupDescription::of(&d.group));
    cert.hom = hom_table(spec, &hom);
    let dead: Vec<usize> = (1..c.order())
        .filter(|&k| hom.eval_element(0, &Element::Index(phis[0].apply(c.pow(gen, k as i64)))) == 0)
        .collect();
    let evidence = match dead.first() {
        None => format!(
            "all {} nonidentity elements of C have nonidentity image in D",
            c.order() - 1
        ),
        Some(&k) => format!(
            "{} = {}^{} maps to the identity of D (|D| = {})",
            ga.label(ga.pow(a, k as i64)),
            ga.label(a),
            k,
            d.group.order()
        ),
    };
    cert.check("separates_C", dead.is_empty(), evidence);
    let dl = derived_length(&d.group);
    cert.check(
        "D_solvable",
        dl.is_some(),
        match dl {
            Some(l) => format!("derived length {l}"),
            None => "derived series of D does not reach 1".into(),
        },
    );
    cert.claim(
        "if K ∩ C = 1 then the kernel K is a free product of a free group and conjugates of K ∩ A and K ∩ B (Neumann)",
    );
    cert.detail("m", m);
    cert.detail("n", n);
    cert.detail("left_quotient_order", qa.group.order());
    cert.detail("right_quotient_order", qb.group.order());
    cert.detail("identified_kernel_order", d.kernel.order());
    cert.detail("amalgam_order", c.order());
    Ok((cert, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{quaternion, symmetric};

    #[test]
    fn q8_separates() {
        let q8 = quaternion();
        let (cert, _, _) = cyclic_amalgam_quotient(&q8, &q8, 1, 1, &Limits::default()).unwrap();
        assert_eq!(cert.quotient.order, 32);
        assert!(cert.passed());
    }

    #[test]
    fn s3_fails_to_separate() {
        let s3 = symmetric(3);
        let r = s3.find_label("(1 2 3)").unwrap();
        let (cert, _, _) = cyclic_amalgam_quotient(&s3, &s3, r, r, &Limits::default()).unwrap();
        assert_eq!(cert.quotient.order, 4);
        assert_eq!(cert.failed_checks(), vec!["separates_C"]);
    }

    #[test]
    fn c6_abelian_case() {
        let c6 = cyclic(6);
        let g2 = c6.pow(1, 2);
        let (cert, _, _) = cyclic_amalgam_quotient(&c6, &c6, g2, g2, &Limits::default()).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.details["m"], 1usize.into());
        assert_eq!(cert.quotient.order, 12);
    }

    #[test]
    fn preconditions() {
        let s3 = symmetric(3);
        let l = Limits::default();
        assert_eq!(cyclic_amalgam_quotient(&s3, &s3, 0, 1, &l).unwrap_err(), Error::IdentityElement);
        let r = s3.find_label("(1 2 3)").unwrap();
        let t = s3.find_label("(1 2)").unwrap();
        assert_eq!(
            cyclic_amalgam_quotient(&s3, &s3, r, t, &l).unwrap_err(),
            Error::OrderMismatch { left: 3, right: 2 }
        );
    }
}
