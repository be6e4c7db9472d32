use super::certificate::{hom_table, Certificate, CertificateKind, GroupDescription};
use super::common::{embedding_homs, finite_amalgam, finite_factors};
use crate::amalgam::{build_generalized_central_product, induce_hom, AmalgamSpec, FactorMap, WordHom};
use crate::error::Result;
use crate::group::{derived_length, exhaustive_injectivity, FiniteGroup, Limits};

/// Maps an amalgam over a central subgroup into the generalized central
/// product of its factors.
pub fn central_amalgam_quotient(spec: &AmalgamSpec, limits: &Limits) -> Result<(Certificate, WordHom)> {
    let factors: Vec<FiniteGroup> = finite_factors(spec)?.into_iter().cloned().collect();
    let c = finite_amalgam(spec)?;
    let phis = embedding_homs(spec, &c)?;
    let s = build_generalized_central_product(&factors, &c, &phis, limits)?;
    let maps = s.mus.iter().cloned().map(FactorMap::Finite).collect();
    let hom = induce_hom(spec, &s.group, maps)?;

    let mut cert = Certificate::new(CertificateKind::CentralAmalgam, GroupDescription::of(&s.group));
    cert.hom = hom_table(spec, &hom);
    let mut failures = Vec::new();
    for (i, (mu, a)) in s.mus.iter().zip(&factors).enumerate() {
        if let Err((x, y)) = exhaustive_injectivity(mu, &a.whole()) {
            failures.push(format!("factor {i}: {} and {} collide", a.label(x), a.label(y)));
        }
    }
    let evidence = if failures.is_empty() {
        format!("each of the {} factor maps is injective", factors.len())
    } else {
        failures.join("; ")
    };
    cert.check("mu_injective_on_factors", failures.is_empty(), evidence);
    let dl = derived_length(&s.group);
    cert.check(
        "S_solvable",
        dl.is_some(),
        match dl {
            Some(l) => format!("derived length {l}"),
            None => "derived series of S does not reach 1".into(),
        },
    );
    let k = factors.len() as u32;
    let lhs = (s.group.order() as u128) * (c.order() as u128).pow(k - 1);
    let rhs: u128 = factors.iter().map(|a| a.order() as u128).product();
    cert.check(
        "count_law",
        lhs == rhs,
        format!("|S|·|C|^{} = {lhs}, product of factor orders = {rhs}", k - 1),
    );
    cert.claim("K ∩ A_i = 1 for every factor, so the kernel K is free (Neumann)");
    cert.claim("G is free-by-solvable");
    cert.detail("factor_count", factors.len());
    cert.detail("amalgam_order", c.order());
    cert.detail("identified_kernel_order", s.kernel.order());
    Ok((cert, hom))
}
