use super::certificate::{hom_table, Certificate, CertificateKind, GroupDescription};
use super::common::{embedding_homs, finite_amalgam, finite_factors};
use crate::amalgam::{induce_hom, reduce, AmalgamSpec, AmalgamWord, Element, FactorMap, WordHom};
use crate::error::{Error, Result};
use crate::group::{derived_length, exhaustive_injectivity, FiniteGroup, GroupHom};

/// Largest number of generator assignments tried per factor when looking for
/// an isomorphism.
const ISO_SEARCH_CAP: usize = 200_000;

/// Isomorphisms `θ_i : A_0 → A_i` with `θ_i ∘ φ_0 = φ_i`, if the amalgam is a
/// double (every factor a copy of `A_0` with `C` identified compatibly).
/// `θ_0` is the identity. Fails with `NotIsomorphism(i)` for the first
/// factor that is not such a copy.
pub fn find_double_isos(spec: &AmalgamSpec) -> Result<Vec<GroupHom>> {
    let factors = finite_factors(spec)?;
    let c = finite_amalgam(spec)?;
    let phis = embedding_homs(spec, &c)?;
    let a0 = factors[0];
    let mut isos = vec![GroupHom::identity(a0)];
    for i in 1..factors.len() {
        isos.push(find_iso(a0, factors[i], &phis[0], &phis[i]).ok_or(Error::NotIsomorphism(i))?);
    }
    Ok(isos)
}

fn find_iso(a: &FiniteGroup, b: &FiniteGroup, pa: &GroupHom, pb: &GroupHom) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let compatible = |h: &GroupHom| (0..pa.source_order()).all(|c| h.apply(pa.apply(c)) == pb.apply(c));
    if a == b {
        let id = GroupHom::identity(a);
        if compatible(&id) {
            return Some(id);
        }
    }
    let gens = a.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| b.elements().filter(|&y| b.element_order(y) == a.element_order(g)).collect())
        .collect();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    for _ in 0..ISO_SEARCH_CAP {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&k, c)| c[k]).collect();
        if let Ok(h) = GroupHom::from_generator_images(a, b, &images) {
            if h.is_injective() && compatible(&h) {
                return Some(h);
            }
        }
        let mut k = gens.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
    None
}

/// Retracts a double onto its first factor: factor `i` maps to `A_0` through
/// `θ_i⁻¹`.
pub fn double_retraction(spec: &AmalgamSpec, isos: &[GroupHom]) -> Result<(Certificate, WordHom)> {
    let factors = finite_factors(spec)?;
    let c = finite_amalgam(spec)?;
    let phis = embedding_homs(spec, &c)?;
    if isos.len() != factors.len() {
        return Err(Error::IncompatibleAmalgam(format!(
            "{} isomorphisms for {} factors",
            isos.len(),
            factors.len()
        )));
    }
    let a0 = factors[0];
    let mut inverses = Vec::new();
    for (i, (theta, ai)) in isos.iter().zip(&factors).enumerate() {
        let ok = theta.source_order() == a0.order()
            && theta.target_order() == ai.order()
            && theta.is_injective()
            && theta.is_surjective()
            && c.elements().all(|x| theta.apply(phis[0].apply(x)) == phis[i].apply(x));
        if !ok {
            return Err(Error::NotIsomorphism(i));
        }
        let mut inv = vec![0; ai.order()];
        for x in a0.elements() {
            inv[theta.apply(x)] = x;
        }
        inverses.push(GroupHom::new(ai, a0, inv).map_err(|_| Error::NotIsomorphism(i))?);
    }
    let maps = inverses.iter().cloned().map(FactorMap::Finite).collect();
    let psi = induce_hom(spec, a0, maps)?;

    let mut cert = Certificate::new(CertificateKind::Double, GroupDescription::of(a0));
    cert.hom = hom_table(spec, &psi);
    let moved = a0
        .elements()
        .find(|&x| psi.eval_element(0, &Element::Index(x)) != x);
    cert.check(
        "retraction",
        moved.is_none(),
        match moved {
            None => format!("psi fixes all {} elements of the first factor", a0.order()),
            Some(x) => format!("psi moves {}", a0.label(x)),
        },
    );
    let mut failures = Vec::new();
    for (i, (inv, ai)) in inverses.iter().zip(&factors).enumerate() {
        if let Err((x, y)) = exhaustive_injectivity(inv, &ai.whole()) {
            failures.push(format!("factor {i}: {} and {} collide", ai.label(x), ai.label(y)));
        }
    }
    cert.check(
        "injective_on_each_factor",
        failures.is_empty(),
        if failures.is_empty() {
            format!("psi is injective on each of the {} factors", factors.len())
        } else {
            failures.join("; ")
        },
    );
    // kernel generators a·θ_i(a)⁻¹
    let mut listed = 0usize;
    let mut nontrivial = 0usize;
    let mut surviving = Vec::new();
    let mut example = None;
    for (i, theta) in isos.iter().enumerate().skip(1) {
        let ai = factors[i];
        for x in a0.elements().skip(1) {
            let w = AmalgamWord::new(vec![
                (0, Element::Index(x)),
                (i, Element::Index(ai.inv(theta.apply(x)))),
            ]);
            listed += 1;
            if psi.eval_word(&w) != 0 {
                surviving.push(format!("{}·θ_{i}({})⁻¹", a0.label(x), a0.label(x)));
            }
            let nf = reduce(spec, &w)?;
            if !nf.is_identity(spec) {
                nontrivial += 1;
                if example.is_none() {
                    example = Some(format!(
                        "{}·({})⁻¹ in factors 0 and {i}, normal form length {}",
                        a0.label(x),
                        ai.label(theta.apply(x)),
                        nf.length()
                    ));
                }
            }
        }
    }
    cert.check(
        "kernel_generators",
        surviving.is_empty(),
        if surviving.is_empty() {
            format!("all {listed} generators a·θ(a)⁻¹ map to the identity; {nontrivial} are nontrivial in G")
        } else {
            format!("survivors: {}", surviving.join(", "))
        },
    );
    let dl = derived_length(a0);
    cert.check(
        "target_solvable",
        dl.is_some(),
        match dl {
            Some(l) => format!("derived length {l}"),
            None => "derived series of the factor does not reach 1".into(),
        },
    );
    cert.claim("K ∩ A_i = 1 for every factor, so the kernel K is free (Neumann)");
    cert.claim("G is free-by-solvable");
    cert.detail("factor_count", factors.len());
    cert.detail("kernel_generators_listed", listed);
    cert.detail("kernel_nontrivial", nontrivial > 0);
    if let Some(e) = example {
        cert.detail("kernel_word_example", e);
    }
    Ok((cert, psi))
}
