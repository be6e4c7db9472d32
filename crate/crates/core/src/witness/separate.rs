use super::abelian_factor::abelian_factor_quotient;
use super::central::central_amalgam_quotient;
use super::certificate::{hom_table, Certificate, CertificateKind, GroupDescription, WitnessResult};
use super::cyclic::cyclic_amalgam_certificate;
use super::double::{double_retraction, find_double_isos};
use crate::amalgam::{induce_hom, reduce, AmalgamSpec, AmalgamWord, FactorMap, WordHom};
use crate::error::{Error, Result};
use crate::group::{derived_length, GroupHom, Limits};
use crate::oracle::{
    eval_letters, hom_search, presentation_of_amalgam, verify_witness, SearchOutcome,
    SolvableCatalog, DEFAULT_BUDGET, DEFAULT_CATALOG_MAX,
};

#[derive(Clone, Debug)]
pub struct SeparateOptions {
    pub limits: Limits,
    pub budget: u64,
    pub catalog_max: usize,
}

impl Default for SeparateOptions {
    fn default() -> Self {
        SeparateOptions {
            limits: Limits::default(),
            budget: DEFAULT_BUDGET,
            catalog_max: DEFAULT_CATALOG_MAX,
        }
    }
}

/// What one engine did with the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineAttempt {
    pub engine: CertificateKind,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSeparated {
    pub word: AmalgamWord,
    pub attempts: Vec<EngineAttempt>,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    Separated {
        result: WitnessResult,
        certificate: Certificate,
    },
    /// No engine and no catalog homomorphism keeps the word alive.
    NotSeparatedAtLevelOne(NotSeparated),
}

fn witness(
    spec: &AmalgamSpec,
    w: &AmalgamWord,
    hom: &WordHom,
    cert: &Certificate,
    name: Option<&str>,
) -> Option<WitnessResult> {
    let image = hom.eval_word(w);
    let dl = derived_length(hom.target())?;
    if image == 0 {
        return None;
    }
    let mut target = GroupDescription::of(hom.target());
    target.name = name.map(str::to_string);
    Some(WitnessResult {
        word: w.clone(),
        engine: cert.kind,
        target,
        hom: hom_table(spec, hom),
        image,
        image_label: hom.target().label(image).to_string(),
        separated: true,
        target_derived_length: dl,
    })
}

type Engine<'a> = dyn Fn() -> Result<(Certificate, WordHom)> + 'a;

/// Tries the engines in the order double, central, cyclic, abelian factor,
/// then catalog search, and returns the first homomorphism onto a solvable
/// group under which `w` survives.
pub fn separate_element(spec: &AmalgamSpec, w: &AmalgamWord, opts: &SeparateOptions) -> Result<Separation> {
    if reduce(spec, w)?.is_identity(spec) {
        return Err(Error::IdentityWord);
    }
    let limits = &opts.limits;
    let engines: [(CertificateKind, &Engine); 4] = [
        (CertificateKind::Double, &|| {
            double_retraction(spec, &find_double_isos(spec)?)
        }),
        (CertificateKind::CentralAmalgam, &|| central_amalgam_quotient(spec, limits)),
        (CertificateKind::CyclicAmalgam, &|| cyclic_amalgam_certificate(spec, limits)),
        (CertificateKind::AbelianFactor, &|| {
            abelian_factor_quotient(spec, limits).map(|(c, h, _)| (c, h))
        }),
    ];
    let mut attempts = Vec::new();
    let mut certificates = Vec::new();
    for (kind, run) in engines {
        match run() {
            Err(e) => attempts.push(EngineAttempt {
                engine: kind,
                outcome: format!("not applicable: {e}"),
            }),
            Ok((cert, hom)) => {
                if let Some(result) = witness(spec, w, &hom, &cert, None) {
                    return Ok(Separation::Separated {
                        result,
                        certificate: cert,
                    });
                }
                attempts.push(EngineAttempt {
                    engine: kind,
                    outcome: "word maps to the identity".into(),
                });
                certificates.push(cert);
            }
        }
    }
    match oracle_witness(spec, w, opts) {
        Ok(Ok((cert, hom, name))) => {
            let result = witness(spec, w, &hom, &cert, Some(&name))
                .expect("search only returns surviving words");
            return Ok(Separation::Separated {
                result,
                certificate: cert,
            });
        }
        Ok(Err(nodes)) => attempts.push(EngineAttempt {
            engine: CertificateKind::OracleWitness,
            outcome: format!("catalog exhausted after {nodes} nodes"),
        }),
        Err(Error::BudgetExceeded { nodes }) => attempts.push(EngineAttempt {
            engine: CertificateKind::OracleWitness,
            outcome: format!("budget exceeded after {nodes} nodes"),
        }),
        Err(e) => attempts.push(EngineAttempt {
            engine: CertificateKind::OracleWitness,
            outcome: format!("not applicable: {e}"),
        }),
    }
    Ok(Separation::NotSeparatedAtLevelOne(NotSeparated {
        word: w.clone(),
        attempts,
        certificates,
    }))
}

/// Catalog search for a separating homomorphism. The inner `Err` carries the
/// node count of an exhausted search.
pub fn oracle_witness(
    spec: &AmalgamSpec,
    w: &AmalgamWord,
    opts: &SeparateOptions,
) -> Result<std::result::Result<(Certificate, WordHom, String), u64>> {
    let p = presentation_of_amalgam(spec)?;
    let letters = p.word(w)?;
    let catalog = SolvableCatalog::new(opts.catalog_max);
    let h = match hom_search(&p, &catalog, &letters, opts.budget)? {
        SearchOutcome::Exhausted { nodes } => return Ok(Err(nodes)),
        SearchOutcome::Found(h) => h,
    };
    let mut maps = Vec::new();
    for i in 0..spec.num_factors() {
        let a = spec.factor(i).as_finite().expect("presentation needs finite factors");
        let images = a
            .elements()
            .map(|x| p.generator(i, x).map_or(0, |g| h.images[g]))
            .collect();
        maps.push(FactorMap::Finite(GroupHom::new(a, &h.target, images)?));
    }
    let hom = induce_hom(spec, &h.target, maps)?;
    let mut cert = Certificate::new(
        CertificateKind::OracleWitness,
        GroupDescription::named(&h.target, &h.name),
    );
    cert.hom = hom_table(spec, &hom);
    let bad = p
        .relators
        .iter()
        .filter(|r| eval_letters(&h.target, &h.images, r) != 0)
        .count();
    cert.check(
        "relators_hold",
        bad == 0,
        format!("{} of {} relators evaluate to the identity", p.relators.len() - bad, p.relators.len()),
    );
    cert.check(
        "word_survives",
        verify_witness(&p, &letters, &h),
        format!("word maps to {}", h.target.label(h.word_image)),
    );
    let dl = derived_length(&h.target);
    cert.check(
        "target_solvable",
        dl.is_some(),
        match dl {
            Some(l) => format!("derived length {l}"),
            None => "derived series does not reach 1".into(),
        },
    );
    cert.detail("catalog_index", h.catalog_index);
    cert.detail("nodes", h.nodes as usize);
    cert.detail("generators", p.ngens);
    Ok(Ok((cert, hom, h.name)))
}
