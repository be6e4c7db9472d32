use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::amalgam::{AmalgamSpec, AmalgamWord, Element, WordHom};
use crate::group::{abelian_invariants, derived_length, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertificateKind {
    NotPerfect,
    CyclicAmalgam,
    CentralAmalgam,
    Double,
    AbelianFactor,
    OracleWitness,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::NotPerfect => "not_perfect",
            CertificateKind::CyclicAmalgam => "cyclic_amalgam",
            CertificateKind::CentralAmalgam => "central_amalgam",
            CertificateKind::Double => "double",
            CertificateKind::AbelianFactor => "abelian_factor",
            CertificateKind::OracleWitness => "oracle_witness",
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Order, abelian invariants and derived length of a finite target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescription {
    pub name: Option<String>,
    pub order: usize,
    pub abelian_invariants: Vec<usize>,
    /// `None` when the group is not solvable.
    pub derived_length: Option<usize>,
}

impl GroupDescription {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupDescription {
            name: None,
            order: g.order(),
            abelian_invariants: abelian_invariants(g),
            derived_length: derived_length(g),
        }
    }

    pub fn named(g: &FiniteGroup, name: &str) -> Self {
        GroupDescription {
            name: Some(name.to_string()),
            ..Self::of(g)
        }
    }
}

/// A generator of a factor and where the homomorphism sends it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomEntry {
    pub factor: usize,
    pub element: Element,
    pub label: String,
    pub image: usize,
    pub image_label: String,
}

pub fn hom_table(spec: &AmalgamSpec, hom: &WordHom) -> Vec<HomEntry> {
    hom.generator_table(spec)
        .into_iter()
        .map(|(factor, element, image)| HomEntry {
            label: spec.factor(factor).label(&element),
            image_label: hom.target().label(image).to_string(),
            factor,
            element,
            image,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

/// Extra structured data attached to a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detail {
    Bool(bool),
    Int(BigInt),
    Ints(Vec<BigInt>),
    Vectors(Vec<Vec<BigInt>>),
    Text(String),
    Texts(Vec<String>),
}

impl From<usize> for Detail {
    fn from(x: usize) -> Self {
        Detail::Int(BigInt::from(x))
    }
}

impl From<bool> for Detail {
    fn from(x: bool) -> Self {
        Detail::Bool(x)
    }
}

impl From<String> for Detail {
    fn from(x: String) -> Self {
        Detail::Text(x)
    }
}

impl From<Vec<usize>> for Detail {
    fn from(xs: Vec<usize>) -> Self {
        Detail::Ints(xs.into_iter().map(BigInt::from).collect())
    }
}

/// Output of one engine. Only `checks` decide [`Certificate::passed`];
/// `claims` are recorded consequences that were not machine-checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub quotient: GroupDescription,
    pub hom: Vec<HomEntry>,
    pub checks: Vec<Check>,
    pub claims: Vec<String>,
    pub flags: Vec<String>,
    pub details: BTreeMap<String, Detail>,
}

impl Certificate {
    pub(crate) fn new(kind: CertificateKind, quotient: GroupDescription) -> Self {
        Certificate {
            kind,
            quotient,
            hom: Vec::new(),
            checks: Vec::new(),
            claims: Vec::new(),
            flags: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn check(&mut self, name: &str, passed: bool, evidence: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            evidence: evidence.into(),
        });
    }

    pub(crate) fn claim(&mut self, text: &str) {
        self.claims.push(text.to_string());
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Into<Detail>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// A homomorphism onto a solvable group under which a word survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub word: AmalgamWord,
    pub engine: CertificateKind,
    pub target: GroupDescription,
    pub hom: Vec<HomEntry>,
    pub image: usize,
    pub image_label: String,
    pub separated: bool,
    pub target_derived_length: usize,
}
