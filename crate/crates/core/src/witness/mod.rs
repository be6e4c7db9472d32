//! Quotient engines. Each builds a finite (or finite abelian) quotient of an
//! amalgam, the induced homomorphism, and a [`Certificate`] recording which
//! properties were verified and which were only claimed.

mod abelian_factor;
mod central;
mod certificate;
mod common;
mod cyclic;
mod double;
mod not_perfect;
mod separate;

pub use crate::group::derived_depth;
pub use abelian_factor::{abelian_factor_index, abelian_factor_quotient};
pub use central::central_amalgam_quotient;
pub use certificate::{
    hom_table, Certificate, CertificateKind, Check, Detail, GroupDescription, HomEntry,
    WitnessResult,
};
pub use cyclic::{cyclic_amalgam_certificate, cyclic_amalgam_quotient, cyclic_amalgam_spec};
pub use double::{double_retraction, find_double_isos};
pub use not_perfect::not_perfect_certificate;
pub use separate::{
    oracle_witness, separate_element, EngineAttempt, NotSeparated, SeparateOptions, Separation,
};
