//! Brute-force cross-checks: a second word reduction, presentations of
//! amalgams of finite groups, and homomorphism search into small solvable
//! groups.

mod catalog;
mod presentation;
mod reduce;
mod search;

pub use crate::group::exhaustive_injectivity;
pub use catalog::{CatalogEntry, SolvableCatalog, DEFAULT_CATALOG_MAX};
pub use presentation::{presentation_of_amalgam, Letter, Presentation, MAX_GENERATORS};
pub use reduce::oracle_reduce;
pub use search::{eval_letters, hom_search, verify_witness, HomWitness, SearchOutcome, DEFAULT_BUDGET};
