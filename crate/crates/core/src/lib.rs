pub mod error;
pub mod group;
pub mod lattice;
pub mod amalgam;
pub mod oracle;
pub mod witness;

pub use error::{Error, Result};

use num_bigint::BigInt;

pub type IntMatrix = lattice::Matrix<BigInt>;
pub type Snf = lattice::SnfDecomposition<BigInt>;
pub type FgAbelian = lattice::FgAbelian<BigInt>;
pub type LatticeSubgroup = lattice::LatticeSubgroup<BigInt>;
pub type IndexSplit = lattice::IndexSplit<BigInt>;
