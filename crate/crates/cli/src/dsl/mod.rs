//! The spec-file language.
//!
//! ```text
//! group S3 = perm 3 { (1 2); (1 2 3) }
//! group C = cyclic 3
//! embed e : C -> S3 { g1 -> (1 2 3) }
//! amalgam G = S3, S3 over C via e, e
//! word w in G = 0:(1 2) * 1:(1 2)
//! ```
//!
//! `#` starts a comment. Declarations may span lines. Generators are `g1`,
//! `g2`, ... in declaration order; `e` and `1` denote the identity; `[a,b]`
//! is a coordinate vector in an abelian group. Word syllables name their
//! factor by group name or by position in the amalgam.

mod lexer;
mod parser;
mod printer;

use num_bigint::BigInt;
use thiserror::Error;

pub use parser::parse;
pub use printer::print;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDef {
    Perm { degree: usize, generators: Vec<Vec<Vec<usize>>> },
    Cyclic(usize),
    FreeAbelian(usize),
    /// Zeros (free coordinates) first, then a divisibility chain.
    Abelian(Vec<BigInt>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Identity,
    /// 1-based generator number.
    Gen(usize),
    /// A single cycle, 1-based; `()` is the identity.
    Cycle(Vec<usize>),
    Vector(Vec<BigInt>),
    Power(Box<Expr>, BigInt),
    Product(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorRef {
    Name(String),
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Group {
        name: String,
        def: GroupDef,
    },
    Embed {
        name: String,
        source: String,
        target: String,
        images: Vec<(usize, Expr)>,
    },
    Amalgam {
        name: String,
        factors: Vec<String>,
        over: String,
        via: Vec<String>,
    },
    Word {
        name: String,
        amalgam: String,
        syllables: Vec<(FactorRef, Expr)>,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Group { name, .. }
            | Decl::Embed { name, .. }
            | Decl::Amalgam { name, .. }
            | Decl::Word { name, .. } => name,
        }
    }
}

/// Parsed declarations with their source positions. Equality ignores
/// positions.
#[derive(Clone, Debug, Default)]
pub struct SpecFile {
    pub decls: Vec<Decl>,
    pub positions: Vec<Pos>,
}

impl PartialEq for SpecFile {
    fn eq(&self, other: &Self) -> bool {
        self.decls == other.decls
    }
}

impl Eq for SpecFile {}
