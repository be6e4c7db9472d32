//! Generalized free products `{ *A_i ; C }`: validated specifications, the
//! word problem through right-coset normal forms, and the finite product
//! constructions used to map amalgams onto solvable groups.

mod hom;
mod products;
mod rep;
mod spec;
mod word;

pub use hom::{induce_hom, FactorMap, WordHom};
pub use products::{
    build_generalized_central_product, identified_direct_quotient, CentralProduct,
    IdentifiedQuotient,
};
pub use rep::{Element, GroupRep};
pub use spec::{vector, AmalgamSpec, Embedding};
pub use word::{invert, invert_word, multiply, reduce, words_equal, AmalgamWord, NormalForm};
