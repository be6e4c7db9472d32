use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::FgAbelian;

/// An element of a factor or of the amalgamated subgroup: a table index for
/// finite groups, a coordinate vector for finitely generated abelian groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Index(usize),
    Vector(Vec<BigInt>),
}

impl Element {
    pub fn index(&self) -> Option<usize> {
        match self {
            Element::Index(i) => Some(*i),
            Element::Vector(_) => None,
        }
    }

    pub fn vector(&self) -> Option<&[BigInt]> {
        match self {
            Element::Vector(v) => Some(v),
            Element::Index(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Index(i) => write!(f, "#{i}"),
            Element::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// A group that can serve as a factor or as the amalgamated subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRep {
    Finite(FiniteGroup),
    Abelian(FgAbelian),
}

impl GroupRep {
    pub fn identity(&self) -> Element {
        match self {
            GroupRep::Finite(_) => Element::Index(0),
            GroupRep::Abelian(a) => Element::Vector(a.identity()),
        }
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        match (self, e) {
            (GroupRep::Finite(g), Element::Index(i)) => g.check_element(*i),
            (GroupRep::Abelian(a), Element::Vector(v)) if a.contains(v) => Ok(()),
            _ => Err(Error::MalformedElement(format!(
                "{e} is not an element of this group"
            ))),
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (GroupRep::Finite(g), Element::Index(a), Element::Index(b)) => {
                Element::Index(g.mul(*a, *b))
            }
            (GroupRep::Abelian(g), Element::Vector(a), Element::Vector(b)) => {
                Element::Vector(g.op(a, b))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn inv(&self, x: &Element) -> Element {
        match (self, x) {
            (GroupRep::Finite(g), Element::Index(a)) => Element::Index(g.inv(*a)),
            (GroupRep::Abelian(g), Element::Vector(a)) => Element::Vector(g.neg(a)),
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn is_identity(&self, x: &Element) -> bool {
        match x {
            Element::Index(i) => *i == 0,
            Element::Vector(v) => v.iter().all(|c| c.sign() == num_bigint::Sign::NoSign),
        }
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupRep::Finite(g) => Some(g.order()),
            GroupRep::Abelian(a) => a.order().and_then(|o| o.to_usize()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    /// `None` for elements of infinite order.
    pub fn element_order(&self, x: &Element) -> Option<usize> {
        match (self, x) {
            (GroupRep::Finite(g), Element::Index(i)) => Some(g.element_order(*i)),
            (GroupRep::Abelian(a), Element::Vector(v)) => a.element_order(v)?.to_usize(),
            _ => None,
        }
    }

    /// Generators: the stored generators of a finite group, the standard
    /// basis of an abelian group.
    pub fn generators(&self) -> Vec<Element> {
        match self {
            GroupRep::Finite(g) => g.generators().iter().map(|&i| Element::Index(i)).collect(),
            GroupRep::Abelian(a) => (0..a.dim())
                .map(|i| Element::Vector(a.basis_vector(i)))
                .collect(),
        }
    }

    /// Every element, for finite groups only.
    pub fn elements(&self) -> Option<Vec<Element>> {
        match self {
            GroupRep::Finite(g) => Some(g.elements().map(Element::Index).collect()),
            GroupRep::Abelian(_) => None,
        }
    }

    pub fn label(&self, x: &Element) -> String {
        match (self, x) {
            (GroupRep::Finite(g), Element::Index(i)) if *i < g.order() => g.label(*i).to_string(),
            _ => x.to_string(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            GroupRep::Finite(g) => Some(g),
            GroupRep::Abelian(_) => None,
        }
    }

    pub fn as_abelian(&self) -> Option<&FgAbelian> {
        match self {
            GroupRep::Abelian(a) => Some(a),
            GroupRep::Finite(_) => None,
        }
    }
}
