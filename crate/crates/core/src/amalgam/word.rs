use std::collections::VecDeque;

use super::rep::Element;
use super::spec::AmalgamSpec;
use crate::error::{Error, Result};

/// A raw word: syllables `(factor, element)`, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AmalgamWord {
    pub syllables: Vec<(usize, Element)>,
}

impl AmalgamWord {
    pub fn new(syllables: Vec<(usize, Element)>) -> Self {
        AmalgamWord { syllables }
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &AmalgamWord) -> AmalgamWord {
        let mut s = self.syllables.clone();
        s.extend(other.syllables.iter().cloned());
        AmalgamWord { syllables: s }
    }
}

/// `φ(head)·t_1⋯t_n` with each `t_k` a nontrivial transversal element and
/// adjacent syllables in distinct factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub head: Element,
    pub tail: Vec<(usize, Element)>,
}

impl NormalForm {
    pub fn identity(spec: &AmalgamSpec) -> Self {
        NormalForm {
            head: spec.amalgam().identity(),
            tail: Vec::new(),
        }
    }

    pub fn is_identity(&self, spec: &AmalgamSpec) -> bool {
        self.tail.is_empty() && spec.amalgam().is_identity(&self.head)
    }

    /// Syllable length of the reduced form (the head does not count).
    pub fn length(&self) -> usize {
        self.tail.len()
    }

    /// A word representing the same element; the head becomes a factor-0
    /// syllable when nontrivial.
    pub fn to_word(&self, spec: &AmalgamSpec) -> AmalgamWord {
        let mut s = Vec::with_capacity(self.tail.len() + 1);
        if !spec.amalgam().is_identity(&self.head) {
            s.push((0, spec.embed(0, &self.head)));
        }
        s.extend(self.tail.iter().cloned());
        AmalgamWord { syllables: s }
    }
}

fn check_word(spec: &AmalgamSpec, w: &AmalgamWord) -> Result<()> {
    for (i, x) in &w.syllables {
        spec.check_syllable(*i, x).map_err(|e| match e {
            Error::MalformedElement(m) => Error::MalformedElement(format!("factor {i}: {m}")),
            other => other,
        })?;
    }
    Ok(())
}

/// Left-multiplies a normal form (head, tail) by `x` from factor `i`.
fn push_front(
    spec: &AmalgamSpec,
    head: &mut Element,
    tail: &mut VecDeque<(usize, Element)>,
    i: usize,
    x: &Element,
) {
    let factor = spec.factor(i);
    let mut y = factor.mul(x, &spec.embed(i, head));
    if tail.front().is_some_and(|(j, _)| *j == i) {
        let (_, t0) = tail.pop_front().unwrap();
        y = factor.mul(&y, &t0);
    }
    let (c, t) = spec.split(i, &y);
    if !factor.is_identity(&t) {
        tail.push_front((i, t));
    }
    *head = c;
}

/// Normal form of a word, folding syllables in from the right.
pub fn reduce(spec: &AmalgamSpec, w: &AmalgamWord) -> Result<NormalForm> {
    check_word(spec, w)?;
    let mut head = spec.amalgam().identity();
    let mut tail = VecDeque::new();
    for (i, x) in w.syllables.iter().rev() {
        push_front(spec, &mut head, &mut tail, *i, x);
    }
    Ok(NormalForm {
        head,
        tail: tail.into(),
    })
}

/// `u·v`
pub fn multiply(spec: &AmalgamSpec, u: &NormalForm, v: &NormalForm) -> NormalForm {
    let mut head = v.head.clone();
    let mut tail: VecDeque<(usize, Element)> = v.tail.iter().cloned().collect();
    for (i, x) in u.tail.iter().rev() {
        push_front(spec, &mut head, &mut tail, *i, x);
    }
    head = spec.amalgam().mul(&u.head, &head);
    NormalForm {
        head,
        tail: tail.into(),
    }
}

/// `u⁻¹`
pub fn invert(spec: &AmalgamSpec, u: &NormalForm) -> NormalForm {
    let mut head = spec.amalgam().inv(&u.head);
    let mut tail = VecDeque::new();
    // u⁻¹ = t_n⁻¹ ⋯ t_1⁻¹ · φ(c⁻¹): fold from the right
    for (i, t) in &u.tail {
        let f = spec.factor(*i);
        push_front(spec, &mut head, &mut tail, *i, &f.inv(t));
    }
    NormalForm {
        head,
        tail: tail.into(),
    }
}

/// Formal inverse of a raw word.
pub fn invert_word(spec: &AmalgamSpec, w: &AmalgamWord) -> AmalgamWord {
    AmalgamWord {
        syllables: w
            .syllables
            .iter()
            .rev()
            .map(|(i, x)| (*i, spec.factor(*i).inv(x)))
            .collect(),
    }
}

pub fn words_equal(spec: &AmalgamSpec, u: &AmalgamWord, v: &AmalgamWord) -> Result<bool> {
    Ok(reduce(spec, u)? == reduce(spec, v)?)
}
