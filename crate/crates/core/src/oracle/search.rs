use super::catalog::SolvableCatalog;
use super::presentation::{Letter, Presentation};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default node budget for [`hom_search`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A homomorphism from a presented group into a catalog member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness {
    pub catalog_index: usize,
    pub name: String,
    pub target: FiniteGroup,
    /// Image of each generator.
    pub images: Vec<usize>,
    pub word_image: usize,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HomWitness),
    /// Every assignment into every catalog member was examined.
    Exhausted { nodes: u64 },
}

pub fn eval_letters(t: &FiniteGroup, images: &[usize], w: &[Letter]) -> usize {
    w.iter().fold(t.identity(), |acc, l| {
        let y = images[l.gen];
        t.mul(acc, if l.inverse { t.inv(y) } else { y })
    })
}

struct Search<'a> {
    p: &'a Presentation,
    t: &'a FiniteGroup,
    w: &'a [Letter],
    w_last: usize,
    candidates: Vec<Vec<usize>>,
    closing: Vec<Vec<usize>>,
    images: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, g: usize) -> Result<bool> {
        if g == self.p.ngens {
            return Ok(true);
        }
        for k in 0..self.candidates[g].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { nodes: self.nodes });
            }
            self.images[g] = self.candidates[g][k];
            let ok = self.closing[g]
                .iter()
                .all(|&r| eval_letters(self.t, &self.images, &self.p.relators[r]) == 0);
            if !ok {
                continue;
            }
            if g == self.w_last && eval_letters(self.t, &self.images, self.w) == 0 {
                continue;
            }
            if self.run(g + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Depth-first search, catalog member by member and generator by generator
/// in index order, for a homomorphism under which `w` survives.
///
/// Candidates for a generator are the target elements whose order divides
/// the generator's order. A relator is checked as soon as its last generator
/// is assigned, and a branch is abandoned once `w` is fully assigned and
/// evaluates to the identity.
pub fn hom_search(
    p: &Presentation,
    catalog: &SolvableCatalog,
    w: &[Letter],
    budget: u64,
) -> Result<SearchOutcome> {
    if w.is_empty() {
        return Err(Error::IdentityWord);
    }
    if let Some(l) = w.iter().find(|l| l.gen >= p.ngens) {
        return Err(Error::ElementOutOfRange {
            element: l.gen,
            order: p.ngens,
        });
    }
    let w_last = w.iter().map(|l| l.gen).max().unwrap();
    let mut closing = vec![Vec::new(); p.ngens];
    for (r, rel) in p.relators.iter().enumerate() {
        if let Some(last) = rel.iter().map(|l| l.gen).max() {
            closing[last].push(r);
        }
    }
    let mut nodes = 0;
    for (ci, entry) in catalog.groups.iter().enumerate() {
        let t = &entry.group;
        let candidates = p
            .generator_orders
            .iter()
            .map(|&o| t.elements().filter(|&y| o % t.element_order(y) == 0).collect())
            .collect();
        let mut s = Search {
            p,
            t,
            w,
            w_last,
            candidates,
            closing: closing.clone(),
            images: vec![0; p.ngens],
            nodes,
            budget,
        };
        let found = s.run(0)?;
        nodes = s.nodes;
        if found {
            let word_image = eval_letters(t, &s.images, w);
            return Ok(SearchOutcome::Found(HomWitness {
                catalog_index: ci,
                name: entry.name.clone(),
                target: t.clone(),
                images: s.images,
                word_image,
                nodes,
            }));
        }
    }
    Ok(SearchOutcome::Exhausted { nodes })
}

/// Re-checks a witness: every relator dies and the word survives.
pub fn verify_witness(p: &Presentation, w: &[Letter], h: &HomWitness) -> bool {
    h.images.len() == p.ngens
        && p.relators
            .iter()
            .all(|r| eval_letters(&h.target, &h.images, r) == 0)
        && eval_letters(&h.target, &h.images, w) == h.word_image
        && h.word_image != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{AmalgamSpec, AmalgamWord, Element, GroupRep};
    use crate::group::cyclic;
    use crate::oracle::presentation_of_amalgam;

    #[test]
    fn c2_free_product() {
        let spec = AmalgamSpec::new(
            vec![GroupRep::Finite(cyclic(2)), GroupRep::Finite(cyclic(2))],
            GroupRep::Finite(cyclic(1)),
            vec![vec![], vec![]],
        )
        .unwrap();
        let p = presentation_of_amalgam(&spec).unwrap();
        let w = p
            .word(&AmalgamWord::new(vec![(0, Element::Index(1)), (1, Element::Index(1))]))
            .unwrap();
        let cat = SolvableCatalog::default();
        let SearchOutcome::Found(h) = hom_search(&p, &cat, &w, DEFAULT_BUDGET).unwrap() else {
            panic!("xy survives in an abelian quotient");
        };
        assert!(verify_witness(&p, &w, &h));
        // a relator never survives
        let rel = p.relators[0].clone();
        let small = SolvableCatalog::new(6);
        assert!(matches!(
            hom_search(&p, &small, &rel, DEFAULT_BUDGET).unwrap(),
            SearchOutcome::Exhausted { .. }
        ));
        assert!(matches!(
            hom_search(&p, &cat, &rel, 3),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(hom_search(&p, &cat, &[], 10), Err(Error::IdentityWord));
    }
}
