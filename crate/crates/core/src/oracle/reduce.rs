use crate::amalgam::{AmalgamSpec, AmalgamWord, Element, Embedding, NormalForm};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Second, independent word reduction for amalgams of finite groups.
///
/// Rewrites to a fixpoint (drop identities, merge neighbours in the same
/// factor, absorb amalgam syllables into their left neighbour), then pushes
/// amalgam parts leftwards by brute-force coset search.
pub fn oracle_reduce(spec: &AmalgamSpec, w: &AmalgamWord) -> Result<NormalForm> {
    let c = spec
        .amalgam()
        .as_finite()
        .ok_or_else(|| Error::Unsupported("oracle reduction needs a finite amalgam".into()))?;
    let mut factors = Vec::new();
    let mut images = Vec::new();
    for i in 0..spec.num_factors() {
        let f = spec
            .factor(i)
            .as_finite()
            .ok_or_else(|| Error::Unsupported("oracle reduction needs finite factors".into()))?;
        factors.push(f);
        images.push(embedding_table(spec, i, c));
    }
    let mut s: Vec<(usize, usize)> = Vec::with_capacity(w.len());
    for (i, x) in &w.syllables {
        spec.check_syllable(*i, x)?;
        s.push((*i, x.index().expect("finite factor")));
    }
    let mut head = 0usize;
    loop {
        let mut changed = false;
        // identities
        let before = s.len();
        s.retain(|&(_, x)| x != 0);
        changed |= s.len() != before;
        // merges
        let mut k = 0;
        while k + 1 < s.len() {
            if s[k].0 == s[k + 1].0 {
                let f = factors[s[k].0];
                s[k].1 = f.mul(s[k].1, s[k + 1].1);
                s.remove(k + 1);
                changed = true;
            } else {
                k += 1;
            }
        }
        // amalgam syllables move into the left neighbour, or into the head
        if let Some(k) = (0..s.len()).find(|&k| s[k].1 != 0 && preimage(&images[s[k].0], s[k].1).is_some()) {
            let cpart = preimage(&images[s[k].0], s[k].1).unwrap();
            s.remove(k);
            if k == 0 {
                head = c.mul(head, cpart);
            } else {
                let (j, y) = s[k - 1];
                s[k - 1].1 = factors[j].mul(y, images[j][cpart]);
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    // alternating, no syllable in the amalgam: push amalgam parts left
    for k in (0..s.len()).rev() {
        let (i, x) = s[k];
        let (cpart, t) = coset_factor(factors[i], &images[i], x);
        s[k].1 = t;
        if k == 0 {
            head = c.mul(head, cpart);
        } else {
            let (j, y) = s[k - 1];
            s[k - 1].1 = factors[j].mul(y, images[j][cpart]);
        }
    }
    Ok(NormalForm {
        head: Element::Index(head),
        tail: s.into_iter().map(|(i, x)| (i, Element::Index(x))).collect(),
    })
}

fn embedding_table(spec: &AmalgamSpec, i: usize, c: &FiniteGroup) -> Vec<usize> {
    match &spec.embeddings()[i] {
        Embedding::Finite(h) => h.images().to_vec(),
        _ => vec![0; c.order()],
    }
}

fn preimage(image: &[usize], x: usize) -> Option<usize> {
    image.iter().position(|&y| y == x)
}

/// `x = φ(c)·t` with `t` the least element of `{φ(c)⁻¹x}`.
fn coset_factor(a: &FiniteGroup, image: &[usize], x: usize) -> (usize, usize) {
    let mut best = (0, x);
    for (c, &y) in image.iter().enumerate() {
        let t = a.mul(a.inv(y), x);
        if t < best.1 {
            best = (c, t);
        }
    }
    best
}
