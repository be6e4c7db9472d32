//! Resolution of parsed declarations into groups, amalgams and words.

use std::collections::HashMap;

use amalgam_core::amalgam::{AmalgamSpec, AmalgamWord, Element, GroupRep};
use amalgam_core::group::{cyclic, FiniteGroup, Limits, Perm};
use amalgam_core::{Error, FgAbelian};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::dsl::{Decl, Expr, FactorRef, GroupDef, Pos, SpecFile};
use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct GroupEntry {
    pub rep: GroupRep,
    /// Degree of a permutation group, for cycle literals.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct EmbedEntry {
    pub source: String,
    pub target: String,
    pub images: Vec<Element>,
}

#[derive(Clone, Debug)]
pub struct AmalgamEntry {
    pub spec: AmalgamSpec,
    pub factors: Vec<String>,
    pub over: String,
}

#[derive(Clone, Debug)]
pub struct WordEntry {
    pub amalgam: String,
    pub word: AmalgamWord,
}

/// Everything a spec file declares, by name.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub groups: HashMap<String, GroupEntry>,
    pub embeds: HashMap<String, EmbedEntry>,
    pub amalgams: HashMap<String, AmalgamEntry>,
    pub words: HashMap<String, WordEntry>,
    /// Declaration order, for defaults such as "the last amalgam".
    pub order: Vec<(String, &'static str)>,
}

impl Env {
    pub fn group(&self, name: &str) -> Result<&GroupEntry, CliError> {
        self.groups.get(name).ok_or_else(|| unresolved(name, "group", None))
    }

    pub fn amalgam(&self, name: Option<&str>) -> Result<(&str, &AmalgamEntry), CliError> {
        let name = match name {
            Some(n) => n,
            None => self
                .order
                .iter()
                .rev()
                .find(|(_, k)| *k == "amalgam")
                .map(|(n, _)| n.as_str())
                .ok_or_else(|| CliError::Usage("the spec file declares no amalgam".into()))?,
        };
        let (k, v) = self
            .amalgams
            .get_key_value(name)
            .ok_or_else(|| unresolved(name, "amalgam", None))?;
        Ok((k.as_str(), v))
    }

    pub fn word(&self, name: &str) -> Result<&WordEntry, CliError> {
        self.words.get(name).ok_or_else(|| unresolved(name, "word", None))
    }
}

fn unresolved(name: &str, kind: &str, pos: Option<Pos>) -> CliError {
    CliError::Resolution {
        name: name.to_string(),
        message: format!("no {kind} named `{name}`"),
        pos,
    }
}

fn at(pos: Pos) -> impl Fn(Error) -> CliError {
    move |e| CliError::Engine {
        error: e,
        pos: Some(pos),
    }
}

pub fn resolve(spec: &SpecFile, limits: &Limits) -> Result<Env, CliError> {
    let mut env = Env::default();
    for (d, &pos) in spec.decls.iter().zip(&spec.positions) {
        let name = d.name().to_string();
        if env.order.iter().any(|(n, _)| *n == name) {
            return Err(CliError::Resolution {
                name: name.clone(),
                message: format!("`{name}` is declared twice"),
                pos: Some(pos),
            });
        }
        let kind = match d {
            Decl::Group { def, .. } => {
                let entry = build_group(def, limits).map_err(at(pos))?;
                env.groups.insert(name.clone(), entry);
                "group"
            }
            Decl::Embed {
                source,
                target,
                images,
                ..
            } => {
                let entry = build_embed(&env, source, target, images, pos)?;
                env.embeds.insert(name.clone(), entry);
                "embed"
            }
            Decl::Amalgam {
                factors, over, via, ..
            } => {
                let entry = build_amalgam(&env, factors, over, via, pos)?;
                env.amalgams.insert(name.clone(), entry);
                "amalgam"
            }
            Decl::Word {
                amalgam, syllables, ..
            } => {
                let entry = build_word(&env, amalgam, syllables, pos)?;
                env.words.insert(name.clone(), entry);
                "word"
            }
        };
        env.order.push((name, kind));
    }
    Ok(env)
}

fn build_group(def: &GroupDef, limits: &Limits) -> Result<GroupEntry, Error> {
    Ok(match def {
        GroupDef::Perm { degree, generators } => GroupEntry {
            rep: GroupRep::Finite(FiniteGroup::from_cycles(*degree, generators, limits)?),
            degree: Some(*degree),
        },
        GroupDef::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::InvalidGroup("cyclic order must be positive".into()));
            }
            if *n > limits.max_order {
                return Err(Error::ClosureCapExceeded {
                    cap: limits.max_order,
                    reached: *n,
                });
            }
            GroupEntry {
                rep: GroupRep::Finite(cyclic(*n)),
                degree: None,
            }
        }
        GroupDef::FreeAbelian(r) => GroupEntry {
            rep: GroupRep::Abelian(FgAbelian::free(*r)),
            degree: None,
        },
        GroupDef::Abelian(ds) => {
            let free = ds.iter().take_while(|d| d.is_zero()).count();
            if ds[free..].iter().any(|d| d.is_zero() || d.is_negative()) {
                return Err(Error::InvalidGroup(
                    "abelian invariants must list zeros first, then positive moduli".into(),
                ));
            }
            GroupEntry {
                rep: GroupRep::Abelian(FgAbelian::new(free, ds[free..].to_vec())?),
                degree: None,
            }
        }
    })
}

fn build_embed(
    env: &Env,
    source: &str,
    target: &str,
    images: &[(usize, Expr)],
    pos: Pos,
) -> Result<EmbedEntry, CliError> {
    let c = env.groups.get(source).ok_or_else(|| unresolved(source, "group", Some(pos)))?;
    let g = env.groups.get(target).ok_or_else(|| unresolved(target, "group", Some(pos)))?;
    let ngens = c.rep.generators().len();
    let mut slots: Vec<Option<Element>> = vec![None; ngens];
    for (k, e) in images {
        if *k > ngens {
            return Err(CliError::Resolution {
                name: format!("g{k}"),
                message: format!("`{source}` has {ngens} generators"),
                pos: Some(pos),
            });
        }
        if slots[k - 1].is_some() {
            return Err(CliError::Resolution {
                name: format!("g{k}"),
                message: format!("image of g{k} given twice"),
                pos: Some(pos),
            });
        }
        slots[k - 1] = Some(eval(g, e).map_err(at(pos))?);
    }
    let images = slots
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            s.ok_or_else(|| CliError::Resolution {
                name: format!("g{}", k + 1),
                message: format!("no image given for g{}", k + 1),
                pos: Some(pos),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EmbedEntry {
        source: source.to_string(),
        target: target.to_string(),
        images,
    })
}

fn build_amalgam(
    env: &Env,
    factors: &[String],
    over: &str,
    via: &[String],
    pos: Pos,
) -> Result<AmalgamEntry, CliError> {
    if factors.len() != via.len() {
        return Err(CliError::Engine {
            error: Error::IncompatibleAmalgam(format!(
                "{} embeddings for {} factors",
                via.len(),
                factors.len()
            )),
            pos: Some(pos),
        });
    }
    let c = env.groups.get(over).ok_or_else(|| unresolved(over, "group", Some(pos)))?;
    let mut reps = Vec::new();
    let mut images = Vec::new();
    for (f, e) in factors.iter().zip(via) {
        let g = env.groups.get(f).ok_or_else(|| unresolved(f, "group", Some(pos)))?;
        let emb = env.embeds.get(e).ok_or_else(|| unresolved(e, "embedding", Some(pos)))?;
        if emb.source != over || emb.target != *f {
            return Err(CliError::Resolution {
                name: e.clone(),
                message: format!(
                    "`{e}` maps {} -> {}, expected {over} -> {f}",
                    emb.source, emb.target
                ),
                pos: Some(pos),
            });
        }
        reps.push(g.rep.clone());
        images.push(emb.images.clone());
    }
    let spec = AmalgamSpec::new(reps, c.rep.clone(), images).map_err(at(pos))?;
    Ok(AmalgamEntry {
        spec,
        factors: factors.to_vec(),
        over: over.to_string(),
    })
}

/// Largest raw word accepted from a spec file.
pub const MAX_SYLLABLES: usize = 64;

fn build_word(
    env: &Env,
    amalgam: &str,
    syllables: &[(FactorRef, Expr)],
    pos: Pos,
) -> Result<WordEntry, CliError> {
    let a = env
        .amalgams
        .get(amalgam)
        .ok_or_else(|| unresolved(amalgam, "amalgam", Some(pos)))?;
    if syllables.len() > MAX_SYLLABLES {
        return Err(CliError::Engine {
            error: Error::Unsupported(format!(
                "{} syllables exceed the limit of {MAX_SYLLABLES}",
                syllables.len()
            )),
            pos: Some(pos),
        });
    }
    let mut out = Vec::new();
    for (f, e) in syllables {
        let i = match f {
            FactorRef::Index(i) if *i < a.factors.len() => *i,
            FactorRef::Index(i) => {
                return Err(CliError::Resolution {
                    name: i.to_string(),
                    message: format!("`{amalgam}` has {} factors", a.factors.len()),
                    pos: Some(pos),
                })
            }
            FactorRef::Name(n) => {
                let hits: Vec<usize> = (0..a.factors.len()).filter(|&k| a.factors[k] == *n).collect();
                match hits.as_slice() {
                    [k] => *k,
                    [] => {
                        return Err(CliError::Resolution {
                            name: n.clone(),
                            message: format!("`{n}` is not a factor of `{amalgam}`"),
                            pos: Some(pos),
                        })
                    }
                    _ => {
                        return Err(CliError::Resolution {
                            name: n.clone(),
                            message: format!("`{n}` names several factors of `{amalgam}`; use an index"),
                            pos: Some(pos),
                        })
                    }
                }
            }
        };
        let g = &env.groups[&a.factors[i]];
        out.push((i, eval(g, e).map_err(at(pos))?));
    }
    Ok(WordEntry {
        amalgam: amalgam.to_string(),
        word: AmalgamWord::new(out),
    })
}

/// Evaluates an element expression in a group.
pub fn eval(g: &GroupEntry, e: &Expr) -> Result<Element, Error> {
    match &g.rep {
        GroupRep::Finite(f) => eval_finite(f, g.degree, e).map(Element::Index),
        GroupRep::Abelian(a) => eval_abelian(a, e).map(Element::Vector),
    }
}

fn eval_finite(g: &FiniteGroup, degree: Option<usize>, e: &Expr) -> Result<usize, Error> {
    Ok(match e {
        Expr::Identity => 0,
        Expr::Gen(k) => *g.generators().get(k - 1).ok_or_else(|| {
            Error::MalformedElement(format!("g{k}: the group has {} generators", g.generators().len()))
        })?,
        Expr::Cycle(c) => {
            let Some(d) = degree else {
                return Err(Error::MalformedElement("cycle notation needs a permutation group".into()));
            };
            let p = Perm::from_cycles(d, std::slice::from_ref(c))?;
            g.find_label(&p.to_string()).ok_or_else(|| {
                Error::MalformedElement(format!("{p} is not in the group"))
            })?
        }
        Expr::Vector(_) => {
            return Err(Error::MalformedElement("vector literal in a finite group".into()))
        }
        Expr::Power(b, k) => {
            let x = eval_finite(g, degree, b)?;
            let o = BigInt::from(g.element_order(x));
            let r = ((k % &o) + &o) % &o;
            g.pow(x, r.to_i64().expect("reduced exponent"))
        }
        Expr::Product(fs) => {
            let mut acc = 0;
            for f in fs {
                acc = g.mul(acc, eval_finite(g, degree, f)?);
            }
            acc
        }
    })
}

fn eval_abelian(a: &FgAbelian, e: &Expr) -> Result<Vec<BigInt>, Error> {
    match e {
        Expr::Identity => Ok(a.identity()),
        Expr::Gen(k) => {
            if *k > a.dim() {
                return Err(Error::MalformedElement(format!(
                    "g{k}: the group has {} generators",
                    a.dim()
                )));
            }
            Ok(a.basis_vector(k - 1))
        }
        Expr::Vector(v) => a.normalize(v),
        Expr::Cycle(_) => Err(Error::MalformedElement(
            "cycle notation in an abelian group".into(),
        )),
        Expr::Power(b, k) => Ok(a.scale(&eval_abelian(a, b)?, k)),
        Expr::Product(fs) => {
            let mut acc = a.identity();
            for f in fs {
                acc = a.op(&acc, &eval_abelian(a, f)?);
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    #[test]
    fn powers_reduce_modulo_the_order() {
        let spec = parse("group C = cyclic 5").unwrap();
        let env = resolve(&spec, &Limits::default()).unwrap();
        let g = &env.groups["C"];
        let e = |k: i64| Expr::Power(Box::new(Expr::Gen(1)), BigInt::from(k));
        assert_eq!(eval(g, &e(-1)).unwrap(), eval(g, &e(4)).unwrap());
        assert_eq!(eval(g, &e(10)).unwrap(), Element::Index(0));
        assert!(eval(g, &Expr::Gen(2)).is_err());
        assert!(eval(g, &Expr::Cycle(vec![1, 2])).is_err());
    }

    #[test]
    fn vectors_normalize_torsion() {
        let spec = parse("group A = abelian [0,3]").unwrap();
        let env = resolve(&spec, &Limits::default()).unwrap();
        let v = eval(&env.groups["A"], &Expr::Vector(vec![BigInt::from(-2), BigInt::from(7)])).unwrap();
        assert_eq!(v, Element::Vector(vec![BigInt::from(-2), BigInt::from(1)]));
        assert!(eval(&env.groups["A"], &Expr::Vector(vec![BigInt::from(1)])).is_err());
    }

    #[test]
    fn order_cap_applies_to_declarations() {
        let limits = Limits {
            max_order: 10,
            ..Limits::default()
        };
        let err = resolve(&parse("group S4 = perm 4 { (1 2); (1 2 3 4) }").unwrap(), &limits).unwrap_err();
        assert_eq!(err.kind(), "ClosureCapExceeded");
        assert!(resolve(&parse("group C = cyclic 11").unwrap(), &limits).is_err());
    }

    #[test]
    fn default_amalgam_is_the_last_declared() {
        let text = "group C = cyclic 2\ngroup T = cyclic 1\nembed e : T -> C { }\n\
                    amalgam G = C, C over T via e, e\namalgam H = C over T via e";
        let env = resolve(&parse(text).unwrap(), &Limits::default()).unwrap();
        assert_eq!(env.amalgam(None).unwrap().0, "H");
        assert!(env.amalgam(Some("K")).is_err());
    }
}
