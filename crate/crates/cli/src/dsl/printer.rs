use std::fmt::Write;

use super::{Decl, Expr, FactorRef, GroupDef, SpecFile};

/// Canonical text for a spec file; `parse(print(s)) == s`.
pub fn print(spec: &SpecFile) -> String {
    let mut out = String::new();
    for d in &spec.decls {
        out.push_str(&decl(d));
        out.push('\n');
    }
    out
}

fn decl(d: &Decl) -> String {
    match d {
        Decl::Group { name, def } => format!("group {name} = {}", group_def(def)),
        Decl::Embed {
            name,
            source,
            target,
            images,
        } => {
            let body: Vec<String> = images
                .iter()
                .map(|(g, e)| format!("g{g} -> {}", expr(e)))
                .collect();
            if body.is_empty() {
                format!("embed {name} : {source} -> {target} {{ }}")
            } else {
                format!("embed {name} : {source} -> {target} {{ {} }}", body.join("; "))
            }
        }
        Decl::Amalgam {
            name,
            factors,
            over,
            via,
        } => format!(
            "amalgam {name} = {} over {over} via {}",
            factors.join(", "),
            via.join(", ")
        ),
        Decl::Word {
            name,
            amalgam,
            syllables,
        } => {
            if syllables.is_empty() {
                return format!("word {name} in {amalgam} = []");
            }
            let body: Vec<String> = syllables
                .iter()
                .map(|(f, e)| {
                    let f = match f {
                        FactorRef::Name(n) => n.clone(),
                        FactorRef::Index(i) => i.to_string(),
                    };
                    format!("{f}:{}", expr(e))
                })
                .collect();
            format!("word {name} in {amalgam} = {}", body.join(" * "))
        }
    }
}

fn group_def(def: &GroupDef) -> String {
    match def {
        GroupDef::Perm { degree, generators } => {
            let gens: Vec<String> = generators
                .iter()
                .map(|cs| cs.iter().map(|c| cycle(c)).collect::<String>())
                .collect();
            if gens.is_empty() {
                format!("perm {degree} {{ }}")
            } else {
                format!("perm {degree} {{ {} }}", gens.join("; "))
            }
        }
        GroupDef::Cyclic(n) => format!("cyclic {n}"),
        GroupDef::FreeAbelian(r) => format!("free-abelian {r}"),
        GroupDef::Abelian(ds) => format!("abelian {}", ints(ds)),
    }
}

fn cycle(c: &[usize]) -> String {
    let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
    format!("({})", pts.join(" "))
}

fn ints<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub(crate) fn expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e);
    s
}

fn write_expr(s: &mut String, e: &Expr) {
    match e {
        Expr::Identity => s.push('e'),
        Expr::Gen(k) => write!(s, "g{k}").unwrap(),
        Expr::Cycle(c) => s.push_str(&cycle(c)),
        Expr::Vector(v) => s.push_str(&ints(v)),
        Expr::Power(base, k) => {
            if matches!(**base, Expr::Product(_)) {
                s.push('(');
                write_expr(s, base);
                s.push(')');
            } else {
                write_expr(s, base);
            }
            write!(s, "^{k}").unwrap();
        }
        Expr::Product(fs) => {
            for (i, f) in fs.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                if matches!(f, Expr::Product(_)) {
                    s.push('(');
                    write_expr(s, f);
                    s.push(')');
                } else {
                    write_expr(s, f);
                }
            }
        }
    }
}
