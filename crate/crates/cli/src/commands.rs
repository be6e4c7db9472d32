use amalgam_core::amalgam::{reduce, AmalgamWord, Element, GroupRep};
use amalgam_core::group::{
    abelian_invariants, derived_length, frattini, is_nilpotent, is_solvable, maximal_subgroups, series, FiniteGroup,
    Limits, SeriesKind,
};
use amalgam_core::lattice::{snf, Matrix};
use amalgam_core::oracle::oracle_reduce;
use amalgam_core::witness::{
    abelian_factor_quotient, central_amalgam_quotient, cyclic_amalgam_certificate,
    double_retraction, find_double_isos, not_perfect_certificate, separate_element,
    SeparateOptions, Separation,
};
use amalgam_core::IntMatrix;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::dsl::parse;
use crate::env::{resolve, Env, GroupEntry};
use crate::error::CliError;
use crate::json as out;
use crate::{Cli, Command, Report, SeriesArg, Theorem};

/// Largest number of words `oracle-check` enumerates.
pub const MAX_ORACLE_WORDS: usize = 200_000;

pub fn limits(cli: &Cli) -> Limits {
    Limits {
        max_order: cli.global.max_order,
        lattice_cap: cli.global.lattice_cap,
        check_associativity: !cli.global.unsafe_skip_associativity,
    }
}

pub fn load(path: &str, limits: &Limits) -> Result<Env, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Io(format!("standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?
    };
    resolve(&parse(&text)?, limits)
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let limits = limits(cli);
    match &cli.command {
        Command::Snf { matrix } => snf_command(matrix),
        Command::NormalForm { spec, word } => normal_form(&load(spec, &limits)?, word),
        Command::Equal { spec, left, right } => equal(&load(spec, &limits)?, left, right),
        Command::DerivedSeries { spec, group, kind } => {
            derived_series(&load(spec, &limits)?, group, *kind)
        }
        Command::Abelianize { spec, group } => abelianize(&load(spec, &limits)?, group),
        Command::Frattini { spec, group } => frattini_command(&load(spec, &limits)?, group, &limits),
        Command::Certify {
            spec,
            theorem,
            amalgam,
        } => certify(&load(spec, &limits)?, *theorem, amalgam.as_deref(), &limits),
        Command::Witness { spec, word } => {
            let opts = SeparateOptions {
                limits,
                budget: cli.global.budget,
                catalog_max: cli.global.catalog_max,
            };
            witness(&load(spec, &limits)?, word, &opts)
        }
        Command::OracleCheck {
            spec,
            amalgam,
            length,
            word,
        } => oracle_check(&load(spec, &limits)?, amalgam.as_deref(), *length, word.as_deref()),
    }
}

fn finite<'a>(env: &'a Env, name: &str) -> Result<&'a FiniteGroup, CliError> {
    match &env.group(name)?.rep {
        GroupRep::Finite(g) => Ok(g),
        GroupRep::Abelian(_) => Err(CliError::Usage(format!(
            "`{name}` is not a finite group given by a table"
        ))),
    }
}

fn normal_form(env: &Env, word: &str) -> Result<Report, CliError> {
    let w = env.word(word)?;
    let (_, a) = env.amalgam(Some(&w.amalgam))?;
    let nf = reduce(&a.spec, &w.word)?;
    Ok(Report {
        passed: true,
        result: json!({
            "word": word,
            "amalgam": w.amalgam,
            "input": out::word(&a.spec, &a.factors, &w.word),
            "normal_form": out::normal_form(&a.spec, &a.factors, &nf),
        }),
    })
}

fn equal(env: &Env, left: &str, right: &str) -> Result<Report, CliError> {
    let l = env.word(left)?;
    let r = env.word(right)?;
    if l.amalgam != r.amalgam {
        return Err(CliError::Usage(format!(
            "`{left}` lives in `{}` but `{right}` lives in `{}`",
            l.amalgam, r.amalgam
        )));
    }
    let (_, a) = env.amalgam(Some(&l.amalgam))?;
    let nl = reduce(&a.spec, &l.word)?;
    let nr = reduce(&a.spec, &r.word)?;
    Ok(Report {
        passed: true,
        result: json!({
            "amalgam": l.amalgam,
            "left": out::normal_form(&a.spec, &a.factors, &nl),
            "right": out::normal_form(&a.spec, &a.factors, &nr),
            "equal": nl == nr,
        }),
    })
}

fn derived_series(env: &Env, name: &str, kind: SeriesArg) -> Result<Report, CliError> {
    let g = finite(env, name)?;
    let (k, label) = match kind {
        SeriesArg::Derived => (SeriesKind::Derived, "derived"),
        SeriesArg::LowerCentral => (SeriesKind::LowerCentral, "lower-central"),
    };
    let s = series(g, k);
    Ok(Report {
        passed: true,
        result: json!({
            "group": name,
            "kind": label,
            "orders": s.orders(),
            "reaches_trivial": s.reaches_trivial(),
            "solvable": is_solvable(g),
            "nilpotent": is_nilpotent(g),
            "derived_length": derived_length(g),
        }),
    })
}

fn abelianize(env: &Env, name: &str) -> Result<Report, CliError> {
    let GroupEntry { rep, .. } = env.group(name)?;
    let (free_rank, torsion): (usize, Vec<BigInt>) = match rep {
        GroupRep::Finite(g) => (0, abelian_invariants(g).into_iter().map(BigInt::from).collect()),
        GroupRep::Abelian(a) => (a.free_rank(), a.torsion().to_vec()),
    };
    let order: Value = if free_rank == 0 {
        out::int(&torsion.iter().product())
    } else {
        Value::Null
    };
    Ok(Report {
        passed: true,
        result: json!({
            "group": name,
            "free_rank": free_rank,
            "torsion": out::ints(&torsion),
            "order": order,
        }),
    })
}

fn frattini_command(env: &Env, name: &str, limits: &Limits) -> Result<Report, CliError> {
    let g = finite(env, name)?;
    let phi = frattini(g, limits)?;
    let maximal = maximal_subgroups(g, limits)?;
    let elements: Vec<Value> = phi.elements().iter().map(|&x| out::indexed(x, g.label(x))).collect();
    Ok(Report {
        passed: true,
        result: json!({
            "group": name,
            "order": phi.order(),
            "elements": elements,
            "maximal_subgroup_orders": maximal.iter().map(|m| m.order()).collect::<Vec<_>>(),
        }),
    })
}

fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not an integer matrix literal"));
    let v: Value = serde_json::from_str(text).map_err(|_| bad())?;
    let rows = v.as_array().ok_or_else(bad)?;
    let mut out = Vec::new();
    for r in rows {
        let mut row = Vec::new();
        for x in r.as_array().ok_or_else(bad)? {
            let n = x.as_number().ok_or_else(bad)?;
            row.push(n.to_string().parse::<BigInt>().map_err(|_| bad())?);
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(out)?)
}

fn snf_command(text: &str) -> Result<Report, CliError> {
    let m = parse_matrix(text)?;
    let d = snf(&m);
    Ok(Report {
        passed: true,
        result: json!({
            "matrix": out::matrix(&m),
            "u": out::matrix(&d.u),
            "d": out::matrix(&d.d),
            "v": out::matrix(&d.v),
            "invariant_factors": out::ints(&d.invariant_factors),
            "rank": d.rank(),
        }),
    })
}

fn certify(env: &Env, theorem: Theorem, amalgam: Option<&str>, limits: &Limits) -> Result<Report, CliError> {
    let (name, a) = env.amalgam(amalgam)?;
    let spec = &a.spec;
    let cert = match theorem {
        Theorem::NotPerfect => not_perfect_certificate(spec, limits)?.0,
        Theorem::Cyclic => cyclic_amalgam_certificate(spec, limits)?.0,
        Theorem::Central => central_amalgam_quotient(spec, limits)?.0,
        Theorem::Double => double_retraction(spec, &find_double_isos(spec)?)?.0,
        Theorem::AbelianFactor => abelian_factor_quotient(spec, limits)?.0,
    };
    Ok(Report {
        passed: cert.passed(),
        result: json!({
            "amalgam": name,
            "certificate": out::certificate(spec, &cert),
        }),
    })
}

fn witness(env: &Env, word: &str, opts: &SeparateOptions) -> Result<Report, CliError> {
    let w = env.word(word)?;
    let (_, a) = env.amalgam(Some(&w.amalgam))?;
    Ok(match separate_element(&a.spec, &w.word, opts)? {
        Separation::Separated {
            result,
            certificate,
        } => Report {
            passed: true,
            result: json!({
                "amalgam": w.amalgam,
                "outcome": "Separated",
                "witness": out::witness_result(&a.spec, &a.factors, &result),
                "certificate": out::certificate(&a.spec, &certificate),
            }),
        },
        Separation::NotSeparatedAtLevelOne(n) => Report {
            passed: false,
            result: json!({
                "amalgam": w.amalgam,
                "outcome": "NotSeparatedAtLevelOne",
                "not_separated": out::not_separated(&a.spec, &a.factors, &n),
            }),
        },
    })
}

fn oracle_check(env: &Env, amalgam: Option<&str>, length: usize, word: Option<&str>) -> Result<Report, CliError> {
    let (name, words) = match word {
        Some(w) => {
            let entry = env.word(w)?;
            (entry.amalgam.as_str(), vec![entry.word.clone()])
        }
        None => {
            let (name, a) = env.amalgam(amalgam)?;
            (name, enumerate_words(&a.spec, length)?)
        }
    };
    let (_, a) = env.amalgam(Some(name))?;
    let spec = &a.spec;
    let mut mismatches = Vec::new();
    for w in &words {
        let mine = reduce(spec, w)?;
        let theirs = oracle_reduce(spec, w)?;
        if mine != theirs && mismatches.len() < 10 {
            mismatches.push(out::word(spec, &a.factors, w));
        }
    }
    let mut fidelity_failures = Vec::new();
    for i in 0..spec.num_factors() {
        let elems = spec.factor(i).elements().unwrap_or_default();
        for x in elems.into_iter().skip(1) {
            let w = AmalgamWord::new(vec![(i, x.clone())]);
            if reduce(spec, &w)?.is_identity(spec) {
                fidelity_failures.push(out::element(spec.factor(i), &x));
            }
        }
    }
    let passed = mismatches.is_empty() && fidelity_failures.is_empty();
    Ok(Report {
        passed,
        result: json!({
            "amalgam": name,
            "words_checked": words.len(),
            "max_length": if word.is_some() { words[0].len() } else { length },
            "mismatches": mismatches,
            "fidelity_failures": fidelity_failures,
        }),
    })
}

/// All words of length at most `length` over the first two nonidentity
/// elements of each factor.
fn enumerate_words(spec: &amalgam_core::amalgam::AmalgamSpec, length: usize) -> Result<Vec<AmalgamWord>, CliError> {
    let mut alphabet: Vec<(usize, Element)> = Vec::new();
    for i in 0..spec.num_factors() {
        let elems = spec.factor(i).elements().ok_or_else(|| {
            CliError::Usage("oracle-check needs finite factors".into())
        })?;
        alphabet.extend(elems.into_iter().skip(1).take(2).map(|x| (i, x)));
    }
    let k = alphabet.len();
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=length {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k.max(1));
    }
    if total > MAX_ORACLE_WORDS {
        return Err(CliError::Usage(format!(
            "{total} words exceed the oracle-check limit of {MAX_ORACLE_WORDS}"
        )));
    }
    let mut out = vec![AmalgamWord::default()];
    let mut frontier = vec![AmalgamWord::default()];
    for _ in 0..length {
        let mut next = Vec::with_capacity(frontier.len() * k);
        for w in &frontier {
            for l in &alphabet {
                let mut s = w.syllables.clone();
                s.push(l.clone());
                next.push(AmalgamWord::new(s));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}
