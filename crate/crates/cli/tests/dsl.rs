use amalgam_cli::dsl::{parse, print, Decl, Expr, FactorRef, GroupDef, SpecFile};
use amalgam_cli::env::resolve;
use amalgam_cli::CliError;
use amalgam_core::amalgam::{reduce, GroupRep};
use amalgam_core::group::Limits;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn s3_has_order_six() {
    let spec = parse("group S3 = perm 3 { (1 2); (1 2 3) }").unwrap();
    let env = resolve(&spec, &Limits::default()).unwrap();
    assert_eq!(env.groups["S3"].rep.order(), Some(6));
}

#[test]
fn empty_file() {
    assert_eq!(parse("").unwrap(), SpecFile::default());
    assert_eq!(parse("  # nothing\n\n").unwrap().decls.len(), 0);
}

#[test]
fn two_syllable_word() {
    let text = "group A = perm 3 { (1 2); (1 2 3) }
group B = perm 3 { (1 2); (1 2 3) }
group C = cyclic 3
embed ea : C -> A { g1 -> (1 2 3) }
embed eb : C -> B { g1 -> (1 2 3) }
amalgam G = A, B over C via ea, eb
word w in G = A:(1 2) * B:(1 2 3)^-1
";
    let spec = parse(text).unwrap();
    let Decl::Word { syllables, .. } = &spec.decls[6] else {
        panic!()
    };
    assert_eq!(syllables.len(), 2);
    assert_eq!(syllables[1].0, FactorRef::Name("B".into()));
    assert_eq!(
        syllables[1].1,
        Expr::Power(Box::new(Expr::Cycle(vec![1, 2, 3])), BigInt::from(-1))
    );
    let env = resolve(&spec, &Limits::default()).unwrap();
    let w = &env.words["w"];
    let a = &env.amalgams["G"];
    // (1 3 2) lies in C, so the word has one syllable after reduction
    assert_eq!(reduce(&a.spec, &w.word).unwrap().length(), 1);
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse("group S3 = perm 3 { (1 2); (1 2 3) }\ngroup X = cyclik 3").unwrap_err();
    assert_eq!((e.line, e.col), (2, 11));
    assert!(e.expected.contains("`cyclic`"));
    let e = parse("group X = cyclic 3 %").unwrap_err();
    assert_eq!((e.line, e.col), (1, 20));
    let e = parse("embed e : C -> G { g1 -> }").unwrap_err();
    assert!(e.expected.contains("element expression"), "{e}");
    let e = parse("amalgam G = A, B over C").unwrap_err();
    assert!(e.expected.contains("`via`") && e.expected.contains("end of input"));
}

fn resolve_err(text: &str) -> CliError {
    resolve(&parse(text).unwrap(), &Limits::default()).unwrap_err()
}

#[test]
fn resolution_errors() {
    let e = resolve_err("embed e : C -> G { }");
    assert_eq!(e.kind(), "ResolutionError");
    let e = resolve_err("group A = cyclic 2\ngroup A = cyclic 3");
    assert!(e.to_string().contains("declared twice"));
    assert_eq!(e.pos().unwrap().line, 2);
    let e = resolve_err("group A = cyclic 4\ngroup C = cyclic 2\nembed e : C -> A { }");
    assert!(e.to_string().contains("no image given for g1"));
    let e = resolve_err(
        "group A = perm 3 { (1 2); (1 2 3) }\ngroup C = cyclic 3\nembed e : C -> A { g1 -> (1 2 3) }\n\
         amalgam G = A, A over C via e, e\nword w in G = A:(1 2)",
    );
    assert!(e.to_string().contains("several factors"));
    let e = resolve_err("group A = perm 3 { (1 2) }\ngroup C = cyclic 2\nembed e : C -> A { g1 -> (1 2 3) }");
    assert_eq!(e.kind(), "MalformedElement");
}

#[test]
fn abelian_declarations() {
    let env = resolve(&parse("group A = abelian [0,2,4]\ngroup F = free-abelian 3").unwrap(), &Limits::default()).unwrap();
    let GroupRep::Abelian(a) = &env.groups["A"].rep else {
        panic!()
    };
    assert_eq!(a.free_rank(), 1);
    assert_eq!(a.torsion(), &[BigInt::from(2), BigInt::from(4)]);
    assert!(resolve(&parse("group A = abelian [2,3]").unwrap(), &Limits::default()).is_err());
    assert!(resolve(&parse("group A = abelian [2,0]").unwrap(), &Limits::default()).is_err());
}

#[test]
fn expressions_evaluate_in_the_group() {
    let text = "group S3 = perm 3 { (1 2); (1 2 3) }
group C = cyclic 1
embed e : C -> S3 { }
amalgam G = S3, S3 over C via e, e
word a in G = 0:g1 g2
word b in G = 0:(1 2)(1 2 3)
word c in G = 0:(g2 g1)^-1 (1 3)^2 e 1
";
    let env = resolve(&parse(text).unwrap(), &Limits::default()).unwrap();
    let spec = &env.amalgams["G"].spec;
    let x = |n: &str| env.words[n].word.syllables[0].1.clone();
    assert_eq!(x("a"), x("b"));
    // (g2 g1)^-1 = g1 g2^-1 = (1 2)(1 3 2) = (2 3)
    assert_eq!(spec.factor(0).label(&x("c")), "(2 3)");
}

fn ident() -> impl Strategy<Value = String> {
    "[A-Z][a-z0-9]{0,3}".prop_filter("reserved", |s| s != "e")
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::Identity),
        (1usize..5).prop_map(Expr::Gen),
        proptest::collection::vec(1usize..9, 0..4).prop_map(Expr::Cycle),
        proptest::collection::vec(-20i64..20, 0..4)
            .prop_map(|v| Expr::Vector(v.into_iter().map(BigInt::from).collect())),
    ];
    leaf.prop_recursive(3, 16, 4, |inner| {
        prop_oneof![
            (inner.clone(), -9i64..9).prop_map(|(b, k)| Expr::Power(Box::new(b), BigInt::from(k))),
            proptest::collection::vec(inner, 2..4).prop_map(Expr::Product),
        ]
    })
}

fn decl() -> impl Strategy<Value = Decl> {
    let group = (
        ident(),
        prop_oneof![
            (1usize..8, proptest::collection::vec(
                proptest::collection::vec(proptest::collection::vec(1usize..8, 1..4), 1..3),
                0..3
            ))
                .prop_map(|(degree, generators)| GroupDef::Perm { degree, generators }),
            (1usize..20).prop_map(GroupDef::Cyclic),
            (0usize..4).prop_map(GroupDef::FreeAbelian),
            proptest::collection::vec(0i64..12, 0..4)
                .prop_map(|v| GroupDef::Abelian(v.into_iter().map(BigInt::from).collect())),
        ],
    )
        .prop_map(|(name, def)| Decl::Group { name, def });
    let embed = (ident(), ident(), ident(), proptest::collection::vec((1usize..4, expr()), 0..3))
        .prop_map(|(name, source, target, images)| Decl::Embed {
            name,
            source,
            target,
            images,
        });
    let amalgam = (ident(), proptest::collection::vec(ident(), 1..4), ident(), proptest::collection::vec(ident(), 1..4))
        .prop_map(|(name, factors, over, via)| Decl::Amalgam {
            name,
            factors,
            over,
            via,
        });
    let factor = prop_oneof![ident().prop_map(FactorRef::Name), (0usize..4).prop_map(FactorRef::Index)];
    let word = (ident(), ident(), proptest::collection::vec((factor, expr()), 0..4))
        .prop_map(|(name, amalgam, syllables)| Decl::Word {
            name,
            amalgam,
            syllables,
        });
    prop_oneof![group, embed, amalgam, word]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn print_then_parse_is_identity(decls in proptest::collection::vec(decl(), 0..6)) {
        let spec = SpecFile { positions: vec![Default::default(); decls.len()], decls };
        let text = print(&spec);
        let again = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(again, spec);
    }
}
