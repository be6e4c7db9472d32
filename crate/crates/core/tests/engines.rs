use amalgam_core::amalgam::{reduce, vector, AmalgamSpec, AmalgamWord, Element, GroupRep};
use amalgam_core::group::{cyclic, is_solvable, symmetric};
use amalgam_core::oracle::{
    hom_search, presentation_of_amalgam, verify_witness, SearchOutcome, SolvableCatalog,
    DEFAULT_BUDGET,
};
use amalgam_core::witness::{
    abelian_factor_quotient, derived_depth, separate_element, CertificateKind, SeparateOptions,
    Separation,
};
use amalgam_core::group::{quaternion, Limits};
use amalgam_core::FgAbelian;

fn s3_over_c3() -> (AmalgamSpec, usize, usize) {
    let s3 = symmetric(3);
    let r = s3.find_label("(1 2 3)").unwrap();
    let t = s3.find_label("(1 2)").unwrap();
    let spec = AmalgamSpec::new(
        vec![GroupRep::Finite(s3.clone()), GroupRep::Finite(s3)],
        GroupRep::Finite(cyclic(3)),
        vec![vec![Element::Index(r)], vec![Element::Index(r)]],
    )
    .unwrap();
    (spec, t, r)
}

#[test]
fn depth_examples() {
    let s3 = symmetric(3);
    assert_eq!(derived_depth(&s3, s3.find_label("(1 2)").unwrap()).unwrap(), 1);
    assert_eq!(derived_depth(&s3, s3.find_label("(1 2 3)").unwrap()).unwrap(), 2);
    assert_eq!(derived_depth(&quaternion(), 1).unwrap(), 2);
}

#[test]
fn catalog_search_separates_both_words() {
    let (spec, t, r) = s3_over_c3();
    let p = presentation_of_amalgam(&spec).unwrap();
    let cat = SolvableCatalog::default();
    for x in [t, r] {
        let w = p.word(&AmalgamWord::new(vec![(0, Element::Index(x))])).unwrap();
        let first = hom_search(&p, &cat, &w, DEFAULT_BUDGET).unwrap();
        let SearchOutcome::Found(h) = &first else { panic!("not separated") };
        assert!(verify_witness(&p, &w, h));
        assert!(h.target.order() <= 24 && is_solvable(&h.target));
        assert_eq!(hom_search(&p, &cat, &w, DEFAULT_BUDGET).unwrap(), first);
    }
}

#[test]
fn kernel_word_of_the_retraction() {
    let (spec, t, _) = s3_over_c3();
    let w = AmalgamWord::new(vec![(0, Element::Index(t)), (1, Element::Index(t))]);
    assert!(!reduce(&spec, &w).unwrap().is_identity(&spec));
    match separate_element(&spec, &w, &SeparateOptions::default()).unwrap() {
        Separation::Separated { result, .. } => {
            assert_ne!(result.engine, CertificateKind::Double);
            assert!(result.target_derived_length >= 1);
        }
        Separation::NotSeparatedAtLevelOne(n) => panic!("{:?}", n.attempts),
    }
}

#[test]
fn abelian_factor_level_one() {
    let spec = AmalgamSpec::new(
        vec![
            GroupRep::Abelian(FgAbelian::free(1)),
            GroupRep::Abelian(FgAbelian::new(1, vec![2.into()]).unwrap()),
        ],
        GroupRep::Abelian(FgAbelian::free(1)),
        vec![vec![vector(&[3])], vec![vector(&[1, 0])]],
    )
    .unwrap();
    let (cert, hom, _) = abelian_factor_quotient(&spec, &Limits::default()).unwrap();
    assert_eq!(cert.quotient.order, 3);
    assert!(cert.passed());
    assert_ne!(hom.eval_word(&AmalgamWord::new(vec![(0, vector(&[1]))])), 0);
    let b_only = AmalgamWord::new(vec![(1, vector(&[0, 1]))]);
    assert_eq!(hom.eval_word(&b_only), 0);
    match separate_element(&spec, &b_only, &SeparateOptions::default()).unwrap() {
        Separation::NotSeparatedAtLevelOne(n) => {
            assert!(n.attempts.iter().any(|a| a.engine == CertificateKind::AbelianFactor));
        }
        Separation::Separated { result, .. } => panic!("{result:?}"),
    }
}
