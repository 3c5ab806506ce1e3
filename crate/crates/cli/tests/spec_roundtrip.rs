use hkcat::Permutation;
use hkcat_cli::{parse_group_spec, Family, GroupSpec, SpecError};
use proptest::prelude::*;

fn arb_named() -> impl Strategy<Value = GroupSpec> {
    let simple = (
        prop::sample::select(vec![Family::Sn, Family::An, Family::Cn, Family::Dn]),
        1usize..200,
    );
    let projective = (
        prop::sample::select(vec![Family::Pgl2, Family::PGammaL2, Family::Agl1]),
        prop::sample::select(vec![
            2usize, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64,
        ]),
    );
    prop_oneof![simple, projective].prop_map(|(family, param)| GroupSpec::Named { family, param })
}

fn arb_explicit() -> impl Strategy<Value = GroupSpec> {
    (1usize..12).prop_flat_map(|degree| {
        let perm = Just((0..degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap());
        proptest::collection::vec(perm, 1..4)
            .prop_map(move |generators| GroupSpec::Explicit { degree, generators })
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(spec in prop_oneof![arb_named(), arb_explicit()]) {
        let printed = spec.to_string();
        prop_assert_eq!(parse_group_spec(&printed).unwrap(), spec);
    }

    #[test]
    fn whitespace_between_tokens_is_ignored(spec in arb_named()) {
        let printed = spec.to_string();
        let spaced = printed.replace('(', " ( ").replace(')', " ) ");
        prop_assert_eq!(parse_group_spec(&format!("  {spaced}  ")).unwrap(), spec);
    }

    #[test]
    fn named_specs_resolve_to_their_degree(spec in arb_named()) {
        prop_assume!(spec.degree() <= 30);
        prop_assert_eq!(spec.resolve().unwrap().degree(), spec.degree());
    }

    #[test]
    fn explicit_specs_resolve_to_their_degree(spec in arb_explicit()) {
        prop_assert_eq!(spec.resolve().unwrap().degree(), spec.degree());
    }

    #[test]
    fn garbage_never_panics(text in "\\PC{0,24}") {
        let _ = parse_group_spec(&text);
    }
}

#[test]
fn example_specs() {
    let s = parse_group_spec("PGammaL2(8)").unwrap();
    assert_eq!(s.degree(), 9);
    assert_eq!(
        parse_group_spec("gens:(0 1)(2 3),(0 2)").unwrap().degree(),
        4
    );
    assert!(matches!(
        parse_group_spec("PGL2(six)"),
        Err(SpecError::Parse { offset: 5, .. })
    ));
    assert!(matches!(
        parse_group_spec("Pgl2(5)"),
        Err(SpecError::UnknownFamily { .. })
    ));
}
