use dedekind::algebra::AlgebraElement;
use dedekind::arith::{Cyclotomic, MultiPoly};
use dedekind::group::{builtin_group, characters, FiniteGroup, Subgroup};
use dedekind::Error;
use proptest::prelude::*;

const CATALOG: [&str; 7] = [
    "cyclic:4",
    "product:2,2",
    "cyclic:6",
    "sym:3",
    "dihedral:4",
    "quaternion8",
    "dihedral:3",
];

#[test]
fn catalog_tables_are_groups() {
    for key in CATALOG {
        let g = builtin_group(key).unwrap();
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.mul(a, e), a);
            assert_eq!(g.mul(a, g.inv(a)), e);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{key}");
                }
            }
        }
    }
    let z4 = builtin_group("cyclic:4").unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(z4.mul(i, j), (i + j) % 4);
        }
    }
}

#[test]
fn table_files_are_validated() {
    let ok = FiniteGroup::from_json_str(r#"{"order": 2, "table": [[0,1],[1,0]], "names": ["e","t"]}"#).unwrap();
    assert_eq!(ok.order(), 2);
    let bad = FiniteGroup::from_json_str(r#"{"order": 3, "table": [[0,1,2],[1,0,2],[2,2,0]]}"#);
    assert!(matches!(bad, Err(Error::NotAGroup(_))));
    assert!(matches!(builtin_group("sym:9"), Err(Error::UnknownCatalogKey(_))));
}

#[test]
fn class_counts() {
    let counts = |key: &str| builtin_group(key).unwrap().conjugacy_classes().len();
    assert_eq!(counts("sym:3"), 3);
    assert_eq!(counts("dihedral:4"), 5);
    assert_eq!(counts("quaternion8"), 5);
    assert_eq!(counts("cyclic:6"), 6);
}

#[test]
fn character_orthogonality_on_abelian_subgroups() {
    for key in CATALOG {
        let g = builtin_group(key).unwrap();
        for h in Subgroup::all_abelian(&g) {
            let chars = characters(&h).unwrap();
            assert_eq!(chars.len(), h.order(), "{key} {}", h.display());
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    // <a, b> = |H|^-1 sum a(h) b(h^-1)
                    let s = h
                        .elements()
                        .iter()
                        .fold(Cyclotomic::zero(), |acc, &x| &acc + &(a.value(x) * b.value(g.inv(x))));
                    let expected = if i == j { h.order() as i64 } else { 0 };
                    assert_eq!(s, Cyclotomic::from_int(expected), "{key} {}", h.display());
                }
            }
        }
    }
}

fn numeric(key: &str, values: &[i64]) -> AlgebraElement {
    let g = builtin_group(key).unwrap();
    AlgebraElement::from_ints(&g, &values[..g.order()])
}

fn values() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_laws(key in prop::sample::select(CATALOG.to_vec()), a in values(), b in values(), c in values()) {
        let (a, b, c) = (numeric(key, &a), numeric(key, &b), numeric(key, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).augmentation(), &a.augmentation() * &b.augmentation());
        if a.group().is_abelian() {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }

    #[test]
    fn centrality_tests_agree(key in prop::sample::select(CATALOG.to_vec()), a in values(), class in 0usize..5) {
        let a = numeric(key, &a);
        prop_assert_eq!(a.is_central(), a.is_class_function());
        let g = a.group().clone();
        let classes = g.conjugacy_classes();
        let sum = AlgebraElement::from_coeffs(&g, classes[class % classes.len()].iter().map(|&x| (x, MultiPoly::one())));
        prop_assert!(sum.is_central() && sum.is_class_function());
    }
}

#[test]
fn group_mismatch_is_an_error() {
    let a = AlgebraElement::one(&builtin_group("cyclic:4").unwrap());
    let b = AlgebraElement::one(&builtin_group("product:2,2").unwrap());
    assert!(matches!(a.try_mul(&b), Err(Error::GroupMismatch)));
}

#[test]
fn twist_by_character_is_multiplicative() {
    let g = builtin_group("cyclic:6").unwrap();
    let chars = characters(&Subgroup::whole(&g)).unwrap();
    let a = AlgebraElement::from_ints(&g, &[1, 2, 0, -1, 3, 1]);
    let b = AlgebraElement::from_ints(&g, &[0, 1, 1, 2, 0, -2]);
    for chi in &chars {
        assert_eq!(
            (&a * &b).twist(chi).unwrap(),
            &a.twist(chi).unwrap() * &b.twist(chi).unwrap()
        );
        assert_eq!(
            (&a * &b).evaluate_character(chi),
            &a.evaluate_character(chi) * &b.evaluate_character(chi)
        );
    }
}
