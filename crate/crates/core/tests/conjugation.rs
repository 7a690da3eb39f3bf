use dedekind::algebra::{AlgebraElement, AlgebraMatrix};
use dedekind::det::DetStrategy;
use dedekind::index2::{conjugation_laws_check, inverse_2x2, Index2Context};
use dedekind::report::CheckStatus;
use dedekind::sample::Sampler;
use dedekind::suite::{pair, second_generic};
use dedekind::Error;

#[test]
fn laws_on_generic_elements() {
    for (key, spec) in [
        ("cyclic:4", "2"),
        ("product:2,2", "(1,0)"),
        ("sym:3", "a3"),
        ("dihedral:4", "r"),
        ("quaternion8", "i"),
    ] {
        let (g, h) = pair(key, spec).unwrap();
        let ctx = Index2Context::new(&h).unwrap();
        let report = conjugation_laws_check(
            &ctx,
            &AlgebraElement::generic(&g),
            &second_generic(&g),
            DetStrategy::CharacterDft,
        )
        .unwrap();
        for c in &report.checks {
            let expected_red = c.name == "central implies A = conj(A)";
            assert_eq!(c.status == CheckStatus::Fail, expected_red, "{key}: {}", c.name);
        }
    }
}

#[test]
fn a_central_element_that_is_not_fixed() {
    // in Z/4 over {0, 2} the generator t is central yet conj(t) = -t
    let (g, h) = pair("cyclic:4", "2").unwrap();
    let ctx = Index2Context::new(&h).unwrap();
    let t = AlgebraElement::basis(&g, 1);
    assert!(t.is_central());
    assert_eq!(ctx.conjugate(&t), -&t);
}

#[test]
fn two_by_two_inverse() {
    for (key, spec) in [("sym:3", "a3"), ("quaternion8", "i")] {
        let (g, h) = pair(key, spec).unwrap();
        let ctx = Index2Context::new(&h).unwrap();
        let mut s = Sampler::new(5, 2);
        let mut inverted = 0;
        for _ in 0..20 {
            let m = s.matrix(&g, 2);
            match inverse_2x2(&ctx, &m) {
                Ok(inv) => {
                    let id = AlgebraMatrix::identity(&g, 2);
                    assert_eq!(&m * &inv.inverse, id);
                    assert_eq!(&inv.inverse * &m, id);
                    assert!(inv.beta_gamma_central());
                    inverted += 1;
                }
                Err(Error::SingularMatrix) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(inverted > 0);
    }
}

#[test]
fn index_must_be_two() {
    let (_, h) = pair("dihedral:4", "center").unwrap();
    assert!(matches!(Index2Context::new(&h), Err(Error::InvalidTransversal(_))));
}
