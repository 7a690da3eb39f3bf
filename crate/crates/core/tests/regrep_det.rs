use dedekind::algebra::{AlgebraElement, AlgebraMatrix};
use dedekind::arith::{MultiPoly, Var};
use dedekind::det::{
    char_poly, coefficient_centrality_check, det_commutative, invert_numeric, ncdet, quotient_character_product_check,
    DetStrategy,
};
use dedekind::group::{builtin_group, Subgroup, Transversal};
use dedekind::regrep::{compose_check, generic_matrix, RegularRepContext};
use dedekind::sample::Sampler;
use dedekind::suite::pair;
use dedekind::Error;

fn x(g: usize) -> MultiPoly {
    MultiPoly::var(Var::group(g))
}

#[test]
fn two_element_group_over_trivial_subgroup() {
    // a = x e + y t lifts to [[x, y], [y, x]] with determinant (x^2 - y^2) e
    let g = builtin_group("cyclic:2").unwrap();
    let ctx = RegularRepContext::new(&Subgroup::trivial(&g), 1);
    let a = generic_matrix(&ctx);
    let lifted = ctx.lift(&a).unwrap();
    let s = |p: MultiPoly| AlgebraElement::scalar(&g, p);
    let expected = AlgebraMatrix::from_rows(&g, vec![vec![s(x(0)), s(x(1))], vec![s(x(1)), s(x(0))]]).unwrap();
    assert_eq!(lifted, expected);
    let d = ncdet(&ctx, &a, DetStrategy::CrossCheck).unwrap();
    assert_eq!(d, s(&(&x(0) * &x(0)) - &(&x(1) * &x(1))));
}

#[test]
fn lift_of_identity_and_round_trip() {
    for (key, spec) in [("sym:3", "a3"), ("dihedral:4", "r"), ("cyclic:6", "2")] {
        let (_, h) = pair(key, spec).unwrap();
        let ctx = RegularRepContext::new(&h, 2);
        let id = AlgebraMatrix::identity(ctx.group(), 2);
        assert!(ctx.lift(&id).unwrap().is_identity());
        assert_eq!(
            ctx.recover_preimage(&AlgebraMatrix::identity(ctx.group(), ctx.lifted_size()))
                .unwrap(),
            id
        );
        let mut s = Sampler::new(7, 3);
        for _ in 0..5 {
            let a = s.matrix(ctx.group(), 2);
            let b = ctx.lift(&a).unwrap();
            assert!(b.supported_on(&h));
            assert!(ctx.commutes_with_all_j(&b).unwrap());
            assert_eq!(ctx.recover_preimage(&b).unwrap(), a);
            assert_eq!(ctx.kronecker_form(&a).unwrap(), b);
        }
    }
}

#[test]
fn kronecker_form_needs_normality() {
    let (_, h) = pair("sym:3", "(1 2)").unwrap();
    let ctx = RegularRepContext::new(&h, 1);
    assert!(matches!(
        ctx.kronecker_form(&generic_matrix(&ctx)),
        Err(Error::NotNormal)
    ));
}

#[test]
fn chains_compose() {
    let g = builtin_group("dihedral:4").unwrap();
    let r = Subgroup::parse(&g, "r").unwrap();
    let r2 = Subgroup::parse(&g, "center").unwrap();
    let t = Transversal::left(&r);
    let u = Transversal::left_in(&r, &r2).unwrap();
    let a = generic_matrix(&RegularRepContext::new(&r, 1));
    assert!(compose_check(&t, &u, &a).unwrap());
    let wrong = Transversal::left(&r2);
    assert!(matches!(
        compose_check(&wrong, &u, &a),
        Err(Error::NotASubgroupChain(_))
    ));
}

#[test]
fn determinant_does_not_depend_on_the_transversal() {
    for (key, spec) in [
        ("sym:3", "a3"),
        ("dihedral:4", "r"),
        ("quaternion8", "i"),
        ("sym:3", "(1 2)"),
    ] {
        let (g, h) = pair(key, spec).unwrap();
        let base = Transversal::left(&h);
        // reverse the order and shift each representative inside its coset
        let h1 = h.elements()[h.order() - 1];
        let reps: Vec<usize> = base.reps().iter().rev().map(|&t| g.mul(t, h1)).collect();
        let other = Transversal::from_reps(&Subgroup::whole(&g), &h, reps).unwrap();
        let a = generic_matrix(&RegularRepContext::new(&h, 1));
        let d1 = ncdet(
            &RegularRepContext::with_transversal(base, 1),
            &a,
            DetStrategy::CharacterDft,
        )
        .unwrap();
        let d2 = ncdet(
            &RegularRepContext::with_transversal(other, 1),
            &a,
            DetStrategy::CharacterDft,
        )
        .unwrap();
        assert_eq!(d1, d2, "{key} {spec}");
    }
}

#[test]
fn index_two_characteristic_polynomial() {
    // Phi_A(X) = X^2 - (alpha + t^-1 alpha t) X + alpha t^-1 alpha t - beta t beta t
    for (key, spec) in [("sym:3", "a3"), ("cyclic:4", "2"), ("quaternion8", "i")] {
        let (g, h) = pair(key, spec).unwrap();
        let ctx = RegularRepContext::new(&h, 1);
        let t = ctx.transversal().reps()[1];
        let alpha = AlgebraElement::from_coeffs(&g, h.elements().iter().map(|&e| (e, x(e))));
        let beta = AlgebraElement::from_coeffs(&g, h.elements().iter().map(|&e| (e, x(g.mul(t, e)))));
        let tt = AlgebraElement::basis(&g, t);
        let a = &alpha + &(&tt * &beta);
        assert_eq!(a, AlgebraElement::generic(&g));
        let phi = char_poly(&ctx, &AlgebraMatrix::single(&a), DetStrategy::CharacterDft).unwrap();
        let alpha_t = alpha.conjugate_by(t);
        assert!(phi.is_monic());
        assert_eq!(phi.coefficient(1), &-&(&alpha + &alpha_t));
        assert_eq!(
            phi.coefficient(0),
            &(&(&alpha * &alpha_t) - &(&(&(&beta * &tt) * &beta) * &tt))
        );
    }
}

#[test]
fn characteristic_coefficients_are_central() {
    for (key, spec) in [
        ("sym:3", "a3"),
        ("dihedral:4", "r"),
        ("quaternion8", "i"),
        ("cyclic:4", "2"),
    ] {
        let (_, h) = pair(key, spec).unwrap();
        let ctx = RegularRepContext::new(&h, 1);
        let report = coefficient_centrality_check(&ctx, &generic_matrix(&ctx), DetStrategy::CharacterDft).unwrap();
        assert!(report.passed(), "{key} {spec}: {report:?}");
        assert!(!report.constant_is_det || report.degree.is_multiple_of(2));
    }
}

#[test]
fn twisted_product_identity_for_abelian_groups() {
    for (key, spec) in [("cyclic:4", "2"), ("product:2,2", "(0,1)"), ("cyclic:6", "3")] {
        let (_, h) = pair(key, spec).unwrap();
        for m in [1, 2] {
            let ctx = RegularRepContext::new(&h, m);
            let mut s = Sampler::new(11, 2);
            let a = if m == 1 {
                generic_matrix(&ctx)
            } else {
                s.matrix(ctx.group(), m)
            };
            assert!(
                quotient_character_product_check(&ctx, &a, DetStrategy::CharacterDft).unwrap(),
                "{key} m={m}"
            );
        }
    }
}

#[test]
fn strategies_agree_and_inverses_are_two_sided() {
    let (g, h) = pair("sym:3", "a3").unwrap();
    let ctx = RegularRepContext::new(&h, 2);
    let mut s = Sampler::new(3, 2);
    for _ in 0..10 {
        let a = s.matrix(&g, 2);
        let lifted = ctx.lift(&a).unwrap();
        let d = det_commutative(&lifted, &h, DetStrategy::CrossCheck).unwrap();
        match invert_numeric(&ctx, &a) {
            Ok(b) => {
                assert!((&a * &b).is_identity() && (&b * &a).is_identity());
                assert!(!d.is_zero());
            }
            Err(Error::SingularElement) => {}
            Err(e) => panic!("{e}"),
        }
    }
    let singular = AlgebraMatrix::zeros(&g, 2);
    assert!(matches!(invert_numeric(&ctx, &singular), Err(Error::SingularElement)));
    let symbolic = AlgebraMatrix::scalar(&AlgebraElement::generic(&g), 2);
    assert!(matches!(
        invert_numeric(&ctx, &symbolic),
        Err(Error::SymbolicCoefficientsUnsupported)
    ));
}
