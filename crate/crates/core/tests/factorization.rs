use dedekind::arith::{MultiPoly, Var};
use dedekind::factor::{
    dedekind_factorization, degree_bound_report, group_determinant, invertibility_criterion, verify_factorization,
    FactorOptions,
};
use dedekind::group::builtin_group;
use dedekind::report::CheckStatus;
use dedekind::suite::pair;
use dedekind::Error;

#[test]
fn theta_of_two_element_group() {
    let g = builtin_group("cyclic:2").unwrap();
    assert_eq!(group_determinant(&g, 10).unwrap().to_string(), "x_0^2 - x_1^2");
}

#[test]
fn theta_of_cyclic_three_is_circulant() {
    // det of the circulant: a^3 + b^3 + c^3 - 3abc
    let g = builtin_group("cyclic:3").unwrap();
    let (a, b, c) = (
        MultiPoly::var(Var::group(0)),
        MultiPoly::var(Var::group(1)),
        MultiPoly::var(Var::group(2)),
    );
    let expected = &(&(&a.pow(3) + &b.pow(3)) + &c.pow(3)) - &(&(&(&a * &b) * &c) * &MultiPoly::from_int(3));
    assert_eq!(group_determinant(&g, 10).unwrap(), expected);
}

#[test]
fn order_cap_is_enforced() {
    let g = builtin_group("sym:4").unwrap();
    assert!(matches!(
        group_determinant(&g, 10),
        Err(Error::OrderCapExceeded { order: 24, cap: 10 })
    ));
}

#[test]
fn sym3_over_alternating_subgroup() {
    let (g, h) = pair("sym:3", "a3").unwrap();
    let result = dedekind_factorization(&g, &h, FactorOptions::default()).unwrap();
    assert_eq!(result.factors_algebra.len(), 3);
    for (_, a) in &result.coefficients {
        assert!(a.is_homogeneous(2));
    }
    let report = verify_factorization(&result);
    assert!(report.checks.iter().all(|c| c.status == CheckStatus::Pass), "{report}");
    // a_h agree on the conjugate rotations
    let g = &result.group;
    let r = h.elements().iter().copied().find(|&x| x != g.identity()).unwrap();
    assert_eq!(result.coefficient(r), result.coefficient(g.inv(r)));
    assert_eq!(result.to_json()["schema"], serde_json::Value::Null);
}

#[test]
fn theta_independent_of_subgroup() {
    let (g, a) = pair("dihedral:4", "r").unwrap();
    let (_, b) = pair("dihedral:4", "center").unwrap();
    let ra = dedekind_factorization(&g, &a, FactorOptions::default()).unwrap();
    let rb = dedekind_factorization(&g, &b, FactorOptions::default()).unwrap();
    assert_eq!(ra.theta(), rb.theta());
    assert_eq!(ra.scalar_product, rb.scalar_product);
}

#[test]
fn invertibility_matches_theta() {
    let g = builtin_group("cyclic:4").unwrap();
    // 1 + t + t^2 + t^3 is a zero divisor
    let singular = invertibility_criterion(&g, &[1, 1, 1, 1]).unwrap();
    assert!(!singular.criterion && singular.agrees());
    let unit = invertibility_criterion(&g, &[2, 1, 0, 0]).unwrap();
    assert!(unit.criterion && unit.agrees());
}

#[test]
fn degree_bounds() {
    for key in ["sym:3", "dihedral:4", "quaternion8"] {
        let r = degree_bound_report(&builtin_group(key).unwrap(), None).unwrap();
        assert!(r.bound_holds() && r.squares_sum_to_order(), "{key}");
        assert_eq!(r.min_index, 2);
    }
    assert!(matches!(
        degree_bound_report(&builtin_group("dihedral:5").unwrap(), None),
        Err(Error::FixtureMissing(_))
    ));
    assert!(matches!(
        degree_bound_report(&builtin_group("sym:4").unwrap(), None),
        Err(Error::OrderCapExceeded { .. })
    ));
}
