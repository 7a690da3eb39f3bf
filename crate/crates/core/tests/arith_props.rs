use dedekind::arith::{cyclotomic_polynomial, root_of_unity, totient, Cyclotomic, MultiPoly, Var};
use proptest::prelude::*;

fn element(n: u32, coeffs: &[i64]) -> Cyclotomic {
    coeffs.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, &c)| {
        &acc + &(&Cyclotomic::from_int(c) * &root_of_unity(n, k as u32))
    })
}

fn field_element() -> impl Strategy<Value = (u32, Vec<i64>)> {
    (1u32..=12).prop_flat_map(|n| (Just(n), prop::collection::vec(-3i64..=3, n as usize)))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn cyclotomic_degree_is_totient() {
    for n in 1..=24u32 {
        let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
        assert_eq!(cyclotomic_polynomial(n).len() - 1, phi, "Phi_{n}");
        assert_eq!(totient(n) as usize, phi);
    }
}

#[test]
fn roots_of_unity_have_the_right_order() {
    for n in 1..=12u32 {
        let z = root_of_unity(n, 1);
        assert!(z.pow(n).is_one());
        for d in 1..n {
            assert!(!z.pow(d).is_one(), "zeta_{n}^{d}");
        }
        // sum of all n-th roots vanishes for n > 1
        let total = (0..n).fold(Cyclotomic::zero(), |acc, k| &acc + &root_of_unity(n, k));
        assert_eq!(total.is_zero(), n > 1);
    }
}

#[test]
fn mixed_conductors_meet_in_the_lcm() {
    let i = root_of_unity(4, 1);
    let w = root_of_unity(3, 1);
    let z12 = &i * &w;
    assert!(z12.pow(12).is_one());
    assert!(!z12.pow(6).is_one() && !z12.pow(4).is_one());
    assert_eq!(&(&i * &i) + &Cyclotomic::one(), Cyclotomic::zero());
}

proptest! {
    #[test]
    fn field_axioms((n, a) in field_element(), b in prop::collection::vec(-3i64..=3, 12), c in prop::collection::vec(-3i64..=3, 12)) {
        let a = element(n, &a);
        let b = element(n, &b[..n as usize]);
        let c = element(n, &c[..n as usize]);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn polynomial_ring_axioms(a in prop::collection::vec(-4i64..=4, 6), b in prop::collection::vec(-4i64..=4, 6), c in prop::collection::vec(-4i64..=4, 6)) {
        let p = |v: &[i64]| poly(v);
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in prop::collection::vec(-4i64..=4, 6), b in prop::collection::vec(-4i64..=4, 6), x in -5i64..=5, y in -5i64..=5) {
        let (a, b) = (poly(&a), poly(&b));
        let at = |p: &MultiPoly| p.eval(&|v: Var| Some(Cyclotomic::from_int(if v.0 == 0 { x } else { y }))).unwrap();
        prop_assert_eq!(at(&(&a * &b)), &at(&a) * &at(&b));
        prop_assert_eq!(at(&(&a + &b)), &at(&a) + &at(&b));
    }
}

/// `c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2`.
fn poly(c: &[i64]) -> MultiPoly {
    let x = MultiPoly::var(Var::group(0));
    let y = MultiPoly::var(Var::group(1));
    let basis = [MultiPoly::one(), x.clone(), y.clone(), &x * &x, &x * &y, &y * &y];
    basis
        .iter()
        .zip(c)
        .fold(MultiPoly::zero(), |acc, (m, &k)| &acc + &(m * &MultiPoly::from_int(k)))
}

#[test]
fn rendering_is_graded_lex() {
    let x0 = MultiPoly::var(Var::group(0));
    let x1 = MultiPoly::var(Var::group(1));
    let p = &(&x0 * &x0) - &(&x1 * &x1);
    assert_eq!(p.to_string(), "x_0^2 - x_1^2");
}
