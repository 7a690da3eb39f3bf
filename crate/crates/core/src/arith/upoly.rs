//! Dense univariate polynomials over Q, ascending coefficients. Only what the
//! cyclotomic inverse needs.

use num_traits::Zero;

use super::Rational;

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dn = den.len() - 1;
    let lead = &den[dn];
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// The inverse of `a` modulo `modulus`, if `gcd(a, modulus)` is constant.
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::from_integer(1.into())];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}
