//! Elements of the cyclotomic fields Q(zeta_N).
//!
//! An element is stored as a residue of `Q[x]` modulo the `N`-th cyclotomic
//! polynomial, i.e. as `phi(N)` rational coordinates on the power basis
//! `1, zeta_N, ..., zeta_N^(phi(N)-1)`.
//!
//! Conductors `N = 2 (mod 4)` are never stored: `Q(zeta_N) = Q(zeta_(N/2))`
//! in that case, and keeping only the smaller conductor means plain
//! rationals (including `-1 = zeta_2`) always live at conductor 1.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::upoly;
use super::Rational;
use crate::error::{Error, Result};

static PHI_CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();

/// The `n`-th cyclotomic polynomial as ascending integer coefficients.
///
/// Computed by exact division of `x^n - 1` by the product of `Phi_d` over the
/// proper divisors `d` of `n`. Results are cached.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor: Vec<i128> = cyclotomic_polynomial(d).iter().map(|&c| c as i128).collect();
            num = exact_div_monic(&num, &divisor);
        }
    }
    let phi: Arc<[i64]> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    cache.lock().unwrap().insert(n, Arc::clone(&phi));
    phi
}

fn exact_div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Euler's totient, by trial division.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Smallest conductor describing the same field.
pub fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// An exact element of Q(zeta_N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds an element from coordinates on the power basis of `Q(zeta_n)`.
    ///
    /// The coordinates may have any length; they are reduced modulo `Phi_n`.
    pub fn from_power_basis(n: u32, coords: Vec<Rational>) -> Self {
        assert!(n >= 1);
        if n % 4 == 2 {
            // zeta_n = -zeta_m^((m+1)/2) with m = n/2 odd
            let m = n / 2;
            let mut acc = Cyclotomic::zero();
            for (j, c) in coords.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = &acc + &root_of_unity(n, (j as u64 % n as u64) as u32).scale(&c);
            }
            debug_assert!(acc.conductor == m || acc.conductor == 1 || m.is_multiple_of(acc.conductor));
            return acc;
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce(coords, n),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coordinates on the power basis of `Q(zeta_conductor)`.
    pub fn coords(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Re-expresses `self` in `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn lift_to(&self, m: u32) -> Self {
        let m = canonical_conductor(m);
        let n = self.conductor;
        assert!(m.is_multiple_of(n), "conductor {n} does not divide {m}");
        if m == n {
            return self.clone();
        }
        if let Some(q) = self.as_rational() {
            let mut coeffs = vec![Rational::zero(); totient(m) as usize];
            coeffs[0] = q.clone();
            return Cyclotomic { conductor: m, coeffs };
        }
        let step = (m / n) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce(dense, m),
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = canonical_conductor(lcm(a.conductor, b.conductor));
        (a.lift_to(m), b.lift_to(m))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo `Phi_N`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
            coeffs[0] = q.recip();
            return Ok(Cyclotomic {
                conductor: self.conductor,
                coeffs,
            });
        }
        let modulus = phi_rational(self.conductor);
        let inverse = upoly::inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce(inverse, self.conductor),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coordinates as `"num/den"` strings, used by the JSON rendering.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(rational_string).collect::<Vec<_>>(),
        })
    }

    pub(crate) fn fmt_latex(&self) -> String {
        if let Some(q) = self.as_rational() {
            return latex_rational(q);
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = match i {
                0 => String::new(),
                1 => format!("\\zeta_{{{}}}", self.conductor),
                _ => format!("\\zeta_{{{}}}^{{{}}}", self.conductor, i),
            };
            parts.push(join_coeff(&latex_rational(c), &basis, " "));
        }
        format!("\\left({}\\right)", join_signed(parts))
    }
}

fn join_coeff(c: &str, basis: &str, sep: &str) -> String {
    if basis.is_empty() {
        c.to_string()
    } else if c == "1" {
        basis.to_string()
    } else if c == "-1" {
        format!("-{basis}")
    } else {
        format!("{c}{sep}{basis}")
    }
}

fn join_signed(parts: Vec<String>) -> String {
    let mut out = String::new();
    for (k, p) in parts.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    out
}

pub(crate) fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn phi_rational(n: u32) -> Vec<Rational> {
    cyclotomic_polynomial(n)
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect()
}

/// Reduces dense coordinates modulo `Phi_n` to exactly `phi(n)` entries.
fn reduce(mut dense: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    while dense.len() > deg {
        let top = dense.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = dense.len() - deg;
        for (i, &c) in phi[..deg].iter().enumerate() {
            if c != 0 {
                dense[shift + i] -= &top * BigInt::from(c);
            }
        }
    }
    dense.resize(deg, Rational::zero());
    dense
}

/// `zeta_n^k`, reduced into the canonical conductor.
pub fn root_of_unity(n: u32, k: u32) -> Cyclotomic {
    assert!(n >= 1);
    let k = k % n;
    if n % 4 == 2 {
        let m = n / 2;
        let j = ((k as u64 * (m as u64).div_ceil(2)) % m as u64) as u32;
        let base = root_of_unity(m, j);
        return if k % 2 == 1 { -base } else { base };
    }
    let mut dense = vec![Rational::zero(); k as usize + 1];
    dense[k as usize] = Rational::one();
    Cyclotomic {
        conductor: n,
        coeffs: reduce(dense, n),
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        if self.conductor == 1 {
            let mut out = rhs.clone();
            out.coeffs[0] += &self.coeffs[0];
            return out;
        }
        if rhs.conductor == 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return out;
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor != rhs.conductor {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut dense = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce(dense, self.conductor),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = match i {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, i),
            };
            parts.push(join_coeff(&c.to_string(), &basis, "*"));
        }
        write!(f, "({})", join_signed(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<i64> {
        v.to_vec()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).to_vec(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).to_vec(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4).to_vec(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).to_vec(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).to_vec(), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_basic() {
        assert!(root_of_unity(7, 0).is_one());
        let i = root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
        let sum = &root_of_unity(3, 1) + &root_of_unity(3, 2);
        assert_eq!(sum, Cyclotomic::from_int(-1));
    }

    #[test]
    fn conductor_two_mod_four_is_folded() {
        assert_eq!(root_of_unity(2, 1), Cyclotomic::from_int(-1));
        let z6 = root_of_unity(6, 1);
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6.pow(6), Cyclotomic::one());
        assert_eq!(z6.pow(3), Cyclotomic::from_int(-1));
        assert_eq!(z6.pow(2), root_of_unity(3, 1));
    }

    #[test]
    fn inverse_of_i() {
        let i = root_of_unity(4, 1);
        assert_eq!(i.inv().unwrap(), root_of_unity(4, 3));
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn norm_of_one_plus_zeta3() {
        let a = &Cyclotomic::one() + &root_of_unity(3, 1);
        let b = &Cyclotomic::one() + &root_of_unity(3, 2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn mixed_conductors_lift_to_lcm() {
        let prod = &root_of_unity(4, 1) * &root_of_unity(3, 1);
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, root_of_unity(12, 7));
        assert_eq!(root_of_unity(4, 2), Cyclotomic::from_int(-1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::from_fraction(-1, 2).to_string(), "-1/2");
        let x = &Cyclotomic::one() - &root_of_unity(4, 1).scale(&Rational::from_integer(2.into()));
        assert_eq!(x.to_string(), "(1 - 2*z4)");
    }
}
