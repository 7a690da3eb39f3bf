//! Sparse multivariate polynomials with cyclotomic coefficients.
//!
//! Variables are the group variables `x_g` (one per element index) plus the
//! reserved characteristic-polynomial variable `X`. Terms are kept in a
//! `BTreeMap` under graded lexicographic order, with no zero coefficients,
//! so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::cyclotomic::rational_string;
use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Var {
    /// The characteristic-polynomial variable `X`; it sorts after every `x_g`.
    pub const CHAR: Var = Var(u32::MAX);

    /// The variable `x_g` attached to group element index `g`.
    pub fn group(g: usize) -> Var {
        Var(g as u32)
    }

    pub fn is_char(self) -> bool {
        self == Var::CHAR
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_char() {
            write!(f, "X")
        } else {
            write!(f, "x_{}", self.0)
        }
    }
}

/// A monomial as a sorted list of `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(v, e)],
            degree: e,
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// The monomial with `v` removed, and the exponent it had.
    pub fn split_off(&self, v: Var) -> (Monomial, u32) {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => {
                let mut exps = self.exps.clone();
                let (_, e) = exps.remove(i);
                (
                    Monomial {
                        exps,
                        degree: self.degree - e,
                    },
                    e,
                )
            }
            Err(_) => (self.clone(), 0),
        }
    }

    fn render(&self, names: &dyn Fn(Var) -> String, latex: bool) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| match (e, latex) {
                (1, _) => names(v),
                (_, false) => format!("{}^{}", names(v), e),
                (_, true) => format!("{}^{{{}}}", names(v), e),
            })
            .collect();
        parts.join(if latex { " " } else { "*" })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order with `x_0 > x_1 > ... > X`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in the group variables and `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Cyclotomic::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Cyclotomic::one(), Monomial::var(v))
    }

    pub fn term(c: Cyclotomic, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Cyclotomic)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn constant_term(&self) -> Cyclotomic {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a variable-free polynomial.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        self.is_constant().then(|| self.constant_term())
    }

    fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.scale(q))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a value for every variable. `None` if the assignment misses a variable.
    pub fn eval(&self, assignment: &dyn Fn(Var) -> Option<Cyclotomic>) -> Option<Cyclotomic> {
        let mut acc = Cyclotomic::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.exponents() {
                value = &value * &assignment(v)?.pow(e);
            }
            acc = &acc + &value;
        }
        Some(acc)
    }

    /// Total degree. Fails on the zero polynomial.
    pub fn total_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .next_back()
            .map(Monomial::degree)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Whether every term has total degree `d`. The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficients with respect to `v`: `self = sum_k out[k] * v^k`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Renames variables; `f` must be injective on the variables that occur.
    pub fn map_vars(&self, f: &dyn Fn(Var) -> Var) -> Self {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_exponents(m.exponents().iter().map(|&(v, e)| (f(v), e))),
                c.clone(),
            )
        }))
    }

    /// Text rendering in descending graded-lex order with custom variable names.
    pub fn render_with(&self, names: &dyn Fn(Var) -> String) -> String {
        self.render_impl(names, false)
    }

    /// LaTeX rendering; group variables print as `x_{g}`.
    pub fn to_latex(&self, names: &dyn Fn(Var) -> String) -> String {
        self.render_impl(names, true)
    }

    fn render_impl(&self, names: &dyn Fn(Var) -> String, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let coeff = if latex { c.fmt_latex() } else { c.to_string() };
            let (negative, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            let body = if m.is_one() {
                coeff
            } else if coeff == "1" {
                m.render(names, latex)
            } else if latex {
                format!("{coeff} {}", m.render(names, latex))
            } else {
                format!("{coeff}*{}", m.render(names, latex))
            };
            match (k, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// JSON rendering keyed by dense exponent vectors over `x_0..x_(nvars-1)`,
    /// with the exponent of `X` appended when it occurs.
    pub fn to_json(&self, nvars: usize) -> serde_json::Value {
        let with_char = self.degree_in(Var::CHAR) > 0;
        let mut map = serde_json::Map::new();
        for (m, c) in self.terms.iter().rev() {
            let mut dense = vec![0u32; nvars];
            let mut char_exp = 0;
            for &(v, e) in m.exponents() {
                if v.is_char() {
                    char_exp = e;
                } else if (v.0 as usize) < nvars {
                    dense[v.0 as usize] = e;
                }
            }
            if with_char {
                dense.push(char_exp);
            }
            let key = format!("[{}]", dense.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            map.insert(key, c.to_json());
        }
        serde_json::Value::Object(map)
    }

    /// True when all coefficients are rational integers.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.as_rational().is_some_and(|q| q.is_integer()))
    }

    /// Largest absolute value of a rational coefficient, used in diagnostics.
    pub fn max_abs_rational(&self) -> Option<Rational> {
        self.terms
            .values()
            .filter_map(|c| c.as_rational().map(|q| q.abs()))
            .max()
    }
}

/// Formats the first monomial where two polynomials differ, with both coefficients.
pub fn first_difference(a: &MultiPoly, b: &MultiPoly) -> Option<String> {
    let diff = a - b;
    let (m, _) = diff.terms.iter().next_back()?;
    let render = |p: &MultiPoly| p.coefficient(m).to_string();
    let mono = if m.is_one() {
        "1".to_string()
    } else {
        m.render(&|v| v.to_string(), false)
    };
    Some(format!("monomial {mono}: {} vs {}", render(a), render(b)))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&|v| v.to_string()))
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc: std::collections::HashMap<Monomial, Cyclotomic> =
            std::collections::HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        let sum = slot.get() + &prod;
                        *slot.get_mut() = sum;
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Rational coefficients written as `num/den` strings, for diagnostics.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        rational_string(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::group(i))
    }

    #[test]
    fn add_zero_is_identity() {
        let p = &x(0) + &x(1).scale(&Cyclotomic::from_int(3));
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        assert_eq!(p, &x(0).pow(2) - &x(1).pow(2));
        assert_eq!(p.to_string(), "x_0^2 - x_1^2");
        let value = p
            .eval(&|v| Some(Cyclotomic::from_int(if v.0 == 0 { 2 } else { 1 })))
            .unwrap();
        assert_eq!(value, Cyclotomic::from_int(3));
    }

    #[test]
    fn degrees_and_homogeneity() {
        let one = MultiPoly::one();
        assert_eq!(one.total_degree(), Ok(0));
        assert!(one.is_homogeneous(0));
        let p = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(p.total_degree(), Ok(2));
        assert!(p.is_homogeneous(2));
        let q = &x(0).pow(2) + &x(1);
        assert!((0..5).all(|d| !q.is_homogeneous(d)));
        assert_eq!(MultiPoly::zero().total_degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn graded_lex_rendering() {
        let p = &(&x(0).pow(3) + &x(1).pow(3)) + &x(2).pow(3);
        let p = &p - &(&(&x(0) * &x(1)) * &x(2)).scale(&Cyclotomic::from_int(3));
        assert_eq!(p.to_string(), "x_0^3 - 3*x_0*x_1*x_2 + x_1^3 + x_2^3");
    }

    #[test]
    fn char_variable_sorts_last() {
        let big_x = MultiPoly::var(Var::CHAR);
        let p = &big_x.pow(2) - &(&x(0) * &big_x);
        assert_eq!(p.to_string(), "-x_0*X + X^2");
        let parts = p.coefficients_in(Var::CHAR);
        assert_eq!(parts[&2], MultiPoly::one());
        assert_eq!(parts[&1], -x(0));
    }

    #[test]
    fn json_uses_dense_exponents() {
        let p = &x(0).pow(2) - &x(1).pow(2);
        let j = p.to_json(2);
        assert_eq!(j["[2,0]"]["coeffs"][0], "1/1");
        assert_eq!(j["[0,2]"]["coeffs"][0], "-1/1");
    }
}
