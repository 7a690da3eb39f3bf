//! The group algebra `RG` over `R = Q(zeta)[x_g, X]`, and square matrices over it.
//!
//! Elements of a subgroup algebra `RH` are ordinary [`AlgebraElement`]s over
//! the parent group whose support lies in `H`; [`AlgebraElement::restrict`]
//! is the checked cast.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{Cyclotomic, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::group::{Character, FiniteGroup, Subgroup};

/// `sum_g p_g g` with polynomial coefficients; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, MultiPoly>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        FiniteGroup::same(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        AlgebraElement {
            group: Arc::clone(group),
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity element `1 * e`.
    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    /// The group element `g` itself.
    pub fn basis(group: &Arc<FiniteGroup>, g: usize) -> Self {
        Self::monomial(group, g, MultiPoly::one())
    }

    /// `p * g`.
    pub fn monomial(group: &Arc<FiniteGroup>, g: usize, p: MultiPoly) -> Self {
        let mut a = Self::zero(group);
        a.add_to(g, p);
        a
    }

    /// `p * e`.
    pub fn scalar(group: &Arc<FiniteGroup>, p: MultiPoly) -> Self {
        Self::monomial(group, group.identity(), p)
    }

    /// `sum_g x_g g`.
    pub fn generic(group: &Arc<FiniteGroup>) -> Self {
        Self::from_coeffs(group, group.elements().map(|g| (g, MultiPoly::var(Var::group(g)))))
    }

    pub fn from_coeffs(group: &Arc<FiniteGroup>, coeffs: impl IntoIterator<Item = (usize, MultiPoly)>) -> Self {
        let mut a = Self::zero(group);
        for (g, p) in coeffs {
            a.add_to(g, p);
        }
        a
    }

    /// Integer coefficients, indexed by element.
    pub fn from_ints(group: &Arc<FiniteGroup>, values: &[i64]) -> Self {
        Self::from_coeffs(
            group,
            values.iter().enumerate().map(|(g, &v)| (g, MultiPoly::from_int(v))),
        )
    }

    pub(crate) fn add_to(&mut self, g: usize, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.coeffs.entry(g) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &p;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> MultiPoly {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, g: usize) -> Option<&MultiPoly> {
        self.coeffs.get(&g)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.coeffs.iter().map(|(&g, p)| (g, p))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(self.group.identity()).is_one()
    }

    /// All coefficients are constants (no variables).
    pub fn is_numeric(&self) -> bool {
        self.coeffs.values().all(MultiPoly::is_constant)
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if FiniteGroup::same(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (&g, p) in &other.coeffs {
            out.add_to(g, p.clone());
        }
        Ok(out)
    }

    /// Convolution: the coefficient of `g` in `a*b` is `sum_(uv = g) a_u b_v`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut out = Self::zero(&self.group);
        for (&u, a) in &self.coeffs {
            for (&v, b) in &other.coeffs {
                out.add_to(self.group.mul(u, v), a * b);
            }
        }
        Ok(out)
    }

    /// `p * self` for a polynomial `p` (central in `RG`).
    pub fn scale(&self, p: &MultiPoly) -> Self {
        Self::from_coeffs(&self.group, self.coeffs.iter().map(|(&g, q)| (g, p * q)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.group), |acc, _| &acc * self)
    }

    /// The augmentation `sum_g p_g`, the algebra map `RG -> R` sending each `g` to 1.
    pub fn augmentation(&self) -> MultiPoly {
        self.coeffs.values().fold(MultiPoly::zero(), |acc, p| &acc + p)
    }

    /// Central by the commutator test: `a g = g a` for every group element `g`.
    pub fn is_central(&self) -> bool {
        self.group.elements().all(|g| {
            let basis = Self::basis(&self.group, g);
            &basis * self == self * &basis
        })
    }

    /// Central by the class-function test: coefficients constant on conjugacy classes.
    pub fn is_class_function(&self) -> bool {
        self.group.conjugacy_classes().iter().all(|class| {
            let first = self.coeff(class[0]);
            class[1..].iter().all(|&h| self.coeff(h) == first)
        })
    }

    /// `g^-1 a g`.
    pub fn conjugate_by(&self, g: usize) -> Self {
        Self::from_coeffs(
            &self.group,
            self.coeffs
                .iter()
                .map(|(&h, p)| (self.group.conjugate(h, g), p.clone())),
        )
    }

    pub fn supported_on(&self, h: &Subgroup) -> bool {
        self.coeffs.keys().all(|&g| h.contains(g))
    }

    /// Views `self` as an element of `RH`. Fails if the support leaves `H`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        if !FiniteGroup::same(&self.group, h.parent()) {
            return Err(Error::GroupMismatch);
        }
        if self.supported_on(h) {
            Ok(self.clone())
        } else {
            Err(Error::NotSupportedOnSubgroup)
        }
    }

    /// `sum_g chi(g) p_g g`. Elements outside the character's subgroup are rejected.
    pub fn twist(&self, chi: &Character) -> Result<Self> {
        if !self.supported_on(chi.subgroup()) {
            return Err(Error::NotSupportedOnSubgroup);
        }
        Ok(Self::from_coeffs(
            &self.group,
            self.coeffs.iter().map(|(&g, p)| (g, p.scale(chi.value(g)))),
        ))
    }

    /// `sum_g chi(g) p_g` for `chi` a character of a subgroup containing the support.
    pub fn evaluate_character(&self, chi: &Character) -> MultiPoly {
        self.coeffs
            .iter()
            .fold(MultiPoly::zero(), |acc, (&g, p)| &acc + &p.scale(chi.value(g)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Self::from_coeffs(&self.group, self.coeffs.iter().map(|(&g, p)| (g, f(p))))
    }

    /// Substitutes values into every coefficient.
    pub fn eval(&self, assignment: &dyn Fn(Var) -> Option<Cyclotomic>) -> Option<Self> {
        let mut out = Self::zero(&self.group);
        for (&g, p) in &self.coeffs {
            out.add_to(g, MultiPoly::constant(p.eval(assignment)?));
        }
        Some(out)
    }

    /// `(p)·g + (q)·g' + ...` in element-index order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(&g, p)| {
                if p.is_one() {
                    self.group.name(g).to_string()
                } else {
                    format!("({p})·{}", self.group.name(g))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(&g, p)| {
                let name = latex_element(self.group.name(g));
                format!("\\left({}\\right) {name}", p.to_latex(&latex_var))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON object keyed by element name; values are polynomial JSON renderings.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.group.order();
        let mut map = serde_json::Map::new();
        for (&g, p) in &self.coeffs {
            map.insert(
                self.group.name(g).to_string(),
                serde_json::json!({"text": p.to_string(), "terms": p.to_json(n)}),
            );
        }
        serde_json::Value::Object(map)
    }
}

pub fn latex_var(v: Var) -> String {
    if v.is_char() {
        "X".to_string()
    } else {
        format!("x_{{{}}}", v.0)
    }
}

fn latex_element(name: &str) -> String {
    format!("\\mathrm{{{}}}", name.replace('^', "\\^{}"))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("group algebra elements from different groups")
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("group algebra elements from different groups")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.map_coeffs(|p| -p)
    }
}

/// A square matrix over `RG`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix {
    group: Arc<FiniteGroup>,
    size: usize,
    entries: Vec<AlgebraElement>,
}

impl AlgebraMatrix {
    pub fn zeros(group: &Arc<FiniteGroup>, size: usize) -> Self {
        AlgebraMatrix {
            group: Arc::clone(group),
            size,
            entries: vec![AlgebraElement::zero(group); size * size],
        }
    }

    pub fn identity(group: &Arc<FiniteGroup>, size: usize) -> Self {
        Self::scalar(&AlgebraElement::one(group), size)
    }

    /// `a * I`.
    pub fn scalar(a: &AlgebraElement, size: usize) -> Self {
        let mut m = Self::zeros(a.group(), size);
        for i in 0..size {
            m.set(i, i, a.clone());
        }
        m
    }

    pub fn from_fn(group: &Arc<FiniteGroup>, size: usize, mut f: impl FnMut(usize, usize) -> AlgebraElement) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        AlgebraMatrix {
            group: Arc::clone(group),
            size,
            entries,
        }
    }

    pub fn from_rows(group: &Arc<FiniteGroup>, rows: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::SizeMismatch(format!(
                    "row of length {} in a {size}x{size} matrix",
                    row.len()
                )));
            }
            for a in row {
                if !FiniteGroup::same(group, a.group()) {
                    return Err(Error::GroupMismatch);
                }
                entries.push(a);
            }
        }
        Ok(AlgebraMatrix {
            group: Arc::clone(group),
            size,
            entries,
        })
    }

    /// The 1x1 matrix `[a]`.
    pub fn single(a: &AlgebraElement) -> Self {
        Self::scalar(a, 1)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: AlgebraElement) {
        self.entries[i * self.size + j] = a;
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.group, self.size)
    }

    pub fn is_numeric(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_numeric)
    }

    pub fn supported_on(&self, h: &Subgroup) -> bool {
        self.entries.iter().all(|a| a.supported_on(h))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !FiniteGroup::same(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.size != other.size {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.size, other.size)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(AlgebraMatrix {
            group: Arc::clone(&self.group),
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// Matrix product; entry products keep their order (`RG` is noncommutative).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.size;
        Ok(Self::from_fn(&self.group, n, |i, j| {
            let mut acc = AlgebraElement::zero(&self.group);
            for k in 0..n {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn map(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> Self {
        AlgebraMatrix {
            group: Arc::clone(&self.group),
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `a * M`, multiplying every entry on the left.
    pub fn left_scale(&self, a: &AlgebraElement) -> Self {
        self.map(|x| a * x)
    }

    /// `M * a`, multiplying every entry on the right.
    pub fn right_scale(&self, a: &AlgebraElement) -> Self {
        self.map(|x| x * a)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(&self.group, self.size), |acc, _| &acc * self)
    }

    /// `g^-1 M g`, entrywise.
    pub fn conjugate_by(&self, g: usize) -> Self {
        self.map(|a| a.conjugate_by(g))
    }

    pub fn trace(&self) -> AlgebraElement {
        (0..self.size).fold(AlgebraElement::zero(&self.group), |acc, i| &acc + self.get(i, i))
    }

    /// The `(i, j)` block of size `m`, 0-based.
    pub fn block(&self, i: usize, j: usize, m: usize) -> Self {
        Self::from_fn(&self.group, m, |a, b| self.get(i * m + a, j * m + b).clone())
    }

    pub fn set_block(&mut self, i: usize, j: usize, block: &AlgebraMatrix) {
        let m = block.size;
        for a in 0..m {
            for b in 0..m {
                self.set(i * m + a, j * m + b, block.get(a, b).clone());
            }
        }
    }

    /// `K (x) M` for an integer matrix `K`.
    pub fn kronecker(coeffs: &[Vec<i64>], m: &AlgebraMatrix) -> Self {
        let r = coeffs.len();
        let s = m.size;
        Self::from_fn(&m.group, r * s, |i, j| {
            let k = coeffs[i / s][j / s];
            if k == 0 {
                AlgebraElement::zero(&m.group)
            } else {
                m.get(i % s, j % s).scale(&MultiPoly::from_int(k))
            }
        })
    }

    pub fn twist(&self, chi: &Character) -> Result<Self> {
        let entries = self.entries.iter().map(|a| a.twist(chi)).collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMatrix {
            group: Arc::clone(&self.group),
            size: self.size,
            entries,
        })
    }

    /// First entry where two matrices differ, as `(row, col, element, monomial diff)`.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        for i in 0..self.size.min(other.size) {
            for j in 0..self.size.min(other.size) {
                let (a, b) = (self.get(i, j), other.get(i, j));
                if a != b {
                    let g = a
                        .support()
                        .chain(b.support())
                        .find(|&g| a.coeff(g) != b.coeff(g))
                        .unwrap();
                    let detail = crate::arith::poly::first_difference(&a.coeff(g), &b.coeff(g)).unwrap_or_default();
                    return Some(format!("entry ({i}, {j}), element {}: {detail}", self.group.name(g)));
                }
            }
        }
        (self.size != other.size).then(|| format!("size {} vs {}", self.size, other.size))
    }

    /// Text layout with `|` and `-` separators between blocks of size `m`.
    pub fn render_blocks(&self, m: usize) -> String {
        let cells: Vec<String> = self.entries.iter().map(AlgebraElement::render).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.size {
            if i > 0 && m > 0 && i % m == 0 {
                let blocks = self.size / m.max(1);
                let seg = "-".repeat((width + 2) * m);
                out.push_str(&vec![seg; blocks].join("+"));
                out.push('\n');
            }
            for j in 0..self.size {
                if j > 0 && m > 0 && j % m == 0 {
                    out.push('|');
                }
                let cell = &cells[i * self.size + j];
                let pad = width - cell.chars().count();
                out.push(' ');
                out.push_str(&" ".repeat(pad));
                out.push_str(cell);
                out.push(' ');
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).to_json()).collect())
            .collect();
        serde_json::json!(rows)
    }
}

impl<'a> Mul<&'a AlgebraMatrix> for &'a AlgebraMatrix {
    type Output = AlgebraMatrix;
    fn mul(self, rhs: &'a AlgebraMatrix) -> AlgebraMatrix {
        self.try_mul(rhs).expect("incompatible matrices")
    }
}

impl<'a> Add<&'a AlgebraMatrix> for &'a AlgebraMatrix {
    type Output = AlgebraMatrix;
    fn add(self, rhs: &'a AlgebraMatrix) -> AlgebraMatrix {
        self.try_add(rhs).expect("incompatible matrices")
    }
}

impl<'a> Sub<&'a AlgebraMatrix> for &'a AlgebraMatrix {
    type Output = AlgebraMatrix;
    fn sub(self, rhs: &'a AlgebraMatrix) -> AlgebraMatrix {
        self.try_sub(rhs).expect("incompatible matrices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::group(i))
    }

    #[test]
    fn generic_element_support() {
        let triv = builtin_group("cyclic:1").unwrap();
        let g = AlgebraElement::generic(&triv);
        assert_eq!(g, AlgebraElement::monomial(&triv, 0, x(0)));
        let s3 = builtin_group("sym:3").unwrap();
        assert_eq!(AlgebraElement::generic(&s3).support().count(), 6);
    }

    #[test]
    fn z2_square_by_convolution() {
        let z2 = builtin_group("cyclic:2").unwrap();
        let a = AlgebraElement::generic(&z2);
        let sq = &a * &a;
        assert_eq!(sq.coeff(0), &x(0).pow(2) + &x(1).pow(2));
        assert_eq!(sq.coeff(1), (&x(0) * &x(1)).scale(&Cyclotomic::from_int(2)));
        assert_eq!(&AlgebraElement::one(&z2) * &a, a);
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let z2 = builtin_group("cyclic:2").unwrap();
        let z3 = builtin_group("cyclic:3").unwrap();
        let a = AlgebraElement::one(&z2);
        let b = AlgebraElement::one(&z3);
        assert_eq!(a.try_mul(&b), Err(Error::GroupMismatch));
        let ma = AlgebraMatrix::identity(&z2, 2);
        assert!(matches!(
            ma.try_mul(&AlgebraMatrix::identity(&z2, 3)),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn augmentation_of_basics() {
        let s3 = builtin_group("sym:3").unwrap();
        assert!(AlgebraElement::basis(&s3, 4).augmentation().is_one());
        let total = (0..6).fold(MultiPoly::zero(), |acc, g| &acc + &x(g));
        assert_eq!(AlgebraElement::generic(&s3).augmentation(), total);
    }

    #[test]
    fn centrality_in_s3() {
        let s3 = builtin_group("sym:3").unwrap();
        assert!(AlgebraElement::one(&s3).is_central());
        // transpositions are 1, 2, 5
        let class_sum = AlgebraElement::from_ints(&s3, &[0, 1, 1, 0, 0, 1]);
        assert!(class_sum.is_central());
        assert!(class_sum.is_class_function());
        let single = AlgebraElement::basis(&s3, 1);
        assert!(!single.is_central());
        assert!(!single.is_class_function());
        assert_eq!(class_sum.conjugate_by(3), class_sum);
    }

    #[test]
    fn restriction_to_subgroup() {
        let z4 = builtin_group("cyclic:4").unwrap();
        let h = Subgroup::generated(&z4, &[2]);
        let a = AlgebraElement::from_coeffs(&z4, [(0, x(0)), (2, x(2))]);
        assert!(a.restrict(&h).is_ok());
        let b = &a + &AlgebraElement::monomial(&z4, 1, x(1));
        assert_eq!(b.restrict(&h), Err(Error::NotSupportedOnSubgroup));
    }

    #[test]
    fn matrix_identity_and_single() {
        let s3 = builtin_group("sym:3").unwrap();
        let a = AlgebraElement::generic(&s3);
        let m = AlgebraMatrix::from_fn(&s3, 2, |i, j| a.conjugate_by(i + 2 * j));
        assert_eq!(&m * &AlgebraMatrix::identity(&s3, 2), m);
        let single = &AlgebraMatrix::single(&a) * &AlgebraMatrix::single(&a);
        assert_eq!(single.get(0, 0), &(&a * &a));
    }

    #[test]
    fn kronecker_layout() {
        let z2 = builtin_group("cyclic:2").unwrap();
        let m = AlgebraMatrix::scalar(&AlgebraElement::basis(&z2, 1), 1);
        let k = AlgebraMatrix::kronecker(&[vec![0, 1], vec![1, 0]], &m);
        assert!(k.get(0, 0).is_zero());
        assert_eq!(k.get(0, 1), &AlgebraElement::basis(&z2, 1));
    }
}
