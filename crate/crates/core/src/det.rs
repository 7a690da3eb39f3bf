//! Determinants over the commutative ring `RH` (`H` abelian), the
//! noncommutative determinant `Det = det o L_T`, characteristic polynomials
//! and numeric inversion.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::arith::{Cyclotomic, MultiPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::group::{characters, Character, Subgroup};
use crate::regrep::RegularRepContext;

/// Leibniz expansion is refused above this size.
pub const LEIBNIZ_MAX: usize = 8;

/// The operations the division-free determinant kernels need.
pub trait CommRing: Clone + PartialEq + Send + Sync {
    fn ring_zero(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl CommRing for MultiPoly {
    fn ring_zero(&self) -> Self {
        MultiPoly::zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl CommRing for Cyclotomic {
    fn ring_zero(&self) -> Self {
        Cyclotomic::zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Commutative only on elements supported on a common abelian subgroup.
impl CommRing for AlgebraElement {
    fn ring_zero(&self) -> Self {
        AlgebraElement::zero(self.group())
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// `sum_sigma sgn(sigma) prod_i M[sigma(i)][i]`, by Heap's algorithm.
pub fn leibniz<R: CommRing>(rows: &[Vec<R>], one: &R) -> Result<R> {
    let n = rows.len();
    if n > LEIBNIZ_MAX {
        return Err(Error::SizeMismatch(format!(
            "Leibniz expansion is limited to {LEIBNIZ_MAX}x{LEIBNIZ_MAX}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut sign_positive = true;
    let product = |perm: &[usize]| -> R {
        let mut acc = one.clone();
        for (col, &row) in perm.iter().enumerate() {
            let entry = &rows[row][col];
            if entry.ring_is_zero() {
                return one.ring_zero();
            }
            acc = acc.ring_mul(entry);
        }
        acc
    };
    let mut total = product(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            sign_positive = !sign_positive;
            let term = product(&perm);
            total = if sign_positive {
                total.ring_add(&term)
            } else {
                total.ring_sub(&term)
            };
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

/// Laplace expansion along the last of the first `k` columns, memoized over
/// row subsets: `D[S] = sum_(i in S) (-1)^(pos(i) + k - 1) M[i][k-1] D[S \ i]`.
pub fn minor_expansion<R: CommRing>(rows: &[Vec<R>], one: &R) -> R {
    let n = rows.len();
    if n == 0 {
        return one.clone();
    }
    let zero = one.ring_zero();
    let mut memo: Vec<R> = vec![zero.clone(); 1 << n];
    memo[0] = one.clone();
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let col = k - 1;
        let mut acc = zero.clone();
        let mut pos = 0;
        for (i, row) in rows.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let entry = &row[col];
            let minor = &memo[mask ^ (1 << i)];
            if !entry.ring_is_zero() && !minor.ring_is_zero() {
                let term = entry.ring_mul(minor);
                acc = if (pos + col).is_multiple_of(2) {
                    acc.ring_add(&term)
                } else {
                    acc.ring_sub(&term)
                };
            }
            pos += 1;
        }
        memo[mask] = acc;
    }
    memo.pop().unwrap()
}

/// Inverse over `Q(zeta)` by Gauss-Jordan elimination; `None` if singular.
pub fn invert_field_matrix(rows: &[Vec<Cyclotomic>]) -> Option<Vec<Vec<Cyclotomic>>> {
    let n = rows.len();
    let mut a: Vec<Vec<Cyclotomic>> = rows.to_vec();
    let mut inv: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv().ok()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] = &a[r][j] - &da;
                let di = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - &di;
            }
        }
    }
    Some(inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetStrategy {
    Leibniz,
    MinorExpansion,
    #[default]
    CharacterDft,
    /// Every applicable strategy, failing on disagreement.
    CrossCheck,
}

impl DetStrategy {
    pub const SINGLE: [DetStrategy; 3] = [
        DetStrategy::Leibniz,
        DetStrategy::MinorExpansion,
        DetStrategy::CharacterDft,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetStrategy::Leibniz => "leibniz",
            DetStrategy::MinorExpansion => "minor",
            DetStrategy::CharacterDft => "dft",
            DetStrategy::CrossCheck => "cross-check",
        }
    }
}

impl fmt::Display for DetStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leibniz" => Ok(DetStrategy::Leibniz),
            "minor" | "minor-expansion" => Ok(DetStrategy::MinorExpansion),
            "dft" | "character-dft" => Ok(DetStrategy::CharacterDft),
            "cross-check" => Ok(DetStrategy::CrossCheck),
            _ => Err(Error::Parse(format!("unknown determinant strategy `{s}`"))),
        }
    }
}

fn rows_of(m: &AlgebraMatrix) -> Vec<Vec<AlgebraElement>> {
    (0..m.size())
        .map(|i| (0..m.size()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

/// Determinant of a matrix whose entries lie in `RH` for an abelian `H`.
pub fn det_commutative(m: &AlgebraMatrix, h: &Subgroup, strategy: DetStrategy) -> Result<AlgebraElement> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !m.supported_on(h) {
        return Err(Error::NotSupportedOnSubgroup);
    }
    let one = AlgebraElement::one(m.group());
    match strategy {
        DetStrategy::Leibniz => leibniz(&rows_of(m), &one),
        DetStrategy::MinorExpansion => Ok(minor_expansion(&rows_of(m), &one)),
        DetStrategy::CharacterDft => Ok(det_by_characters(m, h, &characters(h)?)),
        DetStrategy::CrossCheck => {
            let mut results = Vec::new();
            for s in DetStrategy::SINGLE {
                if s == DetStrategy::Leibniz && m.size() > LEIBNIZ_MAX {
                    continue;
                }
                results.push((s, det_commutative(m, h, s)?));
            }
            let (first_strategy, first) = &results[0];
            for (s, value) in &results[1..] {
                if value != first {
                    return Err(Error::StrategyMismatch(format!(
                        "{first_strategy} gives {first}, {s} gives {value}"
                    )));
                }
            }
            Ok(results.swap_remove(0).1)
        }
    }
}

/// `det_chi = det(chi(M))` for each character; then
/// `coeff(h) = |H|^-1 sum_chi chi(h^-1) det_chi`.
fn det_by_characters(m: &AlgebraMatrix, h: &Subgroup, chars: &[Character]) -> AlgebraElement {
    let images: Vec<MultiPoly> = chars
        .par_iter()
        .map(|chi| {
            let rows: Vec<Vec<MultiPoly>> = (0..m.size())
                .map(|i| (0..m.size()).map(|j| m.get(i, j).evaluate_character(chi)).collect())
                .collect();
            minor_expansion(&rows, &MultiPoly::one())
        })
        .collect();
    fourier_inverse(h, chars, &images)
}

/// Recovers `sum_h c_h h` from its character values `sum_h chi(h) c_h`.
pub fn fourier_inverse(h: &Subgroup, chars: &[Character], images: &[MultiPoly]) -> AlgebraElement {
    let group = h.parent();
    let scale = Rational::new(One::one(), (h.order() as i64).into());
    AlgebraElement::from_coeffs(
        group,
        h.elements().iter().map(|&x| {
            let x_inv = group.inv(x);
            let sum = chars.iter().zip(images).fold(MultiPoly::zero(), |acc, (chi, image)| {
                &acc + &image.scale(chi.value(x_inv))
            });
            (x, sum.scale_rational(&scale))
        }),
    )
}

/// `Det(A) = det(L_T(A))` in `RH`.
pub fn ncdet(ctx: &RegularRepContext, a: &AlgebraMatrix, strategy: DetStrategy) -> Result<AlgebraElement> {
    if !ctx.subgroup().is_abelian() {
        return Err(Error::NotAbelian);
    }
    det_commutative(&ctx.lift(a)?, ctx.subgroup(), strategy)
}

/// `det(L(d))` for `d` in `RH` viewed over `{e}`: the product of all character values of `d`.
pub fn reduce_to_scalar(d: &AlgebraElement, h: &Subgroup) -> Result<MultiPoly> {
    if !d.supported_on(h) {
        return Err(Error::NotSupportedOnSubgroup);
    }
    let chars = characters(h)?;
    Ok(chars
        .par_iter()
        .map(|chi| d.evaluate_character(chi))
        .collect::<Vec<_>>()
        .iter()
        .fold(MultiPoly::one(), |acc, p| &acc * p))
}

/// `A` is invertible iff `Det(A)` is a unit of `RH`, iff its reduction to `R` is a nonzero constant.
pub fn is_invertible(ctx: &RegularRepContext, a: &AlgebraMatrix) -> Result<bool> {
    let d = ncdet(ctx, a, DetStrategy::CharacterDft)?;
    let scalar = reduce_to_scalar(&d, ctx.subgroup())?;
    Ok(scalar.as_constant().is_some_and(|c| !c.is_zero()))
}

/// Inverts `L_T(A)` one character at a time, then recovers the preimage.
pub fn invert_numeric(ctx: &RegularRepContext, a: &AlgebraMatrix) -> Result<AlgebraMatrix> {
    if !a.is_numeric() {
        return Err(Error::SymbolicCoefficientsUnsupported);
    }
    let h = ctx.subgroup();
    let chars = characters(h)?;
    let lifted = ctx.lift(a)?;
    let n = lifted.size();
    let inverses: Vec<Option<Vec<Vec<Cyclotomic>>>> = chars
        .par_iter()
        .map(|chi| {
            let rows: Vec<Vec<Cyclotomic>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            lifted
                                .get(i, j)
                                .evaluate_character(chi)
                                .as_constant()
                                .expect("numeric entries")
                        })
                        .collect()
                })
                .collect();
            invert_field_matrix(&rows)
        })
        .collect();
    let inverses: Vec<Vec<Vec<Cyclotomic>>> = inverses
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(Error::SingularElement)?;
    let group = ctx.group();
    let lifted_inverse = AlgebraMatrix::from_fn(group, n, |i, j| {
        let images: Vec<MultiPoly> = inverses
            .iter()
            .map(|inv| MultiPoly::constant(inv[i][j].clone()))
            .collect();
        fourier_inverse(h, &chars, &images)
    });
    ctx.recover_preimage(&lifted_inverse)
}

/// `Phi_A(X) = Det(X I - A) = sum_k a_k X^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<AlgebraElement>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `a_k`, the coefficient of `X^k`.
    pub fn coefficient(&self, k: usize) -> &AlgebraElement {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(AlgebraElement::is_one)
    }

    /// `sum_k a_k A^k`, coefficients multiplied on the left.
    pub fn evaluate(&self, a: &AlgebraMatrix) -> AlgebraMatrix {
        let group = a.group();
        let mut power = AlgebraMatrix::identity(group, a.size());
        let mut acc = AlgebraMatrix::zeros(group, a.size());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = &power * a;
            }
            if !c.is_zero() {
                acc = &acc + &power.left_scale(c);
            }
        }
        acc
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let x = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            parts.push(match (c.is_one(), k) {
                (true, 0) => "1".to_string(),
                (true, _) => x,
                (false, 0) => format!("[{c}]"),
                (false, _) => format!("[{c}]{x}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn char_poly(ctx: &RegularRepContext, a: &AlgebraMatrix, strategy: DetStrategy) -> Result<CharPoly> {
    if !ctx.subgroup().is_abelian() {
        return Err(Error::NotAbelian);
    }
    let lifted = ctx.lift(a)?;
    let group = ctx.group();
    let x = AlgebraElement::scalar(group, MultiPoly::var(Var::CHAR));
    let shifted = &AlgebraMatrix::scalar(&x, lifted.size()) - &lifted;
    let d = det_commutative(&shifted, ctx.subgroup(), strategy)?;
    let n = lifted.size();
    let mut coeffs = vec![AlgebraElement::zero(group); n + 1];
    for (h, p) in d.terms() {
        for (k, part) in p.coefficients_in(Var::CHAR) {
            coeffs[k as usize].add_to(h, part);
        }
    }
    Ok(CharPoly { coeffs })
}

/// `Phi_A(A)`; zero by Cayley-Hamilton.
pub fn cayley_hamilton_residual(
    ctx: &RegularRepContext,
    a: &AlgebraMatrix,
    strategy: DetStrategy,
) -> Result<AlgebraMatrix> {
    Ok(char_poly(ctx, a, strategy)?.evaluate(a))
}

fn require_normal(ctx: &RegularRepContext) -> Result<()> {
    if ctx.subgroup().is_normal_in(ctx.ambient()) {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// `Phi_(g^-1 A g) = Phi_A`.
pub fn char_poly_conjugation_check(
    ctx: &RegularRepContext,
    a: &AlgebraMatrix,
    g: usize,
    strategy: DetStrategy,
) -> Result<bool> {
    require_normal(ctx)?;
    Ok(char_poly(ctx, &a.conjugate_by(g), strategy)? == char_poly(ctx, a, strategy)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientStatus {
    pub power: usize,
    pub central: bool,
    pub supported_on_subgroup: bool,
}

/// Centrality of the char-poly coefficients and how the constant and trace
/// coefficients relate to `Det(A)` and `Tr(L(A))`, with and without signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityReport {
    pub degree: usize,
    pub coefficients: Vec<CoefficientStatus>,
    /// `a_0 = (-1)^n Det(A)`.
    pub constant_is_signed_det: bool,
    /// `a_0 = Det(A)`.
    pub constant_is_det: bool,
    /// `a_(n-1) = -Tr(L(A))`.
    pub trace_is_signed_trace: bool,
    /// `a_(n-1) = Tr(L(A))`.
    pub trace_is_trace: bool,
}

impl CentralityReport {
    pub fn all_central(&self) -> bool {
        self.coefficients.iter().all(|c| c.central && c.supported_on_subgroup)
    }

    /// Centrality plus the signed constant and trace identities.
    pub fn passed(&self) -> bool {
        self.all_central() && self.constant_is_signed_det && self.trace_is_signed_trace
    }
}

pub fn coefficient_centrality_check(
    ctx: &RegularRepContext,
    a: &AlgebraMatrix,
    strategy: DetStrategy,
) -> Result<CentralityReport> {
    require_normal(ctx)?;
    let phi = char_poly(ctx, a, strategy)?;
    let det = ncdet(ctx, a, strategy)?;
    let trace = ctx.lift(a)?.trace();
    let n = phi.degree();
    let coefficients = phi
        .coefficients()
        .iter()
        .enumerate()
        .map(|(power, c)| CoefficientStatus {
            power,
            central: c.is_central(),
            supported_on_subgroup: c.supported_on(ctx.subgroup()),
        })
        .collect();
    let signed_det = if n % 2 == 0 { det.clone() } else { -&det };
    let (constant_is_signed_det, constant_is_det) = (phi.coefficient(0) == &signed_det, phi.coefficient(0) == &det);
    let (trace_is_signed_trace, trace_is_trace) = if n == 0 {
        (true, true)
    } else {
        let c = phi.coefficient(n - 1);
        (c == &-&trace, c == &trace)
    };
    Ok(CentralityReport {
        degree: n,
        coefficients,
        constant_is_signed_det,
        constant_is_det,
        trace_is_signed_trace,
        trace_is_trace,
    })
}

/// Multiplies the coefficient of `g` in every entry by `chi(g)`. Requires an abelian group.
pub fn character_twist(chi: &Character, a: &AlgebraMatrix) -> Result<AlgebraMatrix> {
    if !a.group().is_abelian() {
        return Err(Error::NotAbelian);
    }
    a.twist(chi)
}

/// For abelian `G`: `Det(A) = prod_(chi in (G/H)^) det(F_chi(A))`, with the
/// characters of `G/H` pulled back to `G`.
pub fn quotient_character_product_check(
    ctx: &RegularRepContext,
    a: &AlgebraMatrix,
    strategy: DetStrategy,
) -> Result<bool> {
    let group = ctx.group();
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let whole = Subgroup::whole(group);
    let (quotient, projection) = ctx.subgroup().quotient()?;
    let lhs = ncdet(ctx, a, strategy)?;
    let mut rhs = AlgebraElement::one(group);
    for chi in characters(&Subgroup::whole(&quotient))? {
        let pulled = chi.pullback(group, &projection);
        rhs = &rhs * &det_commutative(&character_twist(&pulled, a)?, &whole, strategy)?;
    }
    Ok(lhs == rhs)
}
