//! Conjugation on `RG` for an abelian subgroup `H` of index 2, and the
//! resulting inverse formula for 2x2 matrices over `RG`.
//!
//! With `T = {e, t}` every `A` is uniquely `alpha + t beta` (`alpha`, `beta`
//! in `RH`), and `conj(A) = t^-1 alpha t - t beta`.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::arith::{MultiPoly, Var};
use crate::det::{char_poly, invert_numeric, DetStrategy};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, Transversal};
use crate::regrep::RegularRepContext;
use crate::report::{Check, Report};

#[derive(Clone, Debug)]
pub struct Index2Context {
    transversal: Transversal,
    t: usize,
}

/// `A = alpha + t beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub alpha: AlgebraElement,
    pub beta: AlgebraElement,
}

impl Index2Context {
    /// Uses the greedy transversal `{e, t}`.
    pub fn new(subgroup: &Subgroup) -> Result<Self> {
        Self::with_transversal(Transversal::left(subgroup))
    }

    pub fn with_transversal(transversal: Transversal) -> Result<Self> {
        if !transversal.subgroup().is_abelian() {
            return Err(Error::NotAbelian);
        }
        if transversal.len() != 2 || transversal.ambient().order() != transversal.group().order() {
            return Err(Error::InvalidTransversal(format!(
                "conjugation needs a subgroup of index 2, got index {}",
                transversal.len()
            )));
        }
        let group = transversal.group();
        let t = transversal
            .reps()
            .iter()
            .copied()
            .find(|&x| !transversal.subgroup().contains(x))
            .expect("an index-2 transversal has a representative outside the subgroup");
        debug_assert!(transversal.subgroup().contains(group.mul(t, t)));
        Ok(Index2Context { transversal, t })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.transversal.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.transversal.subgroup()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    fn basis(&self, g: usize) -> AlgebraElement {
        AlgebraElement::basis(self.group(), g)
    }

    pub fn decompose(&self, a: &AlgebraElement) -> Decomposition {
        let group = self.group();
        let h = self.subgroup();
        let t_inv = group.inv(self.t);
        let mut alpha = AlgebraElement::zero(group);
        let mut beta = AlgebraElement::zero(group);
        for (g, p) in a.terms() {
            if h.contains(g) {
                alpha.add_to(g, p.clone());
            } else {
                beta.add_to(group.mul(t_inv, g), p.clone());
            }
        }
        Decomposition { alpha, beta }
    }

    pub fn compose(&self, d: &Decomposition) -> AlgebraElement {
        &d.alpha + &(&self.basis(self.t) * &d.beta)
    }

    /// `t^-1 alpha t - t beta`.
    pub fn conjugate(&self, a: &AlgebraElement) -> AlgebraElement {
        let d = self.decompose(a);
        let t = self.basis(self.t);
        &d.alpha.conjugate_by(self.t) - &(&t * &d.beta)
    }

    pub fn conjugate_matrix(&self, m: &AlgebraMatrix) -> AlgebraMatrix {
        m.map(|a| self.conjugate(a))
    }

    fn norm_context(&self) -> RegularRepContext {
        RegularRepContext::with_transversal(self.transversal.clone(), 1)
    }
}

/// Conjugation laws for the pair `(A, B)`; each law is its own check so a
/// single failing law is reported without hiding the rest.
///
/// The fixed-point law is probed on `A`, `B` and on every conjugacy-class
/// sum of `G` (a spanning set of the centre).
pub fn conjugation_laws_check(
    ctx: &Index2Context,
    a: &AlgebraElement,
    b: &AlgebraElement,
    strategy: DetStrategy,
) -> Result<Report> {
    let group = ctx.group();
    let mut report = Report::new(format!(
        "conjugation over {} in {}",
        ctx.subgroup().display(),
        group.label()
    ));
    let ca = ctx.conjugate(a);
    let cb = ctx.conjugate(b);

    report.push(Check::new(
        "involution",
        ctx.conjugate(&ca) == *a && ctx.conjugate(&cb) == *b,
    ));
    report.push(Check::new(
        "A + conj(A) is central",
        (a + &ca).is_central() && (b + &cb).is_central(),
    ));
    let norm = a * &ca;
    report.push(Check::new("A conj(A) = conj(A) A", norm == &ca * a));
    report.push(Check::new("A conj(A) is central", norm.is_central()));
    report.push(Check::new(
        "conj(AB) = conj(B) conj(A)",
        ctx.conjugate(&(a * b)) == &cb * &ca,
    ));

    let mut probes: Vec<(String, AlgebraElement)> = vec![("A".into(), a.clone()), ("B".into(), b.clone())];
    for class in group.conjugacy_classes() {
        let sum = AlgebraElement::from_coeffs(group, class.iter().map(|&g| (g, MultiPoly::one())));
        probes.push((format!("class sum of {}", group.name(class[0])), sum));
    }
    let central_not_fixed = probes
        .iter()
        .find(|(_, x)| x.is_central() && ctx.conjugate(x) != *x)
        .map(|(name, x)| format!("{name} is central but conj = {}", ctx.conjugate(x)));
    report.push(Check::new("central implies A = conj(A)", central_not_fixed.is_none()).with_detail(central_not_fixed));
    let fixed_not_central = probes
        .iter()
        .find(|(_, x)| ctx.conjugate(x) == *x && !x.is_central())
        .map(|(name, _)| format!("{name} is fixed but not central"));
    report.push(Check::new("A = conj(A) implies central", fixed_not_central.is_none()).with_detail(fixed_not_central));

    let phi = char_poly(&ctx.norm_context(), &AlgebraMatrix::single(a), strategy)?;
    report.push(Check::new("A conj(A) = Phi_A(0)", &norm == phi.coefficient(0)));
    let x = AlgebraElement::scalar(group, MultiPoly::var(Var::CHAR));
    let product = &(&x - a) * &(&x - &ca);
    let expanded = phi
        .coefficients()
        .iter()
        .enumerate()
        .fold(AlgebraElement::zero(group), |acc, (k, c)| {
            &acc + &c.scale(&MultiPoly::var(Var::CHAR).pow(k as u32))
        });
    report.push(Check::new("Phi_A(X) = (X - A)(X - conj(A))", product == expanded));
    Ok(report)
}

/// The pieces of the 2x2 inverse construction.
#[derive(Clone, Debug)]
pub struct Inverse2x2 {
    pub inverse: AlgebraMatrix,
    pub alpha: AlgebraElement,
    pub beta: AlgebraElement,
    pub gamma: AlgebraElement,
    /// `alpha conj(alpha) - beta gamma`.
    pub delta: AlgebraElement,
    /// Whether the multiplier `[[conj D, conj B], [conj C, conj D]]` reproduces
    /// the same `alpha, beta, gamma, conj(alpha)` entries.
    pub alternate_multiplier_matches: bool,
}

impl Inverse2x2 {
    pub fn beta_gamma_central(&self) -> bool {
        self.beta.is_central() && self.gamma.is_central()
    }
}

/// `M^-1 = N (alpha conj(alpha) - beta gamma)^-1 [[conj(alpha), -beta], [-gamma, alpha]]`
/// with `N = [[conj D, conj B], [conj C, conj A]]` and `M N = [[alpha, beta], [gamma, conj(alpha)]]`.
pub fn inverse_2x2(ctx: &Index2Context, m: &AlgebraMatrix) -> Result<Inverse2x2> {
    if m.size() != 2 {
        return Err(Error::SizeMismatch(format!("expected 2x2, got {0}x{0}", m.size())));
    }
    if !m.is_numeric() {
        return Err(Error::SymbolicCoefficientsUnsupported);
    }
    let group = ctx.group();
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let conj = |x: &AlgebraElement| ctx.conjugate(x);
    let n = AlgebraMatrix::from_rows(group, vec![vec![conj(d), conj(b)], vec![conj(c), conj(a)]])?;
    let k = m * &n;
    let (alpha, beta, gamma) = (k.get(0, 0).clone(), k.get(0, 1).clone(), k.get(1, 0).clone());
    let alpha_bar = conj(&alpha);
    debug_assert_eq!(k.get(1, 1), &alpha_bar);
    let delta = &(&alpha * &alpha_bar) - &(&beta * &gamma);
    let delta_inv = match invert_numeric(&ctx.norm_context(), &AlgebraMatrix::single(&delta)) {
        Ok(inv) => inv.get(0, 0).clone(),
        Err(Error::SingularElement) => return Err(Error::SingularMatrix),
        Err(e) => return Err(e),
    };
    let adj = AlgebraMatrix::from_rows(group, vec![vec![alpha_bar, -&beta], vec![-&gamma, alpha.clone()]])?;
    let inverse = &n.right_scale(&delta_inv) * &adj;
    let alternate = AlgebraMatrix::from_rows(group, vec![vec![conj(d), conj(b)], vec![conj(c), conj(d)]])?;
    Ok(Inverse2x2 {
        inverse,
        alternate_multiplier_matches: (m * &alternate) == k,
        alpha,
        beta,
        gamma,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    fn z4_ctx() -> Index2Context {
        let z4 = builtin_group("cyclic:4").unwrap();
        Index2Context::new(&Subgroup::generated(&z4, &[2])).unwrap()
    }

    #[test]
    fn decompose_basic_elements() {
        let ctx = z4_ctx();
        let g = ctx.group().clone();
        let t = AlgebraElement::basis(&g, ctx.t());
        let d = ctx.decompose(&t);
        assert!(d.alpha.is_zero());
        assert!(d.beta.is_one());
        assert_eq!(ctx.conjugate(&t), -&t);
        let inside = AlgebraElement::basis(&g, 2);
        assert!(ctx.decompose(&inside).beta.is_zero());
        let generic = AlgebraElement::generic(&g);
        assert_eq!(ctx.compose(&ctx.decompose(&generic)), generic);
        assert_eq!(ctx.conjugate(&ctx.conjugate(&generic)), generic);
    }

    #[test]
    fn scalars_are_fixed() {
        let ctx = z4_ctx();
        let c = AlgebraElement::scalar(ctx.group(), MultiPoly::from_int(5));
        assert_eq!(ctx.conjugate(&c), c);
    }

    #[test]
    fn rejects_wrong_index() {
        let s3 = builtin_group("sym:3").unwrap();
        assert!(matches!(
            Index2Context::new(&Subgroup::generated(&s3, &[1])),
            Err(Error::InvalidTransversal(_))
        ));
    }

    #[test]
    fn identity_inverse() {
        let ctx = z4_ctx();
        let ident = AlgebraMatrix::identity(ctx.group(), 2);
        let inv = inverse_2x2(&ctx, &ident).unwrap();
        assert_eq!(inv.inverse, ident);
    }

    #[test]
    fn identity_laws() {
        let ctx = z4_ctx();
        let e = AlgebraElement::one(ctx.group());
        let report = conjugation_laws_check(&ctx, &e, &e, DetStrategy::CharacterDft).unwrap();
        assert!(report.get("involution").unwrap().status == crate::report::CheckStatus::Pass);
        assert!(report.get("A conj(A) = Phi_A(0)").unwrap().status == crate::report::CheckStatus::Pass);
    }
}
