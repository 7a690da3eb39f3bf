//! The group determinant, the relative group determinant `Theta(G:H)` and
//! its factorization over the characters of an abelian subgroup.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::arith::poly::first_difference;
use crate::arith::{Cyclotomic, MultiPoly, Var};
use crate::det::{det_commutative, invert_numeric, minor_expansion, ncdet, DetStrategy};
use crate::error::{Error, Result};
use crate::group::{characters, Character, FiniteGroup, Subgroup, Transversal};
use crate::regrep::{generic_matrix, RegularRepContext};
use crate::report::{Check, Report};

/// Default largest order for the direct `|G| x |G|` group determinant.
pub const DEFAULT_ORDER_CAP: usize = 10;

/// Largest order for which all abelian subgroups are enumerated.
pub const SUBGROUP_ENUMERATION_CAP: usize = 16;

/// `det(x_(g h^-1))_(g,h in G)`, by memoized minor expansion.
pub fn group_determinant(group: &Arc<FiniteGroup>, cap: usize) -> Result<MultiPoly> {
    if group.order() > cap {
        return Err(Error::OrderCapExceeded {
            order: group.order(),
            cap,
        });
    }
    let rows: Vec<Vec<MultiPoly>> = group
        .elements()
        .map(|g| {
            group
                .elements()
                .map(|h| MultiPoly::var(Var::group(group.mul(g, group.inv(h)))))
                .collect()
        })
        .collect();
    Ok(minor_expansion(&rows, &MultiPoly::one()))
}

/// `Theta(G)` as `Det` over the trivial subgroup of the generic element.
pub fn group_determinant_via_lift(group: &Arc<FiniteGroup>, strategy: DetStrategy) -> Result<MultiPoly> {
    let ctx = RegularRepContext::new(&Subgroup::trivial(group), 1);
    let d = ncdet(&ctx, &generic_matrix(&ctx), strategy)?;
    Ok(d.coeff(group.identity()))
}

/// `Theta(G:H) = Det(sum_g x_g g)` for the `m = 1` representation with transversal `T`.
pub fn theta_relative(transversal: &Transversal, strategy: DetStrategy) -> Result<AlgebraElement> {
    let ctx = RegularRepContext::with_transversal(transversal.clone(), 1);
    ncdet(&ctx, &generic_matrix(&ctx), strategy)
}

/// `sum_h chi(h) a_h h`.
pub fn algebra_factor(theta_rel: &AlgebraElement, chi: &Character) -> AlgebraElement {
    AlgebraElement::from_coeffs(
        theta_rel.group(),
        theta_rel.terms().map(|(h, a)| (h, a.scale(chi.value(h)))),
    )
}

#[derive(Clone, Copy, Debug)]
pub struct FactorOptions {
    pub strategy: DetStrategy,
    pub order_cap: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            strategy: DetStrategy::CharacterDft,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationResult {
    pub group: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
    pub transversal: Vec<usize>,
    pub characters: Vec<Character>,
    /// `a_h` for every `h` in `H`, in subgroup order.
    pub coefficients: Vec<(usize, MultiPoly)>,
    /// `sum_h chi(h) a_h h`, one per character.
    pub factors_algebra: Vec<AlgebraElement>,
    /// Augmentations of the algebra factors.
    pub factors_scalar: Vec<MultiPoly>,
    /// `Theta(G)` from the direct matrix, when the order is within the cap.
    pub theta_direct: Option<MultiPoly>,
    /// `Theta(G)` from `det o L_U o L_T` over the trivial subgroup.
    pub theta_lifted: MultiPoly,
    pub algebra_product: AlgebraElement,
    pub scalar_product: MultiPoly,
}

impl FactorizationResult {
    /// The reference value of `Theta(G)`.
    pub fn theta(&self) -> &MultiPoly {
        self.theta_direct.as_ref().unwrap_or(&self.theta_lifted)
    }

    pub fn coefficient(&self, h: usize) -> Option<&MultiPoly> {
        self.coefficients.iter().find(|(x, _)| *x == h).map(|(_, p)| p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let g = &self.group;
        let n = g.order();
        let poly = |p: &MultiPoly| serde_json::json!({"text": p.to_string(), "terms": p.to_json(n)});
        let coefficients: serde_json::Map<String, serde_json::Value> = self
            .coefficients
            .iter()
            .map(|(h, p)| (g.name(*h).to_string(), poly(p)))
            .collect();
        let factors: Vec<serde_json::Value> = self
            .characters
            .iter()
            .zip(&self.factors_algebra)
            .zip(&self.factors_scalar)
            .map(|((chi, alg), scalar)| {
                serde_json::json!({
                    "character": chi.label(),
                    "conductor": chi.conductor(),
                    "algebra": alg.to_json(),
                    "algebra_text": alg.to_string(),
                    "scalar": poly(scalar),
                })
            })
            .collect();
        serde_json::json!({
            "group": g.label(),
            "order": n,
            "subgroup": self.subgroup.elements().iter().map(|&h| g.name(h)).collect::<Vec<_>>(),
            "transversal": self.transversal.iter().map(|&t| g.name(t)).collect::<Vec<_>>(),
            "theta": poly(self.theta()),
            "coefficients": coefficients,
            "factors": factors,
        })
    }

    pub fn to_latex(&self) -> String {
        let g = &self.group;
        let names = |v: Var| crate::algebra::latex_var(v);
        let mut out = String::new();
        out.push_str(&format!("\\Theta(G) = {}\n", self.theta().to_latex(&names)));
        for (h, a) in &self.coefficients {
            out.push_str(&format!("a_{{\\mathrm{{{}}}}} = {}\n", g.name(*h), a.to_latex(&names)));
        }
        for (chi, f) in self.characters.iter().zip(&self.factors_algebra) {
            let label: Vec<String> = chi.label().iter().map(usize::to_string).collect();
            out.push_str(&format!("F_{{({})}} = {}\n", label.join(","), f.to_latex()));
        }
        out
    }
}

pub fn dedekind_factorization(
    group: &Arc<FiniteGroup>,
    subgroup: &Subgroup,
    options: FactorOptions,
) -> Result<FactorizationResult> {
    if !subgroup.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !FiniteGroup::same(group, subgroup.parent()) {
        return Err(Error::GroupMismatch);
    }
    let transversal = Transversal::left(subgroup);
    let theta_rel = theta_relative(&transversal, options.strategy)?;
    let chars = characters(subgroup)?;
    let coefficients = subgroup.elements().iter().map(|&h| (h, theta_rel.coeff(h))).collect();
    let factors_algebra: Vec<AlgebraElement> = chars.par_iter().map(|chi| algebra_factor(&theta_rel, chi)).collect();
    let factors_scalar: Vec<MultiPoly> = factors_algebra.iter().map(AlgebraElement::augmentation).collect();
    let algebra_product = factors_algebra
        .iter()
        .fold(AlgebraElement::one(group), |acc, f| &acc * f);
    let scalar_product = factors_scalar.iter().fold(MultiPoly::one(), |acc, f| &acc * f);
    let theta_direct = match group_determinant(group, options.order_cap) {
        Ok(t) => Some(t),
        Err(Error::OrderCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let theta_lifted = theta_through_chain(&transversal, options.strategy)?;
    Ok(FactorizationResult {
        group: Arc::clone(group),
        subgroup: subgroup.clone(),
        transversal: transversal.reps().to_vec(),
        characters: chars,
        coefficients,
        factors_algebra,
        factors_scalar,
        theta_direct,
        theta_lifted,
        algebra_product,
        scalar_product,
    })
}

/// `det(L_U(L_T(alpha)))` with `U` a transversal of `{e}` in `H`.
fn theta_through_chain(transversal: &Transversal, strategy: DetStrategy) -> Result<MultiPoly> {
    let group = transversal.group();
    let h = transversal.subgroup();
    let outer = RegularRepContext::with_transversal(transversal.clone(), 1);
    let inner = RegularRepContext::in_ambient(h, &Subgroup::trivial(group), transversal.len())?;
    let lifted = inner.lift(&outer.lift(&generic_matrix(&outer))?)?;
    let trivial = Subgroup::trivial(group);
    let strategy = if strategy == DetStrategy::Leibniz && lifted.size() > crate::det::LEIBNIZ_MAX {
        DetStrategy::MinorExpansion
    } else {
        strategy
    };
    Ok(det_commutative(&lifted, &trivial, strategy)?.coeff(group.identity()))
}

fn element_difference(a: &AlgebraElement, b: &AlgebraElement) -> Option<String> {
    let group = a.group();
    let g = a.support().chain(b.support()).find(|&g| a.coeff(g) != b.coeff(g))?;
    Some(format!(
        "element {}: {}",
        group.name(g),
        first_difference(&a.coeff(g), &b.coeff(g)).unwrap_or_default()
    ))
}

/// Checks (i) the algebra product, (ii) the scalar product, (iii) homogeneity
/// of the `a_h`, (iv) conjugacy invariance of the `a_h` for normal `H`, and
/// (v) agreement of the two routes to `Theta(G)`.
pub fn verify_factorization(result: &FactorizationResult) -> Report {
    let g = &result.group;
    let h = &result.subgroup;
    let mut report = Report::new(format!("factorization of {} over {}", g.label(), h.display()));
    let theta = result.theta();
    let theta_e = AlgebraElement::scalar(g, theta.clone());
    report.push(
        Check::new(
            "algebra factors multiply to Theta(G) e",
            result.algebra_product == theta_e,
        )
        .with_detail(element_difference(&result.algebra_product, &theta_e)),
    );
    report.push(
        Check::new("scalar factors multiply to Theta(G)", &result.scalar_product == theta)
            .with_detail(first_difference(&result.scalar_product, theta)),
    );
    let index = h.index() as u32;
    let bad = result.coefficients.iter().find(|(_, a)| !a.is_homogeneous(index));
    report.push(
        Check::new(format!("each a_h is homogeneous of degree {index}"), bad.is_none())
            .with_detail(bad.map(|(x, a)| format!("a_{} = {a}", g.name(*x)))),
    );
    if h.is_normal() {
        let mut mismatch = None;
        'outer: for &x in h.elements() {
            for y in g.elements() {
                let c = g.conjugate(x, y);
                if result.coefficient(x) != result.coefficient(c) {
                    mismatch = Some(format!(
                        "a_{} vs a_{}: {}",
                        g.name(x),
                        g.name(c),
                        first_difference(result.coefficient(x).unwrap(), result.coefficient(c).unwrap())
                            .unwrap_or_default()
                    ));
                    break 'outer;
                }
            }
        }
        report.push(Check::new("a_h constant on conjugacy classes", mismatch.is_none()).with_detail(mismatch));
    } else {
        report.push(Check::skipped(
            "a_h constant on conjugacy classes",
            "subgroup is not normal",
        ));
    }
    match &result.theta_direct {
        Some(direct) => report.push(
            Check::new(
                "Theta(G) agrees between direct and lifted routes",
                direct == &result.theta_lifted,
            )
            .with_detail(first_difference(direct, &result.theta_lifted)),
        ),
        None => report.push(Check::skipped(
            "Theta(G) agrees between direct and lifted routes",
            "order above the direct cap",
        )),
    }
    report
}

/// Result of comparing `Theta(G)(x) != 0` with an explicit inversion attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibilityOutcome {
    pub theta_value: Cyclotomic,
    /// `Theta(G) != 0` at the assignment.
    pub criterion: bool,
    /// Explicit inversion succeeded and gave a two-sided inverse.
    pub inverted: bool,
}

impl InvertibilityOutcome {
    pub fn agrees(&self) -> bool {
        self.criterion == self.inverted
    }
}

/// Reusable `Theta(G)` plus a context for explicit inversion.
pub struct InvertibilityChecker {
    theta: MultiPoly,
    ctx: RegularRepContext,
}

impl InvertibilityChecker {
    /// Inverts through the representation over `subgroup`, which must be abelian.
    pub fn new(subgroup: &Subgroup, order_cap: usize) -> Result<Self> {
        if !subgroup.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let theta = group_determinant(subgroup.parent(), order_cap)?;
        Ok(InvertibilityChecker {
            theta,
            ctx: RegularRepContext::new(subgroup, 1),
        })
    }

    pub fn theta(&self) -> &MultiPoly {
        &self.theta
    }

    /// `assignment[g]` is the value of `x_g`.
    pub fn check(&self, assignment: &[i64]) -> Result<InvertibilityOutcome> {
        let group = self.ctx.group();
        if assignment.len() != group.order() {
            return Err(Error::SizeMismatch(format!(
                "{} values for a group of order {}",
                assignment.len(),
                group.order()
            )));
        }
        let value = self
            .theta
            .eval(&|v| assignment.get(v.0 as usize).map(|&x| Cyclotomic::from_int(x)))
            .expect("assignment covers every group variable");
        let a = AlgebraMatrix::single(&AlgebraElement::from_ints(group, assignment));
        let inverted = match invert_numeric(&self.ctx, &a) {
            Ok(b) => (&a * &b).is_identity() && (&b * &a).is_identity(),
            Err(Error::SingularElement) => false,
            Err(e) => return Err(e),
        };
        Ok(InvertibilityOutcome {
            criterion: !value.is_zero(),
            theta_value: value,
            inverted,
        })
    }
}

/// `Theta(G) != 0` at the assignment, cross-checked by inverting over the trivial subgroup.
pub fn invertibility_criterion(group: &Arc<FiniteGroup>, assignment: &[i64]) -> Result<InvertibilityOutcome> {
    InvertibilityChecker::new(&Subgroup::trivial(group), DEFAULT_ORDER_CAP)?.check(assignment)
}

/// Irreducible degrees shipped for the catalog groups; every abelian group gets all ones.
pub fn irrep_degree_fixture(group: &FiniteGroup) -> Result<Vec<usize>> {
    if group.is_abelian() {
        return Ok(vec![1; group.order()]);
    }
    match group.label() {
        "sym:3" | "dihedral:3" => Ok(vec![1, 1, 2]),
        "dihedral:4" | "quaternion8" => Ok(vec![1, 1, 1, 1, 2]),
        other => Err(Error::FixtureMissing(other.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_index: usize,
    /// An abelian subgroup attaining the minimal index.
    pub witness: Vec<usize>,
    pub sum_of_squares: usize,
    pub order: usize,
}

impl DegreeBoundReport {
    pub fn bound_holds(&self) -> bool {
        self.max_degree <= self.min_index
    }

    pub fn squares_sum_to_order(&self) -> bool {
        self.sum_of_squares == self.order
    }

    pub fn to_report(&self, label: &str) -> Report {
        let mut r = Report::new(format!("degree bound for {label}"));
        r.push(
            Check::new("max irreducible degree <= min abelian index", self.bound_holds())
                .with_detail(Some(format!("{} <= {}", self.max_degree, self.min_index))),
        );
        r.push(
            Check::new("sum of squared degrees equals |G|", self.squares_sum_to_order())
                .with_detail(Some(format!("{} = {}", self.sum_of_squares, self.order))),
        );
        r
    }
}

/// Compares the largest irreducible degree with the smallest index of an abelian subgroup.
pub fn degree_bound_report(group: &Arc<FiniteGroup>, degrees: Option<Vec<usize>>) -> Result<DegreeBoundReport> {
    if group.order() > SUBGROUP_ENUMERATION_CAP {
        return Err(Error::OrderCapExceeded {
            order: group.order(),
            cap: SUBGROUP_ENUMERATION_CAP,
        });
    }
    let degrees = match degrees {
        Some(d) => d,
        None => irrep_degree_fixture(group)?,
    };
    let best = Subgroup::all_abelian(group)
        .into_iter()
        .min_by_key(Subgroup::index)
        .expect("the trivial subgroup is abelian");
    Ok(DegreeBoundReport {
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        sum_of_squares: degrees.iter().map(|d| d * d).sum(),
        degrees,
        min_index: best.index(),
        witness: best.elements().to_vec(),
        order: group.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::group(i))
    }

    #[test]
    fn small_group_determinants() {
        let triv = builtin_group("cyclic:1").unwrap();
        assert_eq!(group_determinant(&triv, 10).unwrap(), x(0));
        let z2 = builtin_group("cyclic:2").unwrap();
        assert_eq!(group_determinant(&z2, 10).unwrap().to_string(), "x_0^2 - x_1^2");
        let z3 = builtin_group("cyclic:3").unwrap();
        let expect = &(&(&x(0).pow(3) + &x(1).pow(3)) + &x(2).pow(3))
            - &(&(&x(0) * &x(1)) * &x(2)).scale(&Cyclotomic::from_int(3));
        assert_eq!(group_determinant(&z3, 10).unwrap(), expect);
        let s4 = builtin_group("sym:4").unwrap();
        assert_eq!(
            group_determinant(&s4, 10),
            Err(Error::OrderCapExceeded { order: 24, cap: 10 })
        );
    }

    #[test]
    fn relative_theta_over_trivial_and_whole() {
        let z3 = builtin_group("cyclic:3").unwrap();
        let t = Transversal::left(&Subgroup::trivial(&z3));
        let theta = group_determinant(&z3, 10).unwrap();
        assert_eq!(
            theta_relative(&t, DetStrategy::CharacterDft).unwrap(),
            AlgebraElement::scalar(&z3, theta)
        );
        let whole = Transversal::left(&Subgroup::whole(&z3));
        assert_eq!(
            theta_relative(&whole, DetStrategy::CharacterDft).unwrap(),
            AlgebraElement::generic(&z3)
        );
    }

    #[test]
    fn z4_over_z2_verifies() {
        let z4 = builtin_group("cyclic:4").unwrap();
        let h = Subgroup::generated(&z4, &[2]);
        let result = dedekind_factorization(&z4, &h, FactorOptions::default()).unwrap();
        let report = verify_factorization(&result);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn invertibility_small_cases() {
        let z2 = builtin_group("cyclic:2").unwrap();
        let out = invertibility_criterion(&z2, &[1, 1]).unwrap();
        assert!(!out.criterion && out.agrees());
        let out = invertibility_criterion(&z2, &[1, 0]).unwrap();
        assert!(out.criterion && out.agrees());
        assert!(out.theta_value.is_one());
    }

    #[test]
    fn degree_bounds() {
        let s3 = builtin_group("sym:3").unwrap();
        let r = degree_bound_report(&s3, None).unwrap();
        assert_eq!((r.max_degree, r.min_index), (2, 2));
        assert!(r.bound_holds() && r.squares_sum_to_order());
        let z5 = builtin_group("cyclic:5").unwrap();
        assert_eq!(degree_bound_report(&z5, None).unwrap().min_index, 1);
        let d5 = builtin_group("dihedral:5").unwrap();
        assert!(matches!(degree_bound_report(&d5, None), Err(Error::FixtureMissing(_))));
    }
}
