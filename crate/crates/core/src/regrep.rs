//! The left regular representation `L_T : Mat(m, RK) -> Mat(m[K:H], RH)`
//! attached to a transversal `T` of `H` in `K` (usually `K = G`).
//!
//! Block `(i, j)` of `L_T(A)` is defined by `A t_j = sum_i t_i L_T(A)_(i,j)`:
//! every term `c g` of an entry is moved across `t_j` by writing
//! `g t_j = t_i h` with `h` in `H`.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::arith::MultiPoly;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, Transversal};

#[derive(Clone, Debug)]
pub struct RegularRepContext {
    transversal: Transversal,
    m: usize,
}

impl RegularRepContext {
    /// Greedy transversal of `H` in its parent group, block size `m`.
    pub fn new(subgroup: &Subgroup, m: usize) -> Self {
        Self::with_transversal(Transversal::left(subgroup), m)
    }

    pub fn with_transversal(transversal: Transversal, m: usize) -> Self {
        RegularRepContext { transversal, m }
    }

    /// Representation of `Mat(m, RK)` over `RH` for a chain `H <= K <= G`.
    pub fn in_ambient(ambient: &Subgroup, subgroup: &Subgroup, m: usize) -> Result<Self> {
        Ok(Self::with_transversal(Transversal::left_in(ambient, subgroup)?, m))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.transversal.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.transversal.subgroup()
    }

    pub fn ambient(&self) -> &Subgroup {
        self.transversal.ambient()
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn block_size(&self) -> usize {
        self.m
    }

    /// `[K:H]`.
    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    /// Size `m [K:H]` of lifted matrices.
    pub fn lifted_size(&self) -> usize {
        self.m * self.index()
    }

    fn check_input(&self, a: &AlgebraMatrix) -> Result<()> {
        if !FiniteGroup::same(a.group(), self.group()) {
            return Err(Error::GroupMismatch);
        }
        if a.size() != self.m {
            return Err(Error::SizeMismatch(format!(
                "expected {0}x{0}, got {1}x{1}",
                self.m,
                a.size()
            )));
        }
        if !a.supported_on(self.ambient()) {
            return Err(Error::NotSupportedOnSubgroup);
        }
        Ok(())
    }

    /// `g = t_i h`, as `(i, h)`.
    pub fn coset_of(&self, g: usize) -> Result<(usize, usize)> {
        self.transversal.locate(g).ok_or(Error::NotSupportedOnSubgroup)
    }

    pub fn lift(&self, a: &AlgebraMatrix) -> Result<AlgebraMatrix> {
        self.check_input(a)?;
        let group = self.group();
        let (m, r) = (self.m, self.index());
        let mut cells: Vec<Vec<AlgebraElement>> = vec![vec![AlgebraElement::zero(group); r * m]; r * m];
        for (j, &tj) in self.transversal.reps().iter().enumerate() {
            for row in 0..m {
                for col in 0..m {
                    for (g, coef) in a.get(row, col).terms() {
                        let (i, h) = self.coset_of(group.mul(g, tj))?;
                        cells[i * m + row][j * m + col].add_to(h, coef.clone());
                    }
                }
            }
        }
        let lifted = AlgebraMatrix::from_rows(group, cells)?;
        debug_assert!(lifted.supported_on(self.subgroup()));
        Ok(lifted)
    }

    /// `A = sum_i t_i A_i` with every `A_i` supported on `H`; indexed like the transversal.
    pub fn coset_decompose(&self, a: &AlgebraMatrix) -> Result<Vec<AlgebraMatrix>> {
        self.check_input(a)?;
        let group = self.group();
        let mut parts = vec![AlgebraMatrix::zeros(group, self.m); self.index()];
        for row in 0..self.m {
            for col in 0..self.m {
                for (g, coef) in a.get(row, col).terms() {
                    let (i, h) = self.coset_of(g)?;
                    let mut entry = parts[i].get(row, col).clone();
                    entry.add_to(h, coef.clone());
                    parts[i].set(row, col, entry);
                }
            }
        }
        Ok(parts)
    }

    /// Reassembles `sum_i t_i A_i`.
    pub fn coset_compose(&self, parts: &[AlgebraMatrix]) -> AlgebraMatrix {
        let group = self.group();
        parts
            .iter()
            .zip(self.transversal.reps())
            .fold(AlgebraMatrix::zeros(group, self.m), |acc, (p, &t)| {
                &acc + &p.left_scale(&AlgebraElement::basis(group, t))
            })
    }

    /// Checks `A (t_1 I ... t_r I) = (t_1 I ... t_r I) L_T(A)` block column by block column.
    pub fn defining_identity_holds(&self, a: &AlgebraMatrix) -> Result<bool> {
        let lifted = self.lift(a)?;
        let group = self.group();
        let reps = self.transversal.reps();
        for (j, &tj) in reps.iter().enumerate() {
            let left = a.right_scale(&AlgebraElement::basis(group, tj));
            let right = reps
                .iter()
                .enumerate()
                .fold(AlgebraMatrix::zeros(group, self.m), |acc, (i, &ti)| {
                    &acc + &lifted.block(i, j, self.m).left_scale(&AlgebraElement::basis(group, ti))
                });
            if left != right {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Permutation matrix of left multiplication by `g` on the cosets `t_i H`.
    pub fn coset_permutation(&self, g: usize) -> Result<Vec<Vec<i64>>> {
        let r = self.index();
        let mut out = vec![vec![0; r]; r];
        for (j, &tj) in self.transversal.reps().iter().enumerate() {
            let (i, _) = self.coset_of(self.group().mul(g, tj))?;
            out[i][j] = 1;
        }
        Ok(out)
    }

    /// `P = diag(t_1 I_m, ..., t_r I_m)`.
    pub fn p_matrix(&self) -> AlgebraMatrix {
        self.diag_of_reps(|t| t)
    }

    /// `P^-1 = diag(t_1^-1 I_m, ..., t_r^-1 I_m)`.
    pub fn p_inverse(&self) -> AlgebraMatrix {
        let group = Arc::clone(self.group());
        self.diag_of_reps(move |t| group.inv(t))
    }

    fn diag_of_reps(&self, f: impl Fn(usize) -> usize) -> AlgebraMatrix {
        let group = self.group();
        let mut out = AlgebraMatrix::zeros(group, self.lifted_size());
        for (i, &t) in self.transversal.reps().iter().enumerate() {
            for a in 0..self.m {
                out.set(i * self.m + a, i * self.m + a, AlgebraElement::basis(group, f(t)));
            }
        }
        out
    }

    fn require_normal(&self) -> Result<()> {
        if self.subgroup().is_normal_in(self.ambient()) {
            Ok(())
        } else {
            Err(Error::NotNormal)
        }
    }

    /// `P^-1 (sum_t L_(K/H)(tH) (x) t A_t) P`, which equals `lift(A)` for normal `H`.
    pub fn kronecker_form(&self, a: &AlgebraMatrix) -> Result<AlgebraMatrix> {
        self.require_normal()?;
        let parts = self.coset_decompose(a)?;
        let group = self.group();
        let mut sum = AlgebraMatrix::zeros(group, self.lifted_size());
        for (part, &t) in parts.iter().zip(self.transversal.reps()) {
            if part.is_zero() {
                continue;
            }
            let perm = self.coset_permutation(t)?;
            let term = part.left_scale(&AlgebraElement::basis(group, t));
            sum = &sum + &AlgebraMatrix::kronecker(&perm, &term);
        }
        Ok(&(&self.p_inverse() * &sum) * &self.p_matrix())
    }

    fn require_abelian_quotient(&self) -> Result<()> {
        self.require_normal()?;
        let reps = self.transversal.reps();
        let group = self.group();
        for &a in reps {
            for &b in reps {
                let (i, _) = self.coset_of(group.mul(a, b))?;
                let (j, _) = self.coset_of(group.mul(b, a))?;
                if i != j {
                    return Err(Error::QuotientNotAbelian);
                }
            }
        }
        Ok(())
    }

    /// `J_t = P^-1 (L_(K/H)(tH) (x) I_m) P`.
    pub fn j_matrix(&self, t: usize) -> Result<AlgebraMatrix> {
        self.require_abelian_quotient()?;
        let perm = self.coset_permutation(t)?;
        let ident = AlgebraMatrix::identity(self.group(), self.m);
        Ok(&(&self.p_inverse() * &AlgebraMatrix::kronecker(&perm, &ident)) * &self.p_matrix())
    }

    /// Whether `J_t B = B J_t` for every representative `t`.
    pub fn commutes_with_all_j(&self, b: &AlgebraMatrix) -> Result<bool> {
        if b.size() != self.lifted_size() {
            return Err(Error::SizeMismatch(format!(
                "expected {0}x{0}, got {1}x{1}",
                self.lifted_size(),
                b.size()
            )));
        }
        for &t in self.transversal.reps() {
            let j = self.j_matrix(t)?;
            if &j * b != b * &j {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `A = sum_p t_p B_(p,1) t_1^-1`, read off the first block column.
    pub fn recover_preimage(&self, b: &AlgebraMatrix) -> Result<AlgebraMatrix> {
        if b.size() != self.lifted_size() {
            return Err(Error::SizeMismatch(format!(
                "expected {0}x{0}, got {1}x{1}",
                self.lifted_size(),
                b.size()
            )));
        }
        let group = self.group();
        let reps = self.transversal.reps();
        let t1_inv = AlgebraElement::basis(group, group.inv(reps[0]));
        let mut out = AlgebraMatrix::zeros(group, self.m);
        for (p, &tp) in reps.iter().enumerate() {
            let block = b.block(p, 0, self.m).left_scale(&AlgebraElement::basis(group, tp));
            out = &out + &block;
        }
        Ok(out.right_scale(&t1_inv))
    }
}

/// Checks `L_V = L_U o L_T` for `K <= H <= G`, where `T` is a transversal of
/// `H` in `G`, `U` one of `K` in `H`, and `V = {t_p u_q}` is ordered with `q`
/// outer and `p` inner.
pub fn compose_check(t: &Transversal, u: &Transversal, a: &AlgebraMatrix) -> Result<bool> {
    if !FiniteGroup::same(t.group(), u.group()) || u.ambient().elements() != t.subgroup().elements() {
        return Err(Error::NotASubgroupChain(
            "the inner transversal must live in the subgroup of the outer one".into(),
        ));
    }
    let group = t.group();
    let mut v_reps = Vec::with_capacity(t.len() * u.len());
    for &uq in u.reps() {
        for &tp in t.reps() {
            v_reps.push(group.mul(tp, uq));
        }
    }
    let v = Transversal::from_reps(t.ambient(), u.subgroup(), v_reps)?;
    let m = a.size();
    let outer = RegularRepContext::with_transversal(t.clone(), m);
    let inner = RegularRepContext::with_transversal(u.clone(), m * t.len());
    let direct = RegularRepContext::with_transversal(v, m);
    Ok(inner.lift(&outer.lift(a)?)? == direct.lift(a)?)
}

/// The 1x1 matrix holding the generic element `sum_g x_g g` of the ambient group.
pub fn generic_matrix(ctx: &RegularRepContext) -> AlgebraMatrix {
    let group = ctx.group();
    let a = AlgebraElement::from_coeffs(
        group,
        ctx.ambient()
            .elements()
            .iter()
            .map(|&g| (g, MultiPoly::var(crate::arith::Var::group(g)))),
    );
    AlgebraMatrix::single(&a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Var;
    use crate::group::builtin_group;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::group(i))
    }

    #[test]
    fn z2_over_trivial_subgroup() {
        let z2 = builtin_group("cyclic:2").unwrap();
        let ctx = RegularRepContext::new(&Subgroup::trivial(&z2), 1);
        let a = AlgebraMatrix::single(&AlgebraElement::generic(&z2));
        let l = ctx.lift(&a).unwrap();
        let e = |p: MultiPoly| AlgebraElement::monomial(&z2, 0, p);
        assert_eq!(l.get(0, 0), &e(x(0)));
        assert_eq!(l.get(0, 1), &e(x(1)));
        assert_eq!(l.get(1, 0), &e(x(1)));
        assert_eq!(l.get(1, 1), &e(x(0)));
    }

    #[test]
    fn identity_lifts_to_identity() {
        let s3 = builtin_group("sym:3").unwrap();
        let h = Subgroup::generated(&s3, &[1]);
        let ctx = RegularRepContext::new(&h, 2);
        assert!(ctx.lift(&AlgebraMatrix::identity(&s3, 2)).unwrap().is_identity());
    }

    #[test]
    fn defining_identity_on_non_normal_subgroup() {
        let s3 = builtin_group("sym:3").unwrap();
        let h = Subgroup::generated(&s3, &[1]);
        let ctx = RegularRepContext::new(&h, 1);
        let a = generic_matrix(&ctx);
        assert!(ctx.defining_identity_holds(&a).unwrap());
        assert_eq!(ctx.kronecker_form(&a), Err(Error::NotNormal));
    }

    #[test]
    fn coset_decomposition_of_single_term() {
        let s3 = builtin_group("sym:3").unwrap();
        let a3 = Subgroup::generated(&s3, &[3]);
        let ctx = RegularRepContext::new(&a3, 1);
        // t = (1 2) at index 1; t * (0 1 2) = ?
        let g = s3.mul(1, 3);
        let parts = ctx
            .coset_decompose(&AlgebraMatrix::single(&AlgebraElement::basis(&s3, g)))
            .unwrap();
        assert!(parts[0].is_zero());
        assert_eq!(parts[1].get(0, 0), &AlgebraElement::basis(&s3, 3));
    }

    #[test]
    fn kronecker_matches_lift_on_z4() {
        let z4 = builtin_group("cyclic:4").unwrap();
        let ctx = RegularRepContext::new(&Subgroup::generated(&z4, &[2]), 1);
        let a = generic_matrix(&ctx);
        assert_eq!(ctx.kronecker_form(&a).unwrap(), ctx.lift(&a).unwrap());
    }

    #[test]
    fn j_identity_and_commutant() {
        let s3 = builtin_group("sym:3").unwrap();
        let ctx = RegularRepContext::new(&Subgroup::generated(&s3, &[3]), 1);
        assert!(ctx.j_matrix(0).unwrap().is_identity());
        let b = ctx.lift(&generic_matrix(&ctx)).unwrap();
        assert!(ctx.commutes_with_all_j(&b).unwrap());
        let mut broken = b.clone();
        broken.set(0, 1, AlgebraElement::zero(&s3));
        assert!(!ctx.commutes_with_all_j(&broken).unwrap());
        assert_eq!(ctx.recover_preimage(&b).unwrap(), generic_matrix(&ctx));
    }

    #[test]
    fn composition_through_a3() {
        let s3 = builtin_group("sym:3").unwrap();
        let a3 = Subgroup::generated(&s3, &[3]);
        let t = Transversal::left(&a3);
        let u = Transversal::left_in(&a3, &Subgroup::trivial(&s3)).unwrap();
        let a = AlgebraMatrix::single(&AlgebraElement::generic(&s3));
        assert!(compose_check(&t, &u, &a).unwrap());
        let wrong = Transversal::left(&Subgroup::trivial(&s3));
        assert!(matches!(
            compose_check(&t, &wrong, &a),
            Err(Error::NotASubgroupChain(_))
        ));
    }
}
