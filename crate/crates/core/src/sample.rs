//! Seeded random numeric inputs for the randomized checks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::arith::MultiPoly;
use crate::group::{FiniteGroup, Subgroup};

/// Small-integer samples from a ChaCha8 stream; a fixed seed gives a fixed sequence.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    /// Coefficients drawn uniformly from `-bound..=bound`.
    pub fn new(seed: u64, bound: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn ints(&mut self, n: usize) -> Vec<i64> {
        (0..n).map(|_| self.int()).collect()
    }

    /// A numeric element supported on `support`.
    pub fn element_on(&mut self, support: &Subgroup) -> AlgebraElement {
        let group = support.parent();
        let coeffs: Vec<(usize, MultiPoly)> = support
            .elements()
            .iter()
            .map(|&g| (g, MultiPoly::from_int(self.int())))
            .collect();
        AlgebraElement::from_coeffs(group, coeffs)
    }

    pub fn element(&mut self, group: &Arc<FiniteGroup>) -> AlgebraElement {
        self.element_on(&Subgroup::whole(group))
    }

    pub fn matrix_on(&mut self, support: &Subgroup, m: usize) -> AlgebraMatrix {
        AlgebraMatrix::from_fn(support.parent(), m, |_, _| self.element_on(support))
    }

    pub fn matrix(&mut self, group: &Arc<FiniteGroup>, m: usize) -> AlgebraMatrix {
        self.matrix_on(&Subgroup::whole(group), m)
    }
}
