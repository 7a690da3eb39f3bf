use std::sync::Arc;

use super::{FiniteGroup, Subgroup};
use crate::arith::{root_of_unity, Cyclotomic};
use crate::error::{Error, Result};

/// `H = <g_1> x ... x <g_k>` with `|g_i| = d_i` in invariant-factor order
/// (`d_(i+1)` divides `d_i`).
#[derive(Clone, Debug)]
pub struct AbelianDecomposition {
    subgroup: Subgroup,
    generators: Vec<usize>,
    orders: Vec<usize>,
    coords: Vec<Option<Vec<usize>>>,
}

impl AbelianDecomposition {
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Exponents `e_i` with `h = prod g_i^(e_i)`, for `h` in the subgroup.
    pub fn coordinates(&self, h: usize) -> Option<&[usize]> {
        self.coords[h].as_deref()
    }
}

/// Decomposes an abelian subgroup: pick an element of maximal order, search
/// exhaustively for a complement, recurse on the complement.
pub fn abelian_decomposition(h: &Subgroup) -> Result<AbelianDecomposition> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let group = h.parent();
    let (generators, orders) = split_cyclic_factors(group, h);
    let mut coords = vec![None; group.order()];
    let total: usize = orders.iter().product();
    for idx in 0..total {
        let mut rest = idx;
        let mut exps = vec![0; orders.len()];
        for k in (0..orders.len()).rev() {
            exps[k] = rest % orders[k];
            rest /= orders[k];
        }
        let x = generators
            .iter()
            .zip(&exps)
            .fold(group.identity(), |acc, (&g, &e)| group.mul(acc, group.pow(g, e)));
        debug_assert!(coords[x].is_none(), "coordinate map is not injective");
        coords[x] = Some(exps);
    }
    debug_assert_eq!(total, h.order());
    Ok(AbelianDecomposition {
        subgroup: h.clone(),
        generators,
        orders,
        coords,
    })
}

fn split_cyclic_factors(group: &Arc<FiniteGroup>, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    if h.order() == 1 {
        return (Vec::new(), Vec::new());
    }
    let g = *h
        .elements()
        .iter()
        .max_by_key(|&&x| (group.element_order(x), std::cmp::Reverse(x)))
        .unwrap();
    let cyclic = Subgroup::generated(group, &[g]);
    let target = h.order() / cyclic.order();
    let complement = find_complement(group, h, &cyclic, &Subgroup::trivial(group), target)
        .expect("a cyclic subgroup of maximal order in an abelian group has a complement");
    let (mut gens, mut orders) = split_cyclic_factors(group, &complement);
    gens.insert(0, g);
    orders.insert(0, cyclic.order());
    (gens, orders)
}

fn find_complement(
    group: &Arc<FiniteGroup>,
    ambient: &Subgroup,
    cyclic: &Subgroup,
    current: &Subgroup,
    target: usize,
) -> Option<Subgroup> {
    if current.order() == target {
        return Some(current.clone());
    }
    for &x in ambient.elements() {
        if current.contains(x) || cyclic.contains(x) {
            continue;
        }
        let mut gens = current.elements().to_vec();
        gens.push(x);
        let next = Subgroup::generated(group, &gens);
        if !target.is_multiple_of(next.order()) {
            continue;
        }
        if next
            .elements()
            .iter()
            .any(|&y| y != group.identity() && cyclic.contains(y))
        {
            continue;
        }
        if let Some(found) = find_complement(group, ambient, cyclic, &next, target) {
            return Some(found);
        }
    }
    None
}

/// A linear character `chi(h) = zeta_N^(k(h))` of an abelian subgroup.
#[derive(Clone, Debug)]
pub struct Character {
    subgroup: Subgroup,
    conductor: u32,
    label: Vec<usize>,
    exponents: Vec<Option<u32>>,
    values: Vec<Option<Cyclotomic>>,
}

impl Character {
    fn new(subgroup: Subgroup, conductor: u32, label: Vec<usize>, exponents: Vec<Option<u32>>) -> Self {
        let values = exponents
            .iter()
            .map(|k| k.map(|k| root_of_unity(conductor, k)))
            .collect();
        Character {
            subgroup,
            conductor,
            label,
            exponents,
            values,
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `N`, the exponent of the subgroup.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The labels `c_i` this character was built from.
    pub fn label(&self) -> &[usize] {
        &self.label
    }

    /// `k(h)` with `chi(h) = zeta_N^k(h)`. Panics outside the subgroup.
    pub fn exponent(&self, h: usize) -> u32 {
        self.exponents[h].expect("character evaluated outside its subgroup")
    }

    /// `chi(h)`. Panics outside the subgroup.
    pub fn value(&self, h: usize) -> &Cyclotomic {
        self.values[h]
            .as_ref()
            .expect("character evaluated outside its subgroup")
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().flatten().all(|&k| k == 0)
    }

    /// Composes a character of a quotient `G/N` (given on the whole quotient
    /// group) with the projection `G -> G/N`.
    pub fn pullback(&self, group: &Arc<FiniteGroup>, projection: &[usize]) -> Character {
        let exponents = group.elements().map(|g| self.exponents[projection[g]]).collect();
        Character::new(Subgroup::whole(group), self.conductor, self.label.clone(), exponents)
    }

    pub fn describe(&self) -> String {
        let g = self.subgroup.parent();
        let parts: Vec<String> = self
            .subgroup
            .elements()
            .iter()
            .map(|&h| format!("{}->z{}^{}", g.name(h), self.conductor, self.exponent(h)))
            .collect();
        parts.join(", ")
    }
}

/// All `|H|` characters of an abelian subgroup, ordered lexicographically by label.
pub fn characters(h: &Subgroup) -> Result<Vec<Character>> {
    let dec = abelian_decomposition(h)?;
    let n = dec.orders.first().copied().unwrap_or(1);
    let group = h.parent();
    let count: usize = dec.orders.iter().product();
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut rest = idx;
        let mut label = vec![0; dec.orders.len()];
        for k in (0..dec.orders.len()).rev() {
            label[k] = rest % dec.orders[k];
            rest /= dec.orders[k];
        }
        let exponents = group
            .elements()
            .map(|x| {
                dec.coordinates(x).map(|e| {
                    let k: usize = label
                        .iter()
                        .zip(e)
                        .zip(&dec.orders)
                        .map(|((&c, &e), &d)| c * e * (n / d))
                        .sum();
                    (k % n) as u32
                })
            })
            .collect();
        out.push(Character::new(h.clone(), n as u32, label, exponents));
    }
    Ok(out)
}
