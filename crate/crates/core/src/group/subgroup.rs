use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup of a parent group, stored as a sorted list of element indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        FiniteGroup::same(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The smallest subgroup containing `gens`.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let mut member = vec![false; group.order()];
        member[group.identity()] = true;
        let mut elements = vec![group.identity()];
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = group.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        elements.sort_unstable();
        Subgroup {
            parent: Arc::clone(group),
            elements,
            member,
        }
    }

    /// Checks that `elements` form a subgroup.
    pub fn from_elements(group: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        let mut member = vec![false; group.order()];
        for &x in elements {
            if x >= group.order() {
                return Err(Error::Parse(format!("element index {x} out of range")));
            }
            member[x] = true;
        }
        if !member[group.identity()] {
            return Err(Error::NotASubgroupChain("subset lacks the identity".into()));
        }
        let mut sorted: Vec<usize> = (0..group.order()).filter(|&x| member[x]).collect();
        sorted.dedup();
        for &a in &sorted {
            if !member[group.inv(a)] || sorted.iter().any(|&b| !member[group.mul(a, b)]) {
                return Err(Error::NotASubgroupChain("subset is not closed".into()));
            }
        }
        Ok(Subgroup {
            parent: Arc::clone(group),
            elements: sorted,
            member,
        })
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            parent: Arc::clone(group),
            elements: group.elements().collect(),
            member: vec![true; group.order()],
        }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::generated(group, &[])
    }

    pub fn center(group: &Arc<FiniteGroup>) -> Self {
        let central: Vec<usize> = group
            .elements()
            .filter(|&z| group.elements().all(|g| group.mul(z, g) == group.mul(g, z)))
            .collect();
        Self::generated(group, &central)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    /// `[G:H]`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        FiniteGroup::same(&self.parent, &other.parent) && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Normal in the parent group: `g^-1 H g = H` for every `g`.
    pub fn is_normal(&self) -> bool {
        self.parent.elements().all(|g| {
            self.elements
                .iter()
                .all(|&h| self.contains(self.parent.conjugate(h, g)))
        })
    }

    /// Normal inside `ambient`: `k^-1 H k = H` for every `k` in `ambient`.
    pub fn is_normal_in(&self, ambient: &Subgroup) -> bool {
        ambient.elements.iter().all(|&g| {
            self.elements
                .iter()
                .all(|&h| self.contains(self.parent.conjugate(h, g)))
        })
    }

    /// Largest element order; 1 for the trivial subgroup.
    pub fn exponent(&self) -> usize {
        self.elements
            .iter()
            .map(|&h| self.parent.element_order(h))
            .fold(1, super::lcm)
    }

    pub fn display(&self) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&x| self.parent.name(x)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// `G/H` with cosets ordered like the greedy left transversal, and the
    /// projection `g -> index of gH`.
    pub fn quotient(&self) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let transversal = Transversal::left(self);
        let g = &self.parent;
        let projection: Vec<usize> = g.elements().map(|x| transversal.locate(x).unwrap().0).collect();
        let reps = transversal.reps();
        let rows = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| projection[g.mul(a, b)]).collect())
            .collect();
        let names = reps.iter().map(|&t| format!("{}H", g.name(t))).collect();
        let quotient = FiniteGroup::build(rows, Some(names), false, Some(&format!("{}/H", g.label())))?;
        Ok((quotient, projection))
    }

    /// The commutator subgroup `[G, G]` (the alternating group inside `sym:n`).
    pub fn derived(group: &Arc<FiniteGroup>) -> Self {
        let mut gens = Vec::new();
        for a in group.elements() {
            for b in group.elements() {
                let c = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        Subgroup::generated(group, &gens)
    }

    /// Parses a subgroup description: `trivial`, `whole`, `center`,
    /// `derived` (alias `alternating`, `a3`, `a4`), or a comma-separated
    /// list of generators given by element name or index. Commas inside
    /// parentheses belong to the element name.
    pub fn parse(group: &Arc<FiniteGroup>, spec: &str) -> Result<Self> {
        match spec.trim() {
            "trivial" | "e" | "{e}" | "" => return Ok(Subgroup::trivial(group)),
            "whole" | "all" | "G" => return Ok(Subgroup::whole(group)),
            "center" | "centre" | "z" | "Z" => return Ok(Subgroup::center(group)),
            "derived" | "alternating" | "a3" | "a4" | "A3" | "A4" => return Ok(Subgroup::derived(group)),
            _ => {}
        }
        let mut gens = Vec::new();
        for token in split_top_level(spec) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let g = group
                .find_element(token)
                .ok_or_else(|| Error::Parse(format!("unknown element `{token}` in subgroup `{spec}`")))?;
            gens.push(g);
        }
        Ok(Subgroup::generated(group, &gens))
    }

    /// All abelian subgroups of the parent.
    pub fn all_abelian(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
        Self::all(group).into_iter().filter(Subgroup::is_abelian).collect()
    }

    /// All subgroups, found by iteratively adjoining elements to known subgroups.
    pub fn all(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![Subgroup::trivial(group)];
        let mut k = 0;
        while k < found.len() {
            let base = found[k].clone();
            for g in group.elements() {
                if base.contains(g) {
                    continue;
                }
                let mut gens = base.elements.clone();
                gens.push(g);
                let candidate = Subgroup::generated(group, &gens);
                if !found.contains(&candidate) {
                    found.push(candidate);
                }
            }
            k += 1;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        found
    }
}

fn split_top_level(spec: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&spec[start..]);
    out
}

/// A complete set of left coset representatives of `subgroup` inside `ambient`.
#[derive(Clone, Debug)]
pub struct Transversal {
    ambient: Subgroup,
    subgroup: Subgroup,
    reps: Vec<usize>,
    // element index -> (coset number, t_i^-1 * g)
    location: Vec<Option<(usize, usize)>>,
}

impl Transversal {
    /// Greedy transversal of `H` in its parent: scan elements by ascending
    /// index and take each one not yet covered. The identity comes first.
    pub fn left(subgroup: &Subgroup) -> Self {
        Self::left_in(&Subgroup::whole(subgroup.parent()), subgroup)
            .expect("a subgroup always has a transversal in its parent")
    }

    /// Greedy transversal of `subgroup` inside `ambient`.
    pub fn left_in(ambient: &Subgroup, subgroup: &Subgroup) -> Result<Self> {
        if !subgroup.is_subgroup_of(ambient) {
            return Err(Error::NotASubgroupChain(
                "subgroup is not contained in the ambient group".into(),
            ));
        }
        let g = ambient.parent();
        let mut covered = vec![false; g.order()];
        let mut reps = vec![g.identity()];
        for &h in subgroup.elements() {
            covered[h] = true;
        }
        for &x in ambient.elements() {
            if !covered[x] {
                reps.push(x);
                for &h in subgroup.elements() {
                    covered[g.mul(x, h)] = true;
                }
            }
        }
        Self::from_reps(ambient, subgroup, reps)
    }

    /// Validates explicit representatives.
    pub fn from_reps(ambient: &Subgroup, subgroup: &Subgroup, reps: Vec<usize>) -> Result<Self> {
        if !subgroup.is_subgroup_of(ambient) {
            return Err(Error::NotASubgroupChain(
                "subgroup is not contained in the ambient group".into(),
            ));
        }
        let g = ambient.parent();
        if reps.len() * subgroup.order() != ambient.order() {
            return Err(Error::InvalidTransversal(format!(
                "{} representatives for index {}",
                reps.len(),
                ambient.order() / subgroup.order()
            )));
        }
        let mut location = vec![None; g.order()];
        for (i, &t) in reps.iter().enumerate() {
            if !ambient.contains(t) {
                return Err(Error::InvalidTransversal(format!(
                    "representative {t} lies outside the ambient group"
                )));
            }
            for &h in subgroup.elements() {
                let x = g.mul(t, h);
                if location[x].is_some() {
                    return Err(Error::InvalidTransversal(format!(
                        "cosets of representatives overlap at element {x}"
                    )));
                }
                location[x] = Some((i, h));
            }
        }
        Ok(Transversal {
            ambient: ambient.clone(),
            subgroup: subgroup.clone(),
            reps,
            location,
        })
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn ambient(&self) -> &Subgroup {
        &self.ambient
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.ambient.parent()
    }

    /// `(i, h)` with `g = t_i * h`, or `None` when `g` lies outside the ambient group.
    #[inline]
    pub fn locate(&self, g: usize) -> Option<(usize, usize)> {
        self.location[g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn generated_subgroups() {
        let s3 = builtin_group("sym:3").unwrap();
        assert_eq!(Subgroup::generated(&s3, &[]).elements(), &[0]);
        assert_eq!(Subgroup::generated(&s3, &[3]).order(), 3);
        let z4 = builtin_group("cyclic:4").unwrap();
        assert_eq!(Subgroup::generated(&z4, &[2]).elements(), &[0, 2]);
    }

    #[test]
    fn parse_subgroup_specs() {
        let s3 = builtin_group("sym:3").unwrap();
        assert_eq!(Subgroup::parse(&s3, "a3").unwrap().elements(), &[0, 3, 4]);
        assert_eq!(Subgroup::parse(&s3, "(1 2)").unwrap().elements(), &[0, 1]);
        let v4 = builtin_group("product:2,2").unwrap();
        assert_eq!(Subgroup::parse(&v4, "(0,1)").unwrap().elements(), &[0, 1]);
        assert_eq!(Subgroup::parse(&v4, "(0,1),(1,0)").unwrap().order(), 4);
        let q8 = builtin_group("quaternion8").unwrap();
        assert_eq!(Subgroup::parse(&q8, "center").unwrap().elements(), &[0, 1]);
        assert!(Subgroup::parse(&q8, "w").is_err());
    }

    #[test]
    fn greedy_transversals() {
        let z4 = builtin_group("cyclic:4").unwrap();
        let h = Subgroup::generated(&z4, &[2]);
        assert_eq!(Transversal::left(&h).reps(), &[0, 1]);
        assert_eq!(Transversal::left(&Subgroup::whole(&z4)).reps(), &[0]);
        let s3 = builtin_group("sym:3").unwrap();
        let a3 = Subgroup::generated(&s3, &[3]);
        // first transposition in index order is (1 2) at index 1
        assert_eq!(Transversal::left(&a3).reps(), &[0, 1]);
    }

    #[test]
    fn transversal_tiles_group() {
        for key in ["sym:3", "dihedral:4", "quaternion8", "product:2,2"] {
            let g = builtin_group(key).unwrap();
            for h in Subgroup::all(&g) {
                let t = Transversal::left(&h);
                let mut hits = vec![0; g.order()];
                for &r in t.reps() {
                    for &x in h.elements() {
                        hits[g.mul(r, x)] += 1;
                    }
                }
                assert!(hits.iter().all(|&c| c == 1), "{key} {}", h.display());
            }
        }
    }

    #[test]
    fn bad_transversals_are_rejected() {
        let z4 = builtin_group("cyclic:4").unwrap();
        let h = Subgroup::generated(&z4, &[2]);
        let whole = Subgroup::whole(&z4);
        assert!(Transversal::from_reps(&whole, &h, vec![0, 2]).is_err());
        assert!(Transversal::from_reps(&whole, &h, vec![0]).is_err());
        assert!(Transversal::from_reps(&whole, &h, vec![0, 3]).is_ok());
    }

    #[test]
    fn normality_and_quotients() {
        let s3 = builtin_group("sym:3").unwrap();
        let a3 = Subgroup::generated(&s3, &[3]);
        assert!(a3.is_normal());
        assert!(!Subgroup::generated(&s3, &[1]).is_normal());
        let (q, proj) = a3.quotient().unwrap();
        assert_eq!(q.order(), 2);
        for a in s3.elements() {
            for b in s3.elements() {
                assert_eq!(proj[s3.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
        let (triv, _) = Subgroup::whole(&s3).quotient().unwrap();
        assert_eq!(triv.order(), 1);
        assert_eq!(Subgroup::generated(&s3, &[1]).quotient().unwrap_err(), Error::NotNormal);
        let z4 = builtin_group("cyclic:4").unwrap();
        let (q, _) = Subgroup::generated(&z4, &[2]).quotient().unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn subgroup_counts() {
        // S3 has 6 subgroups, D4 has 10, Q8 has 6.
        assert_eq!(Subgroup::all(&builtin_group("sym:3").unwrap()).len(), 6);
        assert_eq!(Subgroup::all(&builtin_group("dihedral:4").unwrap()).len(), 10);
        assert_eq!(Subgroup::all(&builtin_group("quaternion8").unwrap()).len(), 6);
    }
}
