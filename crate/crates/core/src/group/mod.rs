//! Finite groups given by Cayley tables, with subgroups, transversals,
//! quotients and the characters of abelian subgroups.

mod catalog;
mod characters;
mod subgroup;

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};

pub use catalog::{builtin_group, catalog_keys};
pub use characters::{abelian_decomposition, characters, AbelianDecomposition, Character};
pub use subgroup::{Subgroup, Transversal};

/// Associativity is checked exhaustively up to this order unless skipped.
pub const ASSOCIATIVITY_CHECK_CAP: usize = 64;

/// A finite group as a validated Cayley table.
///
/// `table[i * order + j]` is the index of `g_i * g_j`.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
    label: String,
}

/// On-disk Cayley table: `{"order": n, "table": [[...]], "names": [...]}`.
#[derive(Debug, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a Cayley table and infers identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Arc<Self>> {
        Self::build(table, names, true, None)
    }

    /// Like [`FiniteGroup::from_table`], skipping the O(n^3) associativity
    /// check. For trusted fixtures only.
    pub fn from_trusted_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Arc<Self>> {
        Self::build(table, names, false, None)
    }

    pub fn from_json_str(text: &str) -> Result<Arc<Self>> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("cayley table: {e}")))?;
        if file.table.len() != file.order {
            return Err(Error::NotAGroup(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        Self::from_table(file.table, file.names)
    }

    pub(crate) fn build(
        rows: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        check_assoc: bool,
        label: Option<&str>,
    ) -> Result<Arc<Self>> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {i} is out of range")));
            }
            table.extend_from_slice(row);
        }
        for i in 0..n {
            if !is_permutation((0..n).map(|j| table[i * n + j]), n) {
                return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
            }
            if !is_permutation((0..n).map(|j| table[j * n + i]), n) {
                return Err(Error::NotAGroup(format!("column {i} is not a permutation")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        if check_assoc && n <= ASSOCIATIVITY_CHECK_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b];
                    for c in 0..n {
                        let left = table[ab * n + c];
                        let right = table[a * n + table[b * n + c]];
                        if left != right {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails for ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
                            )));
                        }
                    }
                }
            }
        }
        // Latin square plus identity guarantees a unique right inverse.
        let inverses: Vec<usize> = (0..n)
            .map(|i| (0..n).find(|&j| table[i * n + j] == identity).unwrap())
            .collect();
        for (i, &inv) in inverses.iter().enumerate() {
            if table[inv * n + i] != identity {
                return Err(Error::NotAGroup(format!("element {i} has no two-sided inverse")));
            }
        }
        let names = match names {
            Some(names) if names.len() == n => names,
            Some(names) => {
                return Err(Error::NotAGroup(format!(
                    "{} names supplied for order {n}",
                    names.len()
                )))
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(Arc::new(FiniteGroup {
            order: n,
            table,
            identity,
            inverses,
            names,
            label: label.map_or_else(|| format!("table:{n}"), str::to_string),
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Catalog key or `table:<n>` for groups read from a table.
    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 * h * g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn pow(&self, g: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by display name or decimal index.
    pub fn find_element(&self, key: &str) -> Option<usize> {
        self.names
            .iter()
            .position(|n| n == key)
            .or_else(|| key.parse::<usize>().ok().filter(|&i| i < self.order))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for h in self.elements() {
            if seen[h] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conjugate(h, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn are_conjugate(&self, a: usize, b: usize) -> bool {
        self.elements().any(|g| self.conjugate(a, g) == b)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    /// Whether two handles describe the same group (pointer or table equality).
    pub fn same(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
        Arc::ptr_eq(a, b) || (a.order == b.order && a.table == b.table)
    }

    /// Multiplication table as aligned text.
    pub fn table_text(&self) -> String {
        let w = self.names.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>w$} |", "");
        for j in self.elements() {
            let _ = write!(out, " {:>w$}", self.names[j]);
        }
        out.push('\n');
        for i in self.elements() {
            let _ = write!(out, "{:>w$} |", self.names[i]);
            for j in self.elements() {
                let _ = write!(out, " {:>w$}", self.names[self.mul(i, j)]);
            }
            out.push('\n');
        }
        out
    }
}

fn is_permutation(it: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for x in it {
        if seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
