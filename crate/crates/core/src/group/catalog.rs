//! Built-in groups.
//!
//! Element orderings:
//! - `cyclic:n`: index `i` is the residue `i`.
//! - `product:d1,...,dk`: mixed radix with the last coordinate fastest.
//! - `dihedral:n` (order `2n`): index `a` is `r^a`, index `n + a` is `s r^a`.
//! - `sym:n`: permutations of `0..n` in lexicographic one-line order, composed
//!   right to left (`(p*q)(x) = p(q(x))`); index 0 is the identity.
//! - `quaternion8`: `1, -1, i, -i, j, -j, k, -k`.

use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Catalog keys with a short description, for listings.
pub fn catalog_keys() -> Vec<(&'static str, &'static str)> {
    vec![
        ("cyclic:<n>", "cyclic group Z/n"),
        ("product:<d1>,<d2>,...", "direct product Z/d1 x Z/d2 x ..."),
        ("dihedral:<n>", "dihedral group of order 2n (symmetries of an n-gon)"),
        ("sym:<n>", "symmetric group on n <= 4 points"),
        ("quaternion8", "quaternion group Q8"),
    ]
}

/// Looks up a catalog group such as `cyclic:4`, `product:2,2`, `dihedral:4`,
/// `sym:3` or `quaternion8`.
pub fn builtin_group(key: &str) -> Result<Arc<FiniteGroup>> {
    let unknown = || Error::UnknownCatalogKey(key.to_string());
    let (name, params) = match key.split_once(':') {
        Some((n, p)) => (n.trim(), p.trim()),
        None => (key.trim(), ""),
    };
    let numbers = || -> Result<Vec<usize>> {
        params
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| unknown()))
            .collect()
    };
    let one = || -> Result<usize> {
        match numbers()?.as_slice() {
            [n] if *n >= 1 => Ok(*n),
            _ => Err(unknown()),
        }
    };
    match name {
        "cyclic" => {
            let n = one()?;
            product_group(&[n], &format!("cyclic:{n}"))
        }
        "product" => {
            let dims = numbers()?;
            if dims.is_empty() || dims.contains(&0) {
                return Err(unknown());
            }
            let label = format!(
                "product:{}",
                dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            );
            product_group(&dims, &label)
        }
        "dihedral" => {
            let n = one()?;
            if n < 2 {
                return Err(unknown());
            }
            dihedral(n)
        }
        "sym" => {
            let n = one()?;
            if n > 4 {
                return Err(unknown());
            }
            symmetric(n)
        }
        "quaternion8" | "q8" if params.is_empty() => quaternion8(),
        _ => Err(unknown()),
    }
}

fn product_group(dims: &[usize], label: &str) -> Result<Arc<FiniteGroup>> {
    let order: usize = dims.iter().product();
    let coords = |mut x: usize| -> Vec<usize> {
        let mut c = vec![0; dims.len()];
        for (k, &d) in dims.iter().enumerate().rev() {
            c[k] = x % d;
            x /= d;
        }
        c
    };
    let index = |c: &[usize]| c.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x);
    let rows = (0..order)
        .map(|a| {
            let ca = coords(a);
            (0..order)
                .map(|b| {
                    let cb = coords(b);
                    let sum: Vec<usize> = (0..dims.len()).map(|k| (ca[k] + cb[k]) % dims[k]).collect();
                    index(&sum)
                })
                .collect()
        })
        .collect();
    let names = (0..order)
        .map(|x| {
            let c = coords(x);
            if dims.len() == 1 {
                c[0].to_string()
            } else {
                format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
        })
        .collect();
    FiniteGroup::build(rows, Some(names), true, Some(label))
}

fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
    // (f, a) stands for s^f r^a
    let decode = |x: usize| (x / n, x % n);
    let rows = (0..2 * n)
        .map(|x| {
            let (f, a) = decode(x);
            (0..2 * n)
                .map(|y| {
                    let (g, b) = decode(y);
                    let rot = if g == 0 { (a + b) % n } else { (b + n - a) % n };
                    ((f + g) % 2) * n + rot
                })
                .collect()
        })
        .collect();
    let rot_name = |a: usize| match a {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{a}"),
    };
    let names = (0..2 * n)
        .map(|x| {
            let (f, a) = decode(x);
            match (f, a) {
                (0, 0) => "e".to_string(),
                (0, _) => rot_name(a),
                _ => format!("s{}", rot_name(a)),
            }
        })
        .collect();
    FiniteGroup::build(rows, Some(names), true, Some(&format!("dihedral:{n}")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = p[x];
        }
        cycles.push(format!("({})", cycle.join(" ")));
    }
    if cycles.is_empty() {
        "e".to_string()
    } else {
        cycles.concat()
    }
}

fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
    let perms = permutations(n);
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::build(rows, Some(names), true, Some(&format!("sym:{n}")))
}

fn quaternion8() -> Result<Arc<FiniteGroup>> {
    // unit 0..4 = 1, i, j, k; index = 2 * unit + (negative as usize)
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let rows = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (u, neg) = unit_mul(x / 2, y / 2);
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + sign as usize
                })
                .collect()
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::build(rows, Some(names), true, Some("quaternion8"))
}
