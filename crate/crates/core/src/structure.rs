//! Small-group structure probing used to report kernels and quotients.

use std::fmt;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::{lcm, Permutation};

/// Largest order probed by [`describe`].
pub const DEFAULT_STRUCTURE_CAP: u128 = 1_000_000;

/// Named recognition only runs up to this order.
pub const NAMING_LIMIT: u128 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDescription {
    pub order: u128,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub exponent: u64,
    /// Invariant factors, each dividing the next; empty for non-abelian groups.
    pub abelian_invariants: Vec<u64>,
    pub name: Option<String>,
}

impl StructureDescription {
    /// Short label: the recognized name when there is one, otherwise the
    /// abelian invariants or the order.
    pub fn label(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        if self.is_cyclic {
            return format!("C{}", self.order);
        }
        if self.is_abelian {
            return product_label(&self.abelian_invariants);
        }
        format!("non-abelian of order {}", self.order)
    }
}

impl fmt::Display for StructureDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn product_label(invariants: &[u64]) -> String {
    invariants
        .iter()
        .map(|n| format!("C{n}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

pub fn describe(group: &PermGroup) -> Result<StructureDescription> {
    describe_with_cap(group, DEFAULT_STRUCTURE_CAP)
}

pub fn describe_with_cap(group: &PermGroup, cap: u128) -> Result<StructureDescription> {
    let elements = group.elements(cap)?;
    let order = group.order();
    let gens = group.generators();
    let is_abelian = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a));
    let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
    let exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
    let abelian_invariants = if is_abelian {
        invariant_factors(&orders)
    } else {
        Vec::new()
    };
    let is_cyclic = is_abelian && abelian_invariants.len() <= 1;
    let name = if order <= NAMING_LIMIT {
        recognize(
            order,
            is_abelian,
            is_cyclic,
            &abelian_invariants,
            &elements,
            &orders,
        )
    } else {
        None
    };
    Ok(StructureDescription {
        order,
        is_abelian,
        is_cyclic,
        exponent,
        abelian_invariants,
        name,
    })
}

/// Invariant factors of an abelian group from the multiset of its element
/// orders: `#{g : g^(p^j) = 1} = p^(s_j)` counts the cyclic p-factors.
fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for p in prime_factors(n) {
        let mut exps = Vec::new();
        let mut logs = vec![0u32];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u64;
            let log = count.ilog(p);
            if log == *logs.last().unwrap() {
                break;
            }
            logs.push(log);
        }
        // at_least[j] = number of factors of order >= p^j
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        for (j, &r) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(r - next) {
                exps.push(p.pow(j as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let rank = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..rank)
        .map(|i| per_prime.iter().filter_map(|e| e.get(i)).product())
        .collect();
    factors.reverse();
    factors
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn recognize(
    order: u128,
    is_abelian: bool,
    is_cyclic: bool,
    invariants: &[u64],
    elements: &[Permutation],
    orders: &[u64],
) -> Option<String> {
    if is_cyclic {
        return Some(format!("C{order}"));
    }
    if is_abelian {
        if invariants == [2, 2] {
            return Some("V4".into());
        }
        return Some(product_label(invariants));
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if order == 8 && involutions == 1 {
        return Some("Q8".into());
    }
    let half = (order / 2) as u64;
    for (r, _) in elements.iter().zip(orders).filter(|(_, &o)| o == half) {
        let cyclic: Vec<Permutation> = (0..half as i64).map(|i| r.pow(i)).collect();
        let r_inv = r.inverse();
        let dihedral = elements
            .iter()
            .zip(orders)
            .any(|(s, &o)| o == 2 && !cyclic.contains(s) && r.conjugate_by(s) == r_inv);
        if dihedral {
            return Some(format!("D{order}"));
        }
    }
    None
}
