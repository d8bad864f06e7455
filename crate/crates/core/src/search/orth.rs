//! Ordered tuples of roots of unity that sum to zero.
//!
//! A set `S ⊂ T` has m-orthogonality when `m` ratios `c_i = a_i conj(b_i)`
//! drawn from it sum to zero. Over the alphabet of `L`-th roots the ratios are
//! again `L`-th roots, so the question becomes which `m`-tuples of `ζ_L^k`
//! vanish.

use std::collections::BTreeSet;

use serde::Serialize;

use super::ring::RootTable;
use crate::error::{Error, Result};

/// Default cap on the number of tuples `orth_brute` may visit.
pub const DEFAULT_BRUTE_BUDGET: u64 = 50_000_000;

/// `c_i = ζ_L^{values[i]}` with `Σ c_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrthTuple {
    pub order: u32,
    pub values: Vec<u32>,
}

impl OrthTuple {
    pub fn m(&self) -> usize {
        self.values.len()
    }

    /// Re-checks the vanishing sum exactly.
    pub fn verify(&self) -> bool {
        RootTable::new(self.order).sum_is_zero(&self.values)
    }
}

fn tuples(order: u32, set: BTreeSet<Vec<u32>>) -> Vec<OrthTuple> {
    set.into_iter()
        .map(|values| OrthTuple { order, values })
        .collect()
}

/// All ordered `m`-tuples of `L`-th roots summing to zero, for `m ≤ 4`, built
/// from the closed-form description of each case:
///
/// * `m = 1`: none;
/// * `m = 2`: `c_2 = -c_1`;
/// * `m = 3`: a rotated set of cube roots of unity;
/// * `m = 4`: two antipodal pairs.
///
/// Output is sorted.
pub fn m_orth_solutions(m: usize, order: u32) -> Result<Vec<OrthTuple>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let l = order;
    let mut set = BTreeSet::new();
    match m {
        0 => {
            set.insert(Vec::new());
        }
        1 => {}
        2 if l.is_multiple_of(2) => {
            for c in 0..l {
                set.insert(vec![c, (c + l / 2) % l]);
            }
        }
        3 if l.is_multiple_of(3) => {
            for c in 0..l {
                for s in [l / 3, 2 * l / 3] {
                    set.insert(vec![c, (c + s) % l, (c + 2 * s) % l]);
                }
            }
        }
        4 if l.is_multiple_of(2) => {
            let h = l / 2;
            for (p, q) in [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])] {
                for u in 0..l {
                    for v in 0..l {
                        let mut t = vec![0; 4];
                        t[p[0]] = u;
                        t[p[1]] = (u + h) % l;
                        t[q[0]] = v;
                        t[q[1]] = (v + h) % l;
                        set.insert(t);
                    }
                }
            }
        }
        2..=4 => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "closed forms cover m <= 4, not {m}; use orth_brute"
            )))
        }
    }
    Ok(tuples(order, set))
}

/// Exhaustive enumeration of all `L^m` ordered tuples with an exact zero test.
pub fn orth_brute(m: usize, order: u32, budget: u64) -> Result<Vec<OrthTuple>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let total = (order as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let table = RootTable::new(order);
    let mut set = BTreeSet::new();
    let mut t = vec![0u32; m];
    loop {
        if table.sum_is_zero(&t) {
            set.insert(t.clone());
        }
        // odometer
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(tuples(order, set));
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < order {
                break;
            }
            t[pos] = 0;
        }
    }
}

fn prime_divisors(mut l: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= l {
        if l.is_multiple_of(p) {
            out.push(p);
            while l.is_multiple_of(p) {
                l /= p;
            }
        }
        p += 1;
    }
    if l > 1 {
        out.push(l);
    }
    out
}

/// Does some `m`-tuple of `L`-th roots sum to zero?
///
/// A positive answer is witnessed by a disjoint union of rotated regular
/// `p`-gons (`p` a prime dividing `L`). Otherwise every multiset of `m` roots
/// is checked exactly, which fails with [`Error::BudgetExceeded`] past `budget`
/// multisets.
pub fn has_orthogonality(m: usize, order: u32, budget: u64) -> Result<bool> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if m == 0 {
        return Ok(true);
    }
    let primes = prime_divisors(order);
    let mut reachable = vec![false; m + 1];
    reachable[0] = true;
    for &p in &primes {
        for s in p as usize..=m {
            if reachable[s - p as usize] {
                reachable[s] = true;
            }
        }
    }
    if reachable[m] {
        return Ok(true);
    }
    let table = RootTable::new(order);
    let mut acc = vec![0i32; table.dim];
    let mut visited = 0u64;
    // Multisets with the first root fixed to 1, since rotation preserves vanishing.
    table.add_to(&mut acc, 0);
    fn go(
        table: &RootTable,
        acc: &mut [i32],
        start: u32,
        left: usize,
        visited: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        if left == 0 {
            return Ok(acc.iter().all(|&c| c == 0));
        }
        for k in start..table.order {
            table.add_to(acc, k);
            let found = go(table, acc, k, left - 1, visited, budget)?;
            table.sub_from(acc, k);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
    go(&table, &mut acc, 0, m - 1, &mut visited, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_counts() {
        assert!(m_orth_solutions(1, 12).unwrap().is_empty());
        assert_eq!(m_orth_solutions(0, 12).unwrap().len(), 1);
        assert_eq!(m_orth_solutions(2, 12).unwrap().len(), 12);
        assert_eq!(m_orth_solutions(3, 12).unwrap().len(), 24);
        assert!(m_orth_solutions(3, 4).unwrap().is_empty());
        assert!(m_orth_solutions(5, 12).is_err());
    }

    #[test]
    fn brute_small_cases() {
        assert!(orth_brute(3, 4, 1000).unwrap().is_empty());
        let two = orth_brute(2, 2, 100).unwrap();
        let values: Vec<_> = two.iter().map(|t| t.values.clone()).collect();
        assert_eq!(values, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(orth_brute(6, 12, 1000), Err(Error::BudgetExceeded(1000)));
    }

    #[test]
    fn four_fourth_roots_pair_up() {
        for t in orth_brute(4, 4, 1000).unwrap() {
            let v = &t.values;
            let paired = (1..4).any(|j| {
                let rest: Vec<usize> = (1..4).filter(|&k| k != j).collect();
                (v[0] + 2) % 4 == v[j] && (v[rest[0]] + 2) % 4 == v[rest[1]]
            });
            assert!(paired, "{v:?}");
        }
    }

    #[test]
    fn orthogonality_existence() {
        assert!(!has_orthogonality(1, 12, 1000).unwrap());
        assert!(!has_orthogonality(3, 2, 1000).unwrap());
        assert!(has_orthogonality(3, 12, 1000).unwrap());
        assert!(has_orthogonality(5, 12, 1000).unwrap());
        assert!(!has_orthogonality(7, 4, 100_000).unwrap());
        assert!(!has_orthogonality(4, 15, 100_000).unwrap());
    }
}
