//! Unit weighing matrices, their Gram verification, the equivalence
//! transforms T1–T6, the ≺ ordering and standard forms.

mod canonical;
mod standard;
mod transform;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::arith::{lcm, CycloNumber, LaurentCyclo, UnitEntry};
use crate::error::{Error, Result};

pub use canonical::{canonical_form, canonical_form_with_budget, DEFAULT_CANONICAL_BUDGET};
pub use standard::Standardized;
pub use transform::Transform;

/// An `n × n` matrix over `{0} ∪ {ζ_L^k x^e}` in which every row and every
/// column holds exactly `w` nonzero entries.
///
/// Construction checks the shape invariants only. Whether `W W* = w I` holds is
/// decided by [`UnitMatrix::gram_check`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitMatrix {
    n: usize,
    weight: usize,
    order: u32,
    vars: u8,
    entries: Vec<UnitEntry>,
}

impl UnitMatrix {
    pub fn new(weight: usize, order: u32, vars: u8, rows: Vec<Vec<UnitEntry>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                r.len()
            )));
        }
        Self::from_flat(n, weight, order, vars, rows.into_iter().flatten().collect())
    }

    pub(crate) fn from_flat(
        n: usize,
        weight: usize,
        order: u32,
        vars: u8,
        entries: Vec<UnitEntry>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if weight == 0 || weight > n {
            return Err(Error::InvalidMatrix(format!(
                "weight {weight} outside 1..={n}"
            )));
        }
        if vars > 1 {
            return Err(Error::InvalidMatrix(format!(
                "at most one formal variable is supported, got {vars}"
            )));
        }
        debug_assert_eq!(entries.len(), n * n);
        let m = Self {
            n,
            weight,
            order,
            vars,
            entries,
        };
        for (idx, e) in m.entries.iter().enumerate() {
            if let UnitEntry::Unit { root, var_exp } = *e {
                if root >= order {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) has root index {root} outside 0..{order}",
                        idx / n + 1,
                        idx % n + 1
                    )));
                }
                if vars == 0 && var_exp != 0 {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) uses x in a matrix without variables",
                        idx / n + 1,
                        idx % n + 1
                    )));
                }
            }
        }
        for i in 0..n {
            let count = m.row(i).iter().filter(|e| !e.is_zero()).count();
            if count != weight {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {count} nonzero entries, expected {weight}",
                    i + 1
                )));
            }
        }
        for j in 0..n {
            let count = (0..n).filter(|&i| !m.get(i, j).is_zero()).count();
            if count != weight {
                return Err(Error::InvalidMatrix(format!(
                    "column {} has {count} nonzero entries, expected {weight}",
                    j + 1
                )));
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Root order `L`: every unimodular entry is `ζ_L^k x^e`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of formal variables, 0 or 1.
    pub fn vars(&self) -> u8 {
        self.vars
    }

    pub fn is_symbolic(&self) -> bool {
        self.vars == 1
    }

    pub fn get(&self, i: usize, j: usize) -> UnitEntry {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[UnitEntry] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[UnitEntry]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<UnitEntry>> {
        self.rows().map(<[_]>::to_vec).collect()
    }

    /// True iff no entry carries a nonzero power of `x`.
    pub fn is_ground(&self) -> bool {
        self.entries.iter().all(|e| e.is_ground())
    }

    /// Re-express every entry over `ζ_M` where `L | M`.
    pub fn lift(&self, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if !order.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch(self.order, order));
        }
        Ok(Self {
            order,
            entries: self
                .entries
                .iter()
                .map(|e| e.lift(self.order, order))
                .collect(),
            ..self.clone()
        })
    }

    /// Replace the formal variable by `x = ζ_M^k`. The result lives over `lcm(L, M)`.
    pub fn substitute(&self, root: u32, root_order: u32) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::ZeroOrder);
        }
        let order = lcm(self.order, root_order);
        let step = (order / root_order) as i64;
        let lifted = self.lift(order)?;
        let entries = lifted
            .entries
            .iter()
            .map(|e| match *e {
                UnitEntry::Zero => UnitEntry::Zero,
                UnitEntry::Unit { root: k, var_exp } => {
                    let r =
                        (k as i64 + var_exp as i64 * root as i64 * step).rem_euclid(order as i64);
                    UnitEntry::root(r as u32)
                }
            })
            .collect();
        Ok(Self {
            vars: 0,
            entries,
            ..lifted
        })
    }

    /// Hermitian inner product `Σ_k w_ik conj(w_jk)` of rows `i` and `j`.
    pub fn row_inner_product(&self, i: usize, j: usize) -> LaurentCyclo {
        let l = self.order as usize;
        let mut acc: BTreeMap<i32, Vec<i64>> = BTreeMap::new();
        for (a, b) in self.row(i).iter().zip(self.row(j)) {
            if let (
                UnitEntry::Unit {
                    root: ka,
                    var_exp: ea,
                },
                UnitEntry::Unit {
                    root: kb,
                    var_exp: eb,
                },
            ) = (*a, *b)
            {
                let k = (ka as usize + l - kb as usize) % l;
                acc.entry(ea - eb).or_insert_with(|| vec![0; l])[k] += 1;
            }
        }
        let mut out = LaurentCyclo::zero(self.order).expect("order is positive");
        for (e, coeffs) in acc {
            let c = CycloNumber::from_coeffs(self.order, coeffs).expect("length is L");
            out.add_assign(&LaurentCyclo::monomial(c, e))
                .expect("same order");
        }
        out
    }

    /// Exact test of `W W* = w I`. With a formal variable the identity is
    /// checked symbolically, so it holds for every unimodular `x`.
    pub fn gram_check(&self) -> bool {
        let diag_ok =
            (0..self.n).all(|i| self.row_inner_product(i, i).is_constant(self.weight as i64));
        if !diag_ok {
            return false;
        }
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .collect();
        if self.n >= 24 {
            pairs
                .par_iter()
                .all(|&(i, j)| self.row_inner_product(i, j).is_zero())
        } else {
            pairs
                .iter()
                .all(|&(i, j)| self.row_inner_product(i, j).is_zero())
        }
    }

    /// First pair of rows whose inner product is wrong, if any.
    pub fn gram_violation(&self) -> Option<(usize, usize, LaurentCyclo)> {
        for i in 0..self.n {
            for j in i..self.n {
                let p = self.row_inner_product(i, j);
                let ok = if i == j {
                    p.is_constant(self.weight as i64)
                } else {
                    p.is_zero()
                };
                if !ok {
                    return Some((i, j, p));
                }
            }
        }
        None
    }

    /// Entries as `(root, var_exp)` codes with zero mapped past every root,
    /// matching the ≺ ordering.
    pub(crate) fn codes(&self) -> Vec<u32> {
        self.entries
            .iter()
            .map(|e| match e {
                UnitEntry::Zero => self.order,
                UnitEntry::Unit { root, .. } => *root,
            })
            .collect()
    }
}

impl fmt::Display for UnitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|e| crate::format::entry_token(*e)).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
