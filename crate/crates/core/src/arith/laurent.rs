use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycloNumber;
use super::entry::UnitEntry;
use crate::error::{Error, Result};

/// Finite Laurent polynomial in the formal unimodular variable `x`, with
/// coefficients in `Z[ζ_L]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCyclo {
    order: u32,
    terms: BTreeMap<i32, CycloNumber>,
}

impl LaurentCyclo {
    pub fn zero(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            order,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycloNumber, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        let order = c.order();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { order, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycloNumber)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i32) -> Option<&CycloNumber> {
        self.terms.get(&exp)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        for (&e, c) in &other.terms {
            let sum = match self.terms.get(&e) {
                Some(prev) => prev.try_add(c)?,
                None => c.clone(),
            };
            if sum.is_zero() {
                self.terms.remove(&e);
            } else {
                self.terms.insert(e, sum);
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    /// Conjugation for unimodular `x`: the coefficient at `e` moves to `-e` and is conjugated.
    pub fn conj(&self) -> Self {
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(&e, c)| (-e, c.conj())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial with integer value `value`.
    pub fn is_constant(&self, value: i64) -> bool {
        if value == 0 {
            return self.is_zero();
        }
        self.terms.len() == 1
            && self.terms.get(&0).is_some_and(|c| {
                *c == CycloNumber::from_int(self.order, value).expect("order is positive")
            })
    }

    /// `|p(e^{i·angle})|` with `ζ_L = e^{2πi/L}`, in floating point.
    pub fn float_probe(&self, angle: f64) -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for (&e, c) in &self.terms {
            let (cr, ci) = c.to_complex();
            let t = angle * e as f64;
            let (xr, xi) = (t.cos(), t.sin());
            re += cr * xr - ci * xi;
            im += cr * xi + ci * xr;
        }
        re.hypot(im)
    }
}

/// `a · conj(b)` as a one-term Laurent polynomial, empty if either entry is zero.
pub fn entry_mul_conj(a: UnitEntry, b: UnitEntry, order: u32) -> Result<LaurentCyclo> {
    match (a, b) {
        (
            UnitEntry::Unit {
                root: ka,
                var_exp: ea,
            },
            UnitEntry::Unit {
                root: kb,
                var_exp: eb,
            },
        ) => {
            let c = CycloNumber::root(order, ka as i64 - kb as i64)?;
            Ok(LaurentCyclo::monomial(c, ea - eb))
        }
        _ => LaurentCyclo::zero(order),
    }
}

impl fmt::Display for LaurentCyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*x^{e}")?,
            }
        }
        Ok(())
    }
}
