//! Elements of the cyclotomic integer ring `Z[ζ_L]`.
//!
//! Numbers are stored in the redundant basis `ζ^0, …, ζ^{L-1}` with `ζ^L = 1`.
//! Two coefficient vectors may describe the same number; equality and zero
//! tests reduce modulo the cyclotomic polynomial `Φ_L`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree.
pub type IntPoly = Vec<i64>;

fn checked(value: Option<i64>) -> i64 {
    value.expect("cyclotomic coefficient overflow")
}

/// Remainder of `num` modulo the monic polynomial `den`. Returns `(quotient, remainder)`.
pub(crate) fn poly_divmod_monic(num: &[i64], den: &[i64]) -> (IntPoly, IntPoly) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for top in (dd..rem.len()).rev() {
        let lead = rem[top];
        if lead == 0 {
            continue;
        }
        quot[top - dd] = lead;
        for (k, &d) in den.iter().enumerate() {
            let idx = top - dd + k;
            rem[idx] = checked(rem[idx].checked_sub(checked(lead.checked_mul(d))));
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

fn compute_cyclotomic(order: u32) -> IntPoly {
    // X^L - 1
    let mut num = vec![0i64; order as usize + 1];
    num[0] = -1;
    num[order as usize] = 1;
    for d in 1..order {
        if order.is_multiple_of(d) {
            let (q, r) = poly_divmod_monic(&num, &cyclotomic_cached(d));
            debug_assert!(r.iter().all(|&c| c == 0));
            num = q;
        }
    }
    num
}

fn cyclotomic_cached(order: u32) -> Arc<IntPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&order) {
        return p.clone();
    }
    let poly = Arc::new(compute_cyclotomic(order));
    cache.lock().unwrap().insert(order, poly.clone());
    poly
}

/// The cyclotomic polynomial `Φ_L`, obtained by dividing `X^L - 1` by `Φ_d` for
/// every proper divisor `d` of `L`.
pub fn cyclotomic_polynomial(order: u32) -> Result<IntPoly> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(cyclotomic_cached(order).as_ref().clone())
}

/// Euler's totient, i.e. the degree of `Φ_L`.
pub fn totient(order: u32) -> u32 {
    (1..=order).filter(|&k| gcd(k, order) == 1).count() as u32
}

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CycloNumber {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycloNumber {
    pub fn zero(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            order,
            coeffs: vec![0; order as usize],
        })
    }

    pub fn from_int(order: u32, value: i64) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    /// `ζ_L^k`, with `k` taken modulo `L`.
    pub fn root(order: u32, k: i64) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[k.rem_euclid(order as i64) as usize] = 1;
        Ok(z)
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<i64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if coeffs.len() != order as usize {
            return Err(Error::InvalidMatrix(format!(
                "expected {order} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { order, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch(self.order, other.order))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| checked(a.checked_add(*b)))
            .collect();
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let l = self.order as usize;
        let mut coeffs = vec![0i64; l];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % l;
                coeffs[k] = checked(coeffs[k].checked_add(checked(a.checked_mul(b))));
            }
        }
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| checked(c.checked_neg()))
                .collect(),
        }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let l = self.order as usize;
        let mut coeffs = vec![0i64; l];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(l - k) % l] = c;
        }
        Self {
            order: self.order,
            coeffs,
        }
    }

    /// Re-express over `ζ_M` where `L | M`.
    pub fn lift(&self, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if !order.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch(self.order, order));
        }
        let step = (order / self.order) as usize;
        let mut coeffs = vec![0i64; order as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c;
        }
        Ok(Self { order, coeffs })
    }

    /// Coordinates in the power basis `1, ζ, …, ζ^{φ(L)-1}`; a canonical representative.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_cached(self.order);
        let (_, rem) = poly_divmod_monic(&self.coeffs, &phi);
        let mut rem = rem;
        rem.resize(phi.len() - 1, 0);
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Floating-point value; diagnostic use only.
    pub fn to_complex(&self) -> (f64, f64) {
        let l = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let t = std::f64::consts::TAU * k as f64 / l;
                (re + c as f64 * t.cos(), im + c as f64 * t.sin())
            })
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        let m = lcm(self.order, other.order);
        let a = self.lift(m).expect("lcm is a multiple");
        let b = other.lift(m).expect("lcm is a multiple");
        a.try_sub(&b).expect("same order").is_zero()
    }
}

impl Eq for CycloNumber {}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{k}")?,
                _ => write!(f, "{a}*z{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
