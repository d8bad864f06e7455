//! Exact arithmetic over roots of unity and one formal unimodular variable.

mod cyclotomic;
mod entry;
mod laurent;

pub use cyclotomic::{cyclotomic_polynomial, gcd, lcm, totient, CycloNumber, IntPoly};
pub use entry::{entry_cmp, entry_less, UnitEntry};
pub use laurent::{entry_mul_conj, LaurentCyclo};
