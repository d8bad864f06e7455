//! Exact construction, verification, canonicalization, composition, counting
//! and exhaustive classification of unit weighing matrices of small weight.
//!
//! A unit weighing matrix `UW(n, w)` is an `n × n` matrix with entries in
//! `{0} ∪ T` satisfying `W W* = w I`. All arithmetic here is exact: entries
//! are roots of unity `ζ_L^k`, optionally times a power of one formal
//! unimodular variable `x`, and orthogonality is decided in `Z[ζ_L][x, x⁻¹]`.

pub mod arith;
pub mod blocks;
pub mod compose;
pub mod error;
pub mod format;
pub mod matrix;
pub mod search;

pub use arith::{CycloNumber, LaurentCyclo, UnitEntry};
pub use blocks::{BlockId, XValue};
pub use error::{Error, Result};
pub use matrix::UnitMatrix;
