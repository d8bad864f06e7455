//! Orthogonality solvers, necessary conditions, exhaustive classification and
//! the order-7 weight-5 refutation.

pub mod dfs;
pub mod orth;
pub mod refute;
mod ring;
pub mod zero_pattern;

pub use dfs::{dfs_classify, SearchConfig, SearchOutcome, DEFAULT_NODE_BUDGET};
pub use orth::{has_orthogonality, m_orth_solutions, orth_brute, OrthTuple, DEFAULT_BRUTE_BUDGET};
pub use refute::{uw75_refute, RefutationCertificate};
pub use zero_pattern::{
    disjoint_zero_triple, disjoint_zero_triple_in, zero_pattern_necessary, Verdict,
    ZeroPatternReport,
};
