//! Computation with finite permutation groups, built around full element
//! enumeration: every group is materialized as a canonical sorted element
//! table, subgroups are bitsets over that table, and the subgroup lattice is
//! enumerated once per group and reused by every predicate.
//!
//! On top of the core sit the supplement predicates (complements,
//! M-supplements, the class `M(p^k)`), the structural characterizations they
//! are checked against, and a corpus of built-in groups plus a `.grp` file
//! format for driving the verification suite in `suite`.

pub mod arith;
mod bitset;
pub mod classify;
pub mod corpus;
pub mod exec;
pub mod group;
pub mod groupfile;
pub mod lattice;
pub mod msupp;
pub mod perm;
pub mod quotient;
mod schreier;
pub mod subgroup;
pub mod suite;
pub mod theorems;

pub use bitset::Bitset;
pub use classify::{classify_small, scalar_action, ScalarActionWitness, StructureTag};
pub use corpus::{builtin_corpus, CorpusEntry, ExpectedFact, FactSource, GroupSpec};
pub use exec::{map_collect, ExecMode};
pub use group::{FiniteGroup, GroupConfig, DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_BUDGET};
pub use groupfile::{parse_group_file, write_group_file};
pub use lattice::SubgroupLattice;
pub use msupp::{
    in_m_class, in_m_class_with, in_m_class_within, is_complemented, is_m_supplemented,
    m_supplement_in, MClassQuery, MClassReport, SupplementOutcome,
};
pub use perm::Permutation;
pub use quotient::Quotient;
pub use subgroup::SubgroupRef;
pub use suite::{run_suite, run_suite_groups, CheckId, SuiteOptions, SuiteReport, SuiteRow};
pub use theorems::{
    corollary_b_rhs, corollary_c_rhs, theorem_a_rhs, theorem_d_classify, theorem_d_classify_given,
    CriticalTypeCase, Verdict,
};

use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is not usable (must be between 1 and 65535)")]
    InvalidDegree(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image table is not a bijection")]
    NotABijection,
    #[error("cycle text is malformed: {0}")]
    MalformedCycles(String),
    #[error("point {point} repeats across cycles")]
    RepeatedPoint { point: usize },
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group order exceeds cap {cap} (order is at least {reached})")]
    OrderCapExceeded { cap: usize, reached: usize },
    #[error("subgroup count of group of order {order} exceeds budget {budget}")]
    SubgroupBudgetExceeded { budget: usize, order: usize },
    #[error("member set is not closed under products")]
    NotASubgroup,
    #[error("subgroups belong to different parent groups")]
    DifferentParents,
    #[error("subgroup of order {order} is not normal")]
    NotNormal { order: usize },
    #[error("subgroup of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u64 },
    #[error("p^k = {p}^{k} exceeds the p-part {p_part} of the group order")]
    HypothesisViolation { p: u64, k: u32, p_part: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group file, line {line}: {msg}")]
    GroupFile { line: usize, msg: String },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
