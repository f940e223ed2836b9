//! Matroid kernel for the class of matroids that are both bicircular and
//! lattice path.
//!
//! Every matroid is held as an explicit basis family over the ground set
//! `1..=n` ([`BasisMatroid`]). The remaining modules build matroids from set
//! families, lattice path regions and multigraphs, decide membership in the
//! two classes, and check the excluded-minor characterization of their
//! intersection against exhaustive corpora.

pub mod bicircular;
pub mod catalog;
pub mod classifier;
pub mod format;
pub mod isomin;
pub mod latticepath;
pub mod matroid;
pub mod set;
pub mod transversal;

pub use bicircular::{Edge, MultiGraph};
pub use catalog::{CatalogEntry, Family, Group, Representation};
pub use classifier::{Method, Verdict};
pub use isomin::{MinorWitness, Profile};
pub use latticepath::{LatticePathPresentation, StandardPresentation, Step};
pub use matroid::{BasisMatroid, Separation};
pub use set::ElementSet;
pub use transversal::SetFamily;

use thiserror::Error;

/// Largest ground set any matroid may have. Rank tables are indexed by
/// subset, so this bounds memory at `2^MAX_ELEMENTS` bytes per matroid.
pub const MAX_ELEMENTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bases have unequal sizes ({first} and {other})")]
    NonUniformBases { first: usize, other: usize },
    #[error("basis exchange fails: A={a:?}, B={b:?}, removing {removed} admits no replacement")]
    ExchangeViolation {
        a: Vec<usize>,
        b: Vec<usize>,
        removed: usize,
    },
    #[error("empty basis family")]
    NoBases,
    #[error("element {element} outside ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("contraction and deletion sets overlap")]
    OverlappingSets,
    #[error("free extension of a rank-0 matroid")]
    RankZero,
    #[error("target rank {target} outside 1..={rank}")]
    BadTargetRank { target: usize, rank: usize },
    #[error("ground set of {n} elements exceeds the limit of {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },
    #[error("graph has a free edge")]
    HasFreeEdge,
    #[error("set is not a circuit-hyperplane")]
    NotCircuitHyperplane,
    #[error("search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("matroid has no circuit")]
    NoCircuit,
    #[error("girth {0} is below 4")]
    GirthTooSmall(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Search limits shared by the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Backtracking nodes allowed per top-level search.
    pub node_budget: u64,
    /// Largest ground set accepted by the membership decisions.
    pub max_elements: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            node_budget: 100_000_000,
            max_elements: 10,
        }
    }
}

impl Config {
    pub fn budget(&self) -> Budget {
        Budget::new(self.node_budget)
    }
}

/// Node counter for a backtracking search. Exhausting it is an error, never
/// a negative answer.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}
