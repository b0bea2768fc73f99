//! Pruned backtracking over permutations.
//!
//! Every search reports one of three verdicts: a witness (lexicographically
//! smallest in one-line order, re-validated by [`check`]), `Empty` after an
//! exhaustive traversal, or `Unknown` when the node or time budget runs out.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::linalg::LinalgError;
use crate::perm::Permutation;
use crate::primes::PrimeError;

mod adjacent;
mod cells;
mod chain;
pub mod check;
mod circle;
mod fractions;
pub mod problems;
mod value_set;

pub use adjacent::{achievable_powers, adjacent_product_search, AchievablePowers};
pub use cells::{find_perm, has_perfect_matching};
pub use circle::prime_circle;
pub use fractions::{unit_fraction_search, FractionKind, Topology};
pub use value_set::{weighted_sum_value_set, ValueSetReport, VALUE_SET_MAX_N};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error("degree {n} is too small (need at least {min})")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("dimension {n} exceeds the limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },
    #[error("illegal combination: {0}")]
    BadCombination(String),
    #[error("scaled arithmetic would overflow at degree {0}")]
    TooLarge(usize),
    #[error("witness failed independent validation: {0}")]
    CertificateRejected(String),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn admits(self, p: &Permutation) -> bool {
        match self {
            Self::Even => p.is_even(),
            Self::Odd => !p.is_even(),
        }
    }
}

/// Budget and pruning switches for one search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub timeout: Duration,
    /// Matching-based feasibility pruning for cell searches.
    pub hall_pruning: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
            timeout: DEFAULT_TIMEOUT,
            hall_pruning: true,
        }
    }
}

impl From<&crate::config::Limits> for SearchLimits {
    fn from(l: &crate::config::Limits) -> Self {
        Self {
            max_nodes: l.search_node_budget,
            timeout: l.search_timeout(),
            hall_pruning: true,
        }
    }
}

/// Re-validated evidence for a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub property: String,
    /// One recomputed value per constrained term.
    pub terms: Vec<String>,
    /// Exact total where the property is a sum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Witness {
        perm: Permutation,
        certificate: Certificate,
    },
    Empty,
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Witness { .. } => "witness",
            Self::Empty => "empty",
            Self::Unknown => "unknown",
        }
    }

    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            Self::Witness { perm, .. } => Some(perm),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Node counter with a wall-clock deadline.
pub(crate) struct Budget {
    nodes: u64,
    max_nodes: u64,
    start: Instant,
    timeout: Duration,
    exhausted: bool,
}

impl Budget {
    pub(crate) fn new(limits: &SearchLimits) -> Self {
        Self {
            nodes: 0,
            max_nodes: limits.max_nodes,
            start: Instant::now(),
            timeout: limits.timeout,
            exhausted: false,
        }
    }

    /// Count one node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes % 4096 == 0 && self.start.elapsed() > self.timeout)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    /// Wrap up a search: a found sequence becomes a certified witness.
    pub(crate) fn finish(
        &self,
        found: Option<Permutation>,
        certify: impl FnOnce(&Permutation) -> Result<Certificate, String>,
    ) -> Result<SearchOutcome, SearchError> {
        let verdict = match found {
            Some(perm) => {
                let certificate = certify(&perm).map_err(SearchError::CertificateRejected)?;
                Verdict::Witness { perm, certificate }
            }
            None if self.exhausted => Verdict::Unknown,
            None => Verdict::Empty,
        };
        Ok(SearchOutcome {
            verdict,
            nodes: self.nodes,
            elapsed: self.elapsed(),
        })
    }
}
