//! Named existence problems, addressable by a short identifier.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{indicator_matrix, CellPredicate};

use super::check::check_predicate;
use super::{
    achievable_powers, adjacent_product_search, find_perm, prime_circle, unit_fraction_search, AchievablePowers,
    FractionKind, Parity, SearchError, SearchLimits, SearchOutcome, Topology, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Cells(CellKind, Option<Parity>),
    Fraction(FractionKind, Topology, bool),
    AdjacentPow2PlusOne,
    AdjacentFixedPower,
    PrimeCircle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CellKind {
    ProductPlusOne,
    ProductMinusOne,
    NormForm,
    SumOfSquares,
    PrimeSumPlusOne,
    Chen,
}

impl CellKind {
    fn predicate(self) -> CellPredicate {
        match self {
            Self::ProductPlusOne => CellPredicate::ProductPlusOnePrime,
            Self::ProductMinusOne => CellPredicate::ProductMinusOnePrime,
            Self::NormForm => CellPredicate::NormFormPrime,
            Self::SumOfSquares => CellPredicate::SumOfSquaresPrime,
            Self::PrimeSumPlusOne => CellPredicate::PrimeSumPlusOnePrime,
            Self::Chen => CellPredicate::PrimeProductMinusTwoPrime,
        }
    }
}

/// A named problem and the degrees for which a solution is expected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Problem {
    pub name: &'static str,
    pub summary: &'static str,
    /// Smallest degree the existence claim covers.
    pub expected_from: usize,
    /// Degrees excluded from the claim.
    pub exceptions: &'static [usize],
    shape: Shape,
}

impl Problem {
    /// Whether a witness is expected at degree `n`.
    pub fn expected(&self, n: usize) -> bool {
        n >= self.expected_from && !self.exceptions.contains(&n)
    }

    /// Smallest degree the search accepts.
    pub fn min_degree(&self) -> usize {
        match self.shape {
            Shape::Fraction(..) | Shape::AdjacentPow2PlusOne | Shape::PrimeCircle => 2,
            Shape::AdjacentFixedPower => 5,
            Shape::Cells(..) => 1,
        }
    }
}

use Shape::*;

pub const PROBLEMS: &[Problem] = &[
    Problem { name: "conj43a", summary: "k*pi(k)+1 prime for all k", expected_from: 1, exceptions: &[], shape: Cells(CellKind::ProductPlusOne, None) },
    Problem { name: "conj43b", summary: "k*pi(k)-1 prime for all k", expected_from: 3, exceptions: &[], shape: Cells(CellKind::ProductMinusOne, None) },
    Problem { name: "conj44a", summary: "k^2+k*pi(k)+pi(k)^2 prime for all k", expected_from: 1, exceptions: &[], shape: Cells(CellKind::NormForm, None) },
    Problem { name: "conj44b", summary: "k^2+pi(k)^2 prime for all k", expected_from: 1, exceptions: &[7], shape: Cells(CellKind::SumOfSquares, None) },
    Problem { name: "conj45", summary: "p_k+p_pi(k)+1 prime for all k", expected_from: 1, exceptions: &[], shape: Cells(CellKind::PrimeSumPlusOne, None) },
    Problem { name: "conj46-even", summary: "even pi with p_k*p_pi(k)-2 prime for all k", expected_from: 1, exceptions: &[], shape: Cells(CellKind::Chen, Some(Parity::Even)) },
    Problem { name: "conj46-odd", summary: "odd pi with p_k*p_pi(k)-2 prime for all k", expected_from: 3, exceptions: &[], shape: Cells(CellKind::Chen, Some(Parity::Odd)) },
    Problem { name: "s18a", summary: "sum of 1/(k+pi(k)) equals 1", expected_from: 6, exceptions: &[], shape: Fraction(FractionKind::SumReciprocal, Topology::Linear, true) },
    Problem { name: "eq44", summary: "sum of 1/(pi(k)pi(k+1)) equals 1", expected_from: 6, exceptions: &[], shape: Fraction(FractionKind::AdjProductReciprocal, Topology::Linear, true) },
    Problem { name: "eq45", summary: "sum of 1/(pi(k)+pi(k+1)) equals 1", expected_from: 7, exceptions: &[], shape: Fraction(FractionKind::AdjSumReciprocal, Topology::Linear, true) },
    Problem { name: "eq46", summary: "cyclic sum of 1/(pi(k)+pi(k+1)) equals 1", expected_from: 8, exceptions: &[], shape: Fraction(FractionKind::AdjSumReciprocal, Topology::Cyclic, true) },
    Problem { name: "eq47", summary: "sum of 1/(pi(k)-pi(k+1)) equals 0", expected_from: 6, exceptions: &[], shape: Fraction(FractionKind::AdjDifferenceReciprocal, Topology::Linear, false) },
    Problem { name: "eq48", summary: "cyclic sum of 1/(pi(k)-pi(k+1)) equals 0", expected_from: 8, exceptions: &[], shape: Fraction(FractionKind::AdjDifferenceReciprocal, Topology::Cyclic, false) },
    Problem { name: "eq49", summary: "sum of 1/(pi(k)^2-pi(k+1)^2) equals 0", expected_from: 8, exceptions: &[], shape: Fraction(FractionKind::AdjSquareDifferenceReciprocal, Topology::Linear, false) },
    Problem { name: "conj49", summary: "sum of pi(k)pi(k+1) is 2^m+1", expected_from: 2, exceptions: &[], shape: AdjacentPow2PlusOne },
    Problem { name: "conj49-fixed", summary: "powers of two equal to sum of pi(k)pi(k+1) with pi(n)=n", expected_from: 5, exceptions: &[], shape: AdjacentFixedPower },
    Problem { name: "prime-circle", summary: "circular arrangement with all adjacent sums prime", expected_from: 2, exceptions: &[], shape: PrimeCircle },
];

pub fn lookup(name: &str) -> Result<&'static Problem, SearchError> {
    PROBLEMS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| SearchError::UnknownProblem(name.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemResult {
    Search(SearchOutcome),
    Powers(AchievablePowers),
}

/// Solve problem `name` at degree `n`.
pub fn solve(name: &str, n: usize, limits: &SearchLimits) -> Result<ProblemResult, SearchError> {
    let problem = lookup(name)?;
    if n < problem.min_degree() {
        return Err(SearchError::DegreeTooSmall { n, min: problem.min_degree() });
    }
    let outcome = match problem.shape {
        Cells(kind, parity) => {
            let predicate = kind.predicate();
            let allowed = indicator_matrix(n, &predicate)?;
            let mut outcome = find_perm(&allowed, parity, limits)?;
            // restate the certificate in terms of the defining values
            if let Verdict::Witness { perm, certificate } = &mut outcome.verdict {
                *certificate = check_predicate(perm, &predicate, parity).map_err(SearchError::CertificateRejected)?;
            }
            outcome
        }
        Fraction(kind, topology, target_one) => {
            let target = if target_one { BigRational::one() } else { BigRational::zero() };
            unit_fraction_search(n, kind, topology, &target, limits)?
        }
        AdjacentPow2PlusOne => adjacent_product_search(n, limits)?,
        AdjacentFixedPower => return achievable_powers(n, limits).map(ProblemResult::Powers),
        PrimeCircle => prime_circle(n, limits)?,
    };
    Ok(ProblemResult::Search(outcome))
}
