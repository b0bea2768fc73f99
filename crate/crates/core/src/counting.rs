//! Exact counts of permutations confined to the 1-cells of a 0/1 matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::linalg::{determinant, indicator_matrix, CellPredicate, ExactMatrix, LinalgError};
use crate::sequences::DoublingSequence;

/// Default cap for [`count_constrained`].
pub const DEFAULT_COUNT_MAX_N: usize = 24;
// Partial counts after r rows are at most r!, and 33! < 2^128.
const HARD_MAX_N: usize = 32;

/// Number of permutations `π` with `allowed(k, π(k)) = 1` for every `k`.
pub fn count_constrained(allowed: &ExactMatrix) -> Result<BigUint, LinalgError> {
    count_constrained_capped(allowed, DEFAULT_COUNT_MAX_N)
}

/// Row-by-row DP over the set of used columns. Only reachable column sets are
/// stored, one layer per row, so sparse constraints stay cheap.
pub fn count_constrained_capped(allowed: &ExactMatrix, max_n: usize) -> Result<BigUint, LinalgError> {
    let n = allowed.dim();
    let limit = max_n.min(HARD_MAX_N);
    if !allowed.is_zero_one() {
        return Err(LinalgError::NotZeroOne);
    }
    if n > limit {
        return Err(LinalgError::DimensionTooLarge { n, limit });
    }
    let rows = allowed.row_masks()?;
    let mut layer: Vec<(u32, u128)> = vec![(0, 1)];
    let mut next: Vec<(u32, u128)> = Vec::new();
    for &row in &rows {
        next.clear();
        for &(used, ways) in &layer {
            let mut free = row as u32 & !used;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                next.push((used | bit, ways));
                free ^= bit;
            }
        }
        next.sort_unstable_by_key(|&(mask, _)| mask);
        layer.clear();
        for &(mask, ways) in &next {
            match layer.last_mut() {
                Some((m, w)) if *m == mask => *w += ways,
                _ => layer.push((mask, ways)),
            }
        }
        if layer.is_empty() {
            return Ok(BigUint::zero());
        }
    }
    Ok(layer.iter().map(|&(_, w)| BigUint::from(w)).sum())
}

/// `(even, odd)` counts, split by sign via `(per ± det) / 2`.
pub fn count_even_odd(allowed: &ExactMatrix) -> Result<(BigUint, BigUint), LinalgError> {
    count_even_odd_capped(allowed, DEFAULT_COUNT_MAX_N)
}

pub fn count_even_odd_capped(allowed: &ExactMatrix, max_n: usize) -> Result<(BigUint, BigUint), LinalgError> {
    let per = BigInt::from_biguint(Sign::Plus, count_constrained_capped(allowed, max_n)?);
    let det = determinant(allowed);
    let even: BigInt = (&per + &det) / 2;
    let odd: BigInt = (&per - &det) / 2;
    debug_assert!((BigInt::from(2) * &even - &per - &det).is_zero());
    assert!(
        !even.is_negative() && !odd.is_negative(),
        "|det| exceeds per for a 0/1 matrix"
    );
    Ok((even.magnitude().clone(), odd.magnitude().clone()))
}

/// The named count sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// All sums `k + π(k)` Fibonacci numbers.
    Fibonacci,
    /// All sums `k + π(k)` prime.
    PrimeSum,
    /// All sums `k + π(k)` powers of two.
    PowerOfTwo,
    /// Even permutations with every `p_k p_π(k) - 2` prime.
    ChenEven,
}

impl CountKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Fibonacci => "fib",
            Self::PrimeSum => "prime-sum",
            Self::PowerOfTwo => "pow2",
            Self::ChenEven => "chen-even",
        }
    }

    pub fn predicate(self) -> CellPredicate {
        match self {
            Self::Fibonacci => CellPredicate::SumInSequence(DoublingSequence::FibonacciTail),
            Self::PrimeSum => CellPredicate::SumPrime,
            Self::PowerOfTwo => CellPredicate::SumPowerOfTwo,
            Self::ChenEven => CellPredicate::PrimeProductMinusTwoPrime,
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fib" => Ok(Self::Fibonacci),
            "prime-sum" => Ok(Self::PrimeSum),
            "pow2" => Ok(Self::PowerOfTwo),
            "chen-even" => Ok(Self::ChenEven),
            _ => Err(format!("unknown count kind `{s}`")),
        }
    }
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_opt_decimal<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub kind: String,
    #[serde(serialize_with = "as_decimal")]
    pub total: BigUint,
    #[serde(serialize_with = "as_opt_decimal", skip_serializing_if = "Option::is_none")]
    pub even: Option<BigUint>,
    #[serde(serialize_with = "as_opt_decimal", skip_serializing_if = "Option::is_none")]
    pub odd: Option<BigUint>,
}

impl CountReport {
    /// The sequence term this report stands for (`even` for the Chen kind).
    pub fn value(&self) -> &BigUint {
        self.even.as_ref().unwrap_or(&self.total)
    }
}

/// Reports for `n = 1..=n_max`.
pub fn sequence_counts(kind: CountKind, n_max: usize) -> Result<Vec<CountReport>, LinalgError> {
    sequence_counts_capped(kind, n_max, DEFAULT_COUNT_MAX_N)
}

pub fn sequence_counts_capped(kind: CountKind, n_max: usize, max_n: usize) -> Result<Vec<CountReport>, LinalgError> {
    let limit = max_n.min(HARD_MAX_N);
    if n_max > limit {
        return Err(LinalgError::DimensionTooLarge { n: n_max, limit });
    }
    let predicate = kind.predicate();
    (1..=n_max)
        .map(|n| {
            let m = indicator_matrix(n, &predicate)?;
            let report = if kind == CountKind::ChenEven {
                let (even, odd) = count_even_odd_capped(&m, max_n)?;
                CountReport {
                    n,
                    kind: kind.label().into(),
                    total: &even + &odd,
                    even: Some(even),
                    odd: Some(odd),
                }
            } else {
                CountReport {
                    n,
                    kind: kind.label().into(),
                    total: count_constrained_capped(&m, max_n)?,
                    even: None,
                    odd: None,
                }
            };
            Ok(report)
        })
        .collect()
}
