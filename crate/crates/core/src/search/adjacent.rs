use std::time::Duration;

use serde::Serialize;

use crate::perm::Permutation;

use super::chain::{Chain, Closing};
use super::check::{check_adjacent_pow2_plus_one, check_adjacent_power};
use super::{Budget, Certificate, SearchError, SearchLimits, SearchOutcome};

const MAX_DEGREE: usize = 62;

fn product_weights(n: usize) -> Vec<i128> {
    let stride = n + 1;
    let mut w = vec![0i128; stride * stride];
    for a in 1..=n {
        for b in 1..=n {
            w[a * stride + b] = (a * b) as i128;
        }
    }
    w
}

fn check_degree(n: usize, min: usize) -> Result<(), SearchError> {
    if n < min {
        return Err(SearchError::DegreeTooSmall { n, min });
    }
    if n > MAX_DEGREE {
        return Err(SearchError::DimensionTooLarge { n, limit: MAX_DEGREE });
    }
    Ok(())
}

fn pow2_plus_one_in(lo: i128, hi: i128) -> bool {
    // smallest 2^m + 1 that is >= lo
    let m = if lo <= 2 { 0 } else { 128 - ((lo - 2) as u128).leading_zeros() };
    m < 126 && (1i128 << m) + 1 <= hi
}

/// Lexicographically smallest permutation whose adjacent-product sum
/// `Σ π(k)π(k+1)` has the form `2^m + 1`.
pub fn adjacent_product_search(n: usize, limits: &SearchLimits) -> Result<SearchOutcome, SearchError> {
    check_degree(n, 2)?;
    let weight = product_weights(n);
    let pool = ((1u64 << (n + 1)) - 1) & !1;
    let mut budget = Budget::new(limits);
    let mut chain = Chain::new(n + 1, &weight, pool, Closing::Open, pow2_plus_one_in, |t| {
        t >= 2 && ((t - 1) as u128).is_power_of_two()
    });
    let found = chain
        .run(0, 0, &mut budget)
        .then(|| Permutation::from_one_line(&chain.seq).expect("search yields a bijection"));
    budget.finish(found, check_adjacent_pow2_plus_one)
}

/// Every power of two reachable as `Σ π(k)π(k+1)` with `π(n) = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AchievablePowers {
    pub n: usize,
    /// Powers of two inside the range of possible sums.
    pub candidates: Vec<u64>,
    /// Each achievable power with its smallest witness.
    pub achievable: Vec<(u64, Permutation, Certificate)>,
    /// Candidates whose search ran out of budget.
    pub undecided: Vec<u64>,
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl AchievablePowers {
    /// Whether exactly one power is achievable; `None` while some candidate is undecided.
    pub fn unique(&self) -> Option<bool> {
        self.undecided.is_empty().then_some(self.achievable.len() == 1)
    }

    pub fn powers(&self) -> Vec<u64> {
        self.achievable.iter().map(|a| a.0).collect()
    }
}

/// Decide every candidate power for the fixed-endpoint form. The budget
/// applies to each candidate separately.
pub fn achievable_powers(n: usize, limits: &SearchLimits) -> Result<AchievablePowers, SearchError> {
    check_degree(n, 5)?;
    let weight = product_weights(n);
    let pool = ((1u64 << n) - 1) & !1;
    // Each sum has n-1 products, each between 1·2 and (n-1)·n.
    let (lo, hi) = (2 * (n as u64 - 1), (n as u64 - 1) * (n as u64) * (n as u64 - 1));
    let candidates: Vec<u64> = (0..64).map(|m| 1u64 << m).filter(|&p| p >= lo && p <= hi).collect();
    let mut report = AchievablePowers {
        n,
        candidates: candidates.clone(),
        achievable: Vec::new(),
        undecided: Vec::new(),
        nodes: 0,
        elapsed: Duration::ZERO,
    };
    for power in candidates {
        let goal = power as i128;
        let mut budget = Budget::new(limits);
        let mut chain = Chain::new(n + 1, &weight, pool, Closing::ToFixed(n), |a, b| a <= goal && goal <= b, |t| t == goal);
        let found = chain.run(0, 0, &mut budget).then(|| {
            let mut seq = chain.seq.clone();
            seq.push(n);
            Permutation::from_one_line(&seq).expect("search yields a bijection")
        });
        let outcome = budget.finish(found, |p| check_adjacent_power(p, power))?;
        report.nodes += outcome.nodes;
        report.elapsed += outcome.elapsed;
        match outcome.verdict {
            super::Verdict::Witness { perm, certificate } => report.achievable.push((power, perm, certificate)),
            super::Verdict::Unknown => report.undecided.push(power),
            super::Verdict::Empty => {}
        }
    }
    Ok(report)
}
