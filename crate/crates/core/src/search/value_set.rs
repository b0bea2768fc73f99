use std::collections::BTreeSet;

use serde::Serialize;

use super::SearchError;

/// Largest degree enumerated exhaustively.
pub const VALUE_SET_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueSetReport {
    pub n: usize,
    /// All values of `Σ k π(k)`, ascending.
    pub values: Vec<u64>,
    pub interval_lo: u64,
    pub interval_hi: u64,
    /// Integers of the interval that no permutation reaches.
    pub missing: Vec<u64>,
    pub equals_interval: bool,
}

/// The exact set `{Σ_k k π(k) : π ∈ S_n}` next to the interval
/// `[n(n+1)(n+2)/6, n(n+1)(2n+1)/6]`.
pub fn weighted_sum_value_set(n: usize) -> Result<ValueSetReport, SearchError> {
    if n > VALUE_SET_MAX_N {
        return Err(SearchError::DimensionTooLarge { n, limit: VALUE_SET_MAX_N });
    }
    if n == 0 {
        return Err(SearchError::DegreeTooSmall { n, min: 1 });
    }
    // values reachable after placing positions 1..=k, keyed by used-value mask
    let mut reach: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); 1 << n];
    reach[0].insert(0);
    for mask in 0usize..(1 << n) {
        let k = mask.count_ones() as u64 + 1;
        if k > n as u64 {
            continue;
        }
        let here = std::mem::take(&mut reach[mask]);
        for v in 0..n {
            if mask & (1 << v) == 0 {
                let next = &mut reach[mask | (1 << v)];
                next.extend(here.iter().map(|s| s + k * (v as u64 + 1)));
            }
        }
        reach[mask] = here;
    }
    let values: Vec<u64> = reach[(1 << n) - 1].iter().copied().collect();
    let m = n as u64;
    let (lo, hi) = (m * (m + 1) * (m + 2) / 6, m * (m + 1) * (2 * m + 1) / 6);
    let missing: Vec<u64> = (lo..=hi).filter(|v| values.binary_search(v).is_err()).collect();
    let equals_interval = missing.is_empty() && values.first() == Some(&lo) && values.last() == Some(&hi);
    Ok(ValueSetReport {
        n,
        values,
        interval_lo: lo,
        interval_hi: hi,
        missing,
        equals_interval,
    })
}
