//! Constructive involutions whose sums `k + π(k)` land in a doubling sequence.
//!
//! [`build_involution`] peels off a block `m..=n` that is reversed inside
//! `a_{k+1}`, where `a_k <= n < a_{k+1}` and `m = a_{k+1} - n`, then continues on
//! the prefix `1..m-1`. When `m == n` the whole of `1..n-1` is reversed inside
//! `a_k` instead. With powers of two this is the unique such permutation.

use thiserror::Error;

use crate::perm::Permutation;
use crate::sequences::{DoublingSequence, SequenceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("invalid sequence: {0}")]
    InvalidSequence(#[from] SequenceError),
    #[error("sequence has no term bracketing {0}")]
    NoBracket(u64),
    #[error("degree {0} is odd")]
    OddDegree(usize),
}

/// The involution built by the peeling recursion above, for any valid sequence.
pub fn build_involution(n: usize, seq: &DoublingSequence) -> Result<Permutation, ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroDegree);
    }
    let bound = 2 * n as u64;
    let terms = seq.terms_up_to(bound)?;
    crate::sequences::validate_prefix(&terms)
        .map_err(|v| ConstructError::InvalidSequence(SequenceError::Invalid(v)))?;

    // one-indexed scratch; images[0] unused
    let mut images = vec![0usize; n + 1];
    let mut top = n;
    while top > 0 {
        let t = top as u64;
        // a_0 = 1 precedes the listed terms
        let idx = terms.partition_point(|&a| a <= t);
        let lower = if idx == 0 { 1 } else { terms[idx - 1] };
        let upper = *terms.get(idx).ok_or(ConstructError::NoBracket(t))?;
        let m = (upper - t) as usize;
        for j in m..=top {
            images[j] = upper as usize - j;
        }
        if m == top && m > 1 {
            // upper = 2 * lower and lower = top
            for j in 1..top {
                images[j] = lower as usize - j;
            }
            break;
        }
        top = m - 1;
    }
    Ok(Permutation::from_one_line(&images[1..]).expect("construction yields a bijection"))
}

/// The unique permutation of `{1..n}` with every `k + π(k)` a power of two.
pub fn power_of_two_perm(n: usize) -> Result<Permutation, ConstructError> {
    build_involution(n, &DoublingSequence::PowersOfTwo)
}

/// The unique permutation of `{1..m}`, `m` even, with every `k + π(k)` of the form `2^a - 1`.
///
/// Interleaves the power-of-two permutation `σ` of `{1..m/2}`:
/// `π(2k) = 2σ(k) - 1` and `π(2k - 1) = 2σ(k)`.
pub fn mersenne_perm(m: usize) -> Result<Permutation, ConstructError> {
    if m == 0 {
        return Err(ConstructError::ZeroDegree);
    }
    if m % 2 == 1 {
        return Err(ConstructError::OddDegree(m));
    }
    let half = power_of_two_perm(m / 2)?;
    let mut images = vec![0usize; m];
    for k in 1..=m / 2 {
        let s = half.apply(k);
        images[2 * k - 1] = 2 * s - 1;
        images[2 * k - 2] = 2 * s;
    }
    Ok(Permutation::from_one_line(&images).expect("interleaving yields a bijection"))
}
