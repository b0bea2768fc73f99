//! Distinct-multiple orderings in torsion-free groups and in `Z/mZ`, the
//! multiplicative complete-mapping check, and weighted sumsets.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::perm::Permutation;
use crate::primes::{is_prime, least_prime_factor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdditiveError {
    #[error("input is empty")]
    EmptyInput,
    #[error("input contains a repeated element")]
    DuplicateInput,
    #[error("elements are not pairwise distinct")]
    NotDistinct,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{count} cases exceed the budget {budget}")]
    TooLarge { count: u128, budget: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

/// Fill positions in the order given by `positions` (each in `1..=n`), taking
/// candidates in index order, until the values `value(k, i)` are pairwise
/// distinct. Returns `order[k-1] = i`.
fn distinct_ordering<V: Eq + std::hash::Hash + Clone>(
    positions: &[usize],
    value: impl Fn(usize, usize) -> V,
) -> Option<Vec<usize>> {
    fn go<V: Eq + std::hash::Hash + Clone>(
        positions: &[usize],
        value: &impl Fn(usize, usize) -> V,
        used: &mut [bool],
        seen: &mut HashSet<V>,
        order: &mut [usize],
    ) -> bool {
        let Some((&k, rest)) = positions.split_first() else {
            return true;
        };
        for i in 0..used.len() {
            if used[i] {
                continue;
            }
            let v = value(k, i);
            if !seen.insert(v.clone()) {
                continue;
            }
            used[i] = true;
            order[k - 1] = i;
            if go(rest, value, used, seen, order) {
                return true;
            }
            used[i] = false;
            seen.remove(&v);
        }
        false
    }
    let n = positions.len();
    let mut used = vec![false; n];
    let mut order = vec![0; n];
    go(positions, &value, &mut used, &mut HashSet::new(), &mut order).then_some(order)
}

/// The lexicographically smallest permutation `π` with the integers
/// `k · a[π(k)]` pairwise distinct.
pub fn distinct_multiple_order(a: &[i64]) -> Result<Permutation, AdditiveError> {
    if a.is_empty() {
        return Err(AdditiveError::EmptyInput);
    }
    if a.iter().collect::<HashSet<_>>().len() != a.len() {
        return Err(AdditiveError::DuplicateInput);
    }
    let positions: Vec<usize> = (1..=a.len()).collect();
    let order = distinct_ordering(&positions, |k, i| k as i128 * a[i] as i128)
        .expect("distinct elements of a torsion-free group always admit an ordering");
    let images: Vec<usize> = order.iter().map(|&i| i + 1).collect();
    Ok(Permutation::from_one_line(&images).expect("ordering is a bijection"))
}

/// Additive order of `x` in `Z/mZ`.
pub fn additive_order(x: u64, m: u64) -> u64 {
    m / x.gcd(&m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conj41Report {
    pub m: u64,
    pub n: usize,
    pub least_prime_factor: u64,
    pub reduced: bool,
    /// All `n`-subsets of `Z/mZ`.
    pub subsets_total: u128,
    /// Subsets actually searched (orbit representatives when reduced).
    pub subsets_checked: u64,
    /// Lexicographically smallest subset with no valid ordering.
    pub counterexample: Option<Vec<u64>>,
}

fn binomial(m: u64, n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (m as u128 - i) / (i + 1);
    }
    c
}

// smallest element of the dilation orbit of `set`, compared as sorted lists
fn is_orbit_representative(set: &[u64], units: &[u64], m: u64, buf: &mut Vec<u64>) -> bool {
    for &u in units {
        buf.clear();
        buf.extend(set.iter().map(|&x| x * u % m));
        buf.sort_unstable();
        if buf.as_slice() < set {
            return false;
        }
    }
    true
}

// Largest weights first: they collide most often.
fn has_cyclic_ordering(set: &[u64], m: u64) -> bool {
    let positions: Vec<usize> = (1..=set.len()).rev().collect();
    distinct_ordering(&positions, |k, i| k as u64 * set[i] % m).is_some()
}

/// Check that every `n`-subset of `Z/mZ` can be ordered `a_1..a_n` with the
/// multiples `k · a_k` pairwise distinct. With `reduced`, only subsets that are
/// smallest in their orbit under multiplication by units are searched; a
/// valid ordering of a set carries over to every dilate, so this is exact.
pub fn verify_conj41_cyclic(m: u64, n: usize, reduced: bool, budget: u64) -> Result<Conj41Report, AdditiveError> {
    if m < 2 || n == 0 {
        return Err(AdditiveError::PreconditionViolated("need m >= 2 and n >= 1".into()));
    }
    let p = least_prime_factor(m);
    if p <= n as u64 + 1 {
        return Err(AdditiveError::PreconditionViolated(format!(
            "Z/{m}Z has elements of order {p} <= n+1 = {}",
            n + 1
        )));
    }
    if n as u64 > m {
        return Err(AdditiveError::PreconditionViolated(format!("no {n}-subsets of a set of size {m}")));
    }
    let total = binomial(m, n);
    if total > budget as u128 {
        return Err(AdditiveError::TooLarge { count: total, budget });
    }
    let units: Vec<u64> = if reduced { (2..m).filter(|u| u.gcd(&m) == 1).collect() } else { Vec::new() };

    // Workers split on the smallest element; the first hit in that order is
    // the lexicographically smallest counterexample.
    let scans: Vec<(u64, Option<Vec<u64>>)> = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut set = vec![first];
            let mut checked = 0u64;
            let mut buf = Vec::with_capacity(n);
            let found = scan(&mut set, n, m, &mut |s: &[u64]| {
                if reduced && !is_orbit_representative(s, &units, m, &mut buf) {
                    return false;
                }
                checked += 1;
                !has_cyclic_ordering(s, m)
            });
            (checked, found.then_some(set))
        })
        .collect();
    let counterexample = scans.iter().find_map(|(_, c)| c.clone());
    let subsets_checked = match &counterexample {
        // work after the first counterexample is not part of the answer
        Some(c) => scans.iter().take_while(|(_, s)| s.as_ref() != Some(c)).map(|s| s.0).sum::<u64>() + scans[c[0] as usize].0,
        None => scans.iter().map(|s| s.0).sum(),
    };
    Ok(Conj41Report {
        m,
        n,
        least_prime_factor: p,
        reduced,
        subsets_total: total,
        subsets_checked,
        counterexample,
    })
}

// Extend `set` to size n in increasing order; stop at the first set `hit` accepts.
fn scan(set: &mut Vec<u64>, n: usize, m: u64, hit: &mut impl FnMut(&[u64]) -> bool) -> bool {
    if set.len() == n {
        return hit(set);
    }
    let start = set.last().map_or(0, |&x| x + 1);
    let room = (n - set.len()) as u64;
    for x in start..=m - room {
        set.push(x);
        if scan(set, n, m, hit) {
            return true;
        }
        set.pop();
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteMappingReport {
    pub p: u64,
    /// Whether some `π` makes all `kπ(k)` distinct mod `p`; `None` when not enumerated.
    pub exists: Option<bool>,
    pub nodes: u64,
    /// `p(p-1)/2`, the exponent sum that would have to vanish mod `p-1`.
    pub exponent_sum: u64,
    pub residue: u64,
}

/// Largest prime for which the exhaustive half runs.
pub const COMPLETE_MAPPING_BRUTE_MAX: u64 = 13;

/// Search for a permutation of `1..p-1` with all `kπ(k) mod p` distinct, next
/// to the residue `p(p-1)/2 mod (p-1)` whose non-vanishing rules one out.
pub fn multiplicative_complete_mapping(p: u64) -> Result<CompleteMappingReport, AdditiveError> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(AdditiveError::NotOddPrime(p));
    }
    let (exists, nodes) = if p <= COMPLETE_MAPPING_BRUTE_MAX {
        let mut nodes = 0;
        let found = mapping_search(p - 1, p, 0, 0, &mut nodes);
        (Some(found), nodes)
    } else {
        (None, 0)
    };
    let exponent_sum = p * (p - 1) / 2;
    Ok(CompleteMappingReport {
        p,
        exists,
        nodes,
        exponent_sum,
        residue: exponent_sum % (p - 1),
    })
}

// Assign π(k) for k = p-1 down to 1, keeping the residues kπ(k) distinct.
fn mapping_search(k: u64, p: u64, used: u64, seen: u64, nodes: &mut u64) -> bool {
    if k == 0 {
        return true;
    }
    for j in 1..p {
        let v = k * j % p;
        if used & (1 << j) == 0 && seen & (1 << v) == 0 {
            *nodes += 1;
            if mapping_search(k - 1, p, used | 1 << j, seen | 1 << v, nodes) {
                return true;
            }
        }
    }
    false
}

/// Odd primes up to `limit` whose residue `p(p-1)/2 mod (p-1)` vanishes.
pub fn complete_mapping_certificate_failures(limit: u64) -> Vec<u64> {
    (3..=limit)
        .filter(|&p| is_prime(p))
        .filter(|&p| (p * (p - 1) / 2) % (p - 1) == 0)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub m: u64,
    pub elements: [u64; 3],
    /// `σ` with `σ(1)a ≠ σ(2)b`.
    pub sigma: Permutation,
    pub sigma_values: [u64; 2],
    /// `τ` with `τ(1)a, τ(2)b, τ(3)c` pairwise distinct.
    pub tau: Permutation,
    pub tau_values: [u64; 3],
}

/// Exponent assignments for three elements of `Z/mZ` of additive order other than 2 and 3.
pub fn triple_power_distinct(m: u64, a: u64, b: u64, c: u64) -> Result<TripleReport, AdditiveError> {
    if m < 2 {
        return Err(AdditiveError::PreconditionViolated("need m >= 2".into()));
    }
    let elems = [a % m, b % m, c % m];
    if elems[0] == elems[1] || elems[0] == elems[2] || elems[1] == elems[2] {
        return Err(AdditiveError::NotDistinct);
    }
    if let Some(&x) = elems.iter().find(|&&x| matches!(additive_order(x, m), 2 | 3)) {
        return Err(AdditiveError::PreconditionViolated(format!(
            "{x} has additive order {} in Z/{m}Z",
            additive_order(x, m)
        )));
    }
    let lex = |len: usize| -> Vec<Vec<usize>> {
        if len == 2 {
            vec![vec![1, 2], vec![2, 1]]
        } else {
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![2, 3, 1], vec![3, 1, 2], vec![3, 2, 1]]
        }
    };
    let values = |exps: &[usize]| -> Vec<u64> { exps.iter().zip(&elems).map(|(&e, &x)| e as u64 * x % m).collect() };
    let distinct = |v: &[u64]| v.iter().collect::<HashSet<_>>().len() == v.len();
    let sigma = lex(2).into_iter().find(|s| distinct(&values(s))).expect("guaranteed for such elements");
    let tau = lex(3).into_iter().find(|t| distinct(&values(t))).expect("guaranteed for such elements");
    let sv = values(&sigma);
    let tv = values(&tau);
    Ok(TripleReport {
        m,
        elements: elems,
        sigma: Permutation::from_one_line(&sigma).expect("valid"),
        sigma_values: [sv[0], sv[1]],
        tau: Permutation::from_one_line(&tau).expect("valid"),
        tau_values: [tv[0], tv[1], tv[2]],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumsetContext {
    Rationals,
    PrimeField(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumsetReport {
    pub n: usize,
    pub set_size: usize,
    /// `p` for a prime field, absent over the rationals.
    pub characteristic: Option<u64>,
    pub size: u64,
    /// `min{p, (|A|-n) n(n+1)/2 + n(n^2-1)/6 + 1}`.
    pub bound: u64,
    pub satisfied: bool,
    pub injections: u128,
}

fn falling_factorial(a: usize, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, i| acc.saturating_mul((a - i) as u128))
}

/// Size of `{Σ k a_k : a_1..a_n distinct elements of A}` against the lower bound.
pub fn sumset_bound_check(
    context: SumsetContext,
    set: &[BigRational],
    n: usize,
    budget: u64,
) -> Result<SumsetReport, AdditiveError> {
    if n == 0 {
        return Err(AdditiveError::PreconditionViolated("need n >= 1".into()));
    }
    let need = n + usize::from(n == 3);
    if set.len() < need {
        return Err(AdditiveError::PreconditionViolated(format!("|A| = {} < {need}", set.len())));
    }
    // Reduce to integers: over Q scale by the common denominator (a bijective
    // affine change of the sums), over F_p take residues.
    let ints: Vec<i128> = match context {
        SumsetContext::Rationals => {
            let den = set.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let scaled: Vec<BigInt> = set.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
            let limit = BigInt::one() << 100u32;
            if scaled.iter().any(|v| v.abs() >= limit) {
                return Err(AdditiveError::PreconditionViolated("elements too large".into()));
            }
            scaled.iter().map(|v| v.to_i128().expect("bounded above")).collect()
        }
        SumsetContext::PrimeField(p) => {
            if !is_prime(p) {
                return Err(AdditiveError::PreconditionViolated(format!("{p} is not prime")));
            }
            if p <= n as u64 + 1 {
                return Err(AdditiveError::PreconditionViolated(format!("p = {p} <= n+1")));
            }
            let pb = BigInt::from(p);
            set.iter()
                .map(|x| {
                    let d = x.denom().mod_floor(&pb);
                    if d.is_zero() {
                        return Err(AdditiveError::PreconditionViolated(format!("{x} is undefined mod {p}")));
                    }
                    // Fermat inverse of the denominator
                    let inv = d.modpow(&(&pb - 2u8), &pb);
                    Ok((x.numer() * inv).mod_floor(&pb).to_i128().expect("below p"))
                })
                .collect::<Result<_, _>>()?
        }
    };
    if ints.iter().collect::<HashSet<_>>().len() != ints.len() {
        return Err(AdditiveError::NotDistinct);
    }
    let injections = falling_factorial(ints.len(), n);
    if injections > budget as u128 {
        return Err(AdditiveError::TooLarge { count: injections, budget });
    }
    let modulus = match context {
        SumsetContext::PrimeField(p) => Some(p as i128),
        SumsetContext::Rationals => None,
    };
    let mut sums = HashSet::new();
    let mut used = vec![false; ints.len()];
    collect_sums(&ints, n, 1, 0, modulus, &mut used, &mut sums);

    let (a, nn) = (ints.len() as u64, n as u64);
    let formula = (a - nn) * nn * (nn + 1) / 2 + nn * (nn * nn - 1) / 6 + 1;
    let bound = match context {
        SumsetContext::PrimeField(p) => formula.min(p),
        SumsetContext::Rationals => formula,
    };
    let size = sums.len() as u64;
    Ok(SumsetReport {
        n,
        set_size: ints.len(),
        characteristic: modulus.map(|p| p as u64),
        size,
        bound,
        satisfied: size >= bound,
        injections,
    })
}

fn collect_sums(
    ints: &[i128],
    n: usize,
    k: usize,
    acc: i128,
    modulus: Option<i128>,
    used: &mut [bool],
    out: &mut HashSet<i128>,
) {
    if k > n {
        out.insert(acc);
        return;
    }
    for i in 0..ints.len() {
        if !used[i] {
            used[i] = true;
            let next = acc + k as i128 * ints[i];
            collect_sums(ints, n, k + 1, modulus.map_or(next, |p| next.rem_euclid(p)), modulus, used, out);
            used[i] = false;
        }
    }
}
