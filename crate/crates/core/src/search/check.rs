//! Witness validation that shares nothing with the search internals: sums are
//! recomputed with exact rationals, constraint values with big integers, and
//! primality (including the k-th prime) is re-derived from scratch.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{CellPredicate, ExactMatrix};
use crate::perm::Permutation;
use crate::primes::is_prime;

use super::{Certificate, FractionKind, Parity, Topology};

fn prime_big(v: &BigInt) -> bool {
    v.to_u64().is_some_and(is_prime)
}

fn power_of_two_big(v: &BigInt) -> bool {
    v.is_positive() && v.magnitude().count_ones() == 1
}

// k-th prime by counting upward, independent of the sieve.
fn kth_prime(k: usize) -> u64 {
    (2u64..).filter(|&v| is_prime(v)).nth(k - 1).expect("infinitely many primes")
}

fn parity_clause(perm: &Permutation, parity: Option<Parity>) -> Result<String, String> {
    match parity {
        None => Ok(String::new()),
        Some(p) if p.admits(perm) => Ok(format!(", {} permutation", if perm.is_even() { "even" } else { "odd" })),
        Some(p) => Err(format!("{perm} does not have {p:?} parity")),
    }
}

/// Every `(k, π(k))` is a 1-cell of `allowed`.
pub fn check_cells(perm: &Permutation, allowed: &ExactMatrix, parity: Option<Parity>) -> Result<Certificate, String> {
    let n = perm.degree();
    if allowed.dim() != n {
        return Err(format!("degree {n} vs matrix dimension {}", allowed.dim()));
    }
    let mut terms = Vec::with_capacity(n);
    for k in 1..=n {
        let v = allowed.get(k, perm.apply(k));
        if !v.is_one() {
            return Err(format!("cell ({k},{}) is {v}", perm.apply(k)));
        }
        terms.push(format!("{k}->{}", perm.apply(k)));
    }
    Ok(Certificate {
        property: format!("all cells (k, pi(k)) allowed{}", parity_clause(perm, parity)?),
        terms,
        total: None,
    })
}

/// Recompute the named per-cell value for each `k` and confirm the property.
pub fn check_predicate(perm: &Permutation, predicate: &CellPredicate, parity: Option<Parity>) -> Result<Certificate, String> {
    let n = perm.degree();
    let mut terms = Vec::with_capacity(n);
    for k in 1..=n {
        let j = perm.apply(k);
        let (a, b) = (BigInt::from(k), BigInt::from(j));
        let (value, ok) = match predicate {
            CellPredicate::SumPrime => {
                let v = &a + &b;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::SumPowerOfTwo => {
                let v = &a + &b;
                let ok = power_of_two_big(&v);
                (v, ok)
            }
            CellPredicate::SumMersenne => {
                let v = &a + &b;
                let ok = power_of_two_big(&(&v + 1u8));
                (v, ok)
            }
            CellPredicate::SumInSequence(seq) => {
                let v = &a + &b;
                let terms = seq.terms_up_to(2 * n as u64).map_err(|e| e.to_string())?;
                let ok = v.to_u64().is_some_and(|x| terms.contains(&x));
                (v, ok)
            }
            CellPredicate::ProductPlusOnePrime => {
                let v = &a * &b + 1;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::ProductMinusOnePrime => {
                let v = &a * &b - 1;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::NormFormPrime => {
                let v = &a * &a + &a * &b + &b * &b;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::SumOfSquaresPrime => {
                let v = &a * &a + &b * &b;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::PrimeSumPlusOnePrime => {
                let v = BigInt::from(kth_prime(k)) + kth_prime(j) + 1;
                let ok = prime_big(&v);
                (v, ok)
            }
            CellPredicate::PrimeProductMinusTwoPrime => {
                let v = BigInt::from(kth_prime(k)) * kth_prime(j) - 2;
                let ok = prime_big(&v);
                (v, ok)
            }
        };
        if !ok {
            return Err(format!("k={k}: value {value} fails {}", predicate.label()));
        }
        terms.push(value.to_string());
    }
    Ok(Certificate {
        property: format!("{} holds for every k{}", predicate.label(), parity_clause(perm, parity)?),
        terms,
        total: None,
    })
}

/// The terms of a unit-fraction sum, in order, as exact rationals.
pub fn unit_fraction_terms(perm: &Permutation, kind: FractionKind, topology: Topology) -> Result<Vec<BigRational>, String> {
    let n = perm.degree();
    let v: Vec<BigInt> = perm.one_line().into_iter().map(BigInt::from).collect();
    let recip = |d: BigInt| -> Result<BigRational, String> {
        if d.is_zero() {
            Err("zero denominator".into())
        } else {
            Ok(BigRational::new(BigInt::one(), d))
        }
    };
    if kind == FractionKind::SumReciprocal {
        return (0..n).map(|i| recip(BigInt::from(i + 1) + &v[i])).collect();
    }
    let pairs = match topology {
        Topology::Linear => n - 1,
        Topology::Cyclic => n,
    };
    (0..pairs)
        .map(|i| {
            let (a, b) = (&v[i], &v[(i + 1) % n]);
            let den = match kind {
                FractionKind::AdjProductReciprocal => a * b,
                FractionKind::AdjSumReciprocal => a + b,
                FractionKind::AdjDifferenceReciprocal => a - b,
                FractionKind::AdjSquareDifferenceReciprocal => a * a - b * b,
                FractionKind::SumReciprocal => unreachable!(),
            };
            recip(den)
        })
        .collect()
}

/// The exact rational sum equals `target`.
pub fn check_unit_fraction(
    perm: &Permutation,
    kind: FractionKind,
    topology: Topology,
    target: &BigRational,
) -> Result<Certificate, String> {
    let terms = unit_fraction_terms(perm, kind, topology)?;
    let total: BigRational = terms.iter().sum();
    if &total != target {
        return Err(format!("sum is {total}, expected {target}"));
    }
    Ok(Certificate {
        property: format!("{} ({}) sums to {target}", kind.label(), topology.label()),
        terms: terms.iter().map(|t| t.to_string()).collect(),
        total: Some(total.to_string()),
    })
}

fn adjacent_products(perm: &Permutation) -> Vec<BigInt> {
    let v = perm.one_line();
    v.windows(2).map(|w| BigInt::from(w[0]) * w[1]).collect()
}

/// Adjacent-product sum is `2^m + 1`.
pub fn check_adjacent_pow2_plus_one(perm: &Permutation) -> Result<Certificate, String> {
    let terms = adjacent_products(perm);
    let total: BigInt = terms.iter().sum();
    let shifted: BigInt = &total - 1;
    if !power_of_two_big(&shifted) {
        return Err(format!("adjacent-product sum {total} is not 2^m+1"));
    }
    Ok(Certificate {
        property: format!("adjacent products sum to 2^{}+1", shifted.bits() - 1),
        terms: terms.iter().map(|t| t.to_string()).collect(),
        total: Some(total.to_string()),
    })
}

/// `π(n) = n` and the adjacent-product sum is `power`.
pub fn check_adjacent_power(perm: &Permutation, power: u64) -> Result<Certificate, String> {
    let n = perm.degree();
    if perm.apply(n) != n {
        return Err(format!("last entry is {}, not {n}", perm.apply(n)));
    }
    let terms = adjacent_products(perm);
    let total: BigInt = terms.iter().sum();
    if total != BigInt::from(power) || !power.is_power_of_two() {
        return Err(format!("adjacent-product sum {total} is not {power}"));
    }
    Ok(Certificate {
        property: format!("pi(n) = n and adjacent products sum to {power}"),
        terms: terms.iter().map(|t| t.to_string()).collect(),
        total: Some(total.to_string()),
    })
}

/// All cyclic adjacent sums are prime.
pub fn check_prime_circle(perm: &Permutation) -> Result<Certificate, String> {
    let v = perm.one_line();
    let n = v.len();
    let sums: Vec<u64> = (0..n).map(|i| (v[i] + v[(i + 1) % n]) as u64).collect();
    if let Some(s) = sums.iter().find(|&&s| !is_prime(s)) {
        return Err(format!("adjacent sum {s} is not prime"));
    }
    Ok(Certificate {
        property: "all cyclic adjacent sums prime".into(),
        terms: sums.iter().map(|s| s.to_string()).collect(),
        total: None,
    })
}
