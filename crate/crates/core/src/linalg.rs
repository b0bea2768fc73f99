//! Exact integer matrices: permanents (Ryser, Gray-code order), modular
//! permanents, and fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::primes::{is_prime, PrimeError, PrimeTable};
use crate::sequences::{DoublingSequence, SequenceError};

/// Default cap for [`permanent`].
pub const DEFAULT_PERMANENT_MAX_N: usize = 24;
/// Default cap for [`permanent_mod`].
pub const DEFAULT_PERMANENT_MOD_MAX_N: usize = 20;

// Below this size the Gray-code loop runs on one thread.
const PARALLEL_MIN_N: usize = 14;
// Fixed block count so the partition never depends on the thread pool.
const BLOCK_BITS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("dimension {n} exceeds the configured limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("matrix is not a 0/1 matrix")]
    NotZeroOne,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
}

/// Square matrix of arbitrary-precision integers, addressed one-indexed.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigInt>,
    zero_one: bool,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(LinalgError::NotSquare { row: row + 1, len: r.len(), n });
            }
            entries.extend(r);
        }
        Ok(Self::from_entries(n, entries))
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Build from a one-indexed entry function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self, LinalgError> {
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Ok(Self::from_entries(n, entries))
    }

    fn from_entries(n: usize, entries: Vec<BigInt>) -> Self {
        let zero_one = entries.iter().all(|v| v.is_zero() || v.is_one());
        Self { n, entries, zero_one }
    }

    pub fn identity(n: usize) -> Result<Self, LinalgError> {
        Self::from_fn(n, |i, j| BigInt::from((i == j) as u8))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero_one(&self) -> bool {
        self.zero_one
    }

    /// Entry `(i, j)` with `1 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn ones_count(&self) -> usize {
        self.entries.iter().filter(|v| v.is_one()).count()
    }

    /// Column bitmask of each row (bit `j-1` set when entry `(i, j)` is 1).
    pub(crate) fn row_masks(&self) -> Result<Vec<u64>, LinalgError> {
        if !self.zero_one {
            return Err(LinalgError::NotZeroOne);
        }
        if self.n > 64 {
            return Err(LinalgError::DimensionTooLarge { n: self.n, limit: 64 });
        }
        Ok(self
            .rows()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| v.is_one())
                    .fold(0u64, |m, (j, _)| m | (1 << j))
            })
            .collect())
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(|v| v.to_i64()).collect::<Option<Vec<_>>>())
            .collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        f.debug_struct("ExactMatrix")
            .field("n", &self.n)
            .field("zero_one", &self.zero_one)
            .field("rows", &rows)
            .finish()
    }
}

/// `[i^(j-1)]` for `1 <= i, j <= n`.
pub fn power_matrix(n: usize) -> Result<ExactMatrix, LinalgError> {
    ExactMatrix::from_fn(n, |i, j| BigInt::from(i).pow(j as u32 - 1))
}

/// A condition on the cell `(i, j)` of an `n x n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellPredicate {
    /// `i + j` prime.
    SumPrime,
    /// `i + j` a power of two.
    SumPowerOfTwo,
    /// `i + j = 2^a - 1` for some `a >= 1`.
    SumMersenne,
    /// `i + j` a term of the sequence.
    SumInSequence(DoublingSequence),
    /// `i j + 1` prime.
    ProductPlusOnePrime,
    /// `i j - 1` prime.
    ProductMinusOnePrime,
    /// `i^2 + i j + j^2` prime.
    NormFormPrime,
    /// `i^2 + j^2` prime.
    SumOfSquaresPrime,
    /// `p_i + p_j + 1` prime, `p_k` the k-th prime.
    PrimeSumPlusOnePrime,
    /// `p_i p_j - 2` prime.
    PrimeProductMinusTwoPrime,
}

impl CellPredicate {
    pub fn label(&self) -> String {
        match self {
            Self::SumPrime => "prime-sum".into(),
            Self::SumPowerOfTwo => "pow2-sum".into(),
            Self::SumMersenne => "mersenne-sum".into(),
            Self::SumInSequence(s) => format!("seq-sum:{}", s.name()),
            Self::ProductPlusOnePrime => "product-plus-one-prime".into(),
            Self::ProductMinusOnePrime => "product-minus-one-prime".into(),
            Self::NormFormPrime => "norm-form-prime".into(),
            Self::SumOfSquaresPrime => "sum-of-squares-prime".into(),
            Self::PrimeSumPlusOnePrime => "prime-sum-plus-one-prime".into(),
            Self::PrimeProductMinusTwoPrime => "chen".into(),
        }
    }

    fn needs_primes(&self) -> bool {
        matches!(self, Self::PrimeSumPlusOnePrime | Self::PrimeProductMinusTwoPrime)
    }
}

/// 0/1 matrix with entry `(i, j)` equal to 1 exactly when the predicate holds.
pub fn indicator_matrix(n: usize, predicate: &CellPredicate) -> Result<ExactMatrix, LinalgError> {
    if n == 0 {
        return Err(LinalgError::Empty);
    }
    let seq_terms = match predicate {
        CellPredicate::SumInSequence(s) => s.terms_up_to(2 * n as u64)?,
        _ => Vec::new(),
    };
    let primes = if predicate.needs_primes() {
        PrimeTable::first(n)?.primes().to_vec()
    } else {
        Vec::new()
    };
    let holds = |i: usize, j: usize| -> bool {
        let (a, b) = (i as u64, j as u64);
        match predicate {
            CellPredicate::SumPrime => is_prime(a + b),
            CellPredicate::SumPowerOfTwo => (a + b).is_power_of_two(),
            CellPredicate::SumMersenne => (a + b + 1).is_power_of_two(),
            CellPredicate::SumInSequence(_) => seq_terms.binary_search(&(a + b)).is_ok(),
            CellPredicate::ProductPlusOnePrime => is_prime(a * b + 1),
            CellPredicate::ProductMinusOnePrime => is_prime(a * b - 1),
            CellPredicate::NormFormPrime => is_prime(a * a + a * b + b * b),
            CellPredicate::SumOfSquaresPrime => is_prime(a * a + b * b),
            CellPredicate::PrimeSumPlusOnePrime => is_prime(primes[i - 1] + primes[j - 1] + 1),
            CellPredicate::PrimeProductMinusTwoPrime => is_prime(primes[i - 1] * primes[j - 1] - 2),
        }
    };
    ExactMatrix::from_fn(n, |i, j| BigInt::from(holds(i, j) as u8))
}

#[inline]
fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

fn block_ranges(n: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << n;
    let bits = if n >= PARALLEL_MIN_N { BLOCK_BITS } else { 0 };
    let blocks = 1u64 << bits;
    let step = total / blocks;
    // subset 0 contributes nothing (empty row sums), so start at 1
    (0..blocks)
        .map(|b| ((b * step).max(1), (b + 1) * step))
        .collect()
}

/// Shared Gray-code walk over the subsets `gray(lo..hi)`; `visit` receives the sign
/// `(-1)^|S|` after each update of the row sums.
fn walk_block<T, Add, Sub, Visit>(
    columns: &[Vec<T>],
    lo: u64,
    hi: u64,
    zero: T,
    add: Add,
    sub: Sub,
    mut visit: Visit,
) where
    T: Clone,
    Add: Fn(&mut T, &T),
    Sub: Fn(&mut T, &T),
    Visit: FnMut(&[T], bool),
{
    let n = columns.len();
    let mut sums = vec![zero; n];
    let start = gray(lo);
    for (j, col) in columns.iter().enumerate() {
        if start >> j & 1 == 1 {
            for (s, v) in sums.iter_mut().zip(col) {
                add(s, v);
            }
        }
    }
    visit(&sums, start.count_ones() % 2 == 1);
    for k in lo + 1..hi {
        let j = k.trailing_zeros() as usize;
        let g = gray(k);
        if g >> j & 1 == 1 {
            for (s, v) in sums.iter_mut().zip(&columns[j]) {
                add(s, v);
            }
        } else {
            for (s, v) in sums.iter_mut().zip(&columns[j]) {
                sub(s, v);
            }
        }
        visit(&sums, g.count_ones() % 2 == 1);
    }
}

fn columns_of<T>(m: &ExactMatrix, f: impl Fn(&BigInt) -> T) -> Vec<Vec<T>> {
    (1..=m.n)
        .map(|j| (1..=m.n).map(|i| f(m.get(i, j))).collect())
        .collect()
}

/// Exact permanent with the default dimension cap.
pub fn permanent(m: &ExactMatrix) -> Result<BigInt, LinalgError> {
    permanent_capped(m, DEFAULT_PERMANENT_MAX_N)
}

/// Exact permanent, Ryser inclusion-exclusion over column subsets in Gray-code order.
pub fn permanent_capped(m: &ExactMatrix, max_n: usize) -> Result<BigInt, LinalgError> {
    let n = m.n;
    if n > max_n || n > 62 {
        return Err(LinalgError::DimensionTooLarge { n, limit: max_n.min(62) });
    }
    // |each product| <= prod_i sum_j |a_ij|; summed over 2^n subsets
    let bound: BigInt = m
        .rows()
        .map(|r| r.iter().map(|v| v.abs()).sum::<BigInt>())
        .product();
    let fits_i128 = bound.bits() + n as u64 + 1 < 127;
    let total = if fits_i128 {
        BigInt::from(ryser_i128(m))
    } else {
        ryser_big(m)
    };
    Ok(if n % 2 == 1 { -total } else { total })
}

fn ryser_i128(m: &ExactMatrix) -> i128 {
    let columns = columns_of(m, |v| v.to_i128().expect("bounded entry"));
    block_ranges(m.n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut acc = 0i128;
            walk_block(
                &columns,
                lo,
                hi,
                0i128,
                |s, v| *s += v,
                |s, v| *s -= v,
                |sums, odd| {
                    let p: i128 = sums.iter().product();
                    if odd {
                        acc -= p
                    } else {
                        acc += p
                    }
                },
            );
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

fn ryser_big(m: &ExactMatrix) -> BigInt {
    let columns = columns_of(m, |v| v.clone());
    block_ranges(m.n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut acc = BigInt::zero();
            walk_block(
                &columns,
                lo,
                hi,
                BigInt::zero(),
                |s, v| *s += v,
                |s, v| *s -= v,
                |sums, odd| {
                    if sums.iter().any(|s| s.is_zero()) {
                        return;
                    }
                    let p: BigInt = sums.iter().product();
                    if odd {
                        acc -= p
                    } else {
                        acc += p
                    }
                },
            );
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

/// Permanent modulo `modulus` with the default dimension cap.
pub fn permanent_mod(m: &ExactMatrix, modulus: u64) -> Result<u64, LinalgError> {
    permanent_mod_capped(m, modulus, DEFAULT_PERMANENT_MOD_MAX_N)
}

/// Permanent reduced modulo `modulus`, computed entirely in residues.
pub fn permanent_mod_capped(m: &ExactMatrix, modulus: u64, max_n: usize) -> Result<u64, LinalgError> {
    let n = m.n;
    if modulus < 2 {
        return Err(LinalgError::BadModulus(modulus));
    }
    if n > max_n || n > 62 {
        return Err(LinalgError::DimensionTooLarge { n, limit: max_n.min(62) });
    }
    let md = BigInt::from(modulus);
    let columns = columns_of(m, |v| v.mod_floor(&md).to_u64().expect("residue fits"));
    let add = |s: &mut u64, v: &u64| *s = ((*s as u128 + *v as u128) % modulus as u128) as u64;
    let sub = |s: &mut u64, v: &u64| *s = ((*s as u128 + (modulus - *v) as u128) % modulus as u128) as u64;
    let (pos, neg) = block_ranges(n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let (mut pos, mut neg) = (0u64, 0u64);
            walk_block(&columns, lo, hi, 0u64, add, sub, |sums, odd| {
                let p = sums
                    .iter()
                    .fold(1 % modulus, |a, &s| ((a as u128 * s as u128) % modulus as u128) as u64);
                if odd {
                    add(&mut neg, &p)
                } else {
                    add(&mut pos, &p)
                }
            });
            (pos, neg)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0u64, 0u64), |(p, q), (a, b)| {
            let (mut p, mut q) = (p, q);
            add(&mut p, &a);
            add(&mut q, &b);
            (p, q)
        });
    let mut total = pos;
    sub(&mut total, &neg);
    if n % 2 == 1 && total != 0 {
        total = modulus - total;
    }
    Ok(total)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &ExactMatrix) -> BigInt {
    let n = m.n;
    let mut a: Vec<Vec<BigInt>> = m.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `1! * 2! * ... * k!`.
pub fn superfactorial(k: u32) -> BigInt {
    let mut fact = BigInt::one();
    let mut acc = BigInt::one();
    for i in 1..=k {
        fact *= i;
        acc *= &fact;
    }
    acc
}

/// Entries to show in JSON output (decimal strings, row-major).
#[derive(Debug, Serialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl From<&ExactMatrix> for MatrixJson {
    fn from(m: &ExactMatrix) -> Self {
        Self {
            n: m.n,
            rows: m.rows().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }
}
