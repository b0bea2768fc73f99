//! Deterministic primality for 64-bit integers and sieve-built prime tables.

use thiserror::Error;

/// Default upper limit for [`PrimeTable::up_to`].
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

// Strong-pseudoprime bases that make Miller-Rabin exact for every n < 2^64.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimeError {
    #[error("sieve limit {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: u64, cap: u64 },
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact primality test for any `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Signed convenience wrapper: negative values are never prime.
pub fn is_prime_i128(n: i128) -> bool {
    n >= 2 && n <= u64::MAX as i128 && is_prime(n as u64)
}

/// Smallest prime factor of `n >= 2`.
pub fn least_prime_factor(n: u64) -> u64 {
    assert!(n >= 2, "least_prime_factor needs n >= 2");
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// The primes up to some limit, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve all primes `<= limit` using the default cap.
    pub fn up_to(limit: u64) -> Result<Self, PrimeError> {
        Self::up_to_with_cap(limit, DEFAULT_SIEVE_CAP)
    }

    pub fn up_to_with_cap(limit: u64, cap: u64) -> Result<Self, PrimeError> {
        if limit > cap {
            return Err(PrimeError::CapExceeded {
                requested: limit,
                cap,
            });
        }
        let len = limit as usize + 1;
        let mut composite = vec![false; len.max(2)];
        let mut primes = Vec::new();
        for i in 2..len {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
        Ok(Self { limit, primes })
    }

    /// The first `count` primes.
    pub fn first(count: usize) -> Result<Self, PrimeError> {
        Self::first_with_cap(count, DEFAULT_SIEVE_CAP)
    }

    pub fn first_with_cap(count: usize, cap: u64) -> Result<Self, PrimeError> {
        // p_k < k (ln k + ln ln k) for k >= 6
        let limit = if count < 6 {
            13
        } else {
            let k = count as f64;
            (k * (k.ln() + k.ln().ln())).ceil() as u64 + 1
        };
        let mut table = Self::up_to_with_cap(limit, cap)?;
        table.primes.truncate(count);
        if let Some(&last) = table.primes.last() {
            table.limit = last;
        }
        Ok(table)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The k-th prime, one-indexed (`nth(1) == Some(2)`).
    pub fn nth(&self, k: usize) -> Option<u64> {
        k.checked_sub(1).and_then(|i| self.primes.get(i).copied())
    }
}
