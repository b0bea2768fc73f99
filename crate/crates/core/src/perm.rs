//! One-indexed permutations of `{1..n}`.
//!
//! Everything outside this module speaks in one-indexed values; the zero-indexed
//! storage is private. Two text forms are supported and both parse back:
//! one-line `[1 3 2]` and canonical cycle form `(2,3)(4,9)`. The canonical cycle
//! form drops fixed points, rotates each cycle so its least element leads, and
//! sorts cycles by that element. The identity prints as `(1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("a permutation needs at least one point")]
    Empty,
    #[error("image {0} appears more than once")]
    DuplicateImage(usize),
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("element {0} appears more than once in the cycles")]
    RepeatedElement(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

/// A bijection of `{1..n}`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[k] = π(k+1) - 1
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        Ok(Self {
            images: (0..n as u32).collect(),
        })
    }

    /// Build from one-line notation: `images[k-1] = π(k)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(PermError::DuplicateImage(v));
            }
            out.push((v - 1) as u32);
        }
        Ok(Self { images: out })
    }

    /// Build from disjoint cycles on `{1..n}`; cycle and element order are free.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut perm = Self::identity(n)?;
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &v in cycle {
                if v == 0 || v > n {
                    return Err(PermError::OutOfRange { value: v, n });
                }
                if std::mem::replace(&mut seen[v - 1], true) {
                    return Err(PermError::RepeatedElement(v));
                }
            }
            for (i, &v) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                perm.images[v - 1] = (next - 1) as u32;
            }
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// π(k) for one-indexed `k`.
    ///
    /// Panics if `k` is outside `1..=n`.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    /// One-line form, one-indexed.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// Canonical cycle decomposition without fixed points.
    pub fn to_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        // walking starts in increasing order, so each cycle starts at its minimum
        // and cycles come out sorted by minimum
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn cycle_count_with_fixed_points(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycle_count_with_fixed_points()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| self.images[v as usize] as usize == k)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k)
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Self {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u32;
        }
        Self { images: inv }
    }

    /// Render the canonical cycle form, e.g. `(2,6)(3,5)`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.to_cycles();
        if cycles.is_empty() {
            return "(1)".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    /// Parse `(2,6)(3,5)` on `{1..n}`. `()` and singleton cycles such as `(1)` are accepted.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(text.to_string()))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Parse(text.to_string()))?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| PermError::Parse(text.to_string()))?;
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the one-line form `[1 3 2]` (commas are also accepted as separators).
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse(s.to_string()))?;
        let values = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermError::Parse(s.to_string()))?;
        Self::from_one_line(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Self::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}
