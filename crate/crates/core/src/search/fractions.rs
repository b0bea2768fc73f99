use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::perm::Permutation;

use super::chain::{Chain, Closing};
use super::check::check_unit_fraction;
use super::{Budget, SearchError, SearchLimits, SearchOutcome};

/// Which reciprocal is summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractionKind {
    /// `1/(k + π(k))` over positions.
    SumReciprocal,
    /// `1/(π(k) π(k+1))`.
    AdjProductReciprocal,
    /// `1/(π(k) + π(k+1))`.
    AdjSumReciprocal,
    /// `1/(π(k) - π(k+1))`.
    AdjDifferenceReciprocal,
    /// `1/(π(k)² - π(k+1)²)`.
    AdjSquareDifferenceReciprocal,
}

impl FractionKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::SumReciprocal => "sum-reciprocal",
            Self::AdjProductReciprocal => "adj-product-reciprocal",
            Self::AdjSumReciprocal => "adj-sum-reciprocal",
            Self::AdjDifferenceReciprocal => "adj-difference-reciprocal",
            Self::AdjSquareDifferenceReciprocal => "adj-square-difference-reciprocal",
        }
    }

    fn denominator(self, a: i128, b: i128) -> i128 {
        match self {
            Self::SumReciprocal | Self::AdjSumReciprocal => a + b,
            Self::AdjProductReciprocal => a * b,
            Self::AdjDifferenceReciprocal => a - b,
            Self::AdjSquareDifferenceReciprocal => a * a - b * b,
        }
    }
}

impl fmt::Display for FractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FractionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Self::SumReciprocal,
            Self::AdjProductReciprocal,
            Self::AdjSumReciprocal,
            Self::AdjDifferenceReciprocal,
            Self::AdjSquareDifferenceReciprocal,
        ]
        .into_iter()
        .find(|k| k.label() == s)
        .ok_or_else(|| format!("unknown fraction kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Linear,
    /// Adds the wrap-around pair `(π(n), π(1))`.
    Cyclic,
}

impl Topology {
    pub fn label(self) -> &'static str {
        match self {
            Self::Linear => "linear",
            Self::Cyclic => "cyclic",
        }
    }
}

// Largest degree a u64 value mask can hold.
const MAX_DEGREE: usize = 62;

/// Every denominator is scaled to an integer weight `L / d` with `L` the lcm of
/// all denominators that can occur. `None` if the scaled sums might leave i128.
fn scaled_weights(n: usize, den: impl Fn(usize, usize) -> i128) -> Option<(Vec<i128>, BigInt)> {
    let stride = n + 1;
    let mut lcm = BigInt::one();
    for a in 1..=n {
        for b in 1..=n {
            let d = den(a, b);
            if d != 0 {
                lcm = lcm.lcm(&BigInt::from(d.abs()));
            }
        }
    }
    // a total is at most n terms of magnitude L
    if lcm.bits() + (n as u64).ilog2() as u64 + 3 > 126 {
        return None;
    }
    let l = lcm.to_i128()?;
    let mut weight = vec![0i128; stride * stride];
    for a in 1..=n {
        for b in 1..=n {
            let d = den(a, b);
            if d != 0 {
                weight[a * stride + b] = l / d;
            }
        }
    }
    Some((weight, lcm))
}

/// Lexicographically smallest permutation whose unit-fraction sum equals `target`.
///
/// Sums are carried exactly as integers scaled by the lcm of all reachable
/// denominators. A target that is not a multiple of `1/L` is unreachable.
pub fn unit_fraction_search(
    n: usize,
    kind: FractionKind,
    topology: Topology,
    target: &BigRational,
    limits: &SearchLimits,
) -> Result<SearchOutcome, SearchError> {
    if n < 2 {
        return Err(SearchError::DegreeTooSmall { n, min: 2 });
    }
    if kind == FractionKind::SumReciprocal && topology == Topology::Cyclic {
        return Err(SearchError::BadCombination("sum-reciprocal has no cyclic form".into()));
    }
    if n > MAX_DEGREE {
        return Err(SearchError::TooLarge(n));
    }
    let (weight, lcm) = scaled_weights(n, |a, b| kind.denominator(a as i128, b as i128)).ok_or(SearchError::TooLarge(n))?;
    let mut budget = Budget::new(limits);
    let scaled = target * BigRational::from_integer(lcm);
    let goal = match (scaled.is_integer(), scaled.to_integer().to_i128()) {
        (true, Some(g)) if g.abs() < i128::MAX / 4 => g,
        _ => return budget.finish(None, |_| unreachable!()),
    };
    let found = if kind == FractionKind::SumReciprocal {
        by_position(n, &weight, goal, &mut budget)
    } else {
        let closing = match topology {
            Topology::Linear => Closing::Open,
            Topology::Cyclic => Closing::ToFirst,
        };
        // Difference kinds have a zero denominator only on the diagonal, which
        // a sequence of distinct values never uses.
        let pool = ((1u64 << (n + 1)) - 1) & !1;
        let mut chain = Chain::new(n + 1, &weight, pool, closing, |lo, hi| lo <= goal && goal <= hi, |t| t == goal);
        chain.run(0, 0, &mut budget).then(|| chain.seq.clone())
    };
    let found = found.map(|seq| Permutation::from_one_line(&seq).expect("search yields a bijection"));
    budget.finish(found, |p| check_unit_fraction(p, kind, topology, target))
}

// Σ_k w(k, π(k)), assigning positions in order. Each open position j takes
// some unused value, so its term lies between the min and max of w(j, y) over
// the unused set.
fn by_position(n: usize, weight: &[i128], goal: i128, budget: &mut Budget) -> Option<Vec<usize>> {
    struct Walk<'a> {
        n: usize,
        weight: &'a [i128],
        goal: i128,
        seq: Vec<usize>,
    }
    impl Walk<'_> {
        fn run(&mut self, used: u64, total: i128, budget: &mut Budget) -> bool {
            let k = self.seq.len() + 1;
            if k > self.n {
                return total == self.goal;
            }
            let stride = self.n + 1;
            let open = ((1u64 << stride) - 2) & !used;
            let (mut lo, mut hi) = (0i128, 0i128);
            for j in k..=self.n {
                let row = &self.weight[j * stride..(j + 1) * stride];
                let mut ys = open;
                let (mut a, mut b) = (i128::MAX, i128::MIN);
                while ys != 0 {
                    let y = ys.trailing_zeros() as usize;
                    ys &= ys - 1;
                    a = a.min(row[y]);
                    b = b.max(row[y]);
                }
                lo += a;
                hi += b;
            }
            if total + lo > self.goal || total + hi < self.goal {
                return false;
            }
            let mut choices = open;
            while choices != 0 {
                let y = choices.trailing_zeros() as usize;
                choices &= choices - 1;
                if !budget.tick() {
                    return false;
                }
                self.seq.push(y);
                if self.run(used | (1 << y), total + self.weight[k * stride + y], budget) {
                    return true;
                }
                self.seq.pop();
                if budget.exhausted() {
                    return false;
                }
            }
            false
        }
    }
    let mut walk = Walk { n, weight, goal, seq: Vec::new() };
    walk.run(0, 0, budget).then_some(walk.seq)
}
