use crate::perm::Permutation;
use crate::primes::is_prime;

use super::check::check_prime_circle;
use super::{Budget, SearchError, SearchLimits, SearchOutcome};

const MAX_DEGREE: usize = 62;

struct Circle {
    // adj[v]: values u with u + v prime
    adj: Vec<u64>,
    all: u64,
    seq: Vec<usize>,
}

impl Circle {
    // Every unused value still needs two neighbours among the unused values
    // and the two open ends of the path.
    fn viable(&self, used: u64) -> bool {
        let open = self.all & !used;
        let last = *self.seq.last().expect("path starts at 1");
        let ends = (1u64 << last) | (1u64 << self.seq[0]);
        let mut ys = open;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            if (self.adj[y] & ((open | ends) & !(1 << y))).count_ones() < 2 {
                return false;
            }
        }
        true
    }

    fn run(&mut self, used: u64, budget: &mut Budget) -> bool {
        let last = *self.seq.last().expect("path starts at 1");
        if used == self.all {
            return self.adj[last] & (1 << self.seq[0]) != 0;
        }
        if self.seq.len() > 1 && !self.viable(used) {
            return false;
        }
        let mut choices = self.adj[last] & self.all & !used;
        while choices != 0 {
            let y = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if !budget.tick() {
                return false;
            }
            self.seq.push(y);
            if self.run(used | (1 << y), budget) {
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

/// Arrangement of `1..=n` on a circle with every adjacent sum prime, in
/// canonical form: starting at 1 and lexicographically smallest, which also
/// puts the smaller neighbour of 1 second.
pub fn prime_circle(n: usize, limits: &SearchLimits) -> Result<SearchOutcome, SearchError> {
    if n % 2 == 1 {
        return Err(SearchError::OddDegree(n));
    }
    if n < 2 {
        return Err(SearchError::DegreeTooSmall { n, min: 2 });
    }
    if n > MAX_DEGREE {
        return Err(SearchError::DimensionTooLarge { n, limit: MAX_DEGREE });
    }
    let mut budget = Budget::new(limits);
    if n == 2 {
        budget.tick();
        let p = Permutation::from_one_line(&[1, 2]).expect("valid");
        return budget.finish(Some(p), check_prime_circle);
    }
    let adj = (0..=n)
        .map(|v| (1..=n).filter(|&u| u != v && v > 0 && is_prime((u + v) as u64)).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut circle = Circle {
        adj,
        all: ((1u64 << (n + 1)) - 1) & !1,
        seq: vec![1],
    };
    let found = circle
        .run(1 << 1, &mut budget)
        .then(|| Permutation::from_one_line(&circle.seq).expect("search yields a bijection"));
    budget.finish(found, check_prime_circle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(n: usize) -> Vec<usize> {
        prime_circle(n, &SearchLimits::default()).unwrap().verdict.witness().unwrap().one_line()
    }

    // first arrangement starting at 1 in lexicographic order
    fn brute_force(n: usize) -> Option<Vec<usize>> {
        let mut v: Vec<usize> = (1..=n).collect();
        loop {
            if (0..n).all(|i| is_prime((v[i] + v[(i + 1) % n]) as u64)) {
                return Some(v);
            }
            let i = (1..n - 1).rev().find(|&i| v[i] < v[i + 1])?;
            let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
    }

    #[test]
    fn small_circles() {
        assert_eq!(circle(2), vec![1, 2]);
        assert_eq!(circle(4), vec![1, 2, 3, 4]);
        assert_eq!(circle(6), vec![1, 4, 3, 2, 5, 6]);
        for n in (4..=10).step_by(2) {
            assert_eq!(Some(circle(n)), brute_force(n), "n={n}");
        }
    }

    #[test]
    fn larger_circles_validate() {
        for n in (12..=40).step_by(2) {
            let v = circle(n);
            assert_eq!(v[0], 1);
            assert!(v[1] < v[n - 1]);
        }
    }

    #[test]
    fn odd_degree() {
        assert_eq!(prime_circle(5, &SearchLimits::default()), Err(SearchError::OddDegree(5)));
    }
}
