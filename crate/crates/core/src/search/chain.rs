//! Depth-first construction of a sequence of distinct values in increasing
//! lexicographic order, where each consecutive pair `(x, y)` contributes a
//! weight `w(x, y)` to a running integer total.
//!
//! Pruning uses interval bounds on the part of the total not yet fixed. With
//! last placed value `v` and unused set `U`, every `y` in `U` will eventually be
//! entered from some predecessor in `(U ∪ {v}) \ {y}`, so its contribution lies
//! between the min and max of `w(x, y)` over that set. A closing term
//! `w(last, c)` has `last` in `U`, so it is bounded by the extremes of `w(y, c)`
//! over `U`. Summing these per-value extremes never excludes an achievable total,
//! for signed weights as well.

use super::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Closing {
    /// No term after the last value.
    Open,
    /// Add `w(last, first)`.
    ToFirst,
    /// Add `w(last, c)` for a value `c` outside the pool.
    ToFixed(usize),
}

pub(crate) struct Chain<'a, F, A>
where
    F: Fn(i128, i128) -> bool,
    A: Fn(i128) -> bool,
{
    stride: usize,
    weight: &'a [i128],
    closing: Closing,
    pool: u64,
    length: usize,
    /// May some total in `[lo, hi]` be accepted?
    feasible: F,
    accept: A,
    pub(crate) seq: Vec<usize>,
}

impl<'a, F, A> Chain<'a, F, A>
where
    F: Fn(i128, i128) -> bool,
    A: Fn(i128) -> bool,
{
    /// `weight[x * stride + y]` is `w(x, y)`; `pool` has bit `v` set for each usable value `v`.
    pub(crate) fn new(stride: usize, weight: &'a [i128], pool: u64, closing: Closing, feasible: F, accept: A) -> Self {
        Self {
            stride,
            weight,
            closing,
            pool,
            length: pool.count_ones() as usize,
            feasible,
            accept,
            seq: Vec::new(),
        }
    }

    #[inline]
    fn w(&self, x: usize, y: usize) -> i128 {
        self.weight[x * self.stride + y]
    }

    fn closing_target(&self) -> Option<usize> {
        match self.closing {
            Closing::Open => None,
            Closing::ToFirst => self.seq.first().copied(),
            Closing::ToFixed(c) => Some(c),
        }
    }

    fn bounds(&self, open: u64) -> (i128, i128) {
        let last = *self.seq.last().expect("bounds need a placed value");
        let (mut lo, mut hi) = (0i128, 0i128);
        let mut ys = open;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            let (mut a, mut b) = (self.w(last, y), self.w(last, y));
            let mut xs = open & !(1 << y);
            while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                let v = self.w(x, y);
                a = a.min(v);
                b = b.max(v);
            }
            lo += a;
            hi += b;
        }
        if let Some(c) = self.closing_target() {
            let (mut a, mut b) = (i128::MAX, i128::MIN);
            let mut ys = open;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                let v = self.w(y, c);
                a = a.min(v);
                b = b.max(v);
            }
            lo += a;
            hi += b;
        }
        (lo, hi)
    }

    /// True once `seq` holds an accepted arrangement of the whole pool.
    pub(crate) fn run(&mut self, used: u64, total: i128, budget: &mut Budget) -> bool {
        let depth = self.seq.len();
        if depth == self.length {
            let closing = match self.closing_target() {
                Some(c) => self.w(*self.seq.last().expect("non-empty pool"), c),
                None => 0,
            };
            return (self.accept)(total + closing);
        }
        let open = self.pool & !used;
        if depth > 0 {
            let (lo, hi) = self.bounds(open);
            if !(self.feasible)(total + lo, total + hi) {
                return false;
            }
        }
        let mut choices = open;
        while choices != 0 {
            let y = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if !budget.tick() {
                return false;
            }
            let step = match self.seq.last() {
                Some(&x) => self.w(x, y),
                None => 0,
            };
            self.seq.push(y);
            if self.run(used | (1 << y), total + step, budget) {
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
