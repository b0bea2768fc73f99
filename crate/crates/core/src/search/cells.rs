use crate::linalg::ExactMatrix;
use crate::perm::Permutation;

use super::check::check_cells;
use super::{Budget, Parity, SearchError, SearchLimits, SearchOutcome};

/// Whether every row in `rows` can take a distinct column from `cols`
/// (Kuhn's augmenting paths over column bitmasks).
pub fn has_perfect_matching(rows: &[u64], cols: u64) -> bool {
    if rows.len() > cols.count_ones() as usize || rows.iter().any(|&r| r & cols == 0) {
        return false;
    }
    let mut owner = [usize::MAX; 64];
    for r in 0..rows.len() {
        let mut seen = 0u64;
        if !augment(r, rows, cols, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(r: usize, rows: &[u64], cols: u64, owner: &mut [usize; 64], seen: &mut u64) -> bool {
    let mut options = rows[r] & cols & !*seen;
    while options != 0 {
        let c = options.trailing_zeros() as usize;
        options &= options - 1;
        *seen |= 1 << c;
        if owner[c] == usize::MAX || augment(owner[c], rows, cols, owner, seen) {
            owner[c] = r;
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RowOrder {
    Lexicographic,
    MostConstrained,
}

struct CellSearch<'a> {
    rows: &'a [u64],
    parity: Option<Parity>,
    hall: bool,
    order: RowOrder,
    // assignment[r] = column + 1, 0 when open
    assignment: Vec<usize>,
}

impl CellSearch<'_> {
    fn feasible(&self, free_cols: u64) -> bool {
        if !self.hall {
            return true;
        }
        let open: Vec<u64> = self
            .rows
            .iter()
            .zip(&self.assignment)
            .filter(|(_, &a)| a == 0)
            .map(|(&r, _)| r)
            .collect();
        has_perfect_matching(&open, free_cols)
    }

    fn pick_row(&self, free_cols: u64) -> Option<usize> {
        let mut open = self.assignment.iter().enumerate().filter(|(_, &a)| a == 0).map(|(r, _)| r);
        match self.order {
            RowOrder::Lexicographic => open.next(),
            RowOrder::MostConstrained => {
                open.min_by_key(|&r| ((self.rows[r] & free_cols).count_ones(), r))
            }
        }
    }

    fn run(&mut self, free_cols: u64, budget: &mut Budget) -> bool {
        let Some(r) = self.pick_row(free_cols) else {
            let perm = self.current();
            return self.parity.map_or(true, |p| p.admits(&perm));
        };
        let mut options = self.rows[r] & free_cols;
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if !budget.tick() {
                return false;
            }
            self.assignment[r] = c + 1;
            let rest = free_cols & !(1 << c);
            if self.feasible(rest) && self.run(rest, budget) {
                return true;
            }
            self.assignment[r] = 0;
            if budget.exhausted() {
                return false;
            }
        }
        false
    }

    fn current(&self) -> Permutation {
        Permutation::from_one_line(&self.assignment).expect("complete assignment is a bijection")
    }
}

/// Lexicographically smallest permutation confined to the 1-cells of `allowed`,
/// optionally restricted to one parity class.
///
/// Satisfiability is settled first (perfect matching, or a most-constrained-row
/// search when a parity is requested); the canonical witness is then found by a
/// row-by-row search in lexicographic order.
pub fn find_perm(
    allowed: &ExactMatrix,
    parity: Option<Parity>,
    limits: &SearchLimits,
) -> Result<SearchOutcome, SearchError> {
    let rows = allowed.row_masks()?;
    let n = rows.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut budget = Budget::new(limits);
    let mut search = CellSearch {
        rows: &rows,
        parity,
        hall: limits.hall_pruning,
        order: RowOrder::MostConstrained,
        assignment: vec![0; n],
    };

    let satisfiable = match (parity, limits.hall_pruning) {
        (None, true) => {
            budget.tick();
            has_perfect_matching(&rows, all)
        }
        _ => {
            let found = search.feasible(all) && search.run(all, &mut budget);
            search.assignment.iter_mut().for_each(|a| *a = 0);
            found
        }
    };
    if !satisfiable {
        return budget.finish(None, |_| unreachable!());
    }
    search.order = RowOrder::Lexicographic;
    let found = search.run(all, &mut budget).then(|| search.current());
    budget.finish(found, |p| check_cells(p, allowed, parity))
}
