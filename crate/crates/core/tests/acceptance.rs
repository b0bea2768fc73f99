//! Acceptance criteria 1-13. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Oracles here are deliberately naive and share no code
//! with the library: trial-division primality, permanents by full expansion,
//! counts by enumerating S_n, rational sums recomputed term by term.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use permkit::additive::{sumset_bound_check, verify_conj41_cyclic, SumsetContext};
use permkit::cli::run_command;
use permkit::counting::{count_constrained, count_even_odd, sequence_counts, CountKind};
use permkit::linalg::{determinant, indicator_matrix, permanent, permanent_mod, power_matrix, CellPredicate, ExactMatrix};
use permkit::search::problems::{solve, ProblemResult};
use permkit::search::{find_perm, weighted_sum_value_set, Parity, SearchLimits, Verdict};
use permkit::Permutation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------- oracles ----------

fn trial_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn first_primes(k: usize) -> Vec<u64> {
    (2u64..).filter(|&v| trial_prime(v)).take(k).collect()
}

/// Calls `f` on every permutation of `0..n` (zero-based images) in lexicographic order.
fn for_each_perm(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut v: Vec<usize> = (0..n).collect();
    loop {
        if !f(&v) {
            return;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { return };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
    }
}

fn is_even_perm(v: &[usize]) -> bool {
    let inversions: usize = (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum();
    inversions % 2 == 0
}

fn naive_permanent(rows: &[Vec<i64>]) -> BigInt {
    let mut total = BigInt::zero();
    for_each_perm(rows.len(), |p| {
        total += p.iter().enumerate().map(|(i, &j)| BigInt::from(rows[i][j])).product::<BigInt>();
        true
    });
    total
}

fn naive_determinant(rows: &[Vec<i64>]) -> BigInt {
    let mut total = BigInt::zero();
    for_each_perm(rows.len(), |p| {
        let term: BigInt = p.iter().enumerate().map(|(i, &j)| BigInt::from(rows[i][j])).product();
        if is_even_perm(p) {
            total += term;
        } else {
            total -= term;
        }
        true
    });
    total
}

fn power_rows(n: usize) -> Vec<Vec<BigInt>> {
    (1..=n).map(|i| (0..n).map(|j| BigInt::from(i).pow(j as u32)).collect()).collect()
}

fn rational_sum(terms: impl Iterator<Item = (i64, i64)>) -> Option<BigRational> {
    let mut total = BigRational::zero();
    for (num, den) in terms {
        if den == 0 {
            return None;
        }
        total += BigRational::new(num.into(), den.into());
    }
    Some(total)
}

// ---------- reporting ----------

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, limit {limit:.0?}"))
    }
}

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return outcome(false, format!($($msg)+));
        }
    };
}

// ---------- criteria ----------

const EXAMPLE_TABLE: [&str; 11] = [
    "(1)",
    "(1)",
    "(1,3)",
    "(1,3)",
    "(3,5)",
    "(2,6)(3,5)",
    "(1,7)(2,6)(3,5)",
    "(1,7)(2,6)(3,5)",
    "(2,6)(3,5)(7,9)",
    "(3,5)(6,10)(7,9)",
    "(1,3)(5,11)(6,10)(7,9)",
];

fn c1() -> Outcome {
    let start = Instant::now();
    for (i, want) in EXAMPLE_TABLE.iter().enumerate() {
        let n = (i + 1).to_string();
        let out = run_command(&["construct", "--n", &n, "--sequence", "pow2", "--format", "cycles"]);
        check!(out.code == 0 && out.stdout.trim_end() == *want, "n={n}: got {:?}, want {want}", out.stdout.trim_end());
        // the cycles must really have power-of-two sums
        let p = Permutation::parse_cycles(i + 1, want).unwrap();
        check!((1..=i + 1).all(|k| (k + p.apply(k)).is_power_of_two()), "n={n}: table entry fails the sum test");
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(1), "11 constructions") {
        return outcome(false, e);
    }
    outcome(true, "pi_1..pi_11 match the reference cycles")
}

fn c2() -> Outcome {
    let start = Instant::now();
    for n in 1..=20 {
        let m = indicator_matrix(n, &CellPredicate::SumPowerOfTwo).unwrap();
        check!(count_constrained(&m).unwrap() == 1u8.into(), "n={n}: count is not 1");
    }
    let small = start.elapsed();
    // enumeration oracle where feasible
    for n in 1..=9 {
        let mut hits = 0;
        for_each_perm(n, |p| {
            hits += p.iter().enumerate().all(|(k, &j)| (k + j + 2).is_power_of_two()) as u32;
            true
        });
        check!(hits == 1, "n={n}: enumeration finds {hits}");
    }
    let mut slowest = Duration::ZERO;
    for n in 21..=24 {
        let t = Instant::now();
        let m = indicator_matrix(n, &CellPredicate::SumPowerOfTwo).unwrap();
        check!(count_constrained(&m).unwrap() == 1u8.into(), "n={n}: count is not 1");
        slowest = slowest.max(t.elapsed());
    }
    if let Err(e) = within(small, Duration::from_secs(1), "n<=20").and(within(slowest, Duration::from_secs(120), "n=24")) {
        return outcome(false, e);
    }
    outcome(true, format!("count = 1 for n = 1..24 (n<=20 in {small:.2?}, n=24 in {slowest:.2?})"))
}

fn c3() -> Outcome {
    let start = Instant::now();
    let want: [u64; 20] = [1, 1, 1, 2, 1, 2, 4, 2, 1, 4, 4, 20, 4, 5, 1, 20, 24, 8, 96, 200];
    let got: Vec<u64> = sequence_counts(CountKind::Fibonacci, 20)
        .unwrap()
        .iter()
        .map(|r| r.value().try_into().unwrap())
        .collect();
    check!(got == want, "f(1..20) = {got:?}");
    if let Err(e) = within(start.elapsed(), Duration::from_secs(30), "f(1..20)") {
        return outcome(false, e);
    }
    outcome(true, format!("f(1..20) matches ({:.2?})", start.elapsed()))
}

fn c4() -> Outcome {
    let start = Instant::now();
    let want: [u64; 11] = [1, 1, 1, 1, 3, 6, 1, 1, 33, 125, 226];
    let got: Vec<u64> = sequence_counts(CountKind::ChenEven, 11)
        .unwrap()
        .iter()
        .map(|r| r.value().try_into().unwrap())
        .collect();
    check!(got == want, "b(1..11) = {got:?}");
    let primes = first_primes(8);
    for n in 1..=8 {
        let (mut even, mut odd) = (0u64, 0u64);
        for_each_perm(n, |p| {
            if p.iter().enumerate().all(|(k, &j)| trial_prime(primes[k] * primes[j] - 2)) {
                if is_even_perm(p) {
                    even += 1;
                } else {
                    odd += 1;
                }
            }
            true
        });
        let m = indicator_matrix(n, &CellPredicate::PrimeProductMinusTwoPrime).unwrap();
        let (e, o) = count_even_odd(&m).unwrap();
        check!(e == even.into() && o == odd.into(), "n={n}: split ({e},{o}) vs enumeration ({even},{odd})");
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(30), "b(1..11)") {
        return outcome(false, e);
    }
    outcome(true, format!("b(1..11) matches, enumeration agrees for n<=8 ({:.2?})", start.elapsed()))
}

fn c5() -> Outcome {
    let start = Instant::now();
    for p in [3u64, 5, 7, 11, 13] {
        let r = permanent_mod(&power_matrix(p as usize - 1).unwrap(), p).unwrap();
        check!(r == 0, "p={p}: residue {r}");
    }
    for n in 3..=16usize {
        let r = permanent_mod(&power_matrix(n).unwrap(), n as u64).unwrap();
        check!(r == 0, "n={n}: residue {r}");
    }
    // exact values where the naive expansion is affordable
    for n in 3..=7usize {
        let rows: Vec<Vec<i64>> = (1..=n as i64).map(|i| (0..n as u32).map(|j| i.pow(j)).collect()).collect();
        check!(
            naive_permanent(&rows) % BigInt::from(n) == BigInt::zero(),
            "n={n}: naive permanent not divisible"
        );
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(60), "congruences") {
        return outcome(false, e);
    }
    outcome(true, format!("all residues 0 ({:.2?})", start.elapsed()))
}

fn is_fermat_prime(p: u64) -> bool {
    trial_prime(p) && (p - 1).is_power_of_two()
}

fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn c6() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for n in 2..=16u64 {
        let m = power_matrix(n as usize - 1).unwrap();
        let r1 = permanent_mod(&m, n).unwrap();
        check!((r1 != 0) == (n % 4 == 2), "n={n}: residue mod n is {r1}");
        let r2 = permanent_mod(&m, n * n).unwrap();
        if n % 4 != 2 && !is_fermat_prime(n) {
            check!(r2 == 0, "n={n}: residue mod n^2 is {r2}");
        }
        // cross-check the modular route against the exact permanent
        if n <= 12 {
            let exact = permanent(&m).unwrap();
            check!(exact % BigInt::from(n * n) == BigInt::from(r2), "n={n}: modular and exact disagree");
        }
    }
    for p in [3u64, 5, 17] {
        let r = permanent_mod(&power_matrix(p as usize - 1).unwrap(), p * p).unwrap();
        let want = (BigInt::from(p) * factorial((p - 1) / 2)) % BigInt::from(p * p);
        check!(BigInt::from(r) == want, "p={p}: residue {r}, expected {want}");
        notes.push(format!("p={p}:{r}"));
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(120), "n<=16") {
        return outcome(false, e);
    }
    outcome(true, format!("mod-n and mod-n^2 vanishing holds for n<=16; Fermat residues {} ({:.2?})", notes.join(" "), start.elapsed()))
}

fn c7() -> Outcome {
    let start = Instant::now();
    for n in 1..=12usize {
        let m = ExactMatrix::from_rows(power_rows(n)).unwrap();
        let want: BigInt = (1..n as u64).map(factorial).product();
        check!(determinant(&m) == want, "n={n}: det {}", determinant(&m));
        if n <= 7 {
            let rows = m.to_i64_rows().unwrap();
            check!(naive_determinant(&rows) == want, "n={n}: naive determinant disagrees");
        }
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(1), "determinants") {
        return outcome(false, e);
    }
    outcome(true, format!("det = 1!2!...(n-1)! for n<=12 ({:.2?})", start.elapsed()))
}

fn adjacent_sum(v: &[usize], cyclic: bool) -> Option<BigRational> {
    let n = v.len();
    let pairs = if cyclic { n } else { n - 1 };
    rational_sum((0..pairs).map(|i| (1, (v[i] + v[(i + 1) % n]) as i64)))
}

fn witness_of(problem: &str, n: usize) -> Result<Vec<usize>, String> {
    match solve(problem, n, &SearchLimits::default()).map_err(|e| e.to_string())? {
        ProblemResult::Search(o) => match o.verdict {
            Verdict::Witness { perm, .. } => Ok(perm.one_line()),
            v => Err(format!("{problem} n={n}: {}", v.label())),
        },
        ProblemResult::Powers(_) => Err("unexpected report".into()),
    }
}

fn c8() -> Outcome {
    let start = Instant::now();
    let witness = [6, 1, 5, 2, 4, 3, 7, 8];
    check!(adjacent_sum(&witness, true) == Some(BigRational::one()), "(6,1,5,2,4,3,7,8) does not sum to 1");
    let out = run_command(&["search", "--problem", "eq46", "--n", "8"]);
    check!(out.code == 0, "search eq46 failed: {}", out.stderr);
    for (problem, cyclic, range) in [("eq45", false, 8..=12), ("eq46", true, 8..=12)] {
        for n in range {
            let w = match witness_of(problem, n) {
                Ok(w) => w,
                Err(e) => return outcome(false, e),
            };
            check!(adjacent_sum(&w, cyclic) == Some(BigRational::one()), "{problem} n={n}: {w:?} does not sum to 1");
            check!(w.iter().collect::<BTreeSet<_>>().len() == n, "{problem} n={n}: not a permutation");
        }
    }
    outcome(true, format!("(6,1,5,2,4,3,7,8) exact; eq45 n=8..12 and eq46 n=8..12 found ({:.2?})", start.elapsed()))
}

fn c9() -> Outcome {
    let primes = first_primes(30);
    let value = |problem: &str, k: u64, j: u64| -> u64 {
        match problem {
            "conj43a" => k * j + 1,
            "conj43b" => k * j - 1,
            "conj44a" => k * k + k * j + j * j,
            "conj44b" => k * k + j * j,
            _ => primes[k as usize - 1] + primes[j as usize - 1] + 1,
        }
    };
    let mut slowest = Duration::ZERO;
    let mut count = 0;
    for problem in ["conj43a", "conj43b", "conj44a", "conj44b", "conj45"] {
        for n in 1..=30usize {
            if (problem == "conj43b" && n <= 2) || (problem == "conj44b" && n == 7) {
                continue;
            }
            let t = Instant::now();
            let w = match witness_of(problem, n) {
                Ok(w) => w,
                Err(e) => return outcome(false, e),
            };
            slowest = slowest.max(t.elapsed());
            check!(w.iter().collect::<BTreeSet<_>>().len() == n, "{problem} n={n}: not a permutation");
            for (i, &j) in w.iter().enumerate() {
                let v = value(problem, i as u64 + 1, j as u64);
                check!(trial_prime(v), "{problem} n={n}: k={} gives {v}, not prime", i + 1);
            }
            count += 1;
        }
    }
    // n = 7 for the sum-of-squares form: no permutation exists
    let mut exists = false;
    for_each_perm(7, |p| {
        exists = p.iter().enumerate().all(|(k, &j)| trial_prime(((k + 1) * (k + 1) + (j + 1) * (j + 1)) as u64));
        !exists
    });
    check!(!exists, "enumeration finds a conj44b witness at n=7");
    match solve("conj44b", 7, &SearchLimits::default()) {
        Ok(ProblemResult::Search(o)) if o.verdict == Verdict::Empty => {}
        other => return outcome(false, format!("conj44b n=7: {other:?}")),
    }
    if let Err(e) = within(slowest, Duration::from_secs(10), "slowest instance") {
        return outcome(false, e);
    }
    outcome(true, format!("{count} witnesses validated, conj44b n=7 empty (slowest {slowest:.2?})"))
}

fn c10() -> Outcome {
    let start = Instant::now();
    let budget = u64::MAX;
    let lpf = |m: u64| (2..=m).find(|d| m % d == 0).unwrap();
    let mut checked = 0u64;
    let mut runs = 0;
    for (n, max_m) in [(4usize, 49u64), (5, 49), (3, 60)] {
        for m in n as u64..=max_m {
            if lpf(m) <= n as u64 + 1 {
                continue;
            }
            match verify_conj41_cyclic(m, n, true, budget) {
                Ok(r) => {
                    check!(r.counterexample.is_none(), "m={m} n={n}: counterexample {:?}", r.counterexample);
                    checked += r.subsets_checked;
                    runs += 1;
                }
                Err(e) => return outcome(false, format!("m={m} n={n}: {e}")),
            }
        }
    }
    for (m, n) in [(7u64, 4usize), (11, 3)] {
        let full = verify_conj41_cyclic(m, n, false, budget).unwrap();
        let reduced = verify_conj41_cyclic(m, n, true, budget).unwrap();
        check!(full.counterexample == reduced.counterexample, "m={m} n={n}: reduced and full disagree");
        check!(full.subsets_checked as u128 == full.subsets_total, "m={m} n={n}: full run skipped subsets");
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(300), "cyclic verification") {
        return outcome(false, e);
    }
    outcome(true, format!("{runs} (m,n) pairs, {checked} orbit representatives, no counterexample ({:.2?})", start.elapsed()))
}

fn c11() -> Outcome {
    let start = Instant::now();
    for n in 1..=8usize {
        let r = weighted_sum_value_set(n).unwrap();
        // enumeration oracle
        let mut values = BTreeSet::new();
        for_each_perm(n, |p| {
            values.insert(p.iter().enumerate().map(|(k, &j)| ((k + 1) * (j + 1)) as u64).sum::<u64>());
            true
        });
        check!(r.values == values.iter().copied().collect::<Vec<_>>(), "n={n}: value set differs from enumeration");
        let lo = (n * (n + 1) * (n + 2) / 6) as u64;
        let hi = (n * (n + 1) * (2 * n + 1) / 6) as u64;
        let interval: BTreeSet<u64> = (lo..=hi).collect();
        if n == 3 {
            check!(values.is_subset(&interval) && values != interval, "n=3: not a strict subset");
            check!(!values.contains(&12), "n=3: 12 is attained");
        } else {
            check!(values == interval, "n={n}: set differs from T(n)");
        }
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(10), "value sets") {
        return outcome(false, e);
    }
    outcome(true, format!("equality for n in {{1,2,4..8}}, n=3 misses 12 ({:.2?})", start.elapsed()))
}

fn c12() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let parity_ok = |m: &ExactMatrix, per: &BigInt| ((per - determinant(m)) % BigInt::from(2)).is_zero();
    for i in 0..200 {
        let n = rng.gen_range(1..=6);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = ExactMatrix::from_i64_rows(&rows).unwrap();
        let per = permanent(&m).unwrap();
        check!(per == naive_permanent(&rows), "integer matrix {i}: Ryser disagrees with expansion");
        check!(parity_ok(&m, &per), "integer matrix {i}: per and det differ in parity");
    }
    for i in 0..200 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.2..0.9);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(density) as i64).collect()).collect();
        let m = ExactMatrix::from_i64_rows(&rows).unwrap();
        let per = permanent(&m).unwrap();
        check!(BigInt::from(count_constrained(&m).unwrap()) == per, "0/1 matrix {i}: count differs from permanent");
        check!(parity_ok(&m, &per), "0/1 matrix {i}: per and det differ in parity");
    }
    let predicates = [
        CellPredicate::SumPrime,
        CellPredicate::SumPowerOfTwo,
        CellPredicate::SumMersenne,
        CellPredicate::ProductPlusOnePrime,
        CellPredicate::ProductMinusOnePrime,
        CellPredicate::NormFormPrime,
        CellPredicate::SumOfSquaresPrime,
        CellPredicate::PrimeSumPlusOnePrime,
        CellPredicate::PrimeProductMinusTwoPrime,
    ];
    let primes = first_primes(8);
    let holds = |pred: &CellPredicate, i: u64, j: u64| -> bool {
        let (pi, pj) = (primes[i as usize - 1], primes[j as usize - 1]);
        match pred {
            CellPredicate::SumPrime => trial_prime(i + j),
            CellPredicate::SumPowerOfTwo => (i + j).is_power_of_two(),
            CellPredicate::SumMersenne => (i + j + 1).is_power_of_two(),
            CellPredicate::ProductPlusOnePrime => trial_prime(i * j + 1),
            CellPredicate::ProductMinusOnePrime => trial_prime(i * j - 1),
            CellPredicate::NormFormPrime => trial_prime(i * i + i * j + j * j),
            CellPredicate::SumOfSquaresPrime => trial_prime(i * i + j * j),
            CellPredicate::PrimeSumPlusOnePrime => trial_prime(pi + pj + 1),
            CellPredicate::PrimeProductMinusTwoPrime => trial_prime(pi * pj - 2),
            CellPredicate::SumInSequence(_) => unreachable!(),
        }
    };
    for i in 0..100 {
        let pred = &predicates[rng.gen_range(0..predicates.len())];
        let n = rng.gen_range(1..=8);
        let parity = [None, Some(Parity::Even), Some(Parity::Odd)][rng.gen_range(0..3)];
        let mut want = None;
        for_each_perm(n, |p| {
            let ok = p.iter().enumerate().all(|(k, &j)| holds(pred, k as u64 + 1, j as u64 + 1))
                && parity.map_or(true, |q| (q == Parity::Even) == is_even_perm(p));
            if ok {
                want = Some(p.iter().map(|j| j + 1).collect::<Vec<_>>());
            }
            !ok
        });
        let m = indicator_matrix(n, pred).unwrap();
        let got = find_perm(&m, parity, &SearchLimits::default()).unwrap();
        check!(
            got.verdict.witness().map(Permutation::one_line) == want,
            "instance {i} ({} n={n} {parity:?}): search {:?} vs enumeration {want:?}",
            pred.label(),
            got.verdict.label()
        );
        let per = permanent(&m).unwrap();
        check!(parity_ok(&m, &per), "instance {i}: per and det differ in parity");
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(120), "property suites") {
        return outcome(false, e);
    }
    outcome(true, format!("200 + 200 + 100 instances agree with oracles ({:.2?})", start.elapsed()))
}

fn c13() -> Outcome {
    let start = Instant::now();
    let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
    for n in [2usize, 4, 5] {
        let a: Vec<i64> = (1..=n as i64).collect();
        let r = sumset_bound_check(SumsetContext::Rationals, &q(&a), n, u64::MAX).unwrap();
        let want = (n * (n * n - 1) / 6 + 1) as u64;
        check!(r.size == want, "n={n}: |S(A)| = {}, expected {want}", r.size);
    }
    let r = sumset_bound_check(SumsetContext::Rationals, &q(&[1, 2, 3]), 2, u64::MAX).unwrap();
    if let Err(e) = within(start.elapsed(), Duration::from_secs(10), "sumsets") {
        return outcome(false, e);
    }
    outcome(
        true,
        format!(
            "|S(A)| = n(n^2-1)/6+1 for n=2,4,5; reported: A={{1,2,3}}, n=2 gives |S(A)|={} vs bound {} ({})",
            r.size,
            r.bound,
            if r.satisfied { "met" } else { "not met" }
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("pow2 construction table, n <= 11", c1),
        ("power-of-two uniqueness, n <= 24", c2),
        ("f(1..20) Fibonacci-sum counts", c3),
        ("b(1..11) even Chen-type counts", c4),
        ("permanent congruences mod p and mod n", c5),
        ("power-matrix residues mod n and n^2", c6),
        ("power-matrix determinants", c7),
        ("adjacent-sum unit fractions", c8),
        ("prime-constraint searches, n <= 30", c9),
        ("cyclic-group orderings", c10),
        ("weighted-sum value sets", c11),
        ("oracle-equivalence suites", c12),
        ("weighted sumset sizes", c13),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let status = if result.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!result.pass);
        println!("criterion {:>2} [{status}] {name}: {} [{:.2?}]", i + 1, result.detail, start.elapsed());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
