//! Target sequences with `a_1 = 2` and `a_k < a_{k+1} <= 2 a_k`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("bound {0} is below 2")]
    BoundTooSmall(u64),
    #[error("custom prefix ends at {last}, which does not cover bound {bound}")]
    PrefixTooShort { last: u64, bound: u64 },
    #[error("invalid sequence: {0}")]
    Invalid(Violation),
    #[error("unknown sequence `{0}` (expected pow2, fib, lucas, tri or custom:<list>)")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    FirstTermNotTwo,
    NotIncreasing,
    ExceedsDouble,
}

/// First offending position (one-indexed) of a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Empty => "empty prefix",
            ViolationKind::FirstTermNotTwo => "first term is not 2",
            ViolationKind::NotIncreasing => "not strictly increasing",
            ViolationKind::ExceedsDouble => "more than twice the previous term",
        };
        write!(f, "{what} at index {}", self.index)
    }
}

/// Check a finite prefix against the doubling conditions.
pub fn validate_prefix(terms: &[u64]) -> Result<(), Violation> {
    match terms.first() {
        None => {
            return Err(Violation {
                index: 1,
                kind: ViolationKind::Empty,
            })
        }
        Some(&a) if a != 2 => {
            return Err(Violation {
                index: 1,
                kind: ViolationKind::FirstTermNotTwo,
            })
        }
        _ => {}
    }
    for (i, w) in terms.windows(2).enumerate() {
        let index = i + 2;
        if w[1] <= w[0] {
            return Err(Violation {
                index,
                kind: ViolationKind::NotIncreasing,
            });
        }
        if w[1] > w[0].saturating_mul(2) {
            return Err(Violation {
                index,
                kind: ViolationKind::ExceedsDouble,
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DoublingSequence {
    /// 2, 4, 8, 16, ...
    PowersOfTwo,
    /// Fibonacci numbers from F_3: 2, 3, 5, 8, 13, ...
    FibonacciTail,
    /// Lucas numbers L_0, L_2, L_3, ...: 2, 3, 4, 7, 11, 18, ...
    LucasVariant,
    /// 2 followed by triangular numbers T_2, T_3, ...: 2, 3, 6, 10, 15, ...
    TriangularVariant,
    /// Explicit finite prefix; never extrapolated.
    Custom(Vec<u64>),
}

impl DoublingSequence {
    pub fn custom(terms: Vec<u64>) -> Result<Self, SequenceError> {
        validate_prefix(&terms).map_err(SequenceError::Invalid)?;
        Ok(Self::Custom(terms))
    }

    pub fn name(&self) -> String {
        match self {
            Self::PowersOfTwo => "pow2".into(),
            Self::FibonacciTail => "fib".into(),
            Self::LucasVariant => "lucas".into(),
            Self::TriangularVariant => "tri".into(),
            Self::Custom(t) => {
                let list: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                format!("custom:{}", list.join(","))
            }
        }
    }

    /// All terms `<= bound`, in increasing order.
    pub fn terms_up_to(&self, bound: u64) -> Result<Vec<u64>, SequenceError> {
        if bound < 2 {
            return Err(SequenceError::BoundTooSmall(bound));
        }
        let mut out = Vec::new();
        match self {
            Self::PowersOfTwo => {
                let mut t = 2u64;
                while t <= bound {
                    out.push(t);
                    match t.checked_mul(2) {
                        Some(next) => t = next,
                        None => break,
                    }
                }
            }
            Self::FibonacciTail => push_recurrence(&mut out, 2, 3, bound),
            Self::LucasVariant => {
                out.push(2);
                push_recurrence(&mut out, 3, 4, bound);
            }
            Self::TriangularVariant => {
                out.push(2);
                let mut k = 2u64;
                loop {
                    let t = match k.checked_mul(k + 1) {
                        Some(v) => v / 2,
                        None => break,
                    };
                    if t > bound {
                        break;
                    }
                    out.push(t);
                    k += 1;
                }
            }
            Self::Custom(terms) => {
                let last = *terms.last().unwrap_or(&0);
                if last < bound {
                    return Err(SequenceError::PrefixTooShort { last, bound });
                }
                out.extend(terms.iter().copied().filter(|&t| t <= bound));
            }
        }
        Ok(out)
    }
}

// Appends a, b, a+b, ... while terms stay <= bound.
fn push_recurrence(out: &mut Vec<u64>, mut a: u64, mut b: u64, bound: u64) {
    while a <= bound {
        out.push(a);
        match a.checked_add(b) {
            Some(c) => (a, b) = (b, c),
            None => {
                if b <= bound {
                    out.push(b);
                }
                break;
            }
        }
    }
}

impl FromStr for DoublingSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pow2" => Ok(Self::PowersOfTwo),
            "fib" => Ok(Self::FibonacciTail),
            "lucas" => Ok(Self::LucasVariant),
            "tri" => Ok(Self::TriangularVariant),
            _ => {
                let list = s
                    .strip_prefix("custom:")
                    .ok_or_else(|| SequenceError::UnknownName(s.to_string()))?;
                let terms = list
                    .split(',')
                    .map(|t| t.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| SequenceError::UnknownName(s.to_string()))?;
                Self::custom(terms)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_prefixes() {
        use DoublingSequence::*;
        assert_eq!(PowersOfTwo.terms_up_to(20).unwrap(), vec![2, 4, 8, 16]);
        assert_eq!(TriangularVariant.terms_up_to(16).unwrap(), vec![2, 3, 6, 10, 15]);
        assert_eq!(FibonacciTail.terms_up_to(15).unwrap(), vec![2, 3, 5, 8, 13]);
        assert_eq!(
            LucasVariant.terms_up_to(30).unwrap(),
            vec![2, 3, 4, 7, 11, 18, 29]
        );
        assert_eq!(LucasVariant.terms_up_to(2).unwrap(), vec![2]);
        assert_eq!(FibonacciTail.terms_up_to(2).unwrap(), vec![2]);
        assert_eq!(
            PowersOfTwo.terms_up_to(1),
            Err(SequenceError::BoundTooSmall(1))
        );
    }

    #[test]
    fn prefix_validation() {
        assert_eq!(validate_prefix(&[2, 4, 8]), Ok(()));
        assert_eq!(
            validate_prefix(&[2, 5]),
            Err(Violation {
                index: 2,
                kind: ViolationKind::ExceedsDouble
            })
        );
        assert_eq!(
            validate_prefix(&[3, 4]),
            Err(Violation {
                index: 1,
                kind: ViolationKind::FirstTermNotTwo
            })
        );
        assert_eq!(
            validate_prefix(&[2, 3, 3]),
            Err(Violation {
                index: 3,
                kind: ViolationKind::NotIncreasing
            })
        );
        assert_eq!(validate_prefix(&[]).unwrap_err().kind, ViolationKind::Empty);
    }

    #[test]
    fn builtins_valid_to_a_million() {
        use DoublingSequence::*;
        for s in [PowersOfTwo, FibonacciTail, LucasVariant, TriangularVariant] {
            let terms = s.terms_up_to(1_000_000).unwrap();
            assert_eq!(validate_prefix(&terms), Ok(()), "{}", s.name());
            assert!(terms.iter().all(|&t| t <= 1_000_000));
        }
        let fib = FibonacciTail.terms_up_to(1_000_000).unwrap();
        assert!(fib.windows(3).all(|w| w[2] == w[1] + w[0]));
    }

    #[test]
    fn full_u64_range_terminates() {
        use DoublingSequence::*;
        for s in [PowersOfTwo, FibonacciTail, LucasVariant] {
            let terms = s.terms_up_to(u64::MAX).unwrap();
            assert_eq!(validate_prefix(&terms), Ok(()), "{}", s.name());
        }
    }

    #[test]
    fn custom_sequences() {
        let s: DoublingSequence = "custom:2,3,5,9,17".parse().unwrap();
        assert_eq!(s.terms_up_to(10).unwrap(), vec![2, 3, 5, 9]);
        assert_eq!(
            s.terms_up_to(18),
            Err(SequenceError::PrefixTooShort { last: 17, bound: 18 })
        );
        assert!(matches!(
            "custom:2,5".parse::<DoublingSequence>(),
            Err(SequenceError::Invalid(_))
        ));
        assert!(matches!(
            "squares".parse::<DoublingSequence>(),
            Err(SequenceError::UnknownName(_))
        ));
        assert_eq!(s.name(), "custom:2,3,5,9,17");
    }
}
