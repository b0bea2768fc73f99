//! Size caps and search budgets. Defaults encode desk-scale runtimes; every
//! value can be overridden from a TOML file or CLI flags.

use std::path::Path;
use std::time::Duration;

use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest dimension for the exact permanent.
    pub permanent_max_n: usize,
    /// Largest dimension for the modular permanent.
    pub permanent_mod_max_n: usize,
    /// Largest dimension for bitmask counting (hard ceiling 32).
    pub count_max_n: usize,
    /// Node budget for backtracking searches.
    pub search_node_budget: u64,
    /// Wall-clock budget for backtracking searches, in seconds.
    pub search_timeout_secs: f64,
    /// Largest number of subsets a cyclic-group verification may enumerate.
    pub subset_budget: u64,
    /// Largest number of injections a sumset check may enumerate.
    pub injection_budget: u64,
    /// Largest sieve limit.
    pub sieve_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            permanent_max_n: 24,
            permanent_mod_max_n: 20,
            count_max_n: 24,
            search_node_budget: 100_000_000,
            search_timeout_secs: 60.0,
            subset_budget: 50_000_000,
            injection_budget: 50_000_000,
            sieve_cap: crate::primes::DEFAULT_SIEVE_CAP,
        }
    }
}

impl Limits {
    pub fn from_toml_str(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::from_toml_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn search_timeout(&self) -> Duration {
        Duration::from_secs_f64(self.search_timeout_secs.max(0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_override() {
        let l = Limits::from_toml_str("permanent_max_n = 10\nsearch_timeout_secs = 2.5\n").unwrap();
        assert_eq!(l.permanent_max_n, 10);
        assert_eq!(l.search_timeout(), Duration::from_millis(2500));
        assert_eq!(l.count_max_n, 24);
        assert!(Limits::from_toml_str("bogus = 1").is_err());
    }
}
