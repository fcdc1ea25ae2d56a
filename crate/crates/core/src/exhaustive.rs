//! Low-range exhaustive verification: no Lucas number with `n <= 1000` is
//! a palindromic concatenation of two distinct repdigits, plus the
//! two-repdigit literature list as a harness sanity check.

use crate::digitforms::{match_palindrome, match_two_block, PalindromeSpec};
use crate::error::{Error, Result};
use crate::recurrences::lucas;
use rayon::prelude::*;
use rug::Integer;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Palindromic,
    TwoBlock,
}

impl std::fmt::Display for SearchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchMode::Palindromic => write!(f, "palindromic"),
            SearchMode::TwoBlock => write!(f, "two-block"),
        }
    }
}

/// One matched Lucas number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub n: usize,
    pub value: Integer,
    pub pattern: Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Palindrome(PalindromeSpec),
    TwoBlock { d1: u8, a: u32, d2: u8, b: u32 },
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pattern::Palindrome(spec) => write!(f, "{spec}"),
            Pattern::TwoBlock { d1, a, d2, b } => write!(f, "{d1}^{a} {d2}^{b}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n_max: usize,
    pub mode: SearchMode,
    pub hits: Vec<Hit>,
}

impl SearchReport {
    pub fn hit_values(&self) -> Vec<Integer> {
        let mut v: Vec<Integer> = self.hits.iter().map(|h| h.value.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

fn search(n_max: usize, mode: SearchMode) -> Result<SearchReport> {
    if n_max < 2 {
        return Err(Error::Precondition("search needs n_max >= 2".into()));
    }
    // Warm the memo once so parallel workers only take read locks.
    let _ = lucas(n_max);
    let mut hits: Vec<Hit> = (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let value = lucas(n);
            let pattern = match mode {
                SearchMode::Palindromic => match_palindrome(&value).map(Pattern::Palindrome),
                SearchMode::TwoBlock => {
                    match_two_block(&value).map(|(d1, a, d2, b)| Pattern::TwoBlock { d1, a, d2, b })
                }
            };
            pattern.map(|pattern| Hit { n, value, pattern })
        })
        .collect();
    hits.sort_by_key(|h| h.n);
    Ok(SearchReport { n_max, mode, hits })
}

/// Scans `L_n` for `n <= n_max` against the palindromic pattern. The digit
/// matcher covers all `l, m >= 1` with `d1 != d2` at once, so no
/// enumeration of block lengths is needed.
pub fn search_palindromic(n_max: usize) -> Result<SearchReport> {
    search(n_max, SearchMode::Palindromic)
}

/// Scans `L_n` for `n <= n_max` for two-repdigit concatenations
/// (`d1 = d2` allowed, each block length >= 1, at least two digits).
pub fn search_two_block(n_max: usize) -> Result<SearchReport> {
    search(n_max, SearchMode::TwoBlock)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digitforms::palindrome_value;

    #[test]
    fn no_palindromic_hits_up_to_1000() {
        let report = search_palindromic(1000).unwrap();
        assert!(report.hits.is_empty());
    }

    #[test]
    fn no_palindromic_hits_in_tiny_range() {
        assert!(search_palindromic(10).unwrap().hits.is_empty());
    }

    #[test]
    fn no_palindromic_hits_up_to_2000() {
        assert!(search_palindromic(2000).unwrap().hits.is_empty());
    }

    #[test]
    fn two_block_literature_list() {
        let report = search_two_block(1000).unwrap();
        let values: Vec<String> = report.hit_values().iter().map(|v| v.to_string()).collect();
        assert_eq!(values, ["11", "18", "29", "47", "76", "199", "322"]);
    }

    #[test]
    fn two_block_prefixes() {
        let report = search_two_block(6).unwrap();
        let values: Vec<u32> = report
            .hit_values()
            .iter()
            .map(|v| v.to_u32().unwrap())
            .collect();
        assert_eq!(values, [11, 18]);
        let report = search_two_block(15).unwrap();
        let values: Vec<u32> = report
            .hit_values()
            .iter()
            .map(|v| v.to_u32().unwrap())
            .collect();
        assert_eq!(values, [11, 18, 29, 47, 76, 199, 322]);
    }

    #[test]
    fn generate_and_compare_oracle_agrees_up_to_1000() {
        // Independent direction: for each n, enumerate every (d1, d2, l, m)
        // with 2l + m equal to the digit count of L_n, build the pattern
        // value, and compare. The implementation scans digit runs instead.
        let report = search_palindromic(1000).unwrap();
        let mut oracle_hits = Vec::new();
        for n in 0..=1000usize {
            let ln = crate::recurrences::lucas(n);
            let len = ln.to_string().len() as u32;
            if len < 3 {
                continue;
            }
            for ell in 1..=(len - 1) / 2 {
                let m = len - 2 * ell;
                for d1 in 1..=9u8 {
                    for d2 in 0..=9u8 {
                        if d1 == d2 {
                            continue;
                        }
                        let spec = PalindromeSpec::new(d1, d2, ell, m).unwrap();
                        if palindrome_value(&spec) == ln {
                            oracle_hits.push((n, spec));
                        }
                    }
                }
            }
        }
        assert_eq!(
            oracle_hits.len(),
            report.hits.len(),
            "matcher disagrees with generate-and-compare oracle"
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let a = search_two_block(300).unwrap();
        let b = search_two_block(300).unwrap();
        assert_eq!(a.hits, b.hits);
    }

    #[test]
    fn rejects_tiny_n_max() {
        assert!(search_palindromic(1).is_err());
    }
}
