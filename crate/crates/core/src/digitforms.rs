//! Repdigit blocks, two-block concatenations, and palindromic
//! concatenations `d1...d1 d2...d2 d1...d1`, together with the closed
//! form `(1/9)(d1 10^(2l+m) - (d1-d2) 10^(l+m) + (d1-d2) 10^l - d1)`.

use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Digit pattern `d1^ell d2^m d1^ell` with distinct digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PalindromeSpec {
    pub d1: u8,
    pub d2: u8,
    pub ell: u32,
    pub m: u32,
}

impl PalindromeSpec {
    pub fn new(d1: u8, d2: u8, ell: u32, m: u32) -> Result<Self> {
        if !(1..=9).contains(&d1) {
            return Err(Error::InvalidInput(format!("d1 = {d1} outside 1..9")));
        }
        if d2 > 9 {
            return Err(Error::InvalidInput(format!("d2 = {d2} outside 0..9")));
        }
        if d1 == d2 {
            return Err(Error::InvalidInput("palindromic pattern needs d1 != d2".into()));
        }
        if ell == 0 || m == 0 {
            return Err(Error::InvalidInput("block lengths must be >= 1".into()));
        }
        Ok(PalindromeSpec { d1, d2, ell, m })
    }

    pub fn digit_count(&self) -> u32 {
        2 * self.ell + self.m
    }
}

impl fmt::Display for PalindromeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{} {}^{} {}^{}",
            self.d1, self.ell, self.d2, self.m, self.d1, self.ell
        )
    }
}

/// Exact integer value of the palindromic pattern via the closed form.
pub fn palindrome_value(spec: &PalindromeSpec) -> Integer {
    let d1 = Integer::from(spec.d1);
    let diff = Integer::from(spec.d1) - Integer::from(spec.d2);
    let ten = Integer::from(10);
    let total = Integer::from((&ten).pow(2 * spec.ell + spec.m));
    let mid = Integer::from((&ten).pow(spec.ell + spec.m));
    let low = Integer::from((&ten).pow(spec.ell));
    let numerator = Integer::from(&d1 * &total) - Integer::from(&diff * &mid)
        + Integer::from(&diff * &low)
        - d1;
    // The numerator is divisible by 9 by construction of the digit string.
    debug_assert!(numerator.is_divisible(&Integer::from(9)));
    numerator / 9
}

/// Integer value of a `d1`-block of length `a` followed by a `d2`-block of
/// length `b`. Equal digits are allowed here; this is the two-repdigit
/// cross-check form, not the palindromic theorem form.
pub fn two_block_value(d1: u8, a: u32, d2: u8, b: u32) -> Result<Integer> {
    if !(1..=9).contains(&d1) || d2 > 9 {
        return Err(Error::InvalidInput("digits outside range".into()));
    }
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("block lengths must be >= 1".into()));
    }
    let repunit = |len: u32| (Integer::from(10).pow(len) - 1u32) / 9u32;
    let head = Integer::from(d1) * repunit(a);
    let tail = Integer::from(d2) * repunit(b);
    Ok(head * Integer::from(10).pow(b) + tail)
}

fn digit_runs(s: &str) -> Vec<(u8, u32)> {
    let mut runs: Vec<(u8, u32)> = Vec::new();
    for c in s.bytes() {
        let d = c - b'0';
        match runs.last_mut() {
            Some((digit, len)) if *digit == d => *len += 1,
            _ => runs.push((d, 1)),
        }
    }
    runs
}

/// The unique `d1 != d2` palindromic spec whose value is `v`, if any.
///
/// Works on the digit string, not by inverting the closed form: the run
/// structure of the string determines the block boundaries outright.
pub fn match_palindrome(v: &Integer) -> Option<PalindromeSpec> {
    if *v < 1 {
        return None;
    }
    let runs = digit_runs(&v.to_string());
    if runs.len() != 3 {
        return None;
    }
    let (d1a, ell_a) = runs[0];
    let (d2, m) = runs[1];
    let (d1b, ell_b) = runs[2];
    if d1a != d1b || ell_a != ell_b || d1a == d2 || d1a == 0 {
        return None;
    }
    Some(PalindromeSpec {
        d1: d1a,
        d2,
        ell: ell_a,
        m,
    })
}

/// Two-block decomposition of `v` if its digit string is one or two runs
/// and has at least two digits. Single-run strings split after the first
/// digit, matching the convention that a repdigit of length >= 2 is itself
/// a combination of two repdigits.
pub fn match_two_block(v: &Integer) -> Option<(u8, u32, u8, u32)> {
    if *v < 10 {
        return None;
    }
    let runs = digit_runs(&v.to_string());
    match runs.as_slice() {
        [(d, len)] => Some((*d, 1, *d, len - 1)),
        [(d1, a), (d2, b)] => Some((*d1, *a, *d2, *b)),
        _ => None,
    }
}
