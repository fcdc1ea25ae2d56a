//! Exact integer Lucas and Fibonacci sequences, Binet-formula
//! cross-checks, and the growth bounds `alpha^(n-1) <= L_n <= 2 alpha^n`.
//!
//! Sequences are computed by exact iteration with a memoized prefix;
//! the Binet closed form is used only for cross-checks. Exactness is
//! non-negotiable for the search module.

use crate::error::Result;
use crate::realfield::{self, PrecReal};
use rug::{Float, Integer};
use std::sync::{OnceLock, RwLock};

fn lucas_memo() -> &'static RwLock<Vec<Integer>> {
    static MEMO: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(vec![Integer::from(2), Integer::from(1)]))
}

fn fibonacci_memo() -> &'static RwLock<Vec<Integer>> {
    static MEMO: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(vec![Integer::from(0), Integer::from(1)]))
}

fn nth(memo: &RwLock<Vec<Integer>>, n: usize) -> Integer {
    {
        let table = memo.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = memo.write().unwrap();
    while table.len() <= n {
        let next = Integer::from(&table[table.len() - 1] + &table[table.len() - 2]);
        table.push(next);
    }
    table[n].clone()
}

/// Exact `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: usize) -> Integer {
    nth(lucas_memo(), n)
}

/// Exact `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> Integer {
    nth(fibonacci_memo(), n)
}

/// Directed enclosure [lo, hi] of a positive real, one ulp wide on each side.
#[derive(Clone)]
struct Enclosure {
    lo: Float,
    hi: Float,
}

impl Enclosure {
    fn inflate(value: Float) -> Self {
        let mut lo = value.clone();
        lo.next_down();
        let mut hi = value;
        hi.next_up();
        Enclosure { lo, hi }
    }

    fn pow_i(&self, e: i32) -> Self {
        use rug::ops::Pow;
        if e == 0 {
            let one = Float::with_val(self.lo.prec(), 1);
            return Enclosure {
                lo: one.clone(),
                hi: one,
            };
        }
        // x -> x^e is monotone increasing for e > 0 and decreasing for
        // e < 0 on positive bases.
        let (base_lo, base_hi) = if e > 0 {
            (&self.lo, &self.hi)
        } else {
            (&self.hi, &self.lo)
        };
        let mut lo = Float::with_val(self.lo.prec(), base_lo.pow(e));
        lo.next_down();
        let mut hi = Float::with_val(self.hi.prec(), base_hi.pow(e));
        hi.next_up();
        Enclosure { lo, hi }
    }
}

fn alpha_enclosure(digits: u32) -> Result<Enclosure> {
    Ok(Enclosure::inflate(realfield::alpha(digits)?.value().clone()))
}

/// Verifies `alpha^(n-1) <= L_n <= 2 alpha^n` for all `0 <= n <= n_max`
/// with certified directed enclosures of the powers.
pub fn check_growth_bounds(n_max: usize, digits: u32) -> Result<bool> {
    let alpha = alpha_enclosure(digits)?;
    for n in 0..=n_max {
        let ln = lucas(n);
        let lower = alpha.pow_i(n as i32 - 1);
        // alpha^(n-1) <= L_n must hold even for the certified upper end.
        if lower.hi > ln {
            return Ok(false);
        }
        let upper = alpha.pow_i(n as i32);
        let two_lower = Float::with_val(upper.lo.prec(), 2 * &upper.lo);
        if ln > two_lower {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|L_n - alpha^n| = |beta|^n`; below 1 for `n >= 1`.
pub fn binet_residual(n: usize, digits: u32) -> Result<PrecReal> {
    let alpha = realfield::alpha(digits)?;
    let ln = PrecReal::from_integer(&lucas(n), digits)?;
    Ok(ln.sub(&alpha.pow_i(n as i32)).abs())
}
