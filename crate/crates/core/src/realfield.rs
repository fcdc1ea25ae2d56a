//! Arbitrary-precision real arithmetic with an explicit decimal precision
//! tag, distance-to-nearest-integer, and continued-fraction expansion with
//! exact big-integer convergents.
//!
//! Every comparison that gates a discrete decision (a continued-fraction
//! quotient, a denominator threshold, the sign of an epsilon) must hold
//! with margin `10^(-P/2)` at working precision `P` decimal digits;
//! otherwise the operation fails with `PrecisionInsufficient` and the
//! caller retries at higher precision. This turns floating decisions into
//! certified ones without full interval arithmetic.

use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;

/// Floor on working precision: all constants used by the proof pipeline
/// are representable at 50 digits.
pub const MIN_DIGITS: u32 = 50;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 1000;

/// Binary precision backing `digits` decimal digits, with guard bits.
fn bits_for(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// A high-precision real tagged with its decimal working precision.
///
/// Values constructed from integers or rationals carry an exact witness,
/// which lets the continued-fraction expansion terminate exactly instead
/// of failing the precision guard on a rational input.
#[derive(Debug, Clone)]
pub struct PrecReal {
    value: Float,
    digits: u32,
    exact: Option<Rational>,
}

impl PrecReal {
    fn check_digits(digits: u32) -> Result<u32> {
        if digits < MIN_DIGITS {
            Err(Error::PrecisionTooLow(digits))
        } else {
            Ok(digits)
        }
    }

    pub(crate) fn raw(value: Float, digits: u32) -> Self {
        PrecReal {
            value,
            digits,
            exact: None,
        }
    }

    pub fn from_integer(n: &Integer, digits: u32) -> Result<Self> {
        Self::check_digits(digits)?;
        Ok(PrecReal {
            value: Float::with_val(bits_for(digits), n),
            digits,
            exact: Some(Rational::from(n)),
        })
    }

    pub fn from_u32(n: u32, digits: u32) -> Result<Self> {
        Self::from_integer(&Integer::from(n), digits)
    }

    pub fn from_rational(r: Rational, digits: u32) -> Result<Self> {
        Self::check_digits(digits)?;
        Ok(PrecReal {
            value: Float::with_val(bits_for(digits), &r),
            digits,
            exact: Some(r),
        })
    }

    pub fn from_f64(x: f64, digits: u32) -> Result<Self> {
        Self::check_digits(digits)?;
        Ok(PrecReal {
            value: Float::with_val(bits_for(digits), x),
            digits,
            exact: None,
        })
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn exact_witness(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    /// Certification margin `10^(-digits/2)` at this value's precision.
    pub fn guard(&self) -> Float {
        let bits = bits_for(self.digits);
        Float::with_val(bits, 10).pow(-((self.digits / 2) as i32))
    }

    fn combine(digits: u32, value: Float, exact: Option<Rational>) -> Self {
        PrecReal {
            value,
            digits,
            exact,
        }
    }

    fn bin_digits(&self, other: &PrecReal) -> u32 {
        self.digits.min(other.digits)
    }

    pub fn add(&self, other: &PrecReal) -> PrecReal {
        let d = self.bin_digits(other);
        let v = Float::with_val(bits_for(d), &self.value + &other.value);
        let e = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Some(Rational::from(a + b)),
            _ => None,
        };
        Self::combine(d, v, e)
    }

    pub fn sub(&self, other: &PrecReal) -> PrecReal {
        let d = self.bin_digits(other);
        let v = Float::with_val(bits_for(d), &self.value - &other.value);
        let e = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Some(Rational::from(a - b)),
            _ => None,
        };
        Self::combine(d, v, e)
    }

    pub fn mul(&self, other: &PrecReal) -> PrecReal {
        let d = self.bin_digits(other);
        let v = Float::with_val(bits_for(d), &self.value * &other.value);
        let e = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Some(Rational::from(a * b)),
            _ => None,
        };
        Self::combine(d, v, e)
    }

    pub fn div(&self, other: &PrecReal) -> PrecReal {
        let d = self.bin_digits(other);
        let v = Float::with_val(bits_for(d), &self.value / &other.value);
        let e = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) if *b != 0 => Some(Rational::from(a / b)),
            _ => None,
        };
        Self::combine(d, v, e)
    }

    pub fn neg(&self) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), -&self.value);
        Self::combine(self.digits, v, self.exact.as_ref().map(|r| Rational::from(-r)))
    }

    pub fn abs(&self) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), self.value.abs_ref());
        Self::combine(
            self.digits,
            v,
            self.exact.as_ref().map(|r| Rational::from(r.abs_ref())),
        )
    }

    pub fn recip(&self) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), self.value.recip_ref());
        let e = match &self.exact {
            Some(r) if *r != 0 => Some(Rational::from(r.recip_ref())),
            _ => None,
        };
        Self::combine(self.digits, v, e)
    }

    pub fn sqrt(&self) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), self.value.sqrt_ref());
        Self::combine(self.digits, v, None)
    }

    pub fn ln(&self) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), self.value.ln_ref());
        Self::combine(self.digits, v, None)
    }

    pub fn pow_i(&self, s: i32) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), (&self.value).pow(s));
        let e = match &self.exact {
            Some(r) if *r != 0 || s >= 0 => Some(Rational::from(r.pow(s))),
            _ => None,
        };
        Self::combine(self.digits, v, e)
    }

    pub fn mul_int(&self, n: &Integer) -> PrecReal {
        let v = Float::with_val(bits_for(self.digits), &self.value * n);
        let e = self.exact.as_ref().map(|r| Rational::from(r * n));
        Self::combine(self.digits, v, e)
    }

    /// Signum certified against the precision guard: `0` is returned only
    /// for an exact zero, and a nonzero sign only when `|x|` clears the
    /// guard margin.
    pub fn certified_sign(&self, context: &str) -> Result<Ordering> {
        if self.value.is_zero() {
            return Ok(Ordering::Equal);
        }
        let mag = Float::with_val(bits_for(self.digits), self.value.abs_ref());
        if mag <= self.guard() {
            return Err(Error::PrecisionInsufficient {
                context: context.to_string(),
                digits: self.digits,
            });
        }
        Ok(if self.value.is_sign_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        })
    }

    /// Decimal rendering with `sig` significant digits.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        let s = self.value.to_string_radix(10, Some(sig));
        s
    }
}

impl fmt::Display for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(30))
    }
}

impl PartialEq for PrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for PrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

/// The golden ratio `(1+sqrt(5))/2`.
pub fn alpha(digits: u32) -> Result<PrecReal> {
    let five = PrecReal::from_u32(5, digits)?;
    let one = PrecReal::from_u32(1, digits)?;
    let two = PrecReal::from_u32(2, digits)?;
    Ok(five.sqrt().add(&one).div(&two))
}

pub fn log_alpha(digits: u32) -> Result<PrecReal> {
    Ok(alpha(digits)?.ln())
}

pub fn log_ten(digits: u32) -> Result<PrecReal> {
    Ok(PrecReal::from_u32(10, digits)?.ln())
}

/// `tau = log 10 / log alpha`, the irrational whose convergents drive the
/// reduction stages.
pub fn tau(digits: u32) -> Result<PrecReal> {
    Ok(log_ten(digits)?.div(&log_alpha(digits)?))
}

/// Distance from `x` to the nearest integer, in `[0, 1/2]`.
pub fn nearest_int_dist(x: &PrecReal) -> Result<PrecReal> {
    if !x.value().is_finite() {
        return Err(Error::InvalidInput("nearest_int_dist of non-finite value".into()));
    }
    let bits = bits_for(x.digits());
    let nearest = Float::with_val(bits, x.value().round_ref());
    let dist = Float::with_val(bits, x.value() - &nearest).abs();
    let guard = x.guard();
    // Certify the result is not straddling a decision boundary. Exact hits
    // on 0 or 1/2 are fine; near-misses are not decidable at this precision.
    if !dist.is_zero() && dist < guard {
        return Err(Error::PrecisionInsufficient {
            context: "nearest_int_dist near integer".into(),
            digits: x.digits(),
        });
    }
    let half = Float::with_val(bits, 0.5);
    let off_half = Float::with_val(bits, &dist - &half).abs();
    if dist != half && off_half < guard {
        return Err(Error::PrecisionInsufficient {
            context: "nearest_int_dist near half-integer".into(),
            digits: x.digits(),
        });
    }
    // Ties round away from zero, which can leave dist exactly 1/2; clamp.
    let dist = if dist > half { Float::with_val(bits, 1) - dist } else { dist };
    Ok(PrecReal::raw(dist, x.digits()))
}

/// A continued-fraction convergent `p/q` with exact big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub index: usize,
    pub p: Integer,
    pub q: Integer,
}

/// Certified partial quotients of a continued fraction.
///
/// `terminated` is set when the expansion ended exactly (rational input);
/// in that case the quotient list is the complete expansion.
#[derive(Debug, Clone)]
pub struct CfExpansion {
    quotients: Vec<Integer>,
    terminated: bool,
    digits: u32,
}

impl CfExpansion {
    pub fn quotients(&self) -> &[Integer] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn terminated(&self) -> bool {
        self.terminated
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }
}

fn expand_cf_rational(r: &Rational, n_terms: usize) -> CfExpansion {
    let mut quotients = Vec::new();
    let mut num = Rational::from(r);
    let mut terminated = false;
    while quotients.len() < n_terms {
        let floor = Integer::from(num.clone().floor().into_numer_denom().0);
        let frac = Rational::from(&num - &floor);
        quotients.push(floor);
        if frac == 0 {
            terminated = true;
            break;
        }
        num = frac.recip();
    }
    CfExpansion {
        quotients,
        terminated,
        digits: u32::MAX,
    }
}

/// Continued-fraction expansion `[a0; a1, ...]` of a positive real.
///
/// For values carrying an exact rational witness the expansion is done by
/// exact Euclidean division and may terminate early. Otherwise each
/// quotient is certified by requiring the remainder to sit at least the
/// precision guard away from an integer.
pub fn expand_cf(x: &PrecReal, n_terms: usize) -> Result<CfExpansion> {
    if n_terms == 0 {
        return Err(Error::InvalidInput("expand_cf needs n_terms >= 1".into()));
    }
    if !(x.value().is_finite() && x.value().is_sign_positive() && !x.value().is_zero()) {
        return Err(Error::InvalidInput("expand_cf needs x > 0".into()));
    }
    if let Some(r) = x.exact_witness() {
        let mut cf = expand_cf_rational(r, n_terms);
        cf.digits = x.digits();
        return Ok(cf);
    }
    let bits = bits_for(x.digits());
    let guard = x.guard();
    let mut cur = Float::with_val(bits, x.value());
    let mut quotients = Vec::with_capacity(n_terms);
    while quotients.len() < n_terms {
        let floor = Float::with_val(bits, cur.floor_ref());
        let frac = Float::with_val(bits, &cur - &floor);
        let a = floor
            .to_integer()
            .ok_or_else(|| Error::InvalidInput("non-finite remainder in expand_cf".into()))?;
        if frac.is_zero() {
            quotients.push(a);
            return Ok(CfExpansion {
                quotients,
                terminated: true,
                digits: x.digits(),
            });
        }
        if frac < guard || frac > Float::with_val(bits, 1) - guard.clone() {
            return Err(Error::PrecisionInsufficient {
                context: format!("continued-fraction quotient {}", quotients.len()),
                digits: x.digits(),
            });
        }
        quotients.push(a);
        cur = frac.recip();
    }
    Ok(CfExpansion {
        quotients,
        terminated: false,
        digits: x.digits(),
    })
}

/// Convergent `p_i/q_i` by the standard recurrence.
pub fn convergent_at(cf: &CfExpansion, index: usize) -> Result<Convergent> {
    if index >= cf.len() {
        return Err(Error::IndexOutOfRange {
            index,
            available: cf.len(),
        });
    }
    let mut p_prev = Integer::from(1);
    let mut q_prev = Integer::from(0);
    let mut p = cf.quotients[0].clone();
    let mut q = Integer::from(1);
    for a in &cf.quotients[1..=index] {
        let p_next = Integer::from(a * &p) + &p_prev;
        let q_next = Integer::from(a * &q) + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    Ok(Convergent { index, p, q })
}

/// Smallest-index convergent with `q > bound` (exact integer comparison).
pub fn first_convergent_above(cf: &CfExpansion, bound: &Integer) -> Result<Convergent> {
    let mut p_prev = Integer::from(1);
    let mut q_prev = Integer::from(0);
    let mut p = cf.quotients[0].clone();
    let mut q = Integer::from(1);
    let mut index = 0usize;
    loop {
        if q > *bound {
            return Ok(Convergent { index, p, q });
        }
        index += 1;
        if index >= cf.len() {
            return Err(Error::BoundOutOfRange {
                bound: bound.to_string(),
                available: cf.len(),
            });
        }
        let a = &cf.quotients[index];
        let p_next = Integer::from(a * &p) + &p_prev;
        let q_next = Integer::from(a * &q) + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_int_dist_quarter_offset() {
        let x = PrecReal::from_rational(Rational::from((13, 4)), 100).unwrap();
        let d = nearest_int_dist(&x).unwrap();
        assert_eq!(*d.value(), 0.25);
    }

    #[test]
    fn nearest_int_dist_integer_is_zero() {
        let x = PrecReal::from_u32(7, 100).unwrap();
        let d = nearest_int_dist(&x).unwrap();
        assert!(d.value().is_zero());
    }

    #[test]
    fn nearest_int_dist_of_tau() {
        // ||tau|| = 5 - tau, checked by direct subtraction.
        let t = tau(DEFAULT_DIGITS).unwrap();
        let five = PrecReal::from_u32(5, DEFAULT_DIGITS).unwrap();
        let oracle = five.sub(&t);
        let d = nearest_int_dist(&t).unwrap();
        let diff = d.sub(&oracle).abs();
        assert!(*diff.value() < d.guard());
        // Leading digits of the distance.
        assert!(d.to_decimal_string(5).starts_with("2.150"));
    }

    #[test]
    fn nearest_int_dist_rejects_uncertifiable_near_integer() {
        // 1 + 10^-90 at 100 digits: inside the 10^-50 guard band.
        let tiny = Rational::from((Integer::from(1), Integer::from(10).pow(90)));
        let x = PrecReal::from_rational(Rational::from(1) + tiny, 100).unwrap();
        assert!(matches!(
            nearest_int_dist(&x),
            Err(Error::PrecisionInsufficient { .. })
        ));
    }

    #[test]
    fn expand_cf_golden_ratio_all_ones() {
        let a = alpha(200).unwrap();
        let cf = expand_cf(&a, 40).unwrap();
        for (i, q) in cf.quotients().iter().enumerate() {
            assert_eq!(*q, 1, "quotient {i}");
        }
        assert!(!cf.terminated());
    }

    #[test]
    fn expand_cf_exact_rational() {
        let x = PrecReal::from_rational(Rational::from((7, 3)), 100).unwrap();
        let cf = expand_cf(&x, 10).unwrap();
        assert_eq!(cf.quotients(), &[Integer::from(2), Integer::from(3)]);
        assert!(cf.terminated());
    }

    #[test]
    fn tau_leading_quotients_match_known_expansion() {
        let t = tau(DEFAULT_DIGITS).unwrap();
        let cf = expand_cf(&t, 21).unwrap();
        let expected: Vec<Integer> = [4, 1, 3, 1, 1, 1, 6, 4, 2, 1, 10, 1, 4, 46, 3, 1, 2, 1]
            .iter()
            .map(|&a| Integer::from(a))
            .collect();
        assert_eq!(&cf.quotients()[..18], expected.as_slice());
        // The canonical expansion continues [..., 1, 1, 1, ...]; the often
        // printed 19-term prefix ending in 2 is the same truncation in its
        // non-canonical form, since a finite tail [x, 1] equals [x + 1].
        assert_eq!(cf.quotients()[18], 1);
        assert_eq!(cf.quotients()[19], 1);
        let printed: Vec<u64> = vec![4, 1, 3, 1, 1, 1, 6, 4, 2, 1, 10, 1, 4, 46, 3, 1, 2, 1, 2];
        let mut folded = Rational::from(printed[printed.len() - 1]);
        for &a in printed[..printed.len() - 1].iter().rev() {
            folded = Rational::from(a) + folded.recip();
        }
        let c19 = convergent_at(&cf, 19).unwrap();
        assert_eq!(folded, Rational::from((c19.p, c19.q)));
    }

    #[test]
    fn convergents_of_tau() {
        let t = tau(DEFAULT_DIGITS).unwrap();
        let cf = expand_cf(&t, 120).unwrap();
        let c0 = convergent_at(&cf, 0).unwrap();
        assert_eq!((c0.p.to_u32().unwrap(), c0.q.to_u32().unwrap()), (4, 1));
        // a0 + 1/a1 with a1 = 1, by the hand recurrence.
        let c1 = convergent_at(&cf, 1).unwrap();
        assert_eq!((c1.p.to_u32().unwrap(), c1.q.to_u32().unwrap()), (5, 1));
        let c98 = convergent_at(&cf, 98).unwrap();
        assert_eq!(
            c98.p.to_string(),
            "1645685064668785741047746957258993430046006088389"
        );
        assert_eq!(
            c98.q.to_string(),
            "343927838259763182336125476035118084206130771252"
        );
        assert_eq!(Integer::from(c98.p.gcd_ref(&c98.q)), 1);
    }

    #[test]
    fn first_convergent_above_bounds() {
        let t = tau(DEFAULT_DIGITS).unwrap();
        let cf = expand_cf(&t, 120).unwrap();
        let six_m = Integer::from(6) * Integer::from(10).pow(46);
        let c = first_convergent_above(&cf, &six_m).unwrap();
        assert_eq!(c.index, 98);
        let c = first_convergent_above(&cf, &Integer::from(0)).unwrap();
        assert_eq!(c.index, 0);
        // First q above 1000, against a scan of the convergent table.
        let c = first_convergent_above(&cf, &Integer::from(1000)).unwrap();
        let prev = convergent_at(&cf, c.index - 1).unwrap();
        assert!(c.q > 1000 && prev.q <= 1000);
    }

    #[test]
    fn convergent_denominators_strictly_increase() {
        let t = tau(400).unwrap();
        let cf = expand_cf(&t, 60).unwrap();
        let mut last = Integer::from(0);
        for i in 0..cf.len() {
            let c = convergent_at(&cf, i).unwrap();
            assert!(c.q > last || (i == 1 && c.q == last));
            assert_eq!(Integer::from(c.p.gcd_ref(&c.q)), 1);
            last = c.q;
        }
    }

    #[test]
    fn convergent_law_exact_rational_check() {
        // |x - p_i/q_i| < 1/(q_i q_{i+1}), with the float turned into an
        // exact rational and the enclosure radius added on top.
        let t = tau(DEFAULT_DIGITS).unwrap();
        let cf = expand_cf(&t, 110).unwrap();
        let x_rat = t.value().to_rational().unwrap();
        let radius = Rational::from((Integer::from(1), Integer::from(10).pow(DEFAULT_DIGITS - 10)));
        for i in 0..cf.len() - 1 {
            let c = convergent_at(&cf, i).unwrap();
            let next = convergent_at(&cf, i + 1).unwrap();
            let diff = Rational::from(&x_rat - &Rational::from((c.p.clone(), c.q.clone())));
            let dist = Rational::from(diff.abs_ref()) + &radius;
            let law = Rational::from((Integer::from(1), Integer::from(&c.q * &next.q)));
            assert!(dist < law, "convergent law failed at index {i}");
        }
    }

    #[test]
    fn doubled_precision_preserves_integer_outputs() {
        let t1 = tau(500).unwrap();
        let t2 = tau(1000).unwrap();
        let cf1 = expand_cf(&t1, 110).unwrap();
        let cf2 = expand_cf(&t2, 110).unwrap();
        assert_eq!(cf1.quotients(), cf2.quotients());
        let d1 = nearest_int_dist(&t1).unwrap();
        let d2 = nearest_int_dist(&t2).unwrap();
        let diff = d1.sub(&d2).abs();
        assert!(*diff.value() < d1.guard());
    }

    #[test]
    fn precision_floor_enforced() {
        assert!(matches!(
            PrecReal::from_u32(1, 10),
            Err(Error::PrecisionTooLow(10))
        ));
    }

    #[test]
    fn arithmetic_takes_minimum_precision() {
        let a = PrecReal::from_u32(3, 200).unwrap();
        let b = PrecReal::from_u32(4, 100).unwrap();
        assert_eq!(a.add(&b).digits(), 100);
        assert_eq!(a.mul(&b).digits(), 100);
    }
}
