//! Logarithmic height calculus, the Matveev lower-bound coefficient, the
//! absorption lemma `z < T (log z)^s  =>  z < 2^s T (log T)^s`, and the
//! three-stage bound chain that turns the linear forms in logarithms into
//! absolute bounds on `l`, `m` and `n`.
//!
//! The chain mirrors the derivation it certifies: at each step the raw
//! computed quantity is rounded *up* onto a fixed significant-digit grid,
//! and the rounded cover (not the raw value) feeds the next step. Every
//! rounding is therefore auditable and sound by construction.

use crate::error::{Error, Result};
use crate::realfield::{self, PrecReal};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `h(p/q) = log max(|p|, q)` for a rational in lowest terms.
pub fn height_exact(x: &Rational, digits: u32) -> Result<PrecReal> {
    let num = Integer::from(x.numer().abs_ref());
    let den = x.denom().clone();
    let max = if num > den { num } else { den };
    Ok(PrecReal::from_integer(&max, digits)?.ln())
}

/// A linear form `ell_coeff * l + m_coeff * m + constant` in the two
/// symbolic block lengths; used for symbolic exponents of 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SymExp {
    pub ell: i64,
    pub m: i64,
    pub k: i64,
}

impl SymExp {
    pub fn constant(k: i64) -> Self {
        SymExp { ell: 0, m: 0, k }
    }
    pub fn ell() -> Self {
        SymExp { ell: 1, m: 0, k: 0 }
    }
    pub fn m() -> Self {
        SymExp { ell: 0, m: 1, k: 0 }
    }
    pub fn ell_plus_m() -> Self {
        SymExp { ell: 1, m: 1, k: 0 }
    }
    pub fn two_ell_plus_m() -> Self {
        SymExp { ell: 2, m: 1, k: 0 }
    }
}

/// Composition tree over the leaves that occur in the three linear forms.
///
/// `Digit` stands for any of the rational leaves bounded by `log 9`:
/// a digit `1..9` or a nonzero digit difference.
#[derive(Debug, Clone)]
pub enum HeightExpr {
    Rat(Rational),
    Digit,
    Alpha,
    Ten,
    Add(Box<HeightExpr>, Box<HeightExpr>),
    Sub(Box<HeightExpr>, Box<HeightExpr>),
    Mul(Box<HeightExpr>, Box<HeightExpr>),
    Div(Box<HeightExpr>, Box<HeightExpr>),
    Pow(Box<HeightExpr>, SymExp),
}

/// Height bound `c0 + c_ell * l + c_m * m`, affine in the block lengths.
#[derive(Debug, Clone)]
pub struct AffineBound {
    pub c0: PrecReal,
    pub c_ell: PrecReal,
    pub c_m: PrecReal,
}

impl AffineBound {
    fn constant(c0: PrecReal, digits: u32) -> Result<Self> {
        let zero = PrecReal::from_u32(0, digits)?;
        Ok(AffineBound {
            c0,
            c_ell: zero.clone(),
            c_m: zero,
        })
    }

    fn add(&self, other: &AffineBound) -> AffineBound {
        AffineBound {
            c0: self.c0.add(&other.c0),
            c_ell: self.c_ell.add(&other.c_ell),
            c_m: self.c_m.add(&other.c_m),
        }
    }

    fn is_constant(&self) -> bool {
        self.c_ell.value().is_zero() && self.c_m.value().is_zero()
    }
}

/// Upper bound on the height of `e` by structural recursion over the
/// standard rules: `h(a +- b) <= h(a) + h(b) + log 2`,
/// `h(a b^{+-1}) <= h(a) + h(b)`, `h(g^s) = |s| h(g)`.
pub fn height_bound(e: &HeightExpr, digits: u32) -> Result<AffineBound> {
    let ln2 = PrecReal::from_u32(2, digits)?.ln();
    let ln9 = PrecReal::from_u32(9, digits)?.ln();
    match e {
        HeightExpr::Rat(r) => AffineBound::constant(height_exact(r, digits)?, digits),
        HeightExpr::Digit => AffineBound::constant(ln9, digits),
        HeightExpr::Alpha => {
            let half = PrecReal::from_rational(Rational::from((1, 2)), digits)?;
            AffineBound::constant(realfield::log_alpha(digits)?.mul(&half), digits)
        }
        HeightExpr::Ten => AffineBound::constant(realfield::log_ten(digits)?, digits),
        HeightExpr::Add(a, b) | HeightExpr::Sub(a, b) => {
            let bound = height_bound(a, digits)?.add(&height_bound(b, digits)?);
            Ok(AffineBound {
                c0: bound.c0.add(&ln2),
                ..bound
            })
        }
        HeightExpr::Mul(a, b) | HeightExpr::Div(a, b) => {
            Ok(height_bound(a, digits)?.add(&height_bound(b, digits)?))
        }
        HeightExpr::Pow(base, s) => {
            let inner = height_bound(base, digits)?;
            if !inner.is_constant() {
                return Err(Error::InvalidInput(
                    "symbolic exponent over a symbolic base".into(),
                ));
            }
            if (s.ell != 0 || s.m != 0) && (s.ell < 0 || s.m < 0 || s.k < 0) {
                return Err(Error::InvalidInput(
                    "mixed-sign symbolic exponent has no certified absolute value".into(),
                ));
            }
            let scale = |c: i64| -> Result<PrecReal> {
                Ok(inner
                    .c0
                    .mul(&PrecReal::from_integer(&Integer::from(c), digits)?))
            };
            Ok(AffineBound {
                c0: scale(s.k.abs())?,
                c_ell: scale(s.ell)?,
                c_m: scale(s.m)?,
            })
        }
    }
}

/// How the `B >= max |b_i|` slot of an instance is filled.
#[derive(Debug, Clone)]
pub enum BSpec {
    /// `B := n`, kept symbolic so the chain can carry `(1 + log n)`
    /// explicitly until the absorption step.
    SymbolicN,
    Fixed(Integer),
}

#[derive(Debug, Clone)]
pub struct AValue {
    pub value: PrecReal,
    pub note: String,
}

/// Inputs to the lower bound
/// `log|Gamma| > -1.4 30^(t+3) t^4.5 D^2 (1+log D)(1+log B) A_1...A_t`.
#[derive(Debug, Clone)]
pub struct MatveevInstance {
    pub t: u32,
    pub degree: u32,
    pub b: BSpec,
    pub a: Vec<AValue>,
}

impl MatveevInstance {
    fn validate(&self, digits: u32) -> Result<()> {
        if self.t < 1 || self.degree < 1 {
            return Err(Error::Precondition("need t >= 1 and D >= 1".into()));
        }
        if self.a.len() != self.t as usize {
            return Err(Error::Precondition(format!(
                "expected {} A-values, got {}",
                self.t,
                self.a.len()
            )));
        }
        let floor = PrecReal::from_rational(Rational::from((16, 100)), digits)?;
        for (i, a) in self.a.iter().enumerate() {
            if a.value < floor {
                return Err(Error::Precondition(format!("A_{} below 0.16", i + 1)));
            }
        }
        if let BSpec::Fixed(b) = &self.b {
            if *b < 1 {
                return Err(Error::Precondition("B must be >= 1".into()));
            }
        }
        Ok(())
    }
}

/// The positive coefficient `1.4 30^(t+3) t^4.5 D^2 (1+log D) A_1...A_t`,
/// excluding the `(1 + log B)` factor so callers can keep `B = n`
/// symbolic until absorption.
pub fn matveev_constant(inst: &MatveevInstance, digits: u32) -> Result<PrecReal> {
    inst.validate(digits)?;
    let c14 = PrecReal::from_rational(Rational::from((7, 5)), digits)?;
    let thirty_pow = Integer::from(30).pow(inst.t + 3);
    let t_real = PrecReal::from_u32(inst.t, digits)?;
    let t_pow = t_real.pow_i(4).mul(&t_real.sqrt()); // t^4.5
    let d_real = PrecReal::from_u32(inst.degree, digits)?;
    let d_sq = d_real.pow_i(2);
    let one = PrecReal::from_u32(1, digits)?;
    let one_plus_log_d = one.add(&d_real.ln());
    let mut out = c14
        .mul_int(&thirty_pow)
        .mul(&t_pow)
        .mul(&d_sq)
        .mul(&one_plus_log_d);
    for a in &inst.a {
        out = out.mul(&a.value);
    }
    Ok(out)
}

/// Formalizes the silent step `(1 + log n) <= (1 + 1/log n_floor) log n`
/// valid for `n >= n_floor > e`.
pub fn absorb_one_plus_log(coeff: &PrecReal, n_floor: u64) -> Result<PrecReal> {
    if n_floor < 3 {
        return Err(Error::Precondition("absorption needs n_floor > e".into()));
    }
    let digits = coeff.digits();
    let one = PrecReal::from_u32(1, digits)?;
    let ln_floor = PrecReal::from_integer(&Integer::from(n_floor), digits)?.ln();
    Ok(coeff.mul(&one.add(&ln_floor.recip())))
}

/// `z < 2^s T (log T)^s` for any `z` with `T > z/(log z)^s`,
/// valid when `T > (4 s^2)^s`.
pub fn guzman_luca(s: u32, t_value: &PrecReal) -> Result<PrecReal> {
    if s < 1 {
        return Err(Error::Precondition("guzman_luca needs s >= 1".into()));
    }
    let threshold = Integer::from(4 * s * s).pow(s);
    if *t_value.value() <= threshold {
        return Err(Error::Precondition(format!(
            "guzman_luca needs T > (4 s^2)^s = {threshold}"
        )));
    }
    let digits = t_value.digits();
    let two_pow = PrecReal::from_integer(&Integer::from(Integer::from(2).pow(s)), digits)?;
    Ok(two_pow.mul(t_value).mul(&t_value.ln().pow_i(s as i32)))
}

/// A raw computed quantity together with its rounded-up cover
/// `mantissa * 10^exp10` on a significant-digit grid.
#[derive(Debug, Clone)]
pub struct CoverValue {
    pub raw: PrecReal,
    pub mantissa: Integer,
    pub exp10: u32,
}

impl CoverValue {
    pub fn cover_integer(&self) -> Integer {
        Integer::from(&self.mantissa * Integer::from(10).pow(self.exp10))
    }

    pub fn cover_real(&self, digits: u32) -> Result<PrecReal> {
        PrecReal::from_integer(&self.cover_integer(), digits)
    }

    /// Exact comparison of the cover against `mant * 10^exp`.
    pub fn matches(&self, mant: u64, exp: u32) -> bool {
        self.cover_integer() == Integer::from(mant) * Integer::from(10).pow(exp)
    }

    /// Raw value within `[lo_frac * cover, cover]`, e.g. `lo_frac = 0.95`.
    pub fn raw_within(&self, lo_frac: (u32, u32)) -> bool {
        let digits = self.raw.digits();
        let cover = match self.cover_real(digits) {
            Ok(c) => c,
            Err(_) => return false,
        };
        let frac = match PrecReal::from_rational(Rational::from(lo_frac), digits) {
            Ok(f) => f,
            Err(_) => return false,
        };
        self.raw <= cover && self.raw >= cover.mul(&frac)
    }
}

impl fmt::Display for CoverValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.to_string();
        let exponent = self.exp10 as usize + digits.len() - 1;
        let trimmed = digits.trim_end_matches('0');
        let trimmed = if trimmed.is_empty() { "0" } else { trimmed };
        if trimmed.len() == 1 {
            write!(f, "{trimmed}e{exponent}")
        } else {
            write!(f, "{}.{}e{exponent}", &trimmed[..1], &trimmed[1..])
        }
    }
}

/// Rounds a positive real > 1 up to `sig` significant decimal digits,
/// certifying that the cover really is an upper bound.
pub fn round_up_sig(raw: &PrecReal, sig: u32) -> Result<CoverValue> {
    if sig == 0 {
        return Err(Error::InvalidInput("need sig >= 1".into()));
    }
    if !(raw.value().is_finite() && *raw.value() > 1) {
        return Err(Error::InvalidInput("round_up_sig needs a finite value > 1".into()));
    }
    let digits = raw.digits();
    let bits = raw.value().prec();
    // Decimal exponent, certified by direct comparison against 10^f.
    let mut f = Float::with_val(bits, raw.value().log10_ref())
        .floor()
        .to_integer()
        .unwrap()
        .to_i32()
        .ok_or_else(|| Error::InvalidInput("exponent out of range".into()))?;
    loop {
        let low = Integer::from(10).pow(f as u32);
        let high = Integer::from(10).pow(f as u32 + 1);
        if *raw.value() < low {
            f -= 1;
        } else if *raw.value() >= high {
            f += 1;
        } else {
            break;
        }
    }
    if f + 1 < sig as i32 {
        return Err(Error::InvalidInput(
            "value too small for integer grid rounding".into(),
        ));
    }
    let scale_exp = (f + 1 - sig as i32) as u32;
    let scale = Integer::from(10).pow(scale_exp);
    let scaled = Float::with_val(bits, raw.value() / &scale);
    let floor = Float::with_val(bits, scaled.floor_ref());
    let frac = Float::with_val(bits, &scaled - &floor);
    // If the scaled value sits within the guard of the next grid point we
    // cannot certify on which side it falls.
    let guard = raw.guard();
    if Float::with_val(bits, 1) - frac.clone() < guard {
        return Err(Error::PrecisionInsufficient {
            context: "grid rounding boundary".into(),
            digits,
        });
    }
    let mut mantissa = floor.to_integer().unwrap() + 1u32;
    let mut exp10 = scale_exp;
    while Integer::from(mantissa.mod_u(10)) == 0 && mantissa > 9 {
        mantissa /= 10u32;
        exp10 += 1;
    }
    Ok(CoverValue {
        raw: raw.clone(),
        mantissa,
        exp10,
    })
}

/// Result of the full three-stage chain. `covers` are the adopted
/// rounded-up values that feed each subsequent step; `raw` fields hold
/// the unrounded computations behind them.
#[derive(Debug, Clone)]
pub struct BoundChainResult {
    pub digits: u32,
    /// Coefficient of `(1 + log n)` in the first lower bound.
    pub matveev_stage1: CoverValue,
    /// `l < c log n`.
    pub ell_log_bound: CoverValue,
    /// Adopted `A_1` coefficient (of `log n`) for the second instance.
    pub a1_stage2: CoverValue,
    /// Coefficient of `(log n)^2` in the second lower bound, absorbed.
    pub matveev_stage2: CoverValue,
    /// `m < c (log n)^2`.
    pub m_log_bound: CoverValue,
    /// Adopted `A_1` coefficient (of `(log n)^2`) for the third instance.
    pub a1_stage3: CoverValue,
    /// Coefficient of `(log n)^3` in the third lower bound, absorbed.
    pub matveev_stage3: CoverValue,
    /// `n < c (log n)^3`.
    pub n_poly_bound: CoverValue,
    /// Absolute bound on `n` after absorption of the implicit inequality.
    pub n_abs: CoverValue,
    pub ell_abs: Integer,
    pub m_abs: Integer,
    pub ell_abs_raw: PrecReal,
    pub m_abs_raw: PrecReal,
}

/// Index of one of the three bound-chain stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainStage {
    EllOfLogN,
    MOfLogN,
    NPoly,
}

const N_FLOOR: u64 = 1000;

fn cover_times_int(c: &CoverValue, factor: u32) -> CoverValue {
    CoverValue {
        raw: c.raw.mul_int(&Integer::from(factor)),
        mantissa: Integer::from(&c.mantissa * factor),
        exp10: c.exp10,
    }
}

/// Runs the whole chain at the given working precision.
///
/// Each stage: bound the heights, validate the adopted `A`-values against
/// them, evaluate the Matveev coefficient, absorb `(1 + log n)` with
/// `n_floor = 1000`, round up onto the stage's significant-digit grid,
/// and feed the cover forward. The final absolute bounds come from the
/// log-power absorption lemma with `s = 3` and back-substitution.
pub fn derive_bound_chain(digits: u32) -> Result<BoundChainResult> {
    let ln10 = realfield::log_ten(digits)?;
    let ln_alpha = realfield::log_alpha(digits)?;
    let ln_floor = PrecReal::from_integer(&Integer::from(N_FLOOR), digits)?.ln();
    let a2 = PrecReal::from_rational(Rational::from((1, 2)), digits)?;
    let a3 = PrecReal::from_rational(Rational::from((462, 100)), digits)?;
    // A_2 and A_3 cover 2 h(alpha) = log alpha and 2 h(10) = 2 log 10.
    debug_assert!(ln_alpha <= a2);
    assert!(ln10.mul_int(&Integer::from(2)) <= a3);

    // Stage 1: gamma_1 = 9/d1. Its height is exact per digit; the adopted
    // A_1 = 4.4 covers 2 max_d1 h(9/d1) = 2 log 9.
    let mut h1_max = PrecReal::from_u32(0, digits)?;
    for d1 in 1..=9u32 {
        let h = height_exact(&Rational::from((9, d1)), digits)?;
        if h > h1_max {
            h1_max = h;
        }
    }
    let a1_stage1 = PrecReal::from_rational(Rational::from((22, 5)), digits)?;
    if h1_max.mul_int(&Integer::from(2)) > a1_stage1 {
        return Err(Error::Precondition("A_1 does not cover 2 h(9/d1)".into()));
    }
    let inst1 = MatveevInstance {
        t: 3,
        degree: 2,
        b: BSpec::SymbolicN,
        a: vec![
            AValue {
                value: a1_stage1,
                note: "covers 2 h(9/d1) <= 2 log 9".into(),
            },
            AValue {
                value: a2.clone(),
                note: "covers 2 h(alpha) = log alpha".into(),
            },
            AValue {
                value: a3.clone(),
                note: "covers 2 h(10) = 2 log 10".into(),
            },
        ],
    };
    let c1_raw = matveev_constant(&inst1, digits)?;
    let matveev_stage1 = round_up_sig(&c1_raw, 2)?;

    // l log 10 - log 28 < C1 (1 + log n), then absorb (1 + log n).
    let ln28 = PrecReal::from_u32(28, digits)?.ln();
    let ell_raw = absorb_one_plus_log(
        &matveev_stage1.cover_real(digits)?.div(&ln10),
        N_FLOOR,
    )?
    .add(&ln28.div(&ln10).div(&ln_floor));
    let ell_log_bound = round_up_sig(&ell_raw, 1)?;
    let ell_cover = ell_log_bound.cover_real(digits)?;

    // Stage 2: gamma_1 = 9/(d1 10^l - (d1 - d2)).
    let expr2 = HeightExpr::Div(
        Box::new(HeightExpr::Rat(Rational::from(9))),
        Box::new(HeightExpr::Sub(
            Box::new(HeightExpr::Mul(
                Box::new(HeightExpr::Digit),
                Box::new(HeightExpr::Pow(Box::new(HeightExpr::Ten), SymExp::ell())),
            )),
            Box::new(HeightExpr::Digit),
        )),
    );
    let h2 = height_bound(&expr2, digits)?;
    // Substitute l < c_l log n: height becomes (coefficient) * log n.
    let h2_coeff_raw = h2
        .c_ell
        .mul(&ell_cover)
        .add(&h2.c0.div(&ln_floor));
    let h2_cover = round_up_sig(&h2_coeff_raw, 2)?;
    // |log gamma_1| <= 2 log 9 + l log 10 + 1/(10^l - 1) stays below
    // D h(gamma_1), so A_1 := 2 * height cover.
    let ln9 = PrecReal::from_u32(9, digits)?.ln();
    let log_side = ell_cover
        .mul(&ln10)
        .add(
            &ln9.mul_int(&Integer::from(2))
                .add(&PrecReal::from_rational(Rational::from((1, 9)), digits)?)
                .div(&ln_floor),
        );
    if log_side > h2_cover.cover_real(digits)?.mul_int(&Integer::from(2)) {
        return Err(Error::Precondition(
            "stage 2: |log gamma_1| exceeds D h(gamma_1) cover".into(),
        ));
    }
    let a1_stage2 = cover_times_int(&h2_cover, 2);
    let inst2 = MatveevInstance {
        t: 3,
        degree: 2,
        b: BSpec::SymbolicN,
        a: vec![
            AValue {
                value: a1_stage2.cover_real(digits)?,
                note: "coefficient of log n covering 2 h(gamma_1)".into(),
            },
            AValue {
                value: a2.clone(),
                note: "covers 2 h(alpha) = log alpha".into(),
            },
            AValue {
                value: a3.clone(),
                note: "covers 2 h(10) = 2 log 10".into(),
            },
        ],
    };
    let c2_raw = matveev_constant(&inst2, digits)?;
    let matveev_stage2 = round_up_sig(&absorb_one_plus_log(&c2_raw, N_FLOOR)?, 2)?;

    // m log 10 - log 19 < C2 (log n)^2.
    let ln19 = PrecReal::from_u32(19, digits)?.ln();
    let m_raw = matveev_stage2
        .cover_real(digits)?
        .div(&ln10)
        .add(&ln19.div(&ln10).div(&ln_floor.pow_i(2)));
    let m_log_bound = round_up_sig(&m_raw, 1)?;
    let m_cover = m_log_bound.cover_real(digits)?;

    // Stage 3: gamma_1 = (d1 10^(l+m) - (d1-d2) 10^m + (d1-d2))/9.
    let expr3 = HeightExpr::Div(
        Box::new(HeightExpr::Add(
            Box::new(HeightExpr::Sub(
                Box::new(HeightExpr::Mul(
                    Box::new(HeightExpr::Digit),
                    Box::new(HeightExpr::Pow(
                        Box::new(HeightExpr::Ten),
                        SymExp::ell_plus_m(),
                    )),
                )),
                Box::new(HeightExpr::Mul(
                    Box::new(HeightExpr::Digit),
                    Box::new(HeightExpr::Pow(Box::new(HeightExpr::Ten), SymExp::m())),
                )),
            )),
            Box::new(HeightExpr::Digit),
        )),
        Box::new(HeightExpr::Rat(Rational::from(9))),
    );
    let h3 = height_bound(&expr3, digits)?;
    // l + m <= c_l log n + c_m (log n)^2, covered as a (log n)^2 coefficient.
    let ellm_raw = m_cover.add(&ell_cover.div(&ln_floor));
    let ellm_cover = round_up_sig(&ellm_raw, 2)?;
    // c_ell * l + c_m * m = log10 * (l + m) + log10 * m for this tree.
    let extra_m = h3.c_m.sub(&h3.c_ell);
    let h3_coeff_raw = h3
        .c_ell
        .mul(&ellm_cover.cover_real(digits)?)
        .add(&extra_m.mul(&m_cover))
        .add(&h3.c0.div(&ln_floor.pow_i(2)));
    let h3_cover = round_up_sig(&h3_coeff_raw, 3)?;
    let log_side3 = ellm_cover
        .cover_real(digits)?
        .mul(&ln10)
        .add(
            &ln9.mul_int(&Integer::from(2))
                .add(&PrecReal::from_rational(Rational::from((1, 9)), digits)?)
                .div(&ln_floor.pow_i(2)),
        );
    if log_side3 > h3_cover.cover_real(digits)?.mul_int(&Integer::from(2)) {
        return Err(Error::Precondition(
            "stage 3: |log gamma_1| exceeds D h(gamma_1) cover".into(),
        ));
    }
    let a1_stage3 = cover_times_int(&h3_cover, 2);
    let inst3 = MatveevInstance {
        t: 3,
        degree: 2,
        b: BSpec::SymbolicN,
        a: vec![
            AValue {
                value: a1_stage3.cover_real(digits)?,
                note: "coefficient of (log n)^2 covering 2 h(gamma_1)".into(),
            },
            AValue {
                value: a2,
                note: "covers 2 h(alpha) = log alpha".into(),
            },
            AValue {
                value: a3,
                note: "covers 2 h(10) = 2 log 10".into(),
            },
        ],
    };
    let c3_raw = matveev_constant(&inst3, digits)?;
    let matveev_stage3 = round_up_sig(&absorb_one_plus_log(&c3_raw, N_FLOOR)?, 3)?;

    // n log alpha - log(10/9) < C3 (log n)^3, so n < T (log n)^3.
    let ln_ten_ninths = PrecReal::from_rational(Rational::from((10, 9)), digits)?.ln();
    let n_poly_raw = matveev_stage3
        .cover_real(digits)?
        .div(&ln_alpha)
        .add(&ln_ten_ninths.div(&ln_alpha).div(&ln_floor.pow_i(3)));
    let n_poly_bound = round_up_sig(&n_poly_raw, 3)?;

    // Absorb the implicit bound with s = 3.
    let n_abs_raw = guzman_luca(3, &n_poly_bound.cover_real(digits)?)?;
    let n_abs = round_up_sig(&n_abs_raw, 1)?;

    // Back-substitute the absolute n bound.
    let ln_n_abs = n_abs.cover_real(digits)?.ln();
    let ell_abs_raw = ell_cover.mul(&ln_n_abs);
    let m_abs_raw = m_cover.mul(&ln_n_abs.pow_i(2));
    let ceil_of = |x: &PrecReal| -> Integer {
        Float::with_val(x.value().prec(), x.value().ceil_ref())
            .to_integer()
            .unwrap()
    };
    Ok(BoundChainResult {
        digits,
        matveev_stage1,
        ell_log_bound,
        a1_stage2,
        matveev_stage2,
        m_log_bound,
        a1_stage3,
        matveev_stage3,
        n_poly_bound,
        ell_abs: ceil_of(&ell_abs_raw),
        m_abs: ceil_of(&m_abs_raw),
        n_abs,
        ell_abs_raw,
        m_abs_raw,
    })
}

/// Checks the digit-count inequality `2l + m < n` on the high range: for
/// sampled `n` in `(1000, n_floor]` and the maximal digit count of `L_n`,
/// verifies `(2l+m) log 10 < n log alpha + 3 < n` at certified precision.
pub fn check_exponent_inequality(n_floor: u64, digits: u32) -> Result<bool> {
    if n_floor <= 1000 {
        return Err(Error::Precondition(
            "check_exponent_inequality needs n_floor > 1000".into(),
        ));
    }
    let ln10 = realfield::log_ten(digits)?;
    let ln_alpha = realfield::log_alpha(digits)?;
    let three = PrecReal::from_u32(3, digits)?;
    let mut samples = vec![1001u64, n_floor];
    let mut n = 1001u64;
    while n < n_floor {
        samples.push(n);
        n = n.saturating_mul(3);
    }
    for n in samples {
        if n > n_floor {
            continue;
        }
        let n_real = PrecReal::from_integer(&Integer::from(n), digits)?;
        // Largest possible digit count of L_n: floor(n log10 alpha) + 1.
        let log10_ln = n_real.mul(&ln_alpha).div(&ln10);
        let floor = Float::with_val(
            log10_ln.value().prec(),
            log10_ln.value().floor_ref(),
        )
        .to_integer()
        .unwrap();
        let max_digits = floor + 1u32;
        let lhs = PrecReal::from_integer(&max_digits, digits)?.mul(&ln10);
        let mid = n_real.mul(&ln_alpha).add(&three);
        // Both gaps must clear the precision guard.
        if lhs.sub(&mid).certified_sign("digit-count inequality")? != std::cmp::Ordering::Less {
            return Ok(false);
        }
        if mid.sub(&n_real).certified_sign("linear slack inequality")?
            != std::cmp::Ordering::Less
        {
            return Ok(false);
        }
    }
    Ok(true)
}
