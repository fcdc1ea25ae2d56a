//! The Dujella-Petho reduction engine and the three sweep stages that
//! shrink the Baker-chain bounds down to `l < 52`, `m < 54`, `n < 269`.
//!
//! The engine scans convergents of `tau` starting at the first with
//! `q > 6M` and advances until `epsilon = ||mu q|| - M ||tau q||` is
//! certified positive, then reports `k_bound = log(A q / epsilon)/log B`.
//! A zero `mu` makes the inhomogeneous lemma inapplicable (`||mu q|| = 0`
//! forces `epsilon < 0` at every index); those combos take the
//! homogeneous route via the best-approximation law `||k tau|| > 1/(2q)`
//! for `k <= M < q`.

use crate::error::{Error, Result};
use crate::realfield::{
    self, convergent_at, expand_cf, first_convergent_above, nearest_int_dist, CfExpansion,
    Convergent, PrecReal,
};
use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Inputs to the reduction lemma.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub tau: PrecReal,
    pub mu: PrecReal,
    pub a: PrecReal,
    pub b: PrecReal,
    pub m: Integer,
}

impl ReductionInstance {
    fn validate(&self) -> Result<()> {
        if self.tau.value().is_zero() {
            return Err(Error::Precondition("tau must be nonzero".into()));
        }
        if !(self.a.value().is_sign_positive() && !self.a.value().is_zero()) {
            return Err(Error::Precondition("A must be positive".into()));
        }
        if *self.b.value() <= 1 {
            return Err(Error::Precondition("B must exceed 1".into()));
        }
        if self.m <= 1 {
            return Err(Error::Precondition("M must exceed 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one reduction: the convergent used, the certified epsilon,
/// and the exponent bound (real and as a strict integer bound).
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub conv: Convergent,
    pub epsilon: PrecReal,
    pub k_bound: PrecReal,
    pub k_less_than: Integer,
}

/// Smallest integer `u` with a certified guarantee that `x < u`, so a
/// strict bound `k < x` on integers becomes `k < u`.
fn strict_int_bound(x: &PrecReal, context: &str) -> Result<Integer> {
    let bits = x.value().prec();
    let floor = Float::with_val(bits, x.value().floor_ref());
    let frac = Float::with_val(bits, x.value() - &floor);
    // Only the top of the unit cell is unsafe: a float just under an
    // integer whose true value is just over it would underestimate.
    if frac > Float::with_val(bits, 1) - x.guard() {
        return Err(Error::PrecisionInsufficient {
            context: context.to_string(),
            digits: x.digits(),
        });
    }
    Ok(floor
        .to_integer()
        .ok_or_else(|| Error::InvalidInput("non-finite bound".into()))?
        + 1u32)
}

/// Convergent table of `tau`, shared across a whole stage sweep.
struct SharedCf {
    convergents: Vec<Convergent>,
    start: usize,
    depth: usize,
}

fn expand_deep(tau: &PrecReal, want: usize) -> Result<CfExpansion> {
    let mut depth = want;
    loop {
        match expand_cf(tau, depth) {
            Ok(cf) => return Ok(cf),
            Err(Error::PrecisionInsufficient { .. }) if depth > 10 => depth /= 2,
            Err(e) => return Err(e),
        }
    }
}

fn build_shared(tau: &PrecReal, m: &Integer, depth: usize) -> Result<SharedCf> {
    let cf = expand_deep(tau, depth)?;
    let six_m = Integer::from(6u32 * m);
    let start = first_convergent_above(&cf, &six_m)?.index;
    let convergents = (0..cf.len())
        .map(|i| convergent_at(&cf, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(SharedCf {
        convergents,
        start,
        depth: cf.len(),
    })
}

fn reduce_with(shared: &SharedCf, inst: &ReductionInstance) -> Result<ReductionResult> {
    inst.validate()?;
    for conv in &shared.convergents[shared.start..] {
        // Deep convergents push ||tau q|| under the certification guard;
        // past that point the scan cannot continue at this precision.
        let dists = nearest_int_dist(&inst.mu.mul_int(&conv.q))
            .and_then(|dm| Ok((dm, nearest_int_dist(&inst.tau.mul_int(&conv.q))?)));
        let (dist_mu, dist_tau) = match dists {
            Ok(pair) => pair,
            Err(Error::PrecisionInsufficient { .. }) => break,
            Err(e) => return Err(e),
        };
        let epsilon = dist_mu.sub(&dist_tau.mul_int(&inst.m));
        if epsilon.certified_sign("epsilon sign")? != std::cmp::Ordering::Greater {
            continue;
        }
        let k_bound = inst
            .a
            .mul_int(&conv.q)
            .div(&epsilon)
            .ln()
            .div(&inst.b.ln());
        let k_less_than = strict_int_bound(&k_bound, "reduction exponent bound")?;
        return Ok(ReductionResult {
            conv: conv.clone(),
            epsilon,
            k_bound,
            k_less_than,
        });
    }
    Err(Error::NoPositiveEpsilon {
        context: "convergent scan".into(),
        depth: shared.depth,
    })
}

/// Applies the reduction lemma. Contract: for all integers `v <= M`, `p`,
/// and `k >= k_bound`, the inequality `0 < |v tau - p + mu| < A B^{-k}`
/// has no solution.
pub fn dp_reduce(inst: &ReductionInstance) -> Result<ReductionResult> {
    inst.validate()?;
    let shared = build_shared(&inst.tau, &inst.m, 160)?;
    reduce_with(&shared, inst)
}

/// Homogeneous fallback for `mu = 0`: for `0 < k <= M < q` the
/// best-approximation law gives `||k tau|| > 1/(2q)`, so
/// `A B^{-j} > 1/(2q)` forces `j < log(2 A q)/log B`.
fn homogeneous_bound(
    shared: &SharedCf,
    inst: &ReductionInstance,
) -> Result<(usize, PrecReal, Integer)> {
    inst.validate()?;
    let conv = &shared.convergents[shared.start];
    let digits = inst.a.digits();
    let two = PrecReal::from_u32(2, digits)?;
    let bound = inst
        .a
        .mul(&two)
        .mul_int(&conv.q)
        .ln()
        .div(&inst.b.ln());
    let k = strict_int_bound(&bound, "homogeneous exponent bound")?;
    Ok((conv.index, bound, k))
}

/// One combo row of a stage sweep. Homogeneous rows carry no epsilon.
#[derive(Debug, Clone)]
pub struct ComboRow {
    pub d1: u8,
    pub d2: Option<u8>,
    pub ell: Option<u32>,
    pub m: Option<u32>,
    pub conv_index: usize,
    pub epsilon: Option<PrecReal>,
    pub k_less_than: Integer,
    pub homogeneous: bool,
}

/// Stage sweep summary: counts, epsilon extremes over the inhomogeneous
/// rows, and the aggregate strict exponent bound (max over rows).
#[derive(Debug, Clone)]
pub struct StageAggregate {
    pub combos: usize,
    pub min_epsilon: Option<PrecReal>,
    pub max_epsilon: Option<PrecReal>,
    pub k_less_than: Integer,
    pub rows: Vec<ComboRow>,
}

fn aggregate(rows: Vec<ComboRow>) -> StageAggregate {
    let mut min_epsilon: Option<PrecReal> = None;
    let mut max_epsilon: Option<PrecReal> = None;
    let mut k_less_than = Integer::from(0);
    for row in &rows {
        if row.k_less_than > k_less_than {
            k_less_than = row.k_less_than.clone();
        }
        if let Some(eps) = &row.epsilon {
            if min_epsilon.as_ref().map_or(true, |m| eps < m) {
                min_epsilon = Some(eps.clone());
            }
            if max_epsilon.as_ref().map_or(true, |m| eps > m) {
                max_epsilon = Some(eps.clone());
            }
        }
    }
    StageAggregate {
        combos: rows.len(),
        min_epsilon,
        max_epsilon,
        k_less_than,
        rows,
    }
}

/// `|Lambda| < 2x` from `|e^Lambda - 1| < x`, valid only for `x < 1/2`.
pub fn small_linear_form_guard(x: &PrecReal) -> Result<PrecReal> {
    let digits = x.digits();
    let half = PrecReal::from_rational(Rational::from((1, 2)), digits)?;
    if !(x.value().is_sign_positive() && !x.value().is_zero()) || *x >= half {
        return Err(Error::Domain(
            "linear-form guard needs 0 < x < 1/2".into(),
        ));
    }
    Ok(x.mul(&PrecReal::from_u32(2, digits)?))
}

const CF_DEPTH: usize = 160;

fn stage_context(digits: u32, m_cap: &Integer) -> Result<(PrecReal, PrecReal, SharedCf)> {
    let tau = realfield::tau(digits)?;
    let ln_alpha = realfield::log_alpha(digits)?;
    let shared = build_shared(&tau, m_cap, CF_DEPTH)?;
    Ok((tau, ln_alpha, shared))
}

fn run_combo(
    shared: &SharedCf,
    tau: &PrecReal,
    mu: PrecReal,
    a: &PrecReal,
    b: &PrecReal,
    m_cap: &Integer,
    key: (u8, Option<u8>, Option<u32>, Option<u32>),
) -> Result<ComboRow> {
    let (d1, d2, ell, m) = key;
    let inst = ReductionInstance {
        tau: tau.clone(),
        mu,
        a: a.clone(),
        b: b.clone(),
        m: m_cap.clone(),
    };
    if inst.mu.value().is_zero() {
        let (conv_index, _, k_less_than) = homogeneous_bound(shared, &inst)?;
        return Ok(ComboRow {
            d1,
            d2,
            ell,
            m,
            conv_index,
            epsilon: None,
            k_less_than,
            homogeneous: true,
        });
    }
    let res = reduce_with(shared, &inst)?;
    Ok(ComboRow {
        d1,
        d2,
        ell,
        m,
        conv_index: res.conv.index,
        epsilon: Some(res.epsilon),
        k_less_than: res.k_less_than,
        homogeneous: false,
    })
}

/// Stage 1: `mu(d1) = log(d1/9)/log alpha` for `d1` in 1..9,
/// `A = 56/log alpha`, `B = 10`, bounding `l`. The `d1 = 9` row is the
/// degenerate `mu = 0` case and goes through the homogeneous route.
pub fn stage1_ell(m_cap: &Integer, digits: u32) -> Result<StageAggregate> {
    let (tau, ln_alpha, shared) = stage_context(digits, m_cap)?;
    let a = PrecReal::from_u32(56, digits)?.div(&ln_alpha);
    let b = PrecReal::from_u32(10, digits)?;
    let rows = (1..=9u8)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d1| {
            let mu = if d1 == 9 {
                PrecReal::from_u32(0, digits)?
            } else {
                PrecReal::from_rational(Rational::from((d1, 9)), digits)?
                    .ln()
                    .div(&ln_alpha)
            };
            run_combo(&shared, &tau, mu, &a, &b, m_cap, (d1, None, None, None))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(aggregate(rows))
}

fn digit_pairs() -> Vec<(u8, u8)> {
    let mut pairs = Vec::new();
    for d1 in 1..=9u8 {
        for d2 in 0..=9u8 {
            if d1 != d2 {
                pairs.push((d1, d2));
            }
        }
    }
    pairs
}

/// Stage 2: `mu(d1,d2,l) = log((d1 10^l - (d1-d2))/9)/log alpha` over all
/// `d1 != d2` and `1 <= l < ell_less_than`, `A = 38/log alpha`, `B = 10`,
/// bounding `m`. The combo `(1,0,1)` has `mu = 0` exactly and takes the
/// homogeneous route.
pub fn stage2_m(ell_less_than: u32, m_cap: &Integer, digits: u32) -> Result<StageAggregate> {
    let (tau, ln_alpha, shared) = stage_context(digits, m_cap)?;
    let a = PrecReal::from_u32(38, digits)?.div(&ln_alpha);
    let b = PrecReal::from_u32(10, digits)?;
    let mut combos = Vec::new();
    for (d1, d2) in digit_pairs() {
        for ell in 1..ell_less_than {
            combos.push((d1, d2, ell));
        }
    }
    let rows = combos
        .into_par_iter()
        .map(|(d1, d2, ell)| {
            let numer = Integer::from(d1) * Integer::from(10).pow(ell)
                - (Integer::from(d1) - Integer::from(d2));
            let mu = PrecReal::from_rational(Rational::from((numer, Integer::from(9))), digits)?
                .ln()
                .div(&ln_alpha);
            run_combo(
                &shared,
                &tau,
                mu,
                &a,
                &b,
                m_cap,
                (d1, Some(d2), Some(ell), None),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(aggregate(rows))
}

/// Stage 3: `mu = log((d1 10^(l+m) - (d1-d2) 10^m + (d1-d2))/9)/log alpha`
/// over all `d1 != d2`, `l < ell_less_than`, `m < m_less_than`, with
/// `A = 20/(9 log alpha)` and `B = alpha`, bounding `n`.
pub fn stage3_n(
    ell_less_than: u32,
    m_less_than: u32,
    m_cap: &Integer,
    digits: u32,
) -> Result<StageAggregate> {
    let (tau, ln_alpha, shared) = stage_context(digits, m_cap)?;
    let nine_ln_alpha = ln_alpha.mul_int(&Integer::from(9));
    let a = PrecReal::from_u32(20, digits)?.div(&nine_ln_alpha);
    let b = realfield::alpha(digits)?;
    let mut combos = Vec::new();
    for (d1, d2) in digit_pairs() {
        for ell in 1..ell_less_than {
            for m in 1..m_less_than {
                combos.push((d1, d2, ell, m));
            }
        }
    }
    let rows = combos
        .into_par_iter()
        .map(|(d1, d2, ell, m)| {
            let diff = Integer::from(d1) - Integer::from(d2);
            let numer = Integer::from(d1) * Integer::from(10).pow(ell + m)
                - Integer::from(&diff * Integer::from(10).pow(m))
                + diff;
            let mu = PrecReal::from_rational(Rational::from((numer, Integer::from(9))), digits)?
                .ln()
                .div(&ln_alpha);
            run_combo(
                &shared,
                &tau,
                mu,
                &a,
                &b,
                m_cap,
                (d1, Some(d2), Some(ell), Some(m)),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(aggregate(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    const D: u32 = 300;

    fn m_cap() -> Integer {
        Integer::from(10).pow(46)
    }

    fn min_eps_f64(agg: &StageAggregate) -> f64 {
        agg.min_epsilon.as_ref().unwrap().value().to_f64()
    }

    fn max_eps_f64(agg: &StageAggregate) -> f64 {
        agg.max_epsilon.as_ref().unwrap().value().to_f64()
    }

    #[test]
    fn stage1_aggregate() {
        let agg = stage1_ell(&m_cap(), D).unwrap();
        assert_eq!(agg.combos, 9);
        // Aggregate strict bound: l < 52.
        assert!(agg.k_less_than <= 52 && agg.k_less_than >= 50);
        // The d1 = 9 row is homogeneous; the other eight carry epsilons.
        assert_eq!(agg.rows.iter().filter(|r| r.homogeneous).count(), 1);
        assert!(min_eps_f64(&agg) > 0.0);
        // The widely quoted epsilon for this stage is the d1 = 8 row,
        // which is the maximum across digits.
        let max = max_eps_f64(&agg);
        assert!(max > 0.4614141429 && max < 0.4614141431, "max epsilon {max}");
        // Every inhomogeneous row lands on the index-98 convergent.
        for row in &agg.rows {
            if !row.homogeneous {
                assert_eq!(row.conv_index, 98);
            }
        }
    }

    #[test]
    fn stage2_aggregate() {
        let agg = stage2_m(52, &m_cap(), D).unwrap();
        assert_eq!(agg.combos, 81 * 51);
        // Aggregate strict bound: m < 54.
        assert!(agg.k_less_than <= 54 && agg.k_less_than >= 50);
        // One degenerate combo: (d1, d2, l) = (1, 0, 1) gives mu = 0.
        let homog: Vec<_> = agg.rows.iter().filter(|r| r.homogeneous).collect();
        assert_eq!(homog.len(), 1);
        assert_eq!(
            (homog[0].d1, homog[0].d2, homog[0].ell),
            (1, Some(0), Some(1))
        );
        let max = max_eps_f64(&agg);
        assert!(
            (0.49064257..0.49064259).contains(&max),
            "max epsilon {max}"
        );
        assert!(min_eps_f64(&agg) > 0.0);
    }

    #[test]
    fn stage3_aggregate() {
        let agg = stage3_n(52, 54, &m_cap(), D).unwrap();
        assert_eq!(agg.combos, 9 * 9 * 51 * 53);
        // Aggregate strict bound: n < 269.
        assert!(agg.k_less_than <= 269 && agg.k_less_than >= 230);
        assert_eq!(agg.rows.iter().filter(|r| r.homogeneous).count(), 0);
        let max = max_eps_f64(&agg);
        assert!(
            (0.49299345..0.49299348).contains(&max),
            "max epsilon {max}"
        );
        assert!(min_eps_f64(&agg) > 0.0);
    }

    #[test]
    fn stage_single_combo_cross_check() {
        // (d1, d2, l) = (1, 2, 1): mu = log(11/9)/log alpha, checked
        // against an independent higher-precision evaluation of the
        // epsilon at the index-98 convergent.
        let digits = 400;
        let ln_alpha = realfield::log_alpha(digits).unwrap();
        let mu = PrecReal::from_rational(Rational::from((11, 9)), digits)
            .unwrap()
            .ln()
            .div(&ln_alpha);
        let inst = ReductionInstance {
            tau: realfield::tau(digits).unwrap(),
            mu: mu.clone(),
            a: PrecReal::from_u32(38, digits).unwrap().div(&ln_alpha),
            b: PrecReal::from_u32(10, digits).unwrap(),
            m: m_cap(),
        };
        let res = dp_reduce(&inst).unwrap();
        assert_eq!(res.conv.index, 98);
        assert!(res.epsilon.value().to_f64() > 0.0);

        let hi = 800;
        let mu_hi = PrecReal::from_rational(Rational::from((11, 9)), hi)
            .unwrap()
            .ln()
            .div(&realfield::log_alpha(hi).unwrap());
        let tau_hi = realfield::tau(hi).unwrap();
        let dist_mu = nearest_int_dist(&mu_hi.mul_int(&res.conv.q)).unwrap();
        let dist_tau = nearest_int_dist(&tau_hi.mul_int(&res.conv.q)).unwrap();
        let eps_hi = dist_mu.sub(&dist_tau.mul_int(&m_cap()));
        let diff = res.epsilon.sub(&eps_hi).abs();
        assert!(*diff.value() < Float::with_val(64, 1e-300f64));
    }

    #[test]
    fn zero_mu_never_yields_positive_epsilon() {
        let digits = 100;
        let inst = ReductionInstance {
            tau: PrecReal::from_u32(2, digits).unwrap().sqrt(),
            mu: PrecReal::from_u32(0, digits).unwrap(),
            a: PrecReal::from_u32(1, digits).unwrap(),
            b: PrecReal::from_u32(10, digits).unwrap(),
            m: Integer::from(10),
        };
        assert!(matches!(
            dp_reduce(&inst),
            Err(Error::NoPositiveEpsilon { .. })
        ));
    }

    #[test]
    fn rejects_invalid_instances() {
        let digits = 100;
        let good = ReductionInstance {
            tau: PrecReal::from_u32(2, digits).unwrap().sqrt(),
            mu: PrecReal::from_f64(0.3, digits).unwrap(),
            a: PrecReal::from_u32(1, digits).unwrap(),
            b: PrecReal::from_u32(10, digits).unwrap(),
            m: Integer::from(100),
        };
        let mut bad = good.clone();
        bad.b = PrecReal::from_u32(1, digits).unwrap();
        assert!(dp_reduce(&bad).is_err());
        let mut bad = good.clone();
        bad.m = Integer::from(1);
        assert!(dp_reduce(&bad).is_err());
        let mut bad = good;
        bad.a = PrecReal::from_u32(0, digits).unwrap();
        assert!(dp_reduce(&bad).is_err());
    }

    fn exclusion_oracle(inst: &ReductionInstance, res: &ReductionResult) {
        // Brute force over all v <= M: the distance of v tau + mu to the
        // nearest integer must clear A B^(-k) for k at the strict bound.
        let k0 = res.k_less_than.to_i32().unwrap();
        let threshold = inst.a.mul(&inst.b.pow_i(-k0));
        let mut v_int = Integer::from(1);
        while v_int <= inst.m {
            let x = inst.tau.mul_int(&v_int).add(&inst.mu);
            let dist = nearest_int_dist(&x).unwrap();
            if !dist.value().is_zero() {
                assert!(
                    dist >= threshold,
                    "exclusion contract violated at v = {v_int}"
                );
            }
            v_int += 1;
        }
    }

    #[test]
    fn exclusion_contract_sqrt2_instance() {
        let digits = 100;
        let inst = ReductionInstance {
            tau: PrecReal::from_u32(2, digits).unwrap().sqrt(),
            mu: PrecReal::from_u32(3, digits)
                .unwrap()
                .sqrt()
                .sub(&PrecReal::from_u32(1, digits).unwrap()),
            a: PrecReal::from_f64(1.5, digits).unwrap(),
            b: PrecReal::from_u32(10, digits).unwrap(),
            m: Integer::from(100),
        };
        let res = dp_reduce(&inst).unwrap();
        assert!(Integer::from(6u32 * &inst.m) < res.conv.q);
        exclusion_oracle(&inst, &res);
    }

    #[test]
    fn exclusion_contract_truncated_tau_instance() {
        let digits = 50;
        let ln_alpha = realfield::log_alpha(digits).unwrap();
        let inst = ReductionInstance {
            tau: realfield::tau(digits).unwrap(),
            mu: PrecReal::from_rational(Rational::from((5, 9)), digits)
                .unwrap()
                .ln()
                .div(&ln_alpha),
            a: PrecReal::from_u32(2, digits).unwrap(),
            b: PrecReal::from_u32(3, digits).unwrap(),
            m: Integer::from(1000),
        };
        let res = dp_reduce(&inst).unwrap();
        exclusion_oracle(&inst, &res);
    }

    #[test]
    fn exclusion_contract_sqrt5_instance() {
        let digits = 100;
        let inst = ReductionInstance {
            tau: PrecReal::from_u32(5, digits).unwrap().sqrt(),
            mu: PrecReal::from_rational(Rational::from((3, 10)), digits).unwrap(),
            a: PrecReal::from_u32(1, digits).unwrap(),
            b: PrecReal::from_u32(2, digits).unwrap(),
            m: Integer::from(500),
        };
        let res = dp_reduce(&inst).unwrap();
        exclusion_oracle(&inst, &res);
    }

    #[test]
    fn linear_form_guard() {
        let x = PrecReal::from_f64(0.28, 100).unwrap();
        let g = small_linear_form_guard(&x).unwrap();
        assert!((g.value().to_f64() - 0.56).abs() < 1e-12);
        let x = PrecReal::from_f64(0.19, 100).unwrap();
        let g = small_linear_form_guard(&x).unwrap();
        assert!((g.value().to_f64() - 0.38).abs() < 1e-12);
        let x = PrecReal::from_f64(0.5, 100).unwrap();
        assert!(matches!(small_linear_form_guard(&x), Err(Error::Domain(_))));
    }

    #[test]
    fn stage1_stable_under_precision_doubling() {
        let a = stage1_ell(&m_cap(), 500).unwrap();
        let b = stage1_ell(&m_cap(), 1000).unwrap();
        assert_eq!(a.k_less_than, b.k_less_than);
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.k_less_than, rb.k_less_than);
            if let (Some(ea), Some(eb)) = (&ra.epsilon, &rb.epsilon) {
                let diff = ea.sub(eb).abs();
                let tol = Float::with_val(64, 10f64).pow(-400);
                assert!(*diff.value() < tol);
            }
        }
    }

    #[test]
    fn stage_order_invariance() {
        // Aggregates come from an order-independent fold; two runs agree
        // field by field.
        let a = stage1_ell(&m_cap(), D).unwrap();
        let b = stage1_ell(&m_cap(), D).unwrap();
        assert_eq!(a.k_less_than, b.k_less_than);
        assert_eq!(
            a.min_epsilon.unwrap().value(),
            b.min_epsilon.unwrap().value()
        );
    }
}
