//! Orchestration of the full proof: low-range search, bound chain, three
//! reduction sweeps, contradiction check; emits a structured certificate
//! and a human-readable report.
//!
//! The certificate is a single TOML document with a schema version and
//! key-ordered sections, diff-able across runs. A stage failure never
//! produces a false "no solutions": any error downgrades the verdict to
//! "incomplete" with the failing stage recorded.

use crate::bakerbounds::{self, BoundChainResult};
use crate::error::{Error, Result};
use crate::exhaustive::{self, SearchMode, SearchReport};
use crate::reduction::{self, StageAggregate};
use rug::ops::Pow;
use rug::Integer;
use serde::{Deserialize, Serialize};

/// Strict bounds adopted for the sweep ranges; the computed aggregates
/// must come in at or under these.
pub const ADOPTED_ELL_LESS_THAN: u32 = 52;
pub const ADOPTED_M_LESS_THAN: u32 = 54;
pub const ADOPTED_N_LESS_THAN: u32 = 269;

const SCHEMA_VERSION: u32 = 1;
const EPSILON_SIG_DIGITS: usize = 40;

#[derive(Debug, Clone)]
pub struct Config {
    pub precision: u32,
    pub n_max: usize,
    pub mode: SearchMode,
    pub detail: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: crate::realfield::DEFAULT_DIGITS,
            n_max: 1000,
            mode: SearchMode::Palindromic,
            detail: false,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.precision < 200 {
            return Err(Error::Precondition(
                "pipeline needs at least 200 digits of working precision".into(),
            ));
        }
        if self.n_max < 1000 {
            return Err(Error::Precondition(
                "search ceiling must be at least 1000".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "no solutions")]
    NoSolutions,
    #[serde(rename = "hits found")]
    HitsFound,
    #[serde(rename = "incomplete")]
    Incomplete,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::NoSolutions => write!(f, "no solutions"),
            Verdict::HitsFound => write!(f, "hits found"),
            Verdict::Incomplete => write!(f, "incomplete"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub n: usize,
    pub value: String,
    pub pattern: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSection {
    pub n_max: usize,
    pub mode: SearchMode,
    pub hit_count: usize,
    pub hits: Vec<HitRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSection {
    pub matveev_stage1: String,
    pub ell_log_bound: String,
    pub a1_stage2: String,
    pub matveev_stage2: String,
    pub m_log_bound: String,
    pub a1_stage3: String,
    pub matveev_stage3: String,
    pub n_poly_bound: String,
    pub n_abs: String,
    pub ell_abs: String,
    pub m_abs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub d1: u8,
    pub d2: Option<u8>,
    pub ell: Option<u32>,
    pub m: Option<u32>,
    pub conv_index: usize,
    pub epsilon: Option<String>,
    pub k_less_than: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSection {
    pub name: String,
    pub combos: usize,
    pub conv_index_max: usize,
    pub k_less_than: i64,
    pub adopted_less_than: i64,
    pub min_epsilon: Option<String>,
    pub max_epsilon: Option<String>,
    pub all_epsilon_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<RowRecord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub schema_version: u32,
    pub tool_version: String,
    pub precision_digits: u32,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_stage: Option<String>,
    pub search: SearchSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_chain: Option<ChainSection>,
    pub stages: Vec<StageSection>,
}

impl BoundCertificate {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("certificate serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidInput(format!("bad certificate: {e}")))
    }
}

fn search_section(report: &SearchReport) -> SearchSection {
    SearchSection {
        n_max: report.n_max,
        mode: report.mode,
        hit_count: report.hits.len(),
        hits: report
            .hits
            .iter()
            .map(|h| HitRecord {
                n: h.n,
                value: h.value.to_string(),
                pattern: h.pattern.to_string(),
            })
            .collect(),
    }
}

fn chain_section(chain: &BoundChainResult) -> ChainSection {
    ChainSection {
        matveev_stage1: chain.matveev_stage1.to_string(),
        ell_log_bound: chain.ell_log_bound.to_string(),
        a1_stage2: chain.a1_stage2.to_string(),
        matveev_stage2: chain.matveev_stage2.to_string(),
        m_log_bound: chain.m_log_bound.to_string(),
        a1_stage3: chain.a1_stage3.to_string(),
        matveev_stage3: chain.matveev_stage3.to_string(),
        n_poly_bound: chain.n_poly_bound.to_string(),
        n_abs: chain.n_abs.to_string(),
        ell_abs: chain.ell_abs.to_string(),
        m_abs: chain.m_abs.to_string(),
    }
}

fn stage_section(name: &str, agg: &StageAggregate, adopted: u32, detail: bool) -> StageSection {
    let eps_str = |e: &Option<crate::realfield::PrecReal>| {
        e.as_ref().map(|x| x.to_decimal_string(EPSILON_SIG_DIGITS))
    };
    let all_positive = agg.rows.iter().all(|r| {
        r.homogeneous
            || r.epsilon
                .as_ref()
                .map(|e| e.value().is_sign_positive() && !e.value().is_zero())
                .unwrap_or(false)
    });
    StageSection {
        name: name.to_string(),
        combos: agg.combos,
        conv_index_max: agg.rows.iter().map(|r| r.conv_index).max().unwrap_or(0),
        k_less_than: agg.k_less_than.to_i64().unwrap_or(i64::MAX),
        adopted_less_than: adopted as i64,
        min_epsilon: eps_str(&agg.min_epsilon),
        max_epsilon: eps_str(&agg.max_epsilon),
        all_epsilon_positive: all_positive,
        rows: if detail {
            Some(
                agg.rows
                    .iter()
                    .map(|r| RowRecord {
                        d1: r.d1,
                        d2: r.d2,
                        ell: r.ell,
                        m: r.m,
                        conv_index: r.conv_index,
                        epsilon: r
                            .epsilon
                            .as_ref()
                            .map(|e| e.to_decimal_string(EPSILON_SIG_DIGITS)),
                        k_less_than: r.k_less_than.to_i64().unwrap_or(i64::MAX),
                    })
                    .collect(),
            )
        } else {
            None
        },
    }
}

/// Verdict from the assembled sections alone, so it can be recomputed
/// from a parsed certificate.
pub fn compute_verdict(
    search: &SearchSection,
    chain: Option<&ChainSection>,
    stages: &[StageSection],
) -> Verdict {
    if search.hit_count > 0 {
        return Verdict::HitsFound;
    }
    if search.mode != SearchMode::Palindromic || search.n_max < 1000 {
        return Verdict::Incomplete;
    }
    if chain.is_none() || stages.len() != 3 {
        return Verdict::Incomplete;
    }
    let sound = stages.iter().all(|s| {
        s.all_epsilon_positive && s.combos > 0 && s.k_less_than <= s.adopted_less_than
    });
    let final_stage_closes_gap = stages
        .iter()
        .find(|s| s.name == "n")
        .map(|s| s.k_less_than < 1000)
        .unwrap_or(false);
    if sound && final_stage_closes_gap {
        Verdict::NoSolutions
    } else {
        Verdict::Incomplete
    }
}

/// Runs search, bound chain, and the three reduction sweeps, assembling
/// the certificate. Stage errors are recorded and yield an "incomplete"
/// verdict instead of propagating.
pub fn run_full(config: &Config) -> Result<BoundCertificate> {
    config.validate()?;
    let digits = config.precision;
    let report = match config.mode {
        SearchMode::Palindromic => exhaustive::search_palindromic(config.n_max)?,
        SearchMode::TwoBlock => exhaustive::search_two_block(config.n_max)?,
    };
    let search = search_section(&report);

    let mut failing_stage = None;
    let bound_chain = match bakerbounds::derive_bound_chain(digits) {
        Ok(chain) => {
            // The sweep cap must dominate the absolute n bound.
            let m_cap = Integer::from(10).pow(46);
            if chain.n_abs.cover_integer() >= m_cap {
                failing_stage = Some("bound-chain".to_string());
                None
            } else {
                Some(chain)
            }
        }
        Err(_) => {
            failing_stage = Some("bound-chain".to_string());
            None
        }
    };

    let mut stages = Vec::new();
    if bound_chain.is_some() {
        let m_cap = Integer::from(10).pow(46);
        let specs: [(&str, u32); 3] = [
            ("ell", ADOPTED_ELL_LESS_THAN),
            ("m", ADOPTED_M_LESS_THAN),
            ("n", ADOPTED_N_LESS_THAN),
        ];
        for (name, adopted) in specs {
            let run = match name {
                "ell" => reduction::stage1_ell(&m_cap, digits),
                "m" => reduction::stage2_m(ADOPTED_ELL_LESS_THAN, &m_cap, digits),
                _ => reduction::stage3_n(
                    ADOPTED_ELL_LESS_THAN,
                    ADOPTED_M_LESS_THAN,
                    &m_cap,
                    digits,
                ),
            };
            match run {
                Ok(agg) => stages.push(stage_section(name, &agg, adopted, config.detail)),
                Err(_) => {
                    failing_stage = Some(format!("reduction-{name}"));
                    break;
                }
            }
        }
    }

    let chain_section_opt = bound_chain.as_ref().map(chain_section);
    let verdict = if failing_stage.is_some() {
        Verdict::Incomplete
    } else {
        compute_verdict(&search, chain_section_opt.as_ref(), &stages)
    };
    Ok(BoundCertificate {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        precision_digits: digits,
        verdict,
        failing_stage,
        search,
        bound_chain: chain_section_opt,
        stages,
    })
}

/// Human-readable report, byte-stable for a fixed certificate.
pub fn explain(cert: &BoundCertificate) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: &str| {
        out.push_str(line);
        out.push('\n');
    };
    push(
        &mut out,
        &format!(
            "proof certificate schema {} (tool {}, {} digits)",
            cert.schema_version, cert.tool_version, cert.precision_digits
        ),
    );
    push(&mut out, "");
    if cert.search.hit_count == 0 && cert.search.mode == SearchMode::Palindromic {
        push(
            &mut out,
            &format!(
                "search: no palindromic hits for n <= {}",
                cert.search.n_max
            ),
        );
    } else {
        push(
            &mut out,
            &format!(
                "search: mode {}, n <= {}, {} hit(s)",
                cert.search.mode, cert.search.n_max, cert.search.hit_count
            ),
        );
        for h in &cert.search.hits {
            push(&mut out, &format!("  n = {}: {} [{}]", h.n, h.value, h.pattern));
        }
    }
    if let Some(chain) = &cert.bound_chain {
        push(&mut out, "");
        push(&mut out, "bound chain (Matveev + absorption):");
        push(
            &mut out,
            &format!(
                "  stage coefficients {} / {} / {}",
                chain.matveev_stage1, chain.matveev_stage2, chain.matveev_stage3
            ),
        );
        push(
            &mut out,
            &format!(
                "  \u{2113} < {} log n, m < {} (log n)^2, n < {} (log n)^3",
                chain.ell_log_bound, chain.m_log_bound, chain.n_poly_bound
            ),
        );
        push(
            &mut out,
            &format!(
                "  absolute bounds: n <= {}, \u{2113} <= {}, m <= {}",
                chain.n_abs, chain.ell_abs, chain.m_abs
            ),
        );
    }
    for stage in &cert.stages {
        push(&mut out, "");
        let symbol = match stage.name.as_str() {
            "ell" => "\u{2113}",
            other => other,
        };
        push(
            &mut out,
            &format!(
                "reduction stage {} (Dujella-Petho, {} combos, convergent index <= {}):",
                stage.name, stage.combos, stage.conv_index_max
            ),
        );
        if let (Some(min), Some(max)) = (&stage.min_epsilon, &stage.max_epsilon) {
            push(
                &mut out,
                &format!("  epsilon in [{}, {}]", &min[..12.min(min.len())], &max[..12.min(max.len())]),
            );
        }
        push(
            &mut out,
            &format!(
                "  computed {symbol} < {}, adopted {symbol} < {}",
                stage.k_less_than, stage.adopted_less_than
            ),
        );
    }
    push(&mut out, "");
    if let Some(stage) = &cert.failing_stage {
        push(&mut out, &format!("failing stage: {stage}"));
    }
    push(&mut out, &format!("verdict: {}", cert.verdict));
    out
}
