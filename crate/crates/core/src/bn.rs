//! Brill-Noether numbers, expected dimensions and the nonemptiness decision
//! procedure for the loci `|L|^r_{δ,d}` on a general `(1, n)`-polarized
//! abelian surface.
//!
//! Everything here is integer arithmetic on `i64`. Every product and sum is
//! overflow-checked; an overflow is reported as [`BnError::Overflow`] rather
//! than wrapping.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BnError {
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("node count delta = {delta} out of range 0..={max}")]
    DeltaOutOfRange { delta: i64, max: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, BnError>;

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(BnError::Overflow("sum"))
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(BnError::Overflow("difference"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(BnError::Overflow("product"))
}

/// Arithmetic genus `p`, rank `r`, degree `d` and node count `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BnParams {
    pub p: i64,
    pub r: i64,
    pub d: i64,
    #[serde(default)]
    pub delta: i64,
}

impl BnParams {
    pub fn new(p: i64, r: i64, d: i64, delta: i64) -> Result<Self> {
        if p < 2 {
            return Err(BnError::InvalidParameter(format!("p = {p} must be >= 2")));
        }
        if r < 1 {
            return Err(BnError::InvalidParameter(format!("r = {r} must be >= 1")));
        }
        if d < 2 {
            return Err(BnError::InvalidParameter(format!("d = {d} must be >= 2")));
        }
        check_delta(p, delta)?;
        Ok(Self { p, r, d, delta })
    }

    /// Geometric genus `p - delta`.
    pub fn g(&self) -> i64 {
        self.p - self.delta
    }
}

fn check_delta(p: i64, delta: i64) -> Result<()> {
    let max = p.saturating_sub(2);
    if delta < 0 || delta > max {
        return Err(BnError::DeltaOutOfRange { delta, max });
    }
    Ok(())
}

/// `ρ(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho(g: i64, r: i64, d: i64) -> Result<i64> {
    let excess = add(sub(g, d)?, r)?;
    sub(g, mul(add(r, 1)?, excess)?)
}

/// Returns `(ρ(p,r,d) + r(r+2), (r+1)d - r(p-1))`. The two sides are always
/// equal; callers use the pair as a consistency check.
pub fn rho_identity(p: i64, r: i64, d: i64) -> Result<(i64, i64)> {
    let left = add(rho(p, r, d)?, mul(r, add(r, 2)?)?)?;
    let right = sub(mul(add(r, 1)?, d)?, mul(r, sub(p, 1)?)?)?;
    Ok((left, right))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// The linear system `|L|`.
    Linear,
    /// The continuous system `{L}`, two dimensions larger.
    Continuous,
}

/// Expected dimension of `|L|^r_{δ,d}` (or `{L}^r_{δ,d}`) with `g = p - delta`.
pub fn expected_dim_bn_locus(p: i64, delta: i64, r: i64, d: i64, ambient: Ambient) -> Result<i64> {
    check_delta(p, delta)?;
    let g = p - delta;
    let base = match ambient {
        Ambient::Linear => g - 2,
        Ambient::Continuous => g,
    };
    let rho = rho(g, r, d)?;
    Ok(base.min(add(base, rho)?))
}

/// Upper bound `min{g, 2k - 2}` for the dimension of a family of curves of
/// geometric genus `g` carrying a `g^1_k`.
pub fn pencil_family_bound(g: i64, k: i64) -> Result<i64> {
    if g < 2 || k < 2 {
        return Err(BnError::InvalidParameter(format!("need g >= 2 and k >= 2, got g = {g}, k = {k}")));
    }
    Ok(g.min(sub(mul(2, k)?, 2)?))
}

/// `(dim |L|^1_{δ,k}, dim G^1_k(C̃))` for a general member, with `g = p - delta`.
pub fn gonal_locus_dims(p: i64, delta: i64, k: i64) -> Result<(i64, i64)> {
    check_delta(p, delta)?;
    check_k(k)?;
    let g = p - delta;
    let locus = (g - 2).min(mul(2, k - 2)?);
    let g1k = 0.max(sub(mul(2, k - 1)?, g)?);
    Ok((locus, g1k))
}

fn check_k(k: i64) -> Result<()> {
    if k < 2 {
        return Err(BnError::InvalidParameter(format!("k = {k} must be >= 2")));
    }
    Ok(())
}

/// Outcome of a single-inequality criterion: `holds` iff `lhs >= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub holds: bool,
    pub alpha: i64,
    pub rhs: i64,
}

/// Nonemptiness of `|L|^1_{δ,k}`: `δ >= α(p - δ - 1 - k(α + 1))` with
/// `α = ⌊(p - δ - 1) / 2k⌋`.
pub fn nodal_pencil_nonempty(p: i64, delta: i64, k: i64) -> Result<BoundCheck> {
    check_delta(p, delta)?;
    check_k(k)?;
    let g_minus_one = p - delta - 1;
    let alpha = g_minus_one.div_euclid(mul(2, k)?);
    let rhs = mul(alpha, sub(g_minus_one, mul(k, alpha + 1)?)?)?;
    Ok(BoundCheck { holds: delta >= rhs, alpha, rhs })
}

/// Necessary condition `δ >= α(r(g - dα - 1) - d)` for a `g^r_d` on the
/// normalization of a `δ`-nodal curve, with
/// `α = ⌊(r(g - 1) + d(r - 1)) / 2rd⌋`.
pub fn thm56_bound(p: i64, r: i64, d: i64, delta: i64) -> Result<BoundCheck> {
    let params = BnParams::new(p, r, d, delta)?;
    let g = params.g();
    let numerator = add(mul(r, g - 1)?, mul(d, r - 1)?)?;
    let alpha = numerator.div_euclid(mul(2, mul(r, d)?)?);
    let inner = sub(mul(r, sub(sub(g, mul(d, alpha)?)?, 1)?)?, d)?;
    let rhs = mul(alpha, inner)?;
    Ok(BoundCheck { holds: delta >= rhs, alpha, rhs })
}

/// Numeric trace of the strengthened necessary condition valid for
/// `0 <= p - 1 - d <= r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixTrace {
    /// `χ = p - 1 - d`.
    pub chi: i64,
    /// `⌊r / χ⌋`, absent when `χ = 0`.
    pub gamma: Option<i64>,
    /// Lower bounds `r + 1 - iχ` for `h_1, …, h_N` with `N = γ`.
    pub h_lower: Vec<i64>,
    /// `(N+1)(r+1) - χN(N+1)/2`, absent when `χ = 0`.
    pub rank_lower: Option<i64>,
    /// `ρ(p,r,d) + r(r+2)`.
    pub lhs: i64,
    /// Twice the right-hand side, so that comparisons stay integral.
    pub twice_rhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// The strengthened bound, or `None` when `(p, r, d)` lies outside
/// `d <= p - 1`, `r >= p - 1 - d`.
pub fn appendix_bound(p: i64, r: i64, d: i64) -> Result<Option<AppendixTrace>> {
    let chi = sub(sub(p, 1)?, d)?;
    if chi < 0 || r < chi {
        return Ok(None);
    }
    let (lhs, _) = rho_identity(p, r, d)?;
    let (gamma, h_lower, rank_lower, twice_rhs) = if chi == 0 {
        (None, Vec::new(), None, mul(r, r + 1)?)
    } else {
        let gamma = r / chi;
        let h_lower = (1..=gamma)
            .map(|i| sub(r + 1, mul(i, chi)?))
            .collect::<Result<Vec<_>>>()?;
        // N(N+1) is even, so the rank bound is an integer.
        let rank_lower = sub(mul(gamma + 1, r + 1)?, mul(chi, mul(gamma, gamma + 1)? / 2)?)?;
        // 2·γχ(r + 1 - χ(γ+1)/2) = γχ(2(r+1) - χ(γ+1))
        let twice = mul(mul(gamma, chi)?, sub(mul(2, r + 1)?, mul(chi, gamma + 1)?)?)?;
        (Some(gamma), h_lower, Some(rank_lower), twice)
    };
    debug_assert_eq!(twice_rhs % 2, 0);
    Ok(Some(AppendixTrace {
        chi,
        gamma,
        h_lower,
        rank_lower,
        lhs,
        twice_rhs,
        rhs: twice_rhs / 2,
        holds: mul(2, lhs)? >= twice_rhs,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    NonemptyGeneric,
    NonemptyExpectedDim,
    EmptyByRho,
    EmptyByAppendix,
    Undetermined,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::NonemptyGeneric => "NonemptyGeneric",
            Self::NonemptyExpectedDim => "NonemptyExpectedDim",
            Self::EmptyByRho => "EmptyByRho",
            Self::EmptyByAppendix => "EmptyByAppendix",
            Self::Undetermined => "Undetermined",
        }
    }
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named comparison `lhs >= rhs` that fed into a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl Reason {
    fn new(name: &str, lhs: i64, rhs: i64) -> Self {
        Self { name: name.to_string(), lhs, rhs, holds: lhs >= rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub expected_dim: Option<i64>,
    pub reasons: Vec<Reason>,
}

impl Verdict {
    pub fn reason(&self, name: &str) -> Option<&Reason> {
        self.reasons.iter().find(|r| r.name == name)
    }
}

/// Decides (non)emptiness of `|L|^r_d` for smooth curves. Nonemptiness is
/// only asserted under the known sufficient conditions; anything not covered
/// by a criterion comes back [`VerdictStatus::Undetermined`].
pub fn smooth_locus_verdict(p: i64, r: i64, d: i64) -> Result<Verdict> {
    BnParams::new(p, r, d, 0)?;
    let rho = rho(p, r, d)?;
    let floor = -mul(r, r + 2)?;
    let mut reasons = vec![Reason::new("rho_nonnegative", rho, 0)];
    if rho >= 0 {
        return Ok(Verdict {
            status: VerdictStatus::NonemptyGeneric,
            expected_dim: Some(p - 2),
            reasons,
        });
    }
    reasons.push(Reason::new("rho_above_floor", rho, floor));
    if rho < floor {
        return Ok(Verdict { status: VerdictStatus::EmptyByRho, expected_dim: None, reasons });
    }
    let threshold = mul(r, r + 1)?;
    reasons.push(Reason::new("degree_threshold", d, threshold));
    if d >= threshold {
        return Ok(Verdict {
            status: VerdictStatus::NonemptyExpectedDim,
            expected_dim: Some(add(p - 2, rho)?),
            reasons,
        });
    }
    let status = match appendix_bound(p, r, d)? {
        Some(trace) => {
            reasons.push(Reason::new("appendix_bound", trace.lhs, trace.rhs));
            if trace.holds {
                VerdictStatus::Undetermined
            } else {
                VerdictStatus::EmptyByAppendix
            }
        }
        None => VerdictStatus::Undetermined,
    };
    Ok(Verdict { status, expected_dim: None, reasons })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalStratum {
    pub k: i64,
    pub dim: i64,
    pub codim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityStrata {
    pub k_gen: i64,
    pub c_gen: i64,
    pub strata: Vec<GonalStratum>,
}

/// Families of smooth curves in `|L|` whose gonality drops below the
/// general value `⌊(p+3)/2⌋`.
pub fn gonality_strata(p: i64) -> Result<GonalityStrata> {
    if p < 3 {
        return Err(BnError::InvalidParameter(format!("p = {p} must be >= 3")));
    }
    let k_gen = (p + 3) / 2;
    let c_gen = (p - 1) / 2;
    let mut strata = Vec::new();
    for k in 2..k_gen {
        if nodal_pencil_nonempty(p, 0, k)?.holds {
            let dim = (p - 2).min(mul(2, k - 2)?);
            strata.push(GonalStratum { k, dim, codim: p - 2 - dim });
        }
    }
    Ok(GonalityStrata { k_gen, c_gen, strata })
}

/// Total ramification weight `(r+1)d + r(r+1)(g-1)` of a `g^r_d` on a genus
/// `g` curve.
pub fn pluecker_total(g: i64, r: i64, d: i64) -> Result<i64> {
    if g < 0 {
        return Err(BnError::InvalidParameter(format!("g = {g} must be >= 0")));
    }
    add(mul(r + 1, d)?, mul(mul(r, r + 1)?, g - 1)?)
}
