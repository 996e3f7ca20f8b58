//! Numerical side of projective duality for linear series with cusps:
//! aggregate ramification profiles, dual degree, the cusp count `a` and the
//! degree threshold `d >= r(r+1)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bn::{self, BnError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("a = (r+1)d - r(p-1) = {a} is negative")]
    NegativeA { a: i64 },
    #[error("profile has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Bn(#[from] BnError),
}

pub type Result<T> = std::result::Result<T, DualityError>;

/// Aggregate ramification weights `(k_1, …, k_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RamProfile {
    weights: Vec<i64>,
}

impl RamProfile {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(DualityError::InvalidParameter("profile needs r >= 1 weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| **w < 0) {
            return Err(DualityError::InvalidParameter(format!("negative weight {w}")));
        }
        Ok(Self { weights })
    }

    pub fn zero(r: usize) -> Self {
        Self { weights: vec![0; r.max(1)] }
    }

    pub fn r(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `p - 1` cusps `(0, 1, …, 1)` and `a` simple ramification points
    /// `(0, …, 0, 1)`, aggregated: `k_1 = p - 1`, `k_r = a`.
    pub fn cuspidal(r: usize, cusps: i64, simple: i64) -> Self {
        let mut weights = vec![0; r.max(1)];
        weights[0] += cusps;
        *weights.last_mut().expect("r >= 1") += simple;
        Self { weights }
    }
}

/// `d* = rd - Σ_{i=1}^{r-1} (r - i) k_i`.
pub fn dual_degree(r: i64, d: i64, profile: &RamProfile) -> Result<i64> {
    if r < 1 || profile.r() as i64 != r {
        return Err(DualityError::RankMismatch { expected: r.max(0) as usize, found: profile.r() });
    }
    let correction: i64 = profile.weights()[..profile.r() - 1]
        .iter()
        .enumerate()
        .map(|(i, k)| (r - 1 - i as i64) * k)
        .sum();
    Ok(r * d - correction)
}

/// `k*_i = k_{r+1-i}`.
pub fn dual_profile(profile: &RamProfile) -> RamProfile {
    RamProfile { weights: profile.weights().iter().rev().copied().collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspScenario {
    pub p: i64,
    pub r: i64,
    pub d: i64,
    /// Simple ramification points, `(r+1)d - r(p-1)`.
    pub a: i64,
    pub d_star: i64,
    /// `ρ(a + 1, r, d*)`.
    pub rho_dual: i64,
    /// Set when `d* <= r`, i.e. the dual cannot be a nondegenerate curve.
    pub degenerate: bool,
}

/// A `g^r_d` on `E` with `p - 1` ordinary cusps and `a` simple ramification
/// points, and its dual series.
pub fn cusp_scenario(p: i64, r: i64, d: i64) -> Result<CuspScenario> {
    if p < 2 || r < 1 || d < 1 {
        return Err(DualityError::InvalidParameter(format!("need p >= 2, r >= 1, d >= 1; got ({p}, {r}, {d})")));
    }
    let (_, a) = bn::rho_identity(p, r, d)?;
    if a < 0 {
        return Err(DualityError::NegativeA { a });
    }
    let profile = RamProfile::cuspidal(r as usize, p - 1, a);
    let d_star = dual_degree(r, d, &profile)?;
    let rho_dual = bn::rho(a + 1, r, d_star)?;
    debug_assert_eq!(rho_dual, p - 1 - r * (r + 2));
    Ok(CuspScenario { p, r, d, a, d_star, rho_dual, degenerate: d_star <= r })
}

/// Degree of the dual of the dual series; always `d`.
pub fn double_dual_degree(p: i64, r: i64, d: i64) -> Result<i64> {
    let s = cusp_scenario(p, r, d)?;
    let dual = dual_profile(&RamProfile::cuspidal(r as usize, p - 1, s.a));
    dual_degree(r, s.d_star, &dual)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPrime {
    /// Largest `p` with `ρ(p, r, d) >= -r(r+2)`.
    pub p_prime: i64,
    /// `(r+1)d - r(p' - 1)`, in `0..r`.
    pub a_prime: i64,
    /// `d >= r(r+1)`.
    pub threshold_ok: bool,
}

pub fn p_prime(r: i64, d: i64) -> Result<PPrime> {
    if r < 1 || d < 2 {
        return Err(DualityError::InvalidParameter(format!("need r >= 1, d >= 2; got ({r}, {d})")));
    }
    let top = (r + 1) * d;
    let p_prime = 1 + top / r;
    let a_prime = top % r;
    let threshold_ok = d >= r * (r + 1);
    debug_assert_eq!(threshold_ok, p_prime > r * (r + 2));
    Ok(PPrime { p_prime, a_prime, threshold_ok })
}

/// Checks `r·cusps + simple = (r+1)d + r(r+1)(g-1)`: a cusp carries weight
/// `r`, a simple ramification point weight 1.
pub fn pluecker_consistency(g: i64, r: i64, d: i64, cusps: i64, simple: i64) -> Result<bool> {
    if cusps < 0 || simple < 0 {
        return Err(DualityError::InvalidParameter("counts must be nonnegative".into()));
    }
    Ok(r * cusps + simple == bn::pluecker_total(g, r, d)?)
}
