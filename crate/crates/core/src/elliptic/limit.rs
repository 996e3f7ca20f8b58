//! Limit curves on the degenerate surface, seen through their trace on `E`.
//!
//! A curve with vector `α` is given by base points `B_{l,1}, …, B_{l,α_l}` at
//! each level `l`. Its trace on `E` is `Σ D_l(B_{l,j})`, and each base point
//! carries one distinguished pair `(B, B ⊕ e^{⊕(l+1)})`: of the second kind at
//! level 0 and of the first kind (the pair associated with the special
//! `l`-sequence `B ⊕ e, …, B ⊕ e^{⊕l}`) at levels `l >= 1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::curve::{Curve, Point};
use super::divisor::{class_of, d_l, solve_translation, Divisor, DivisorClass};
use super::{EcError, Result};
use crate::alpha::AlphaVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairKind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishedPair {
    pub level: usize,
    pub kind: PairKind,
    pub points: (Point, Point),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitCurve {
    pub alpha: AlphaVector,
    pub base_points: Vec<Vec<Point>>,
    pub e: Point,
    pub pairs: Vec<DistinguishedPair>,
    pub trace: Divisor,
    pub delta: usize,
    pub g: usize,
}

impl LimitCurve {
    pub fn class(&self, curve: &Curve) -> Result<DivisorClass> {
        class_of(curve, &self.trace)
    }
}

/// Checks the base points against `alpha`, the gluing point and the target
/// class, and assembles the distinguished pairs.
///
/// `base_points[l]` holds the `α_l` points of level `l`; trailing empty
/// levels may be omitted.
pub fn build_limit_curve(
    curve: &Curve,
    alpha: &AlphaVector,
    base_points: &[Vec<Point>],
    e: &Point,
    target: &DivisorClass,
) -> Result<LimitCurve> {
    let summary = alpha.validate()?;
    let n = summary.n;
    curve.check(e)?;
    if base_points.len() > n {
        return Err(EcError::ArityMismatch { level: base_points.len() - 1, expected: 0, found: 1 });
    }
    for level in 0..n {
        let found = base_points.get(level).map_or(0, Vec::len);
        let expected = alpha.get(level) as usize;
        if found != expected {
            return Err(EcError::ArityMismatch { level, expected, found });
        }
    }
    let order = curve.point_order(e)?;
    if order <= n as u64 + 1 {
        return Err(EcError::GluingOrderTooSmall { order, needed: n as u64 + 2 });
    }

    let mut trace = Divisor::zero();
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::with_capacity(summary.pairs);
    for (level, points) in base_points.iter().enumerate() {
        for b in points {
            curve.check(b)?;
            let d = d_l(curve, b, e, level)?;
            for (p, _) in d.support() {
                if !seen.insert(*p) {
                    return Err(EcError::CollidingPoints(*p));
                }
            }
            trace = &trace + &d;
            let partner = curve.add(b, &curve.mul(level as i64 + 1, e)?)?;
            let kind = if level == 0 { PairKind::Second } else { PairKind::First };
            pairs.push(DistinguishedPair { level, kind, points: (*b, partner) });
        }
    }
    debug_assert_eq!(seen.len(), n);

    let class = class_of(curve, &trace)?;
    if class != *target {
        return Err(EcError::ClassMismatch { expected: *target, found: class });
    }
    Ok(LimitCurve {
        alpha: alpha.clone(),
        base_points: (0..n).map(|l| base_points.get(l).cloned().unwrap_or_default()).collect(),
        e: *e,
        g: 1 + pairs.len(),
        pairs,
        trace,
        delta: summary.delta,
    })
}

/// Moves every base point by `shift`. The trace sum moves by `shift^{⊕n}`.
pub fn translate_base_points(curve: &Curve, base_points: &[Vec<Point>], shift: &Point) -> Result<Vec<Vec<Point>>> {
    base_points
        .iter()
        .map(|level| level.iter().map(|b| curve.add(b, shift)).collect())
        .collect()
}

/// Places a curve with vector `alpha` in the class `target` by translating
/// the given initial base points by a solution of `nP ~ D' + n e_0 - D`.
pub fn place_limit_curve(
    curve: &Curve,
    alpha: &AlphaVector,
    initial: &[Vec<Point>],
    e: &Point,
    target: &DivisorClass,
) -> Result<LimitCurve> {
    let n = alpha.n() as i64;
    let mut trace = Divisor::zero();
    for (level, points) in initial.iter().enumerate() {
        for b in points {
            trace = &trace + &d_l(curve, b, e, level)?;
        }
    }
    // Any degree-n divisor in the target class will do as D'.
    let d_prime = Divisor::from_points([(target.sum, 1), (Point::Infinity, n - 1)]);
    let shift = solve_translation(curve, &trace, &d_prime, n)?;
    let moved = translate_base_points(curve, initial, &shift)?;
    build_limit_curve(curve, alpha, &moved, e, target)
}
