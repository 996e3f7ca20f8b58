//! Divisors on `E(F_q)` and their Abel-Jacobi classes.
//!
//! On an elliptic curve `P + Q - e_0 ~ P ⊕ Q`, so a divisor is determined up
//! to linear equivalence by its degree and the group sum of its support.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::curve::{Curve, Point};
use super::{EcError, Result};

/// A formal sum of points with integer multiplicities. Zero multiplicities
/// are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Divisor {
    support: BTreeMap<Point, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point(p: Point) -> Self {
        let mut d = Self::zero();
        d.add_point(p, 1);
        d
    }

    pub fn from_points<I: IntoIterator<Item = (Point, i64)>>(items: I) -> Self {
        let mut d = Self::zero();
        for (p, m) in items {
            d.add_point(p, m);
        }
        d
    }

    pub fn add_point(&mut self, p: Point, mult: i64) {
        let entry = self.support.entry(p).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.support.remove(&p);
        }
    }

    pub fn degree(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Point, &i64)> {
        self.support.iter()
    }

    pub fn multiplicity(&self, p: &Point) -> i64 {
        self.support.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.support.values().all(|&m| m > 0)
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Self::from_points(self.support.iter().map(|(p, m)| (*p, m * factor)))
    }
}

impl std::ops::Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in &rhs.support {
            out.add_point(*p, *m);
        }
        out
    }
}

impl std::ops::Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &rhs.scaled(-1)
    }
}

/// `(deg D, ⊕-sum of D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub degree: i64,
    pub sum: Point,
}

pub fn class_of(curve: &Curve, d: &Divisor) -> Result<DivisorClass> {
    let mut sum = Point::Infinity;
    for (p, m) in d.support() {
        let term = curve.mul(*m, p)?;
        sum = curve.add(&sum, &term)?;
    }
    Ok(DivisorClass { degree: d.degree(), sum })
}

pub fn lin_equiv(curve: &Curve, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    Ok(class_of(curve, d1)? == class_of(curve, d2)?)
}

/// `D_l(P) = P + (P ⊕ e) + … + (P ⊕ e^{⊕l})`.
pub fn d_l(curve: &Curve, p: &Point, e: &Point, l: usize) -> Result<Divisor> {
    curve.check(p)?;
    curve.check(e)?;
    let mut d = Divisor::zero();
    let mut current = *p;
    for _ in 0..=l {
        d.add_point(current, 1);
        current = curve.add(&current, e)?;
    }
    Ok(d)
}

/// The special `l`-sequence `P, P ⊕ e, …, P ⊕ e^{⊕(l-1)}` and its associated
/// pair `(P ⊖ e, P ⊕ e^{⊕l})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSequence {
    pub points: Vec<Point>,
    pub pair: (Point, Point),
}

pub fn special_sequence(curve: &Curve, p: &Point, e: &Point, l: usize) -> Result<SpecialSequence> {
    if l == 0 {
        return Err(EcError::InvalidParameter("a special sequence needs l >= 1".into()));
    }
    curve.check(p)?;
    curve.check(e)?;
    let mut points = Vec::with_capacity(l);
    let mut current = *p;
    for _ in 0..l {
        if points.contains(&current) {
            return Err(EcError::DegenerateSequence { l });
        }
        points.push(current);
        current = curve.add(&current, e)?;
    }
    let before = curve.sub(p, e)?;
    Ok(SpecialSequence { points, pair: (before, current) })
}

/// Finds `P` with `nP ~ D' + n e_0 - D`, i.e. `P^{⊕n} = sum(D') ⊖ sum(D)`.
/// The first such point in curve order is returned.
pub fn solve_translation(curve: &Curve, d: &Divisor, d_prime: &Divisor, n: i64) -> Result<Point> {
    let (c, c_prime) = (class_of(curve, d)?, class_of(curve, d_prime)?);
    if n < 1 || c.degree != n || c_prime.degree != n {
        return Err(EcError::DegreeMismatch { expected: n, left: c.degree, right: c_prime.degree });
    }
    let target = curve.sub(&c_prime.sum, &c.sum)?;
    for p in curve.points() {
        if curve.mul(n, p)? == target {
            return Ok(*p);
        }
    }
    Err(EcError::NoSolution)
}
