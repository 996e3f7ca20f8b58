//! Short Weierstrass curves `y² = x³ + ax + b` over small prime fields.

use serde::{Deserialize, Serialize};

use super::{EcError, Result};

/// Largest field size accepted; point lists are enumerated exhaustively.
pub const MAX_Q: u64 = 10_000;

/// A point of `E(F_q)`. `Infinity` is the neutral element `e_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    Infinity,
    Affine { x: u64, y: u64 },
}

impl Point {
    pub fn affine(x: u64, y: u64) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn coords(&self) -> Option<(u64, u64)> {
        match *self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= q {
        if q.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// An elliptic curve over `F_q` with its point list and group order cached.
#[derive(Debug, Clone)]
pub struct Curve {
    q: u64,
    a: u64,
    b: u64,
    points: Vec<Point>,
}

impl Curve {
    pub fn new(q: u64, a: u64, b: u64) -> Result<Self> {
        if q <= 3 || q > MAX_Q || !is_prime(q) {
            return Err(EcError::BadField(q));
        }
        let (a, b) = (a % q, b % q);
        let disc = (4 * a % q * a % q * a + 27 * b % q * b) % q;
        if disc == 0 {
            return Err(EcError::Singular { q, a, b });
        }
        let mut curve = Curve { q, a, b, points: Vec::new() };
        let mut points = vec![Point::Infinity];
        for x in 0..q {
            let rhs = curve.rhs(x);
            for y in 0..q {
                if y * y % q == rhs {
                    points.push(Point::affine(x, y));
                }
            }
        }
        curve.points = points;
        Ok(curve)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// All points, `Infinity` first, then affine points sorted by `(x, y)`.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn order(&self) -> u64 {
        self.points.len() as u64
    }

    /// `x³ + ax + b`.
    pub fn rhs(&self, x: u64) -> u64 {
        let q = self.q;
        (x * x % q * x + self.a * x + self.b) % q
    }

    /// `1 + Σ_x (1 + χ(x³ + ax + b))` with `χ` the quadratic character,
    /// computed by Euler's criterion.
    pub fn order_by_character_sum(&self) -> u64 {
        let q = self.q;
        let mut total = 1i64;
        for x in 0..q {
            let v = self.rhs(x);
            let chi = if v == 0 {
                0
            } else if self.pow(v, (q - 1) / 2) == 1 {
                1
            } else {
                -1
            };
            total += 1 + chi;
        }
        total as u64
    }

    pub fn contains(&self, p: &Point) -> bool {
        match *p {
            Point::Infinity => true,
            Point::Affine { x, y } => x < self.q && y < self.q && y * y % self.q == self.rhs(x),
        }
    }

    pub fn check(&self, p: &Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(EcError::PointNotOnCurve(*p))
        }
    }

    pub(crate) fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let q = self.q;
        let mut acc = 1;
        let mut b = base % q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % q;
            }
            b = b * b % q;
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, v: u64) -> u64 {
        debug_assert!(!v.is_multiple_of(self.q));
        self.pow(v, self.q - 2)
    }

    fn add_unchecked(&self, p: &Point, r: &Point) -> Point {
        let q = self.q;
        let (x1, y1, x2, y2) = match (*p, *r) {
            (Point::Infinity, other) | (other, Point::Infinity) => return other,
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1 + y2) % q == 0 {
                return Point::Infinity;
            }
            // tangent: (3x² + a) / 2y
            (3 * x1 % q * x1 + self.a) % q * self.inv(2 * y1 % q) % q
        } else {
            (y2 + q - y1) % q * self.inv((x2 + q - x1) % q) % q
        };
        let x3 = (slope * slope % q + 2 * q - x1 - x2) % q;
        let y3 = (slope * ((x1 + q - x3) % q) % q + q - y1) % q;
        Point::affine(x3, y3)
    }

    /// `P ⊕ Q` under the chord-and-tangent law.
    pub fn add(&self, p: &Point, r: &Point) -> Result<Point> {
        self.check(p)?;
        self.check(r)?;
        Ok(self.add_unchecked(p, r))
    }

    /// `⊖P`.
    pub fn neg(&self, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(match *p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(x, (self.q - y) % self.q),
        })
    }

    /// `P ⊖ Q`.
    pub fn sub(&self, p: &Point, r: &Point) -> Result<Point> {
        let neg = self.neg(r)?;
        self.add(p, &neg)
    }

    /// `P^{⊕m}`; negative `m` multiplies `⊖P`, and `m = 0` gives `e_0`.
    pub fn mul(&self, m: i64, p: &Point) -> Result<Point> {
        self.check(p)?;
        let base = if m < 0 { self.neg(p)? } else { *p };
        let mut k = m.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut dbl = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &dbl);
            }
            dbl = self.add_unchecked(&dbl, &dbl);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `m >= 1` with `P^{⊕m} = e_0`.
    pub fn point_order(&self, p: &Point) -> Result<u64> {
        self.check(p)?;
        let mut acc = *p;
        let mut m = 1;
        while !acc.is_infinity() {
            acc = self.add_unchecked(&acc, p);
            m += 1;
        }
        Ok(m)
    }

    /// The first point in [`Curve::points`] order whose order is maximal.
    pub fn max_order_point(&self) -> (Point, u64) {
        let mut best = (Point::Infinity, 1);
        for p in &self.points {
            let o = self.point_order(p).expect("cached point lies on the curve");
            if o > best.1 {
                best = (*p, o);
            }
        }
        best
    }
}

impl std::fmt::Display for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^2 = x^3 + {}x + {} over F_{}", self.a, self.b, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Curve {
        Curve::new(5, 1, 1).unwrap()
    }

    #[test]
    fn f5_points() {
        let e = f5();
        assert_eq!(e.order(), 9);
        assert_eq!(e.order_by_character_sum(), 9);
        let affine: Vec<_> = e.points()[1..].iter().map(|p| p.coords().unwrap()).collect();
        assert_eq!(affine, vec![(0, 1), (0, 4), (2, 1), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3)]);
    }

    #[test]
    fn chord_example() {
        let e = f5();
        let s = e.add(&Point::affine(0, 1), &Point::affine(2, 1)).unwrap();
        assert_eq!(s, Point::affine(3, 4));
    }

    #[test]
    fn neutral_and_torsion() {
        let e = f5();
        for p in e.points() {
            assert_eq!(e.add(p, &Point::Infinity).unwrap(), *p);
            assert_eq!(e.mul(9, p).unwrap(), Point::Infinity);
            assert_eq!(e.mul(0, p).unwrap(), Point::Infinity);
            assert_eq!(e.mul(-1, p).unwrap(), e.neg(p).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Curve::new(4, 1, 1), Err(EcError::BadField(4))));
        assert!(matches!(Curve::new(3, 1, 1), Err(EcError::BadField(3))));
        // 4·0 + 27·0 = 0
        assert!(matches!(Curve::new(7, 0, 0), Err(EcError::Singular { .. })));
        let e = f5();
        assert!(matches!(
            e.add(&Point::affine(1, 1), &Point::Infinity),
            Err(EcError::PointNotOnCurve(_))
        ));
    }

    #[test]
    fn max_order() {
        let e = f5();
        let (p, o) = e.max_order_point();
        assert_eq!(o, e.point_order(&p).unwrap());
        assert!(o == 9 || o == 3);
    }
}
