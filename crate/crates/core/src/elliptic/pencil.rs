//! Concrete pencils in `H⁰(O_E(k·e_0))` and the test that a pencil
//! identifies every distinguished pair of a degenerate curve.

use serde::{Deserialize, Serialize};

use super::curve::{Curve, Point};
use super::{EcError, Result};

/// The function `x^x_pow · y^y_pow` on `E`, regular away from `e_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x_pow: u32,
    pub y_pow: u32,
}

impl Monomial {
    /// Order of the pole at `e_0`: `x` has a double pole, `y` a triple one.
    pub fn pole_order(&self) -> u32 {
        2 * self.x_pow + 3 * self.y_pow
    }

    pub fn eval(&self, curve: &Curve, x: u64, y: u64) -> u64 {
        let q = curve.q();
        curve.pow(x, self.x_pow as u64) * curve.pow(y, self.y_pow as u64) % q
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.x_pow, self.y_pow) {
            (0, 0) => write!(f, "1"),
            (0, 1) => write!(f, "y"),
            (1, 0) => write!(f, "x"),
            (i, 0) => write!(f, "x^{i}"),
            (1, 1) => write!(f, "xy"),
            (i, _) => write!(f, "x^{i}y"),
        }
    }
}

/// Basis of `L(k·e_0)`: monomials `x^i y^j` with `j <= 1` and `2i + 3j <= k`,
/// sorted by pole order.
pub fn section_basis(k: u32) -> Result<Vec<Monomial>> {
    if k < 2 {
        return Err(EcError::InvalidParameter(format!("k = {k} must be >= 2")));
    }
    let mut basis: Vec<Monomial> = (0..=1)
        .flat_map(|y_pow| (0..=k / 2).map(move |x_pow| Monomial { x_pow, y_pow }))
        .filter(|m| m.pole_order() <= k)
        .collect();
    basis.sort_by_key(Monomial::pole_order);
    Ok(basis)
}

/// A section of `O_E(k·e_0)` pulled back along `P ↦ P ⊖ shift`, given by its
/// coefficients in [`section_basis`]. With a nonzero shift the section lives in
/// `O_E(k·shift)`, whose divisors have sum `shift^{⊕k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub k: u32,
    pub coeffs: Vec<u64>,
    pub shift: Point,
}

impl Section {
    pub fn new(curve: &Curve, k: u32, coeffs: Vec<u64>, shift: Point) -> Result<Self> {
        let dim = section_basis(k)?.len();
        if coeffs.len() != dim {
            return Err(EcError::InvalidParameter(format!(
                "expected {dim} coefficients for k = {k}, got {}",
                coeffs.len()
            )));
        }
        curve.check(&shift)?;
        let q = curve.q();
        Ok(Self { k, coeffs: coeffs.into_iter().map(|c| c % q).collect(), shift })
    }

    pub fn eval(&self, curve: &Curve, p: &Point) -> Result<u64> {
        let moved = curve.sub(p, &self.shift)?;
        let (x, y) = moved.coords().ok_or(EcError::PairAtInfinity(*p))?;
        let basis = section_basis(self.k)?;
        let q = curve.q();
        Ok(basis
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (m, c)| (acc + c * m.eval(curve, x, y)) % q))
    }
}

/// Two independent sections spanning a `g^1_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pencil {
    pub first: Section,
    pub second: Section,
}

impl Pencil {
    pub fn new(curve: &Curve, first: Section, second: Section) -> Result<Self> {
        if first.k != second.k || first.shift != second.shift {
            return Err(EcError::InvalidParameter("pencil sections must share k and shift".into()));
        }
        // Independent iff some 2x2 minor of the coefficient matrix is nonzero.
        let q = curve.q();
        let (a, b) = (&first.coeffs, &second.coeffs);
        let independent = (0..a.len())
            .any(|i| (i + 1..a.len()).any(|j| !(a[i] * b[j] % q + q - a[j] * b[i] % q).is_multiple_of(q)));
        if !independent {
            return Err(EcError::DependentPencil);
        }
        Ok(Self { first, second })
    }

    /// The pencil `⟨1, x⟩ ∘ (⊖ shift)`: its members are the divisors
    /// `P + Q` with `P ⊕ Q = shift^{⊕2}`.
    pub fn hyperelliptic(curve: &Curve, shift: Point) -> Result<Self> {
        Self::new(
            curve,
            Section::new(curve, 2, vec![1, 0], shift)?,
            Section::new(curve, 2, vec![0, 1], shift)?,
        )
    }

    /// `s_1(P) s_2(Q) - s_2(P) s_1(Q)`, which vanishes iff some member of the
    /// pencil passes through both points.
    pub fn pair_determinant(&self, curve: &Curve, p: &Point, r: &Point) -> Result<u64> {
        let q = curve.q();
        let (a_p, b_p) = (self.first.eval(curve, p)?, self.second.eval(curve, p)?);
        let (a_r, b_r) = (self.first.eval(curve, r)?, self.second.eval(curve, r)?);
        Ok((a_p * b_r % q + q - b_p * a_r % q) % q)
    }
}

/// True iff every pair lies in a common member of the pencil.
///
/// Points at the pole of the pencil (`e_0` for an unshifted pencil) are
/// rejected with [`EcError::PairAtInfinity`].
pub fn g1k_identifies_pairs(curve: &Curve, pencil: &Pencil, pairs: &[(Point, Point)]) -> Result<bool> {
    for (p, r) in pairs {
        if pencil.pair_determinant(curve, p, r)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point `τ` with `τ ⊕ τ = s`, searched exhaustively.
pub fn halve(curve: &Curve, s: &Point) -> Result<Point> {
    curve.check(s)?;
    for p in curve.points() {
        if curve.mul(2, p)? == *s {
            return Ok(*p);
        }
    }
    Err(EcError::NoSolution)
}
