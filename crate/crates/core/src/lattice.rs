//! Rank-2 intersection lattices of the two auxiliary surfaces: the
//! symmetric square `Sym²(E)` with basis `(𝔰, 𝔣)` and the ruled surface `R`
//! with basis `(σ_0, F)`. Classes are held up to algebraic equivalence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("classes live on different lattices ({0} and {1})")]
    LatticeMismatch(Lattice, Lattice),
    #[error("unknown class '{name}' on {lattice}")]
    UnknownName { lattice: Lattice, name: String },
    #[error("c^2 + c.K = {0} is odd")]
    Parity(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lattice {
    Sym2E,
    RuledR,
}

impl Lattice {
    pub fn gram(&self) -> [[i64; 2]; 2] {
        match self {
            Lattice::Sym2E => [[1, 1], [1, 0]],
            Lattice::RuledR => [[0, 1], [1, 0]],
        }
    }

    pub fn basis_labels(&self) -> (&'static str, &'static str) {
        match self {
            Lattice::Sym2E => ("s", "f"),
            Lattice::RuledR => ("sigma0", "F"),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Lattice::Sym2E => "Sym2E",
            Lattice::RuledR => "RuledR",
        }
    }

    pub fn class(&self, a: i64, b: i64) -> NsClass {
        NsClass { lattice: *self, a, b }
    }

    pub fn canonical(&self) -> NsClass {
        match self {
            Lattice::Sym2E => self.class(-2, 1),
            // K_R ~ -σ_0 - σ_∞ and σ_∞ ≡ σ_0
            Lattice::RuledR => self.class(-2, 0),
        }
    }
}

impl std::fmt::Display for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Lattice {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Sym2E" | "sym2e" => Ok(Lattice::Sym2E),
            "RuledR" | "ruledr" | "R" => Ok(Lattice::RuledR),
            _ => Err(LatticeError::InvalidParameter(format!("unknown lattice '{s}'"))),
        }
    }
}

/// `a · first + b · second` basis class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NsClass {
    pub lattice: Lattice,
    pub a: i64,
    pub b: i64,
}

impl NsClass {
    pub fn pairing(&self, other: &NsClass) -> Result<i64> {
        if self.lattice != other.lattice {
            return Err(LatticeError::LatticeMismatch(self.lattice, other.lattice));
        }
        let g = self.lattice.gram();
        Ok(self.a * other.a * g[0][0] + (self.a * other.b + self.b * other.a) * g[0][1] + self.b * other.b * g[1][1])
    }

    pub fn self_intersection(&self) -> i64 {
        self.pairing(self).expect("same lattice")
    }

    /// `1 + (c² + c·K) / 2`.
    pub fn adjunction_genus(&self) -> Result<i64> {
        let k = self.lattice.canonical();
        let total = self.self_intersection() + self.pairing(&k)?;
        if total % 2 != 0 {
            return Err(LatticeError::Parity(total));
        }
        Ok(1 + total / 2)
    }
}

impl std::ops::Add for NsClass {
    type Output = NsClass;

    fn add(self, rhs: NsClass) -> NsClass {
        debug_assert_eq!(self.lattice, rhs.lattice);
        NsClass { lattice: self.lattice, a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl std::fmt::Display for NsClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (x, y) = self.lattice.basis_labels();
        write!(f, "{}*{} + {}*{} on {}", self.a, x, self.b, y, self.lattice)
    }
}

/// The named classes. `CClass` stands for every curve `𝔠_{y,l}`, all of them
/// algebraically equivalent to the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedClass {
    Diagonal,
    CClass { l: i64 },
    Ck { k: i64 },
    Canonical,
    NuL0 { n: i64 },
    Fiber,
    Section,
}

impl std::str::FromStr for NamedClass {
    type Err = LatticeError;

    /// Accepts `diagonal`, `c_class[:l]`, `Ck:k`, `canonical`, `nuL0:n`,
    /// `fiber`, `section`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let num = |what: &str| -> Result<i64> {
            arg.ok_or_else(|| LatticeError::InvalidParameter(format!("{what} needs a parameter, e.g. {what}:3")))?
                .parse()
                .map_err(|_| LatticeError::InvalidParameter(format!("bad parameter in '{s}'")))
        };
        Ok(match head {
            "diagonal" => NamedClass::Diagonal,
            "c_class" => NamedClass::CClass { l: if arg.is_some() { num("c_class")? } else { 1 } },
            "Ck" | "ck" => NamedClass::Ck { k: num("Ck")? },
            "canonical" => NamedClass::Canonical,
            "nuL0" | "nul0" => NamedClass::NuL0 { n: num("nuL0")? },
            "fiber" => NamedClass::Fiber,
            "section" => NamedClass::Section,
            other => {
                return Err(LatticeError::InvalidParameter(format!("unknown class name '{other}'")));
            }
        })
    }
}

impl NamedClass {
    fn label(&self) -> String {
        match self {
            NamedClass::Diagonal => "diagonal".into(),
            NamedClass::CClass { l } => format!("c_class:{l}"),
            NamedClass::Ck { k } => format!("Ck:{k}"),
            NamedClass::Canonical => "canonical".into(),
            NamedClass::NuL0 { n } => format!("nuL0:{n}"),
            NamedClass::Fiber => "fiber".into(),
            NamedClass::Section => "section".into(),
        }
    }
}

pub fn named_class(lattice: Lattice, name: NamedClass) -> Result<NsClass> {
    use NamedClass::*;
    let unknown = || LatticeError::UnknownName { lattice, name: name.label() };
    match (lattice, name) {
        (_, Canonical) => Ok(lattice.canonical()),
        (_, Fiber) => Ok(lattice.class(0, 1)),
        (_, Section) => Ok(lattice.class(1, 0)),
        (Lattice::Sym2E, Diagonal) | (Lattice::Sym2E, CClass { .. }) => Ok(lattice.class(4, -2)),
        (Lattice::Sym2E, Ck { k }) => {
            if k < 2 {
                return Err(LatticeError::InvalidParameter(format!("k = {k} must be >= 2")));
            }
            Ok(lattice.class(k - 2, 1))
        }
        (Lattice::RuledR, NuL0 { n }) => {
            if n < 1 {
                return Err(LatticeError::InvalidParameter(format!("n = {n} must be >= 1")));
            }
            Ok(lattice.class(1, n))
        }
        _ => Err(unknown()),
    }
}

pub fn pairing(c1: &NsClass, c2: &NsClass) -> Result<i64> {
    c1.pairing(c2)
}

pub fn adjunction_genus(c: &NsClass) -> Result<i64> {
    c.adjunction_genus()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionBudget {
    /// `2k` per level listed.
    pub budget: i64,
    /// Levels whose multiplicity exceeds `2k`.
    pub flagged: Vec<i64>,
}

/// Each level offers at most `C_k · 𝔠_{y,l} = 2k` transversal intersection
/// points; the multiplicities requested per level must fit.
pub fn sequence_intersection_budget(k: i64, counts: &[(i64, i64)]) -> Result<IntersectionBudget> {
    if k < 2 {
        return Err(LatticeError::InvalidParameter(format!("k = {k} must be >= 2")));
    }
    let per_level = named_class(Lattice::Sym2E, NamedClass::Ck { k })?
        .pairing(&named_class(Lattice::Sym2E, NamedClass::Diagonal)?)?;
    let flagged = counts.iter().filter(|(_, m)| *m > per_level).map(|(l, _)| *l).collect();
    Ok(IntersectionBudget { budget: per_level * counts.len() as i64, flagged })
}
