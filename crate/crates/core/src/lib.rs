//! Exact computations for Brill-Noether theory of curves on `(1, n)`-polarized
//! abelian surfaces and their semiabelian degenerations.
//!
//! - [`bn`]: Brill-Noether numbers, expected dimensions and the
//!   (non)emptiness verdict for `|L|^r_d`.
//! - [`alpha`]: the `α`-vectors describing limit curves with nodes.
//! - [`elliptic`]: group law, divisor classes, limit curves and pencils on
//!   `E(F_q)`.
//! - [`lattice`]: intersection lattices of `Sym²(E)` and the ruled surface.
//! - [`duality`]: ramification profiles and dual degrees.

pub mod alpha;
pub mod bn;
pub mod duality;
pub mod elliptic;
pub mod lattice;

pub use alpha::{AlphaError, AlphaVector, BaseConstruction};
pub use bn::{BnError, BnParams, Verdict, VerdictStatus};
pub use duality::{CuspScenario, DualityError, RamProfile};
pub use elliptic::{Curve, Divisor, DivisorClass, EcError, LimitCurve, Point};
pub use lattice::{Lattice, LatticeError, NsClass};
