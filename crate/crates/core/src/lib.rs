//! Exact computations around the equation
//! `m^3 + (m+1)^3 + ... + (m+k-1)^3 = l^3`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: big integers and rationals, Eisenstein integers, the two number
//!   fields Q(ω) and Q(ζ₁₂), dense and multivariate polynomials, rational functions.
//! - [`diophantine`]: the (m,k,l) and (x,y,z) models, their dihedral symmetry,
//!   the exhaustive cube search and Pagliani's parametric family.
//! - [`elliptic`]: Weierstrass curves over function fields, the sections of the
//!   fibration `y1^2 = x1^3 - t^4(t^2-1)^3`, the base change `t = u^3` and the
//!   symbolic identity checks for the surface and its quotient maps.
//! - [`fibration`]: Kodaira fibers, fiber components of sections, the height
//!   pairing and Néron–Severi data.
//! - [`modular`]: q-series, the eta quotient, Hecke eigenvalues and the
//!   Eisenstein-integer characters behind them.
//! - [`pointcount`]: finite fields and brute-force versus closed-form point counts.

pub mod arith;
pub mod decimal;
pub mod diophantine;
pub mod elliptic;
pub mod error;
pub mod fibration;
pub mod modular;
pub mod pointcount;

#[cfg(test)]
mod properties;

pub use arith::{
    EisensteinInt, Field, Integer, MPoly, NfElem, Omega, Place, Polynomial, Rational,
    RationalFunction, Zeta12,
};

pub use diophantine::{SolutionMKL, SolutionXYZ, SymmetryElement};
pub use elliptic::{FunctionFieldCurve, Point, RationalFunctionPoint};
pub use error::{Error, Result};
pub use fibration::{FiberType, HeightConvention, HeightMatrix, KodairaFiber, PlaceOnBase};
pub use modular::{EtaQuotientSpec, NormalizedPi, QSeries, Variant};
pub use pointcount::{Convention, CountReport, FiniteField};

