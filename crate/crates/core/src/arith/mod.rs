//! Exact arithmetic substrate.
//!
//! Everything here is immutable value arithmetic; no floating point is used
//! except as a starting guess in [`integer::icbrt_u128`], whose result is
//! corrected exactly.

mod eisenstein;
mod field;
pub mod integer;
pub mod linalg;
mod mpoly;
mod numfield;
mod poly;
mod quadext;
mod ratfunc;

pub use eisenstein::{represent_eisenstein, EisensteinInt};
pub use field::{Field, Integer, Rational};
pub use integer::{icbrt, legendre};
pub use mpoly::{MPoly, Relation};
pub use numfield::{HasOmega, NfElem, NumberFieldSpec, Omega, Zeta12};
pub use poly::{coprime_basis, Polynomial};
pub use quadext::{QuadExt, QuadModulus};
pub use ratfunc::{valuation_at, Place, RationalFunction};
