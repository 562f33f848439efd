use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::height::{HeightConvention, HeightMatrix};
use super::kodaira::{components_excess, KodairaFiber};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// `rank NS = 2 + Σ (m_t - 1) + rank MW`.
pub fn shioda_tate_rank(fibers: &[KodairaFiber], mw_rank: u32) -> u32 {
    2 + components_excess(fibers) + mw_rank
}

/// `det NS = -(Π m_simple · |det MW|) / |tors|²`, negative by the Hodge index theorem.
pub fn det_ns(fibers: &[KodairaFiber], mw_gram: &HeightMatrix, torsion_order: u32) -> Result<BigInt> {
    let gram = mw_gram.to(HeightConvention::MwLattice);
    let d = gram.det();
    if d.is_zero() || torsion_order == 0 {
        return Err(Error::ZeroDeterminant);
    }
    let simple: BigInt = fibers
        .iter()
        .map(|f| BigInt::from(f.m_simple).pow(f.degree()))
        .product();
    let t = BigInt::from(torsion_order);
    let value = Rational::from_integer(simple) * d.abs() / Rational::from_integer(&t * &t);
    if !value.is_integer() {
        return Err(Error::NonIntegralDeterminant(value.to_string()));
    }
    Ok(-value.to_integer())
}
