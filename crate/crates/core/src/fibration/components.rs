use num_traits::Zero;
use serde::Serialize;

use super::kodaira::{FiberType, KodairaFiber, PlaceOnBase};
use crate::arith::{Field, Place, Rational, RationalFunction};
use crate::elliptic::{FunctionFieldCurve, Point, RationalFunctionPoint};
use crate::error::{Error, Result};

/// The fiber component met by a section.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Component<F> {
    Identity,
    /// A non-identity simple component, labelled by the leading coefficient
    /// that tells the branches apart: `y/π²` for IV*, `x/π` for I₀*, `y/π` for IV.
    Branch(F),
}

impl<F: Field> Serialize for Component<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Component::Identity => s.serialize_str("identity"),
            Component::Branch(v) => s.serialize_str(&format!("branch {v}")),
        }
    }
}

fn local_place<F: Field>(place: &PlaceOnBase) -> Result<Place<F>> {
    match place {
        PlaceOnBase::Infinity => Ok(Place::Infinity),
        p => p
            .rational_root()
            .map(|r| Place::Finite(F::from_rational(&r)))
            .ok_or_else(|| Error::UnsupportedPlace(p.to_string())),
    }
}

/// Valuation and leading coefficient in the minimal model at the place:
/// at infinity `x̃ = x s^{2k}`, `ỹ = y s^{3k}`.
fn local<F: Field>(f: &RationalFunction<F>, place: &Place<F>, shift: i64) -> Result<(i64, F)> {
    let (v, c) = f.local_leading(place)?;
    Ok(match place {
        Place::Infinity => (v + shift, c),
        Place::Finite(_) => (v, c),
    })
}

/// Which component of `fiber` the section `p` meets, for `y² = x³ + B(t)`
/// with `k` the weight of the model at infinity.
pub fn component_of<F: Field>(
    p: &RationalFunctionPoint<F>,
    fiber: &KodairaFiber,
    curve: &FunctionFieldCurve<F>,
    k: u32,
) -> Result<Component<F>> {
    if !curve.a.is_zero() {
        return Err(Error::NotJInvariantZero);
    }
    let expected = match fiber.fiber_type {
        FiberType::IVStar => 2,
        FiberType::IStar(0) => 1,
        FiberType::IV => 1,
        other => return Err(Error::UnsupportedFiber(other.to_string())),
    };
    let Point::Affine { x, y } = p else {
        return Ok(Component::Identity);
    };
    let place = local_place::<F>(&fiber.place)?;
    let k = k as i64;
    let (vx, cx) = if x.is_zero() {
        (i64::MAX, F::zero())
    } else {
        local(x, &place, 2 * k)?
    };
    if vx <= 0 {
        return Ok(Component::Identity);
    }
    let (v, c) = match fiber.fiber_type {
        FiberType::IStar(0) => (vx, cx),
        _ => local(y, &place, 3 * k)?,
    };
    if v != expected {
        return Err(Error::UnsupportedFiber(format!(
            "{} at {}: section has valuation {v}, expected {expected}",
            fiber.fiber_type, fiber.place
        )));
    }
    Ok(Component::Branch(c))
}

/// Correction term of the height pairing at one fiber.
pub fn local_contribution<F: Field>(
    cp: &Component<F>,
    cq: &Component<F>,
    fiber_type: FiberType,
) -> Result<Rational> {
    let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let (same, distinct) = match fiber_type {
        FiberType::IVStar => (q(4, 3), q(2, 3)),
        FiberType::IStar(0) => (q(1, 1), q(1, 2)),
        FiberType::IV => (q(2, 3), q(1, 3)),
        other => return Err(Error::UnsupportedFiber(other.to_string())),
    };
    Ok(match (cp, cq) {
        (Component::Identity, _) | (_, Component::Identity) => Rational::zero(),
        (Component::Branch(a), Component::Branch(b)) if a == b => same,
        _ => distinct,
    })
}
