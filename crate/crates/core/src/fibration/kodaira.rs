use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::arith::{coprime_basis, Polynomial, Rational};
use crate::elliptic::FunctionFieldCurve;
use crate::error::{Error, Result};

/// A closed point of the base `P¹` over `Q`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum PlaceOnBase {
    /// Zero locus of a monic irreducible polynomial; degree 1 means a rational root.
    Finite(Polynomial<Rational>),
    /// `s = 1/t = 0`.
    Infinity,
}

impl PlaceOnBase {
    pub fn rational(r: Rational) -> Self {
        PlaceOnBase::Finite(Polynomial::new(vec![-r, Rational::one()]))
    }

    pub fn degree(&self) -> usize {
        match self {
            PlaceOnBase::Finite(f) => f.degree().unwrap_or(0),
            PlaceOnBase::Infinity => 1,
        }
    }

    /// The root, when the place is rational and finite.
    pub fn rational_root(&self) -> Option<Rational> {
        match self {
            PlaceOnBase::Finite(f) if f.degree() == Some(1) => Some(-f.coeff(0)),
            _ => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PlaceOnBase::Infinity)
    }
}

impl fmt::Display for PlaceOnBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self, self.rational_root()) {
            (PlaceOnBase::Infinity, _) => f.write_str("inf"),
            (_, Some(r)) => write!(f, "{r}"),
            (PlaceOnBase::Finite(p), None) => write!(f, "{p} = 0"),
        }
    }
}

impl Serialize for PlaceOnBase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FiberType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ComponentGroup {
    Trivial,
    Cyclic(u32),
    /// `(Z/2)²`
    Klein,
}

impl FiberType {
    /// Euler number, equal to `v(Δ)` on a minimal model.
    pub fn euler(self) -> u32 {
        match self {
            FiberType::I(n) => n,
            FiberType::IStar(n) => n + 6,
            FiberType::II => 2,
            FiberType::III => 3,
            FiberType::IV => 4,
            FiberType::IVStar => 8,
            FiberType::IIIStar => 9,
            FiberType::IIStar => 10,
        }
    }

    /// Number of irreducible components `m_t`.
    pub fn components(self) -> u32 {
        match self {
            FiberType::I(n) => n.max(1),
            FiberType::IStar(n) => n + 5,
            FiberType::II => 1,
            FiberType::III => 2,
            FiberType::IV => 3,
            FiberType::IVStar => 7,
            FiberType::IIIStar => 8,
            FiberType::IIStar => 9,
        }
    }

    /// Number of multiplicity-one components, the order of the component group.
    pub fn simple_components(self) -> u32 {
        match self {
            FiberType::I(n) => n.max(1),
            FiberType::IStar(_) => 4,
            FiberType::II | FiberType::IIStar => 1,
            FiberType::III | FiberType::IIIStar => 2,
            FiberType::IV | FiberType::IVStar => 3,
        }
    }

    pub fn component_group(self) -> ComponentGroup {
        match self {
            FiberType::I(n) if n <= 1 => ComponentGroup::Trivial,
            FiberType::I(n) => ComponentGroup::Cyclic(n),
            FiberType::IStar(n) if n % 2 == 1 => ComponentGroup::Cyclic(4),
            FiberType::IStar(_) => ComponentGroup::Klein,
            FiberType::II | FiberType::IIStar => ComponentGroup::Trivial,
            FiberType::III | FiberType::IIIStar => ComponentGroup::Cyclic(2),
            FiberType::IV | FiberType::IVStar => ComponentGroup::Cyclic(3),
        }
    }

    /// Type of a minimal model from `v(A)` and `v(Δ)` in residue
    /// characteristic 0; `v(B)` is then determined. `None` means `A = 0`.
    pub fn from_valuations(va: Option<u32>, vd: u32) -> Option<FiberType> {
        let va_big = va.map_or(u32::MAX / 4, |v| v);
        if vd == 0 {
            return Some(FiberType::I(0));
        }
        if va == Some(0) {
            return Some(FiberType::I(vd));
        }
        if 3 * va_big < vd {
            return Some(FiberType::IStar(vd - 6));
        }
        Some(match vd {
            2 => FiberType::II,
            3 => FiberType::III,
            4 => FiberType::IV,
            6 => FiberType::IStar(0),
            8 => FiberType::IVStar,
            9 => FiberType::IIIStar,
            10 => FiberType::IIStar,
            _ => return None,
        })
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::I(n) => write!(f, "I{n}"),
            FiberType::IStar(n) => write!(f, "I{n}*"),
            FiberType::II => f.write_str("II"),
            FiberType::III => f.write_str("III"),
            FiberType::IV => f.write_str("IV"),
            FiberType::IIStar => f.write_str("II*"),
            FiberType::IIIStar => f.write_str("III*"),
            FiberType::IVStar => f.write_str("IV*"),
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Trivial => f.write_str("0"),
            ComponentGroup::Cyclic(n) => write!(f, "Z/{n}"),
            ComponentGroup::Klein => f.write_str("(Z/2)^2"),
        }
    }
}

/// One singular fiber. Places of degree `d > 1` stand for `d` conjugate
/// fibers of the same type.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KodairaFiber {
    pub place: PlaceOnBase,
    #[serde(serialize_with = "display_str")]
    pub fiber_type: FiberType,
    pub euler: u32,
    pub m_t: u32,
    pub m_simple: u32,
    #[serde(serialize_with = "display_str")]
    pub component_group: ComponentGroup,
    /// Valuations of `A`, `B` (absent when the coefficient is zero) and `Δ`.
    pub v_a: Option<u32>,
    pub v_b: Option<u32>,
    pub v_delta: u32,
}

fn display_str<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl KodairaFiber {
    pub fn degree(&self) -> u32 {
        self.place.degree() as u32
    }
}

/// Weight `k` with `deg A ≤ 4k`, `deg B ≤ 6k`; the model at infinity is
/// `x̃ = x/t^{2k}`, `ỹ = y/t^{3k}`. For a K3 surface `k = 2 = χ(O)`.
pub fn weight(curve: &FunctionFieldCurve<Rational>) -> u32 {
    let da = curve.a.degree().map_or(0, |d| d.div_ceil(4));
    let db = curve.b.degree().map_or(0, |d| d.div_ceil(6));
    da.max(db).max(1) as u32
}

/// Singular fibers of `y² = x³ + A(t)x + B(t)` over `Q`, finite places
/// ordered by degree and root, infinity last.
pub fn classify_fibers(curve: &FunctionFieldCurve<Rational>) -> Result<Vec<KodairaFiber>> {
    let delta = curve.discriminant();
    let mut inputs = vec![delta.clone()];
    for c in [&curve.a, &curve.b] {
        if !c.is_zero() {
            inputs.push(c.clone());
        }
    }
    let mut places = Vec::new();
    for g in coprime_basis(&inputs) {
        if delta.multiplicity(&g) == 0 {
            continue;
        }
        let mut rest = g.clone();
        for r in g.rational_roots() {
            let lin = Polynomial::new(vec![-r.clone(), Rational::one()]);
            rest = rest.exact_div(&lin).expect("root divides");
            places.push(PlaceOnBase::rational(r));
        }
        if !rest.is_constant() {
            places.push(PlaceOnBase::Finite(rest.monic()));
        }
    }
    places.sort_by(|a, b| {
        (a.degree(), a.rational_root()).cmp(&(b.degree(), b.rational_root()))
    });
    places.push(PlaceOnBase::Infinity);

    let k = weight(curve) as i64;
    let mut out = Vec::new();
    for place in places {
        let val = |p: &Polynomial<Rational>, w: i64| -> Option<u32> {
            if p.is_zero() {
                return None;
            }
            Some(match &place {
                PlaceOnBase::Finite(f) => p.multiplicity(f),
                PlaceOnBase::Infinity => (w * k - p.deg_i64()) as u32,
            })
        };
        let va = val(&curve.a, 4);
        let vb = val(&curve.b, 6);
        let vd = val(&delta, 12).expect("discriminant nonzero");
        if vd == 0 {
            continue;
        }
        if va.is_none_or(|v| v >= 4) && vb.is_none_or(|v| v >= 6) {
            return Err(Error::NonMinimal(place.to_string()));
        }
        let ty = FiberType::from_valuations(va, vd)
            .ok_or_else(|| Error::UnsupportedFiber(format!("v(Delta) = {vd} at {place}")))?;
        out.push(KodairaFiber {
            place,
            fiber_type: ty,
            euler: ty.euler(),
            m_t: ty.components(),
            m_simple: ty.simple_components(),
            component_group: ty.component_group(),
            v_a: va,
            v_b: vb,
            v_delta: vd,
        });
    }
    Ok(out)
}

/// `Σ deg(place) · e(F)`; a K3 surface gives 24.
pub fn euler_total(fibers: &[KodairaFiber]) -> u32 {
    fibers.iter().map(|f| f.degree() * f.euler).sum()
}

/// `Σ deg(place) · (m_t - 1)`.
pub fn components_excess(fibers: &[KodairaFiber]) -> u32 {
    fibers.iter().map(|f| f.degree() * (f.m_t - 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn e_t_table() {
        let fibers = classify_fibers(&FunctionFieldCurve::e_t()).unwrap();
        let rows: Vec<_> = fibers
            .iter()
            .map(|f| (f.place.to_string(), f.fiber_type, f.euler, f.m_t, f.m_simple))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("-1".into(), FiberType::IStar(0), 6, 5, 4),
                ("0".into(), FiberType::IVStar, 8, 7, 3),
                ("1".into(), FiberType::IStar(0), 6, 5, 4),
                ("inf".into(), FiberType::IV, 4, 3, 3),
            ]
        );
        assert_eq!(euler_total(&fibers), 24);
        assert_eq!(components_excess(&fibers), 16);
        assert_eq!(fibers[1].component_group, ComponentGroup::Cyclic(3));
        assert_eq!(fibers[0].component_group, ComponentGroup::Klein);
    }

    #[test]
    fn eps2_has_six_iv_fibers() {
        let fibers = classify_fibers(&FunctionFieldCurve::eps2()).unwrap();
        assert!(fibers.iter().all(|f| f.fiber_type == FiberType::IV));
        assert_eq!(fibers.iter().map(|f| f.degree()).sum::<u32>(), 6);
        assert_eq!(euler_total(&fibers), 24);
        assert!(fibers.iter().any(|f| f.place == PlaceOnBase::Finite(Polynomial::from_ints(&[1, 0, 1]))));
    }

    #[test]
    fn rational_surface_falls_short() {
        let c = FunctionFieldCurve::new(Polynomial::zero(), Polynomial::x()).unwrap();
        let fibers = classify_fibers(&c).unwrap();
        assert_eq!(euler_total(&fibers), 12);
        assert_eq!(fibers[0].fiber_type, FiberType::II);
        assert_eq!(fibers[1].fiber_type, FiberType::IIStar);
    }

    #[test]
    fn multiplicative_and_starred() {
        // y^2 = x^3 - 3x + 2 + t has Δ vanishing to order 1 at t = 0 with A a unit
        let c = FunctionFieldCurve::new(Polynomial::constant(rat(-3)), Polynomial::from_ints(&[2, 1])).unwrap();
        let fibers = classify_fibers(&c).unwrap();
        assert_eq!(fibers[0].fiber_type, FiberType::I(1));
        assert_eq!(FiberType::from_valuations(Some(2), 8), Some(FiberType::IStar(2)));
        assert_eq!(FiberType::IStar(1).component_group(), ComponentGroup::Cyclic(4));
    }

    #[test]
    fn non_minimal_rejected() {
        let t = Polynomial::<Rational>::x();
        let c = FunctionFieldCurve::new(Polynomial::zero(), &t.pow(6) + &t.pow(7)).unwrap();
        assert!(matches!(classify_fibers(&c), Err(Error::NonMinimal(_))));
    }
}
