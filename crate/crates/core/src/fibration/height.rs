use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::components::{component_of, local_contribution, Component};
use super::kodaira::{classify_fibers, weight, KodairaFiber, PlaceOnBase};
use crate::arith::linalg::det;
use crate::arith::{Field, Rational};
use crate::elliptic::{FunctionFieldCurve, Point, RationalFunctionPoint};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightConvention {
    /// The canonical (Néron–Tate) height.
    Canonical,
    /// Twice the canonical height: the Mordell–Weil lattice pairing.
    MwLattice,
}

impl fmt::Display for HeightConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeightConvention::Canonical => "canonical",
            HeightConvention::MwLattice => "mw-lattice",
        })
    }
}

/// Symmetric matrix of heights, tagged with its normalisation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeightMatrix {
    #[serde(with = "rational_rows")]
    pub entries: Vec<Vec<Rational>>,
    pub convention: HeightConvention,
}

mod rational_rows {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        serde::Serialize::serialize(&text, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let text: Vec<Vec<String>> = Vec::deserialize(d)?;
        text.into_iter()
            .map(|r| r.into_iter().map(|v| v.parse().map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

impl HeightMatrix {
    pub fn to(&self, convention: HeightConvention) -> HeightMatrix {
        let factor = match (self.convention, convention) {
            (a, b) if a == b => Rational::one(),
            (HeightConvention::Canonical, HeightConvention::MwLattice) => Rational::from_integer(2.into()),
            _ => Rational::new(1.into(), 2.into()),
        };
        HeightMatrix {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v * &factor).collect())
                .collect(),
            convention,
        }
    }

    pub fn det(&self) -> Rational {
        det(&self.entries)
    }
}

/// Everything needed to pair sections of one fibration.
pub struct HeightContext<F> {
    pub curve: FunctionFieldCurve<F>,
    pub fibers: Vec<KodairaFiber>,
    /// Weight of the model at infinity; equals `χ(O)`.
    pub chi: u32,
}

impl<F: Field> HeightContext<F> {
    /// `E_t` with its fibers computed over `Q`.
    pub fn e_t() -> Self {
        let base = FunctionFieldCurve::<Rational>::e_t();
        HeightContext {
            chi: weight(&base),
            fibers: classify_fibers(&base).expect("E_t is minimal"),
            curve: FunctionFieldCurve::e_t(),
        }
    }

    /// `(P·O)`: half the pole order of `x`, summed over all places.
    pub fn intersection_with_zero(&self, p: &RationalFunctionPoint<F>) -> Result<Rational> {
        let Point::Affine { x, .. } = p else {
            return Err(Error::TorsionSection);
        };
        if x.is_zero() {
            return Ok(Rational::zero());
        }
        let (dn, dd) = (x.num().deg_i64(), x.den().deg_i64());
        let at_inf = dd - dn + 2 * self.chi as i64;
        let poles = dd + (-at_inf).max(0);
        Ok(Rational::new(poles.into(), 2.into()))
    }

    /// `(P·Q) = ((P - Q)·O)`, translation by `-Q` being an automorphism of the surface.
    pub fn intersection(&self, p: &RationalFunctionPoint<F>, q: &RationalFunctionPoint<F>) -> Result<Rational> {
        let diff = self.curve.add(p, &q.negate())?;
        if diff.is_infinity() {
            return Ok(-Rational::from_integer(self.chi.into()));
        }
        self.intersection_with_zero(&diff)
    }

    pub fn components(&self, p: &RationalFunctionPoint<F>) -> Result<Vec<(PlaceOnBase, Component<F>)>> {
        self.fibers
            .iter()
            .map(|f| Ok((f.place.clone(), component_of(p, f, &self.curve, self.chi)?)))
            .collect()
    }

    /// `Σ_v contr_v(P, Q)`, weighted by the degree of each place.
    pub fn correction(&self, p: &RationalFunctionPoint<F>, q: &RationalFunctionPoint<F>) -> Result<Rational> {
        let mut total = Rational::zero();
        for f in &self.fibers {
            let cp = component_of(p, f, &self.curve, self.chi)?;
            let cq = component_of(q, f, &self.curve, self.chi)?;
            total += local_contribution(&cp, &cq, f.fiber_type)? * Rational::from_integer(f.degree().into());
        }
        Ok(total)
    }

    /// Shioda's pairing `⟨P,Q⟩ = χ + (P·O) + (Q·O) - (P·Q) - Σ contr`, in the
    /// Mordell–Weil lattice convention; `⟨P,P⟩ = 2χ + 2(P·O) - Σ contr`.
    pub fn height_pairing(&self, p: &RationalFunctionPoint<F>, q: &RationalFunctionPoint<F>) -> Result<Rational> {
        if p.is_infinity() || q.is_infinity() {
            return Err(Error::TorsionSection);
        }
        let chi = Rational::from_integer(self.chi.into());
        let h = if p == q {
            &chi * Rational::from_integer(2.into())
                + self.intersection_with_zero(p)? * Rational::from_integer(2.into())
                - self.correction(p, p)?
        } else {
            chi + self.intersection_with_zero(p)? + self.intersection_with_zero(q)?
                - self.intersection(p, q)?
                - self.correction(p, q)?
        };
        if p == q && h.is_zero() {
            return Err(Error::TorsionSection);
        }
        Ok(h)
    }

    pub fn gram(&self, sections: &[RationalFunctionPoint<F>]) -> Result<HeightMatrix> {
        let n = sections.len();
        let mut entries = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let h = self.height_pairing(&sections[i], &sections[j])?;
                entries[i][j] = h.clone();
                entries[j][i] = h;
            }
        }
        Ok(HeightMatrix { entries, convention: HeightConvention::MwLattice })
    }
}

/// Height pairing of two sections of `E_t`, Mordell–Weil lattice convention.
pub fn height_pairing<F: Field>(p: &RationalFunctionPoint<F>, q: &RationalFunctionPoint<F>) -> Result<Rational> {
    HeightContext::<F>::e_t().height_pairing(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{NfElem, Omega};
    use crate::elliptic::{omega_sigma1, sigma1};

    type W = NfElem<Omega>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sigma1_components() {
        let ctx = HeightContext::<W>::e_t();
        let comps = ctx.components(&sigma1()).unwrap();
        let labels: Vec<String> = comps.iter().map(|(p, c)| format!("{p}:{c:?}")).collect();
        assert_eq!(comps[1].1, Component::Branch(W::from_int(1)), "{labels:?}");
        assert_eq!(comps[2].1, Component::Branch(W::from_int(2)));
        assert_eq!(comps[3].1, Component::Identity);
        let w = ctx.components(&omega_sigma1()).unwrap();
        assert_eq!(w[2].1, Component::Branch(W::from_int(2) * W::gen()));
    }

    #[test]
    fn gram_matrix() {
        let ctx = HeightContext::<W>::e_t();
        let g = ctx.gram(&[sigma1(), omega_sigma1()]).unwrap();
        assert_eq!(g.entries, vec![vec![q(2, 3), q(-1, 3)], vec![q(-1, 3), q(2, 3)]]);
        let c = g.to(HeightConvention::Canonical);
        assert_eq!(c.entries, vec![vec![q(1, 3), q(-1, 6)], vec![q(-1, 6), q(1, 3)]]);
        assert_eq!(g.det(), q(1, 3));
        assert_eq!(ctx.intersection(&sigma1(), &omega_sigma1()).unwrap(), q(0, 1));
    }

    #[test]
    fn multiples_scale_quadratically() {
        let ctx = HeightContext::<Rational>::e_t();
        let s = sigma1::<Rational>();
        for n in 1..=3 {
            let p = ctx.curve.mul(n, &s).unwrap();
            assert_eq!(ctx.height_pairing(&p, &p).unwrap(), q(2 * n * n, 3), "n = {n}");
        }
        assert!(ctx.height_pairing(&Point::Infinity, &s).is_err());
    }
}
