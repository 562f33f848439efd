//! The curve `C : s² = u⁶ - 1`, its maps to `y² = x³ ∓ 1`, and the map ψ back
//! to the cubic-sum surface.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::curve::{Point, WeierstrassCurve};
use crate::arith::{
    Field, HasOmega, MPoly, NfElem, Omega, Polynomial, QuadExt, QuadModulus, Rational,
    RationalFunction, Relation,
};
use crate::diophantine::SymmetryElement;

/// How ψ's `z`-coordinate is built.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PsiVariant {
    /// `x = s/y₀`, `y = u³`, `z = u s x₀/y₀`.
    Exact,
    /// Negative control: `z = u s x₀`.
    PerturbedZ,
}

// variable order in the ψ check
const U: usize = 0;
const S: usize = 1;
const X0: usize = 2;
const Y0: usize = 3;

/// `y₀³ · (xy(x²+y²-1) - z³)` for ψ, reduced modulo `s² = u⁶-1`,
/// `y₀² = x₀³-1` when `with_relations` is set.
pub fn quotient_psi_residual(variant: PsiVariant, with_relations: bool) -> MPoly<Rational> {
    let v = |i| MPoly::<Rational>::var(4, i);
    let one = MPoly::<Rational>::one(4);
    // x = xn / y0, z = zn / y0^e
    let xn = v(S);
    let y = v(U).pow(3);
    let (zn, e) = match variant {
        PsiVariant::Exact => (&(&v(U) * &v(S)) * &v(X0), 1),
        PsiVariant::PerturbedZ => (&(&v(U) * &v(S)) * &v(X0), 0),
    };
    let lhs = &(&xn * &y) * &(&xn.pow(2) + &(&(&y.pow(2) - &one) * &v(Y0).pow(2)));
    let rhs = &zn.pow(3) * &v(Y0).pow(3 - 3 * e);
    let expr = &lhs - &rhs;
    let relations = if with_relations {
        vec![
            Relation::new(S, &v(U).pow(6) - &one),
            Relation::new(Y0, &v(X0).pow(3) - &one),
        ]
    } else {
        Vec::new()
    };
    expr.normal_form(&relations).expect("relations are triangular")
}

/// ψ maps points of `C × E⁻` to solutions.
pub fn verify_quotient_psi() -> bool {
    quotient_psi_residual(PsiVariant::Exact, true).is_zero()
}

type Ku = RationalFunction<NfElem<Omega>>;

/// `s² = u⁶ - 1` over `Q(ω)(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusTwo;

impl QuadModulus<Ku> for GenusTwo {
    fn d() -> Ku {
        RationalFunction::from_poly(Polynomial::from_ints(&[-1, 0, 0, 0, 0, 0, 1]))
    }
}

/// The function field of `C` with constants `Q(ω)`.
pub type FunctionFieldC = QuadExt<Ku, GenusTwo>;

/// Which point of `C → E` is translated by the 2-torsion point `(1, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GraphVariant {
    /// `π₂(u, s) = (u², s)` on `y² = x³ - 1`.
    Pi2,
    /// `-π₂(u, s) = (u², -s)`.
    NegPi2,
    /// Negative control: `π₁(u, s) = (-1/u², s/u³)`, which lies on `y² = x³ + 1`.
    Pi1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOutcome {
    pub variant: GraphVariant,
    /// Whether the starting point lies on `y² = x³ - 1`.
    pub on_curve: bool,
    /// `ψ` of the translated point, printed.
    pub image: Option<[String; 3]>,
    /// Symmetry `g` and power `k` with `image = g(P(u))` after `z ↦ ωᵏz`,
    /// where `P(u) = ((u²-1)²/3, u³, u(u²-1)(u²+2)/3)`.
    pub matched: Option<(SymmetryElement, u8)>,
}

fn kc(p: &[i64], scale: Rational) -> FunctionFieldC {
    let f = Polynomial::from_ints(p).map(|c: &NfElem<Omega>| c.clone() * NfElem::from_rational(&scale));
    FunctionFieldC::base(RationalFunction::from_poly(f))
}

/// Translate the chosen point by the 2-torsion point, apply ψ, and look for
/// the Pagliani parametrisation among the 24 symmetric images.
pub fn pagliani_graph(variant: GraphVariant) -> GraphOutcome {
    let one = Rational::one();
    let u = kc(&[0, 1], one.clone());
    let s = FunctionFieldC::sqrt();
    let start = match variant {
        GraphVariant::Pi2 => Point::affine(u.clone() * u.clone(), s.clone()),
        GraphVariant::NegPi2 => Point::affine(u.clone() * u.clone(), -s.clone()),
        GraphVariant::Pi1 => {
            let ui = u.inv().expect("u nonzero");
            Point::affine(-(ui.clone() * ui.clone()), s.clone() * ui.powu(3))
        }
    };
    let e_minus = WeierstrassCurve::new(FunctionFieldC::zero(), -FunctionFieldC::one());
    let torsion = Point::affine(FunctionFieldC::one(), FunctionFieldC::zero());
    let Ok(q) = e_minus.add(&start, &torsion) else {
        return GraphOutcome { variant, on_curve: false, image: None, matched: None };
    };
    let Point::Affine { x: x0, y: y0 } = q else {
        return GraphOutcome { variant, on_curve: true, image: None, matched: None };
    };
    let y0i = y0.inv().expect("translate is not 2-torsion");
    let image = [
        s.clone() * y0i.clone(),
        u.powu(3),
        u.clone() * s * x0 * y0i,
    ];
    let third = Rational::new(1.into(), 3.into());
    let target = [
        kc(&[1, 0, -2, 0, 1], third.clone()),
        u.powu(3),
        kc(&[0, -2, 0, 1, 0, 1], third),
    ];
    let w = FunctionFieldC::base(RationalFunction::constant(NfElem::<Omega>::omega()));
    let mut matched = None;
    'search: for g in SymmetryElement::all() {
        let [a, b, c] = g.apply_triple(target.clone());
        let mut c = c;
        for k in 0..3u8 {
            if image == [a.clone(), b.clone(), c.clone()] {
                matched = Some((g.clone(), k));
                break 'search;
            }
            c = c * w.clone();
        }
    }
    GraphOutcome {
        variant,
        on_curve: true,
        image: Some(image.map(|v| v.to_string())),
        matched,
    }
}

/// The graph of `P ↦ π₂(P) + (1, 0)` maps onto the polynomial Pagliani section.
pub fn verify_pagliani_graph() -> bool {
    pagliani_graph(GraphVariant::Pi2).matched.is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::Generator;

    #[test]
    fn psi_identity_and_controls() {
        assert!(verify_quotient_psi());
        assert!(!quotient_psi_residual(PsiVariant::PerturbedZ, true).is_zero());
        assert!(!quotient_psi_residual(PsiVariant::Exact, false).is_zero());
    }

    #[test]
    fn graph_variants() {
        let plus = pagliani_graph(GraphVariant::Pi2);
        let (g, k) = plus.matched.expect("matches");
        assert_eq!((g.signature(), k), (SymmetryElement::from_word(&[Generator::Tau1]).signature(), 0));
        let minus = pagliani_graph(GraphVariant::NegPi2);
        let (g, k) = minus.matched.expect("matches");
        assert_eq!((g.signature(), k), (SymmetryElement::identity().signature(), 0));
        let control = pagliani_graph(GraphVariant::Pi1);
        assert!(!control.on_curve && control.matched.is_none());
        assert!(verify_pagliani_graph());
    }
}
