use num_traits::Zero;

use super::curve::{FunctionFieldCurve, Point, RationalFunctionPoint};
use crate::arith::{Field, HasOmega, Polynomial, RationalFunction};
use crate::error::{Error, Result};

type R<F> = RationalFunction<F>;

fn poly<F: Field>(cs: &[i64]) -> R<F> {
    R::from_poly(Polynomial::from_ints(cs))
}

fn mono<F: Field>(k: usize) -> R<F> {
    R::from_poly(Polynomial::monomial(F::one(), k))
}

/// `σ₁ = (t²(t²-1), t²(t²-1)²)` on `E_t`.
pub fn sigma1<F: Field>() -> RationalFunctionPoint<F> {
    Point::affine(poly(&[0, 0, -1, 0, 1]), poly(&[0, 0, 1, 0, -2, 0, 1]))
}

/// `[ω]σ₁ = (ωt²(t²-1), t²(t²-1)²)`.
pub fn omega_sigma1<F: HasOmega>() -> RationalFunctionPoint<F> {
    FunctionFieldCurve::e_t()
        .cm_omega(&sigma1())
        .expect("sigma1 lies on E_t")
}

/// The 2-torsion section `τ = (u⁶-1, 0)` of `E'_u`.
pub fn tau<F: Field>() -> RationalFunctionPoint<F> {
    Point::affine(poly(&[-1, 0, 0, 0, 0, 0, 1]), R::zero())
}

/// `σ₁' = (u²(u⁶-1), (u⁶-1)²)`, the image of `σ₁` under [`base_change_t_u3`].
pub fn sigma1_prime<F: Field>() -> RationalFunctionPoint<F> {
    base_change_t_u3(&sigma1())
}

/// Pull a section of `E_t` back along `t = u³` and rescale
/// `(x₂, y₂) = (x₁/u⁴, y₁/u⁶)` onto `E'_u`.
pub fn base_change_t_u3<F: Field>(p: &RationalFunctionPoint<F>) -> RationalFunctionPoint<F> {
    match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => {
            let u3 = mono::<F>(3);
            let x2 = x.compose(&u3) * mono::<F>(4).inv().expect("nonzero");
            let y2 = y.compose(&u3) * mono::<F>(6).inv().expect("nonzero");
            Point::affine(x2, y2)
        }
    }
}

/// Coordinates `(x₁, y₁) = (u⁴x₂, u⁶y₂)` on `E_t` of a section of `E'_u`,
/// as functions of `u` (with `t = u³`).
pub fn push_to_e_t<F: Field>(p: &RationalFunctionPoint<F>) -> Option<(R<F>, R<F>)> {
    match p {
        Point::Infinity => None,
        Point::Affine { x, y } => Some((x.clone() * mono(4), y.clone() * mono(6))),
    }
}

/// The solution `(x, y, z)` of `xy(x²+y²-1) = z³` over `Q(t)` attached to a
/// section of `E_t`: `x = (t³-t)²/y₁`, `y = t`, `z = x₁(t³-t)/y₁`.
pub fn section_to_xyz<F: Field>(p: &RationalFunctionPoint<F>) -> Result<[R<F>; 3]> {
    match p {
        Point::Infinity => Err(Error::NoAffineImage),
        Point::Affine { x, y } => xyz_from(x, y, &R::x()),
    }
}

/// [`section_to_xyz`] for a section of `E'_u`, pushed to `E_t` first; the
/// result is a triple of functions of `u`.
pub fn section_to_xyz_u<F: Field>(p: &RationalFunctionPoint<F>) -> Result<[R<F>; 3]> {
    let (x1, y1) = push_to_e_t(p).ok_or(Error::NoAffineImage)?;
    xyz_from(&x1, &y1, &mono(3))
}

fn xyz_from<F: Field>(x1: &R<F>, y1: &R<F>, t: &R<F>) -> Result<[R<F>; 3]> {
    let inv = y1.inv().ok_or(Error::NoAffineImage)?;
    let c = t.clone() * t.clone() * t.clone() - t.clone();
    Ok([
        c.clone() * c.clone() * inv.clone(),
        t.clone(),
        x1.clone() * c * inv,
    ])
}

/// `xy(x²+y²-1) - z³`.
pub fn xyz_residual<F: Field>(triple: &[R<F>; 3]) -> R<F> {
    let [x, y, z] = triple;
    x.clone() * y.clone() * (x.clone() * x.clone() + y.clone() * y.clone() - R::from_int(1))
        - z.clone() * z.clone() * z.clone()
}
