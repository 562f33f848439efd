use std::fmt;

use crate::arith::{Field, HasOmega, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// A point of a Weierstrass curve over the field `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point<K> {
    Infinity,
    Affine { x: K, y: K },
}

impl<K: Field> Point<K> {
    pub fn affine(x: K, y: K) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&K> {
        match self {
            Point::Affine { x, .. } => Some(x),
            Point::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&K> {
        match self {
            Point::Affine { y, .. } => Some(y),
            Point::Infinity => None,
        }
    }

    /// `(x, y) ↦ (x, -y)`.
    pub fn negate(&self) -> Self {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(x.clone(), -y.clone()),
        }
    }
}

impl<K: Field> fmt::Display for Point<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => f.write_str("O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// `y² = x³ + ax + b` over a field `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassCurve<K> {
    pub a: K,
    pub b: K,
}

impl<K: Field> WeierstrassCurve<K> {
    pub fn new(a: K, b: K) -> Self {
        WeierstrassCurve { a, b }
    }

    pub fn contains(&self, p: &Point<K>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                y.clone() * y.clone()
                    == x.clone() * x.clone() * x.clone() + self.a.clone() * x.clone() + self.b.clone()
            }
        }
    }

    /// Chord-tangent addition; both points must lie on the curve.
    pub fn add(&self, p: &Point<K>, q: &Point<K>) -> Result<Point<K>> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub fn add_unchecked(&self, p: &Point<K>, q: &Point<K>) -> Point<K> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return Point::Infinity;
            }
            let num = K::from_int(3) * x1.clone() * x1.clone() + self.a.clone();
            num.checked_div(&(K::from_int(2) * y1.clone())).expect("y1 nonzero")
        } else {
            (y2.clone() - y1.clone())
                .checked_div(&(x2.clone() - x1.clone()))
                .expect("x1 != x2")
        };
        let x3 = lambda.clone() * lambda.clone() - x1.clone() - x2.clone();
        let y3 = lambda * (x1.clone() - x3.clone()) - y1.clone();
        Point::affine(x3, y3)
    }

    pub fn double(&self, p: &Point<K>) -> Result<Point<K>> {
        self.add(p, p)
    }

    /// `[n]P` by double-and-add; negative `n` negates.
    pub fn mul(&self, n: i64, p: &Point<K>) -> Result<Point<K>> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let base = if n < 0 { p.negate() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let (mut acc, mut cur) = (Point::Infinity, base);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &cur);
            }
            cur = self.add_unchecked(&cur, &cur);
            k >>= 1;
        }
        Ok(acc)
    }
}

impl<K: HasOmega> WeierstrassCurve<K> {
    /// `(x, y) ↦ (ωx, y)`, defined when `a = 0`.
    pub fn cm_omega(&self, p: &Point<K>) -> Result<Point<K>> {
        if !self.a.is_zero() {
            return Err(Error::NotJInvariantZero);
        }
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        Ok(match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(K::omega() * x.clone(), y.clone()),
        })
    }
}

/// `y² = x³ + A(t)x + B(t)` over `F(t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionFieldCurve<F> {
    pub a: Polynomial<F>,
    pub b: Polynomial<F>,
}

/// A section: a point over `F(t)`.
pub type RationalFunctionPoint<F> = Point<RationalFunction<F>>;

impl<F: Field> FunctionFieldCurve<F> {
    pub fn new(a: Polynomial<F>, b: Polynomial<F>) -> Result<Self> {
        let c = FunctionFieldCurve { a, b };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    /// `E_t : y² = x³ - t⁴(t²-1)³`.
    pub fn e_t() -> Self {
        let t = Polynomial::x();
        let b = -&(&t.pow(4) * &(&t.pow(2) - &Polynomial::one()).pow(3));
        Self::new(Polynomial::zero(), b).expect("nonsingular")
    }

    /// `E'_u : y² = x³ - (u⁶-1)³`.
    pub fn e_prime_u() -> Self {
        let u6 = Polynomial::<F>::monomial(F::one(), 6);
        let b = -&(&u6 - &Polynomial::one()).pow(3);
        Self::new(Polynomial::zero(), b).expect("nonsingular")
    }

    /// `y² = x³ - c·t²(t-1)²(t+1)²(t²+1)²`; the second fibration has `c = 432`.
    pub fn eps2_with(c: i64) -> Self {
        let t = Polynomial::<F>::x();
        let one = Polynomial::one();
        let core = &(&t * &(&t.pow(2) - &one)) * &(&t.pow(2) + &one);
        let b = (&core * &core).scale(&F::from_int(-c));
        Self::new(Polynomial::zero(), b).expect("nonsingular")
    }

    pub fn eps2() -> Self {
        Self::eps2_with(432)
    }

    /// `Δ = -16(4A³ + 27B²)`.
    pub fn discriminant(&self) -> Polynomial<F> {
        let four_a3 = self.a.pow(3).scale(&F::from_int(4));
        let b2 = self.b.pow(2).scale(&F::from_int(27));
        (&four_a3 + &b2).scale(&F::from_int(-16))
    }

    pub fn generic_fiber(&self) -> WeierstrassCurve<RationalFunction<F>> {
        WeierstrassCurve::new(self.a.clone().into(), self.b.clone().into())
    }

    pub fn contains(&self, p: &RationalFunctionPoint<F>) -> bool {
        self.generic_fiber().contains(p)
    }

    pub fn add(&self, p: &RationalFunctionPoint<F>, q: &RationalFunctionPoint<F>) -> Result<RationalFunctionPoint<F>> {
        self.generic_fiber().add(p, q)
    }

    pub fn double(&self, p: &RationalFunctionPoint<F>) -> Result<RationalFunctionPoint<F>> {
        self.generic_fiber().double(p)
    }

    pub fn mul(&self, n: i64, p: &RationalFunctionPoint<F>) -> Result<RationalFunctionPoint<F>> {
        self.generic_fiber().mul(n, p)
    }

    pub fn negate(&self, p: &RationalFunctionPoint<F>) -> RationalFunctionPoint<F> {
        p.negate()
    }
}

impl<F: HasOmega> FunctionFieldCurve<F> {
    pub fn cm_omega(&self, p: &RationalFunctionPoint<F>) -> Result<RationalFunctionPoint<F>> {
        if !self.a.is_zero() {
            return Err(Error::NotJInvariantZero);
        }
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        Ok(match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                Point::affine(RationalFunction::constant(F::omega()) * x.clone(), y.clone())
            }
        })
    }
}

impl<F: Field> fmt::Display for FunctionFieldCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        if !self.a.is_zero() {
            write!(f, " + ({})*x", self.a)?;
        }
        write!(f, " + ({})", self.b)
    }
}
