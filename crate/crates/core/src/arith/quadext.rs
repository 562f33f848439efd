use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Rational};

/// Supplies the non-square `D` defining `F(√D)`.
pub trait QuadModulus<F>: Copy + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    fn d() -> F;
    /// Symbol for `√D` in printed output.
    const SYMBOL: &'static str = "s";
}

/// `a + b·s` with `s² = D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt<F, D> {
    pub a: F,
    pub b: F,
    _d: PhantomData<D>,
}

impl<F: Field, D: QuadModulus<F>> QuadExt<F, D> {
    pub fn new(a: F, b: F) -> Self {
        QuadExt { a, b, _d: PhantomData }
    }

    pub fn base(a: F) -> Self {
        Self::new(a, F::zero())
    }

    /// `√D`.
    pub fn sqrt() -> Self {
        Self::new(F::zero(), F::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a² - D b²`.
    pub fn norm(&self) -> F {
        self.a.clone() * self.a.clone() - D::d() * self.b.clone() * self.b.clone()
    }
}

impl<F: Field, D: QuadModulus<F>> Add for QuadExt<F, D> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.a + r.a, self.b + r.b)
    }
}

impl<F: Field, D: QuadModulus<F>> Sub for QuadExt<F, D> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.a - r.a, self.b - r.b)
    }
}

impl<F: Field, D: QuadModulus<F>> Mul for QuadExt<F, D> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let a = self.a.clone() * r.a.clone() + D::d() * self.b.clone() * r.b.clone();
        let b = self.a * r.b + self.b * r.a;
        Self::new(a, b)
    }
}

impl<F: Field, D: QuadModulus<F>> Neg for QuadExt<F, D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<F: Field, D: QuadModulus<F>> Zero for QuadExt<F, D> {
    fn zero() -> Self {
        Self::base(F::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<F: Field, D: QuadModulus<F>> One for QuadExt<F, D> {
    fn one() -> Self {
        Self::base(F::one())
    }
}

impl<F: Field, D: QuadModulus<F>> Field for QuadExt<F, D> {
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Self::new(c.a * n.clone(), c.b * n))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::base(F::from_rational(r))
    }
}

impl<F: Field, D: QuadModulus<F>> fmt::Display for QuadExt<F, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*{}", self.b, D::SYMBOL),
            (false, false) => write!(f, "{} + ({})*{}", self.a, self.b, D::SYMBOL),
        }
    }
}
