use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::poly::Polynomial;

/// Compile-time description of a number field `Q[x]/(m(x))`.
pub trait NumberFieldSpec:
    Copy + Clone + fmt::Debug + PartialEq + Eq + std::hash::Hash + Send + Sync + 'static
{
    const NAME: &'static str;
    /// Symbol for the generator in printed output.
    const GENERATOR: &'static str;
    /// The monic minimal polynomial without its leading 1, constant term first.
    const MODULUS: &'static [i64];
}

/// `Q(ω)`, `ω^2 + ω + 1 = 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Omega;

/// `Q(ζ₁₂)`, `ζ^4 - ζ^2 + 1 = 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zeta12;

impl NumberFieldSpec for Omega {
    const NAME: &'static str = "Q(w)";
    const GENERATOR: &'static str = "w";
    const MODULUS: &'static [i64] = &[1, 1];
}

impl NumberFieldSpec for Zeta12 {
    const NAME: &'static str = "Q(zeta12)";
    const GENERATOR: &'static str = "z";
    const MODULUS: &'static [i64] = &[1, 0, -1, 0];
}

/// Element of a fixed number field in the power basis of its generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NfElem<K> {
    coords: Vec<Rational>,
    _field: PhantomData<K>,
}

impl<K: NumberFieldSpec> NfElem<K> {
    pub fn degree() -> usize {
        K::MODULUS.len()
    }

    fn modulus() -> Polynomial<Rational> {
        let mut m: Vec<i64> = K::MODULUS.to_vec();
        m.push(1);
        Polynomial::from_ints(&m)
    }

    /// From power-basis coordinates; shorter vectors are zero-padded,
    /// longer ones reduced.
    pub fn from_coords(coords: Vec<Rational>) -> Self {
        Self::from_poly(&Polynomial::new(coords))
    }

    pub fn from_int_coords(coords: &[i64]) -> Self {
        Self::from_poly(&Polynomial::from_ints(coords))
    }

    fn from_poly(p: &Polynomial<Rational>) -> Self {
        let r = p.rem(&Self::modulus());
        let mut coords = r.coeffs().to_vec();
        coords.resize(Self::degree(), Rational::zero());
        NfElem { coords, _field: PhantomData }
    }

    fn as_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coords.clone())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The generator of the field.
    pub fn gen() -> Self {
        Self::from_int_coords(&[0, 1])
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }
}

/// Fields containing a primitive cube root of unity.
pub trait HasOmega: Field {
    fn omega() -> Self;
}

impl HasOmega for NfElem<Omega> {
    fn omega() -> Self {
        Self::gen()
    }
}

impl HasOmega for NfElem<Zeta12> {
    fn omega() -> Self {
        Self::gen().powu(4)
    }
}

impl NfElem<Zeta12> {
    /// `ζ³`.
    pub fn i() -> Self {
        Self::gen().powu(3)
    }

    /// `ζ + ζ⁻¹`.
    pub fn sqrt3() -> Self {
        Self::from_int_coords(&[0, 2, 0, -1])
    }

    /// `1 + 2ω`.
    pub fn sqrt_minus3() -> Self {
        Self::one() + Self::omega() + Self::omega()
    }
}

impl<K: NumberFieldSpec> Add for &NfElem<K> {
    type Output = NfElem<K>;
    fn add(self, rhs: &NfElem<K>) -> NfElem<K> {
        NfElem {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
            _field: PhantomData,
        }
    }
}

impl<K: NumberFieldSpec> Sub for &NfElem<K> {
    type Output = NfElem<K>;
    fn sub(self, rhs: &NfElem<K>) -> NfElem<K> {
        NfElem {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
            _field: PhantomData,
        }
    }
}

impl<K: NumberFieldSpec> Mul for &NfElem<K> {
    type Output = NfElem<K>;
    fn mul(self, rhs: &NfElem<K>) -> NfElem<K> {
        NfElem::from_poly(&(&self.as_poly() * &rhs.as_poly()))
    }
}

impl<K: NumberFieldSpec> Neg for &NfElem<K> {
    type Output = NfElem<K>;
    fn neg(self) -> NfElem<K> {
        NfElem {
            coords: self.coords.iter().map(|a| -a).collect(),
            _field: PhantomData,
        }
    }
}

macro_rules! nf_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl<K: NumberFieldSpec> $tr for NfElem<K> {
            type Output = NfElem<K>;
            fn $m(self, rhs: NfElem<K>) -> NfElem<K> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
nf_by_value!(Add add, Sub sub, Mul mul);

impl<K: NumberFieldSpec> Neg for NfElem<K> {
    type Output = NfElem<K>;
    fn neg(self) -> NfElem<K> {
        -&self
    }
}

impl<K: NumberFieldSpec> Zero for NfElem<K> {
    fn zero() -> Self {
        NfElem { coords: vec![Rational::zero(); Self::degree()], _field: PhantomData }
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl<K: NumberFieldSpec> One for NfElem<K> {
    fn one() -> Self {
        Self::from_int_coords(&[1])
    }
}

impl<K: NumberFieldSpec> Field for NfElem<K> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = Polynomial::xgcd(&self.as_poly(), &Self::modulus());
        debug_assert!(g.is_constant(), "modulus is irreducible");
        Some(Self::from_poly(&s))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_coords(vec![r.clone()])
    }
}

impl<K: NumberFieldSpec> fmt::Display for NfElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_poly().display_in(K::GENERATOR))
    }
}

impl<K: NumberFieldSpec> fmt::Debug for NfElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", K::NAME, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = NfElem<Zeta12>;
    type W = NfElem<Omega>;

    #[test]
    fn zeta12_identities() {
        let z = Z::gen();
        assert_eq!(z.powu(4), z.powu(2) - Z::one());
        assert_eq!(z.powu(12), Z::one());
        let zi = z.inv().unwrap();
        assert_eq!((z.clone() + zi).powu(2), Z::from_int(3));
        assert_eq!(Z::sqrt3().powu(2), Z::from_int(3));
        assert_eq!(Z::i().powu(2), -Z::one());
        let w = Z::omega();
        assert_eq!(w.powu(2) + w + Z::one(), Z::zero());
        assert_eq!(Z::sqrt_minus3().powu(2), Z::from_int(-3));
    }

    #[test]
    fn omega_inverse_and_display() {
        let w = W::gen();
        assert_eq!(w.inv().unwrap(), w.powu(2));
        let a = W::from_int_coords(&[3, 8]);
        assert_eq!(a.clone() * a.inv().unwrap(), W::one());
        assert_eq!(a.to_string(), "8*w + 3");
        assert_eq!(W::from_int_coords(&[4, 5]).powu(3).powu(2), W::from_int_coords(&[4, 5]).powu(6));
    }
}
