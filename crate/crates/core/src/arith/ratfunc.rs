use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A point of the projective line over the coefficient field.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Place<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(r) => write!(f, "{r}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// Reduced fraction `num / den` with monic `den`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading().inv().expect("nonzero");
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at a finite point, `None` at a pole.
    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        d.inv().map(|i| self.num.eval(at) * i)
    }

    /// Substitute `t ↦ g(t)`.
    pub fn compose(&self, g: &Self) -> Self {
        let apply = |p: &Polynomial<F>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Self::zero(), |acc, c| acc * g.clone() + Self::constant(c.clone()))
        };
        apply(&self.num) * apply(&self.den).inv().expect("composition denominator nonzero")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalFunction<G> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    /// Order of vanishing at a place together with the leading coefficient of
    /// the local expansion in `π = t - r` (or `s = 1/t` at infinity).
    pub fn local_leading(&self, place: &Place<F>) -> Result<(i64, F)> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        match place {
            Place::Finite(r) => {
                let (vn, cn) = poly_local(&self.num, r);
                let (vd, cd) = poly_local(&self.den, r);
                Ok((vn - vd, cn * cd.inv().expect("nonzero")))
            }
            Place::Infinity => Ok((
                self.den.deg_i64() - self.num.deg_i64(),
                self.num.leading() * self.den.leading().inv().expect("nonzero"),
            )),
        }
    }
}

fn poly_local<F: Field>(p: &Polynomial<F>, r: &F) -> (i64, F) {
    let shifted = p.shift(r);
    let v = shifted.low_order();
    (v as i64, shifted.coeff(v))
}

/// Order of vanishing of `f` at `place`.
pub fn valuation_at<F: Field>(f: &RationalFunction<F>, place: &Place<F>) -> Result<i64> {
    f.local_leading(place).map(|(v, _)| v)
}

impl RationalFunction<Rational> {
    /// Order of vanishing along an irreducible factor `p` of `Q[t]`.
    pub fn valuation_along(&self, p: &Polynomial<Rational>) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(self.num.multiplicity(p) as i64 - self.den.multiplicity(p) as i64)
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<F: Field> Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, r: &RationalFunction<F>) -> RationalFunction<F> {
        if self.den == r.den {
            return RationalFunction::new(&self.num + &r.num, self.den.clone()).unwrap();
        }
        RationalFunction::new(
            &(&self.num * &r.den) + &(&r.num * &self.den),
            &self.den * &r.den,
        )
        .unwrap()
    }
}

impl<F: Field> Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, r: &RationalFunction<F>) -> RationalFunction<F> {
        self + &(-r)
    }
}

impl<F: Field> Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, r: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&self.num * &r.num, &self.den * &r.den).unwrap()
    }
}

impl<F: Field> Div for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    /// Panics on division by zero; use [`Field::inv`] to check.
    fn div(self, r: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&self.num * &r.den, &self.den * &r.num)
            .expect("rational function division by zero")
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

super::poly::forward_by_value!(RationalFunction, Add add, Sub sub, Mul mul, Div div);

impl<F: Field> Neg for RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        -&self
    }
}

impl<F: Field> Field for RationalFunction<F> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()).unwrap())
        }
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r))
    }
}

impl<F: Field> From<Polynomial<F>> for RationalFunction<F> {
    fn from(p: Polynomial<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<F: Field> RationalFunction<F> {
    pub fn display_in(&self, var: &str) -> String {
        let n = self.num.display_in(var);
        if self.den.is_constant() {
            return n;
        }
        let d = self.den.display_in(var);
        let wrap = |s: String, p: &Polynomial<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::q;

    type P = Polynomial<Rational>;
    type R = RationalFunction<Rational>;

    fn b_et() -> R {
        let t = P::x();
        R::from_poly(&t.pow(4) * &(&t.pow(2) - &P::one()).pow(3))
    }

    #[test]
    fn valuations() {
        let f = b_et();
        let at = |r: i64| Place::Finite(Rational::from_integer(r.into()));
        assert_eq!(valuation_at(&f, &at(0)).unwrap(), 4);
        assert_eq!(valuation_at(&f, &at(1)).unwrap(), 3);
        assert_eq!(valuation_at(&f, &at(-1)).unwrap(), 3);
        assert_eq!(valuation_at(&f, &at(2)).unwrap(), 0);
        let g = R::from_poly(P::from_ints(&[-1, 0, 1]));
        assert_eq!(valuation_at(&g, &Place::Infinity).unwrap(), -2);
        assert_eq!(valuation_at(&g.inv().unwrap(), &Place::Infinity).unwrap(), 2);
        assert!(valuation_at(&R::zero(), &Place::Infinity).is_err());
    }

    #[test]
    fn local_leading_coefficient() {
        // x/(t-1) = t^2 (t+1) -> 2 at t = 1
        let t = P::x();
        let x = R::from_poly(&t.pow(2) * &(&t.pow(2) - &P::one()));
        let (v, c) = x.local_leading(&Place::Finite(Rational::one())).unwrap();
        assert_eq!((v, c), (1, Rational::from_integer(2.into())));
    }

    #[test]
    fn reduced_and_monic() {
        let f = R::new(P::from_ints(&[-2, 0, 2]), P::from_ints(&[2, 2])).unwrap();
        assert_eq!(f, R::from_poly(P::from_ints(&[-1, 1])));
        let g = R::new(P::from_ints(&[1]), P::from_ints(&[0, 3])).unwrap();
        assert_eq!(g.den(), &P::from_ints(&[0, 1]));
        assert_eq!(g.num(), &P::constant(q(1, 3)));
        assert_eq!(g.to_string(), "1/3/t");
    }

    #[test]
    fn compose_substitutes() {
        let f = R::from_poly(P::from_ints(&[0, 0, 1])) / R::from_poly(P::from_ints(&[1, 1]));
        let u3 = R::from_poly(P::monomial(Rational::one(), 3));
        let g = f.compose(&u3);
        assert_eq!(g, R::new(P::monomial(Rational::one(), 6), P::from_ints(&[1, 0, 0, 1])).unwrap());
    }
}
