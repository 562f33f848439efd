use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer as _, Roots};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::integer::{is_prime, pow_mod};
use crate::error::{Error, Result};

/// `a + bω` in `Z[ω]`, `ω² + ω + 1 = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct EisensteinInt {
    #[serde(with = "crate::decimal")]
    pub a: BigInt,
    #[serde(with = "crate::decimal")]
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// `1 + 2ω`, a square root of `-3`.
    pub fn sqrt_minus3() -> Self {
        Self::new(1, 2)
    }

    /// `±1, ±ω, ±ω²` in the order `ω^0, ..., ω^5` of the sixth root `-ω²`.
    pub fn units() -> [Self; 6] {
        [
            Self::new(1, 0),
            Self::new(1, 1),
            Self::new(0, 1),
            Self::new(-1, 0),
            Self::new(-1, -1),
            Self::new(0, -1),
        ]
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// `a + bω̄ = (a - b) - bω`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// `z + z̄ = 2a - b`.
    pub fn trace(&self) -> BigInt {
        BigInt::from(2) * &self.a - &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(1, 0), |acc, _| &acc * self)
    }

    /// Exact quotient `self / d` when `d | self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &d.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then(|| Self::new(qa, qb))
    }

    pub fn divides(&self, z: &Self) -> bool {
        z.exact_div(self).is_some()
    }

    /// `self ≡ other (mod m)`.
    pub fn congruent(&self, other: &Self, m: &Self) -> bool {
        m.divides(&(self - other))
    }

    /// Residue mod 2 as `(a mod 2, b mod 2)`.
    pub fn mod2(&self) -> (u8, u8) {
        let two = BigInt::from(2);
        let r = |x: &BigInt| if x.mod_floor(&two).is_zero() { 0 } else { 1 };
        (r(&self.a), r(&self.b))
    }

    /// The twelve elements `εz` and `εz̄` for units `ε`.
    pub fn associates_and_conjugates(&self) -> Vec<Self> {
        let c = self.conj();
        Self::units()
            .iter()
            .flat_map(|u| [u * self, u * &c])
            .collect()
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, r: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a + &r.a, &self.b + &r.b)
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, r: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a - &r.a, &self.b - &r.b)
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, r: &EisensteinInt) -> EisensteinInt {
        // (a + bω)(c + dω) = ac - bd + (ad + bc - bd)ω
        let bd = &self.b * &r.b;
        EisensteinInt::new(
            &self.a * &r.a - &bd,
            &self.a * &r.b + &self.b * &r.a - bd,
        )
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-&self.a, -&self.b)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

macro_rules! eis_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for EisensteinInt {
            type Output = EisensteinInt;
            fn $m(self, r: EisensteinInt) -> EisensteinInt {
                (&self).$m(&r)
            }
        }
    )*};
}
eis_by_value!(Add add, Sub sub, Mul mul);

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "w"),
            (true, false) => write!(f, "{}*w", self.b),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}*w", self.a, -&self.b)
            }
            (false, false) => write!(f, "{} + {}*w", self.a, self.b),
        }
    }
}

/// `(m, n)` with `m² - mn + n² = p`, normalised to `m > 2n > 0`.
///
/// A cube root of unity `ζ mod p` gives `√-3 ≡ 2ζ + 1`; Cornacchia then
/// solves `a² + 3b² = p` and `(a + b) + 2bω` has the required norm.
pub fn represent_eisenstein(p: u64) -> Result<(BigInt, BigInt)> {
    if p % 3 != 1 || !is_prime(p) {
        return Err(Error::NotSplitPrime(p));
    }
    let zeta = (2..p)
        .map(|g| pow_mod(g, (p - 1) / 3, p))
        .find(|&z| z != 1)
        .expect("a non-cube exists mod p");
    let mut r0 = (2 * zeta + 1) % p;
    if r0 <= p / 2 {
        r0 = p - r0;
    }
    let (mut a, mut b) = (p as u128, r0 as u128);
    let limit = (p as u128).sqrt();
    while b > limit {
        let r = a % b;
        a = b;
        b = r;
    }
    let x = b;
    let rest = p as u128 - x * x;
    let y = (rest / 3).sqrt();
    assert!(
        rest % 3 == 0 && 3 * y * y == rest,
        "Cornacchia failed for split prime {p}"
    );
    let beta = EisensteinInt::new((x + y) as u64, (2 * y) as u64);
    let rep = beta
        .associates_and_conjugates()
        .into_iter()
        .find(|z| z.b.is_positive() && z.a > BigInt::from(2) * &z.b)
        .expect("one associate lies in the sector m > 2n > 0");
    Ok((rep.a, rep.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::integer::primes_up_to;

    fn brute_representable(p: i64) -> bool {
        let r = ((4 * p) as f64 / 3.0).sqrt().ceil() as i64;
        (-r..=r).any(|m| (-r..=r).any(|n| m * m - m * n + n * n == p))
    }

    #[test]
    fn small_representations() {
        assert_eq!(represent_eisenstein(7).unwrap(), (3.into(), 1.into()));
        assert_eq!(represent_eisenstein(13).unwrap(), (4.into(), 1.into()));
        assert!(represent_eisenstein(5).is_err());
        assert!(represent_eisenstein(25).is_err());
        assert!(brute_representable(7) && brute_representable(13));
    }

    #[test]
    fn all_split_primes_below_10k() {
        for p in primes_up_to(10_000).into_iter().filter(|p| p % 3 == 1) {
            let (m, n) = represent_eisenstein(p).unwrap();
            assert_eq!(&m * &m - &m * &n + &n * &n, BigInt::from(p), "p = {p}");
        }
    }

    #[test]
    fn sqrt_minus3_squares() {
        let s = EisensteinInt::sqrt_minus3();
        assert_eq!(&s * &s, EisensteinInt::new(-3, 0));
    }

    #[test]
    fn divisibility() {
        let two = EisensteinInt::new(2, 0);
        assert!(two.divides(&EisensteinInt::new(4, -6)));
        assert!(!two.divides(&EisensteinInt::new(3, 0)));
        let z = EisensteinInt::new(3, 8);
        assert_eq!((&z * &two).exact_div(&z).unwrap(), two);
    }
}
