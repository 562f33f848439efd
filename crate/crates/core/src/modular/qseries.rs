use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power series in `q` truncated after `q^N`; `coefficients[n]` is the
/// coefficient of `q^n`, including the constant term.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QSeries {
    pub precision: usize,
    #[serde(with = "crate::decimal::vec")]
    pub coefficients: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(precision: usize) -> Self {
        QSeries { precision, coefficients: vec![BigInt::zero(); precision + 1] }
    }

    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coefficients[0] = BigInt::one();
        s
    }

    /// Pads or truncates to `precision`.
    pub fn from_coefficients(precision: usize, mut coefficients: Vec<BigInt>) -> Self {
        coefficients.resize(precision + 1, BigInt::zero());
        QSeries { precision, coefficients }
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coefficients.get(n).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^k`, dropping what falls past the precision.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.precision);
        for n in k..=self.precision {
            out.coefficients[n] = self.coefficients[n - k].clone();
        }
        out
    }

    /// Multiplies in place by `(1 - q^k)^e`; negative `e` divides.
    pub fn mul_binomial(&mut self, k: usize, e: i64) {
        let c = &mut self.coefficients;
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for n in (k..c.len()).rev() {
                    let prev = c[n - k].clone();
                    c[n] -= prev;
                }
            } else {
                for n in k..c.len() {
                    let prev = c[n - k].clone();
                    c[n] += prev;
                }
            }
        }
    }

    /// Multiplicative inverse by the recursive convolution
    /// `b_n = -a_0^{-1} Σ_{i≥1} a_i b_{n-i}`; needs `a_0 = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coefficients[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NonInvertibleSeries(a0.to_string()));
        }
        let mut b = vec![BigInt::zero(); self.precision + 1];
        b[0] = a0.clone();
        for n in 1..=self.precision {
            let s: BigInt = (1..=n).map(|i| &self.coefficients[i] * &b[n - i]).sum();
            b[n] = -(s * a0);
        }
        Ok(QSeries { precision: self.precision, coefficients: b })
    }

    /// Indices and values of the nonzero coefficients.
    pub fn nonzero(&self) -> Vec<(usize, BigInt)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (n, c.clone()))
            .collect()
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, r: &QSeries) -> QSeries {
        let precision = self.precision.min(r.precision);
        let mut out = QSeries::zero(precision);
        for (i, a) in self.coefficients.iter().enumerate().take(precision + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in r.coefficients.iter().enumerate().take(precision + 1 - i) {
                out.coefficients[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.nonzero() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let coef = if mag.is_one() && n > 0 { String::new() } else { mag.to_string() };
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.precision + 1)
    }
}

/// `Π η(d z)^e` as a list of `(d, e)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EtaQuotientSpec {
    factors: Vec<(u32, i64)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: Vec<(u32, i64)>) -> Result<Self> {
        if factors.iter().any(|&(d, _)| d == 0) {
            return Err(Error::InvalidEtaSpec("scale 0".into()));
        }
        let total: i64 = factors.iter().map(|&(d, e)| d as i64 * e).sum();
        if total % 24 != 0 {
            return Err(Error::NonIntegralPrefix(total));
        }
        Ok(EtaQuotientSpec { factors })
    }

    /// `η(12z)⁹η(4z)⁹ / (η(2z)³η(6z)³η(8z)³η(24z)³)`.
    pub fn weight_three_level_48() -> Self {
        Self::new(vec![(12, 9), (4, 9), (2, -3), (6, -3), (8, -3), (24, -3)]).expect("valid")
    }

    pub fn factors(&self) -> &[(u32, i64)] {
        &self.factors
    }

    /// Exponent of the leading `q`-power, `Σ d·e / 24`.
    pub fn order(&self) -> i64 {
        self.factors.iter().map(|&(d, e)| d as i64 * e).sum::<i64>() / 24
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(d, e)| format!("eta({d}z)^{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The `q`-expansion of an eta quotient through `q^n`.
pub fn eta_quotient(spec: &EtaQuotientSpec, n: usize) -> Result<QSeries> {
    let order = spec.order();
    if order < 0 {
        return Err(Error::NegativeOrder(order));
    }
    let order = order as usize;
    if order > n {
        return Ok(QSeries::zero(n));
    }
    let m = n - order;
    let mut s = QSeries::one(m);
    // Positive factors first keeps intermediate coefficients small.
    let mut factors = spec.factors.clone();
    factors.sort_by_key(|&(_, e)| std::cmp::Reverse(e));
    for (d, e) in factors {
        for k in (d as usize..=m).step_by(d as usize) {
            s.mul_binomial(k, e);
        }
    }
    let mut out = QSeries::zero(n);
    for (i, c) in s.coefficients.into_iter().enumerate() {
        out.coefficients[order + i] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coefficients.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn paper_product_leading_terms() {
        let s = eta_quotient(&EtaQuotientSpec::weight_three_level_48(), 10).unwrap();
        assert_eq!(ints(&s), vec![0, 1, 0, 3, 0, 0, 0, -2, 0, 9, 0]);
    }

    #[test]
    fn discriminant() {
        let spec = EtaQuotientSpec::new(vec![(1, 24)]).unwrap();
        assert_eq!(ints(&eta_quotient(&spec, 5).unwrap()), vec![0, 1, -24, 252, -1472, 4830]);
    }

    #[test]
    fn rejected_specs() {
        assert_eq!(EtaQuotientSpec::new(vec![(1, 12)]), Err(Error::NonIntegralPrefix(12)));
        let neg = EtaQuotientSpec::new(vec![(1, -24)]).unwrap();
        assert_eq!(eta_quotient(&neg, 4), Err(Error::NegativeOrder(-1)));
        assert!(EtaQuotientSpec::new(vec![(0, 24)]).is_err());
    }

    #[test]
    fn inverse_matches_binomial_division() {
        let mut a = QSeries::one(30);
        a.mul_binomial(1, 3);
        a.mul_binomial(2, 1);
        let inv = a.inverse().unwrap();
        let mut b = QSeries::one(30);
        b.mul_binomial(1, -3);
        b.mul_binomial(2, -1);
        assert_eq!(inv, b);
        assert_eq!(&a * &inv, QSeries::one(30));
        assert!(QSeries::from_coefficients(3, vec![2.into()]).inverse().is_err());
    }

    #[test]
    fn display() {
        let s = QSeries::from_coefficients(4, vec![0.into(), 1.into(), 0.into(), (-2).into()]);
        assert_eq!(s.to_string(), "q - 2q^3 + O(q^5)");
    }
}
