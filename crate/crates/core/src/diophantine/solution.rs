use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(m, k, l)` with `m³ + (m+1)³ + … + (m+k-1)³ = l³`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionMKL {
    #[serde(with = "crate::decimal")]
    pub m: BigInt,
    #[serde(with = "crate::decimal")]
    pub k: BigInt,
    #[serde(with = "crate::decimal")]
    pub l: BigInt,
}

/// `(x, y, z)` with `xy(x² + y² - 1) = z³`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionXYZ {
    #[serde(with = "crate::decimal")]
    pub x: BigInt,
    #[serde(with = "crate::decimal")]
    pub y: BigInt,
    #[serde(with = "crate::decimal")]
    pub z: BigInt,
}

fn square_pyramid_cubes(n: &BigInt) -> BigInt {
    let t: BigInt = n * (n + 1) / 2;
    &t * &t
}

/// `Σ_{j=0}^{k-1} (m+j)³` via `S(n) = (n(n+1)/2)²`.
pub fn cube_sum(m: &BigInt, k: &BigInt) -> BigInt {
    square_pyramid_cubes(&(m + k - 1)) - square_pyramid_cubes(&(m - 1))
}

impl SolutionMKL {
    /// Checked constructor.
    pub fn new(m: impl Into<BigInt>, k: impl Into<BigInt>, l: impl Into<BigInt>) -> Result<Self> {
        let s = SolutionMKL { m: m.into(), k: k.into(), l: l.into() };
        if !s.k.is_positive() || !s.is_valid() {
            return Err(Error::NotASolution { equation: "sum of cubes", value: s.to_string() });
        }
        Ok(s)
    }

    pub fn residual(&self) -> BigInt {
        cube_sum(&self.m, &self.k) - self.l.pow(3)
    }

    pub fn is_valid(&self) -> bool {
        self.residual().is_zero()
    }
}

impl SolutionXYZ {
    /// Checked constructor.
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        let s = Self::new_unchecked(x, y, z);
        if !s.is_valid() {
            return Err(Error::NotASolution { equation: "xy(x^2+y^2-1) = z^3", value: s.to_string() });
        }
        Ok(s)
    }

    pub fn new_unchecked(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Self {
        SolutionXYZ { x: x.into(), y: y.into(), z: z.into() }
    }

    /// `xy(x² + y² - 1) - z³`.
    pub fn residual(&self) -> BigInt {
        let (x, y) = (&self.x, &self.y);
        x * y * (x * x + y * y - BigInt::one()) - self.z.pow(3)
    }

    pub fn is_valid(&self) -> bool {
        self.residual().is_zero()
    }

    /// Member of the family `(x, 1, x)`.
    pub fn is_trivial(&self) -> bool {
        self.y.is_one() && self.x == self.z
    }
}

/// `x = k`, `y = 2m + k - 1`, `z = 2l`.
pub fn mkl_to_xyz(sol: &SolutionMKL) -> SolutionXYZ {
    SolutionXYZ {
        x: sol.k.clone(),
        y: BigInt::from(2) * &sol.m + &sol.k - 1,
        z: BigInt::from(2) * &sol.l,
    }
}

/// Inverse of [`mkl_to_xyz`]; needs `x ≥ 1`, `x + y` odd and `z` even.
pub fn xyz_to_mkl(sol: &SolutionXYZ) -> Result<SolutionMKL> {
    let ok = sol.x.is_positive() && (&sol.x + &sol.y).is_odd() && sol.z.is_even();
    if !ok {
        return Err(Error::NoIntegralPreimage {
            x: sol.x.to_string(),
            y: sol.y.to_string(),
            z: sol.z.to_string(),
        });
    }
    Ok(SolutionMKL {
        m: (&sol.y - &sol.x + 1) / 2,
        k: sol.x.clone(),
        l: &sol.z / 2,
    })
}

impl fmt::Display for SolutionMKL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m, k, l) = ({}, {}, {})", self.m, self.k, self.l)
    }
}

impl fmt::Display for SolutionXYZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
