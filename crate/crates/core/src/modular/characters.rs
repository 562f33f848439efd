use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::eta_quotient;
use super::qseries::{EtaQuotientSpec, QSeries};
use crate::arith::integer::is_prime;
use crate::arith::{represent_eisenstein, EisensteinInt};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plus,
    Minus,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plus => "plus",
            Variant::Minus => "minus",
        })
    }
}

/// `ζ^k` for the primitive sixth root `ζ = 1 + ω = -ω²`, stored as `k mod 6`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub struct SixthRoot(u8);

impl SixthRoot {
    pub const ONE: SixthRoot = SixthRoot(0);

    pub fn new(k: i64) -> Self {
        SixthRoot(k.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn inv(self) -> Self {
        SixthRoot::new(-(self.0 as i64))
    }

    pub fn to_eisenstein(self) -> EisensteinInt {
        EisensteinInt::units()[self.0 as usize].clone()
    }
}

impl Mul for SixthRoot {
    type Output = SixthRoot;
    fn mul(self, r: SixthRoot) -> SixthRoot {
        SixthRoot::new(self.0 as i64 + r.0 as i64)
    }
}

impl fmt::Display for SixthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "-w^2", "w", "-1", "w^2", "-w"][self.0 as usize])
    }
}

/// The 2-adic unit character: `u ↦ ω^k` with `u ≡ ω^k (mod 2)`, times
/// `(-1)^{(N(u)-1)/2}` for the minus variant.
pub fn chi2(u: &EisensteinInt, variant: Variant) -> Result<SixthRoot> {
    let k = match u.mod2() {
        (1, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => return Err(Error::EvenNorm(u.to_string())),
    };
    let plus = SixthRoot::new(2 * k);
    Ok(match variant {
        Variant::Plus => plus,
        Variant::Minus => {
            let half: BigInt = (u.norm() - 1) / 2;
            if half.is_odd() {
                plus * SixthRoot::new(3)
            } else {
                plus
            }
        }
    })
}

/// A generator of a prime of `Z[ω]` above `p` fixed by its residue mod `2√-3`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NormalizedPi {
    pub pi: EisensteinInt,
    pub p: u64,
    pub variant: Variant,
}

impl NormalizedPi {
    pub fn trace(&self) -> BigInt {
        self.pi.trace()
    }
}

/// `1` or `-1`: the residue mod `2√-3` required of the generator.
fn target_sign(p: u64, variant: Variant) -> i64 {
    match variant {
        Variant::Minus if p % 12 == 7 => -1,
        _ => 1,
    }
}

fn modulus() -> EisensteinInt {
    &EisensteinInt::new(2, 0) * &EisensteinInt::sqrt_minus3()
}

/// The plus generator: the associate of `π` or `π̄` that is `≡ 1 (mod 2√-3)`,
/// with `b > 0` deciding between the two conjugate ideals. The minus generator
/// is the associate of the plus generator with the minus congruence.
pub fn normalize_pi(p: u64, variant: Variant) -> Result<NormalizedPi> {
    if p < 5 || p % 3 != 1 || !is_prime(p) {
        return Err(Error::NotSplitPrime(p));
    }
    let (m, n) = represent_eisenstein(p)?;
    let one = EisensteinInt::new(1, 0);
    let md = modulus();
    let plus = EisensteinInt::new(m, n)
        .associates_and_conjugates()
        .into_iter()
        .filter(|z| z.congruent(&one, &md))
        .max_by(|x, y| x.b.cmp(&y.b))
        .expect("units surject onto (Z[ω]/2√-3)*");
    let target = EisensteinInt::new(target_sign(p, variant), 0);
    let pi = EisensteinInt::units()
        .iter()
        .map(|u| u * &plus)
        .find(|z| z.congruent(&target, &md))
        .expect("one associate has each residue");
    Ok(NormalizedPi { pi, p, variant })
}

/// `χ(π) + χ(π̄)` with `χ = χ⁺χ⁻`, i.e. the trace of `π⁺π⁻`.
pub fn surface_ap_via_characters(p: u64) -> Result<BigInt> {
    let plus = normalize_pi(p, Variant::Plus)?;
    let minus = normalize_pi(p, Variant::Minus)?;
    Ok((&plus.pi * &minus.pi).trace())
}

/// Which 2-adic character appears in the lattice sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeCharacter {
    Product,
    Plus,
    Minus,
}

/// Whether the character is evaluated at `m + nω` or at `n + mω`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArgumentOrder {
    Same,
    Swapped,
}

impl LatticeCharacter {
    pub const ALL: [LatticeCharacter; 3] =
        [LatticeCharacter::Product, LatticeCharacter::Plus, LatticeCharacter::Minus];

    fn eval(self, u: &EisensteinInt) -> Result<SixthRoot> {
        Ok(match self {
            LatticeCharacter::Product => chi2(u, Variant::Plus)? * chi2(u, Variant::Minus)?,
            LatticeCharacter::Plus => chi2(u, Variant::Plus)?,
            LatticeCharacter::Minus => chi2(u, Variant::Minus)?,
        })
    }
}

/// `(1/6) Σ (m+nω)² χ(arg)^{-1} q^{m²-mn+n²}` over `(m,n) ≢ (0,0) mod 2`.
pub fn lattice_sum_with(n: usize, character: LatticeCharacter, order: ArgumentOrder) -> Result<QSeries> {
    let r = ((4 * n) as f64 / 3.0).sqrt() as i64 + 1;
    let mut sums = vec![EisensteinInt::new(0, 0); n + 1];
    for m in -r..=r {
        for k in -r..=r {
            if m % 2 == 0 && k % 2 == 0 {
                continue;
            }
            let norm = m * m - m * k + k * k;
            if norm as usize > n {
                continue;
            }
            let z = EisensteinInt::new(m, k);
            let arg = match order {
                ArgumentOrder::Same => z.clone(),
                ArgumentOrder::Swapped => EisensteinInt::new(k, m),
            };
            let term = &(&z * &z) * &character.eval(&arg)?.inv().to_eisenstein();
            sums[norm as usize] = &sums[norm as usize] + &term;
        }
    }
    let six = BigInt::from(6);
    let mut coefficients = Vec::with_capacity(n + 1);
    for (i, s) in sums.into_iter().enumerate() {
        let (q, r) = s.a.div_rem(&six);
        if !s.b.is_zero() || !r.is_zero() {
            return Err(Error::NonIntegralLatticeSum { n: i, value: format!("({s})/6") });
        }
        coefficients.push(q);
    }
    Ok(QSeries::from_coefficients(n, coefficients))
}

/// One tried combination of character and argument order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeCandidate {
    pub character: LatticeCharacter,
    pub order: ArgumentOrder,
    /// `None` when every coefficient is integral and matches the eta product;
    /// otherwise the first failure.
    pub failure: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeSumOutcome {
    pub series: QSeries,
    pub character: LatticeCharacter,
    pub order: ArgumentOrder,
    pub candidates: Vec<LatticeCandidate>,
}

/// Tries every character and argument order against the eta product and
/// returns the first that agrees, together with the verdict on each.
pub fn lattice_sum(n: usize) -> Result<LatticeSumOutcome> {
    let target = eta_quotient(&EtaQuotientSpec::weight_three_level_48(), n)?;
    let mut candidates = Vec::new();
    let mut winner = None;
    for character in LatticeCharacter::ALL {
        for order in [ArgumentOrder::Same, ArgumentOrder::Swapped] {
            let failure = match lattice_sum_with(n, character, order) {
                Err(e) => Some(e.to_string()),
                Ok(s) => match (0..=n).find(|&i| s.coeff(i) != target.coeff(i)) {
                    Some(i) => Some(format!("a_{i} = {} but eta gives {}", s.coeff(i), target.coeff(i))),
                    None => {
                        winner.get_or_insert((s, character, order));
                        None
                    }
                },
            };
            candidates.push(LatticeCandidate { character, order, failure });
        }
    }
    let (series, character, order) = winner.ok_or_else(|| Error::NonIntegralLatticeSum {
        n,
        value: "no character and argument order matches the eta product".into(),
    })?;
    Ok(LatticeSumOutcome { series, character, order, candidates })
}
