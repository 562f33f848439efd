use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::qseries::QSeries;
use crate::arith::integer::{is_prime, legendre_i64, primes_up_to};
use crate::arith::{represent_eisenstein, EisensteinInt};
use crate::error::{Error, Result};

fn check_prime(p: u64) -> Result<()> {
    if p < 5 {
        return Err(Error::PrimeTooSmall(p));
    }
    if !is_prime(p) {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    Ok(())
}

/// `α = (-4/p) ω^a β²` where `β ≡ ω^a (mod 2)` and `N(β) = p`.
pub fn alpha_from_beta(beta: &EisensteinInt, p: u64) -> EisensteinInt {
    let w = EisensteinInt::omega();
    let a = (0..3)
        .find(|&a| w.pow(a).mod2() == beta.mod2())
        .expect("β has odd norm");
    let alpha = &w.pow(a) * &(beta * beta);
    if p % 4 == 1 {
        alpha
    } else {
        -alpha
    }
}

/// The Frobenius eigenvalue `α` at a split prime, `None` when `p ≡ 2 (mod 3)`.
pub fn frobenius_alpha(p: u64) -> Result<Option<EisensteinInt>> {
    check_prime(p)?;
    if p % 3 == 2 {
        return Ok(None);
    }
    let (m, n) = represent_eisenstein(p)?;
    Ok(Some(alpha_from_beta(&EisensteinInt::new(m, n), p)))
}

/// `a_p = α + ᾱ`, zero for `p ≡ 2 (mod 3)`.
pub fn ap_closed_form(p: u64) -> Result<BigInt> {
    Ok(frobenius_alpha(p)?.map(|a| a.trace()).unwrap_or_default())
}

/// `ε(p) = (-3/p)` away from 2 and 3.
pub fn nebentypus(p: u64) -> i64 {
    match p {
        2 | 3 => 0,
        _ => legendre_i64(-3, p) as i64,
    }
}

/// Coefficients `a_0..a_n` from the prime values and Hecke multiplicativity.
pub fn hecke_expand(n: usize) -> QSeries {
    let mut a = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return QSeries::from_coefficients(0, a);
    }
    a[1] = BigInt::one();
    let primes = primes_up_to(n as u64);
    let prime_values: Vec<(u64, BigInt)> = primes
        .par_iter()
        .map(|&p| {
            let ap = match p {
                2 => BigInt::zero(),
                3 => BigInt::from(3),
                _ => ap_closed_form(p).expect("prime ≥ 5"),
            };
            (p, ap)
        })
        .collect();
    let mut spf = vec![0usize; n + 1];
    for (p, ap) in prime_values {
        let p = p as usize;
        for m in (p..=n).step_by(p) {
            if spf[m] == 0 {
                spf[m] = p;
            }
        }
        let eps_p2 = BigInt::from(nebentypus(p as u64) * (p * p) as i64);
        a[p] = ap.clone();
        let (mut prev, mut pk) = (1usize, p);
        while pk <= n / p {
            let next = pk * p;
            a[next] = &ap * &a[pk] - &eps_p2 * &a[prev];
            prev = pk;
            pk = next;
        }
    }
    for m in 2..=n {
        let p = spf[m];
        let mut pk = p;
        while (m / pk) % p == 0 {
            pk *= p;
        }
        if pk != m {
            a[m] = &a[pk] * &a[m / pk];
        }
    }
    QSeries::from_coefficients(n, a)
}
