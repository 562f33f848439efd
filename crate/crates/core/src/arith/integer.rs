//! Machine-word and big-integer helpers: cube roots, primality, Legendre symbols.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// `(⌊n^(1/3)⌋, exact)` for `n ≥ 0`.
pub fn icbrt(n: &BigInt) -> Result<(BigInt, bool)> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    let r = n.cbrt();
    let exact = &(&r * &r * &r) == n;
    Ok((r, exact))
}

/// Floor cube root of a `u128`.
#[inline]
pub fn icbrt_u128(n: u128) -> u128 {
    let mut r = (n as f64).cbrt() as u128;
    // the float guess is off by at most a few units at this magnitude
    while r > 0 && cube_exceeds(r, n) {
        r -= 1;
    }
    while !cube_exceeds(r + 1, n) {
        r += 1;
    }
    r
}

#[inline]
fn cube_exceeds(r: u128, n: u128) -> bool {
    match r.checked_mul(r).and_then(|s| s.checked_mul(r)) {
        Some(c) => c > n,
        None => true,
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `≤ n` by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: &BigInt, p: &BigInt) -> Result<i8> {
    let pu = p
        .to_u64()
        .filter(|&p| p > 2 && is_prime(p))
        .ok_or_else(|| Error::NotOddPrime(p.to_string()))?;
    let r = a.mod_floor_u64(pu);
    Ok(legendre_u64(r, pu))
}

/// `(a/p)` for an odd prime `p` already known good.
pub fn legendre_u64(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `(a/p)` for signed `a`.
pub fn legendre_i64(a: i64, p: u64) -> i8 {
    legendre_u64(a.rem_euclid(p as i64) as u64, p)
}

trait ModFloor {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).to_u64().unwrap_or(0)
    }
}

/// `n` is a positive integer power of an odd prime `p ≥ 5`? Returns `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut e = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}
