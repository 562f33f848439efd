use serde::Serialize;

use crate::arith::integer::{is_prime, pow_mod};
use crate::error::{Error, Result};

/// Largest field for which log/antilog tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

/// `F_q`, `q = p^n`, with elements encoded as `Σ c_i p^i` for the residue
/// `Σ c_i X^i` modulo a fixed irreducible polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteField {
    p: u64,
    n: u32,
    q: u64,
    /// Monic modulus, constant term first, including the leading 1.
    modulus: Vec<u64>,
    #[serde(skip)]
    exp: Vec<u32>,
    #[serde(skip)]
    log: Vec<u32>,
    #[serde(skip)]
    chi: Vec<i8>,
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// `a mod m` over `F_p`, `m` monic.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            a[shift + i] = (a[shift + i] + (p - lead) * c % p) % p;
        }
    }
    trim(a)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().expect("nonempty"), p - 2, p);
        let monic: Vec<u64> = b.iter().map(|c| c * inv % p).collect();
        let r = poly_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

/// Rabin's test: no common factor with `X^{p^i} - X` for `i ≤ n/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    let x = vec![0, 1];
    let mut power = x.clone();
    for _ in 0..n / 2 {
        let mut acc = vec![1];
        let mut base = power.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_rem(poly_mul(&acc, &base, p), f, p);
            }
            base = poly_rem(poly_mul(&base, &base, p), f, p);
            e >>= 1;
        }
        power = acc;
        let mut diff = power.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if poly_gcd(f.to_vec(), diff, p).len() > 1 {
            return false;
        }
    }
    true
}

impl FiniteField {
    /// `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// `F_{p^n}` built on the irreducible monic polynomial whose lower
    /// coefficients, read as base-`p` digits, form the smallest integer.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) || n == 0 {
            return Err(Error::InvalidField(format!("p = {p}, n = {n}")));
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{n} exceeds {MAX_FIELD_ORDER}")))?;
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|code| {
                    let mut f = digits(code, p, n as usize);
                    f.push(1);
                    f
                })
                .find(|f| f[0] != 0 && is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let mut field = FiniteField { p, n, q, modulus, exp: Vec::new(), log: Vec::new(), chi: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let (pa, pb) = (digits(a, self.p, self.n as usize), digits(b, self.p, self.n as usize));
        let r = poly_rem(poly_mul(&trim(pa), &trim(pb), self.p), &self.modulus, self.p);
        undigits(&r, self.p)
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let mut factors = Vec::new();
        let mut m = order;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        let pow_slow = |g: u64, mut e: u64| {
            let (mut acc, mut base) = (1u64, g);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_slow(acc, base);
                }
                base = self.mul_slow(base, base);
                e >>= 1;
            }
            acc
        };
        let g = (2..self.q)
            .find(|&g| factors.iter().all(|&f| pow_slow(g, order / f) != 1))
            .unwrap_or(1);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, g);
        }
        self.exp = exp;
        self.log = log;
        let half = order / 2;
        self.chi = (0..self.q)
            .map(|x| match x {
                0 => 0,
                _ if self.pow(x, half) == 1 => 1,
                _ => -1,
            })
            .collect();
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.q
    }

    pub fn coefficients(&self, x: u64) -> Vec<u64> {
        digits(x, self.p, self.n as usize)
    }

    pub fn from_coefficients(&self, c: &[u64]) -> u64 {
        undigits(c, self.p)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.n == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1);
        self.exp[e as usize] as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return u64::from(e == 0);
        }
        let l = self.log[a as usize] as u128 * e as u128 % (self.q - 1) as u128;
        self.exp[l as usize] as u64
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.q - 2))
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Quadratic character: `0`, `1` or `-1`.
    pub fn is_square(&self, a: u64) -> i8 {
        self.chi[a as usize]
    }
}

fn digits(mut x: u64, p: u64, n: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(n);
    for _ in 0..n {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}
