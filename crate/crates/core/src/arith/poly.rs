use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Rational};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// From integer coefficients, constant term first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`, handy in valuation arithmetic.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(x + r)`.
    pub fn shift(&self, r: &F) -> Self {
        self.compose(&Self::new(vec![r.clone(), F::one()]))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(i) => self.scale(&i),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); r.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = r[i + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        r.truncate(dd);
        (Self::new(quot), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().inv() {
            Some(i) => (r0.scale(&i), s0.scale(&i), t0.scale(&i)),
            None => (r0, s0, t0),
        }
    }

    /// Largest `e` with `f^e | self`. `self` must be nonzero, `f` nonconstant.
    pub fn multiplicity(&self, f: &Self) -> u32 {
        debug_assert!(!self.is_zero() && !f.is_constant());
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(f) {
            cur = q;
            e += 1;
        }
        e
    }

    /// Number of trailing zero coefficients (order at `x = 0`).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `f_i` with
    /// `self = c · Π f_i^i`, returned as `(i, f_i)` for nonconstant `f_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, Self)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let d = self.derivative();
        let mut a = Self::gcd(self, &d);
        let mut b = self.exact_div(&a).expect("gcd divides");
        let mut c = d.exact_div(&a).expect("gcd divides");
        let mut i = 1;
        loop {
            let dd = &c - &b.derivative();
            if b.is_constant() {
                break;
            }
            a = Self::gcd(&b, &dd);
            if !a.is_constant() {
                out.push((i, a.clone()));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = dd.exact_div(&a).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors, up to a constant.
    pub fn squarefree_part(&self) -> Self {
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }
}

impl Polynomial<Rational> {
    /// Rational roots by the rational root theorem, each listed once.
    pub fn rational_roots(&self) -> Vec<Rational> {
        use num_integer::Integer as _;
        use num_traits::Signed;
        if self.is_zero() {
            return Vec::new();
        }
        let mut f = self.clone();
        let mut roots = Vec::new();
        if f.low_order() > 0 {
            roots.push(Rational::zero());
            f = Self::new(f.coeffs[f.low_order()..].to_vec());
        }
        if f.is_constant() {
            return roots;
        }
        let den_lcm = f
            .coeffs
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<num_bigint::BigInt> = f
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let divisors = |n: &num_bigint::BigInt| -> Vec<num_bigint::BigInt> {
            let mut out = Vec::new();
            let mut d = num_bigint::BigInt::one();
            while &(&d * &d) <= n {
                if (n % &d).is_zero() {
                    out.push(d.clone());
                    out.push(n / &d);
                }
                d += 1;
            }
            out
        };
        for pn in divisors(&a0) {
            for qd in divisors(&an) {
                for sign in [1, -1] {
                    let r = Rational::new(pn.clone() * sign, qd.clone());
                    if !roots.contains(&r) && f.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

/// Pairwise coprime monic squarefree polynomials such that every input is a
/// constant times a product of their powers.
pub fn coprime_basis<F: Field>(inputs: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let parts = inputs
        .iter()
        .flat_map(|p| p.squarefree_decomposition().into_iter().map(|(_, f)| f));
    for p in parts {
        let mut pending = vec![p];
        while let Some(mut f) = pending.pop() {
            if f.is_constant() {
                continue;
            }
            let mut i = 0;
            while i < basis.len() {
                let g = Polynomial::gcd(&f, &basis[i]);
                if g.is_constant() {
                    i += 1;
                    continue;
                }
                let b = basis.swap_remove(i);
                let rest_b = b.exact_div(&g).unwrap();
                f = f.exact_div(&g).unwrap();
                pending.push(g);
                pending.push(rest_b);
                i = 0;
            }
            if !f.is_constant() {
                basis.push(f.monic());
            }
        }
    }
    basis.sort_by_key(|b| b.coeffs.len());
    basis
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_by_value {
    ($ty:ident, $($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, rhs: $ty<F>) -> $ty<F> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_by_value;

forward_by_value!(Polynomial, Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

/// Formats with indeterminate `t`; see [`Polynomial::display_in`].
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<F: Field> Polynomial<F> {
    /// Human-readable form, highest degree first, e.g. `t^4 - 2*t^2 + 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = s.starts_with('-') && !s[1..].contains([' ', '+', '-']);
            if negative {
                s.remove(0);
            }
            if s.contains([' ', '+', '-']) {
                s = format!("({s})");
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = match (k, s.as_str()) {
                (0, _) => s,
                (_, "1") => mono,
                _ => format!("{s}*{mono}"),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<Rational>;

    #[test]
    fn division_round_trips() {
        let a = P::from_ints(&[1, 0, -3, 0, 0, 2]);
        let b = P::from_ints(&[-1, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn xgcd_bezout() {
        let a = P::from_ints(&[-1, 0, 0, 1]);
        let b = P::from_ints(&[-1, 0, 1]);
        let (g, s, t) = P::xgcd(&a, &b);
        assert_eq!(g, P::from_ints(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn multiplicity_and_shift() {
        let t = P::x();
        let f = &t.pow(4) * &(&t.pow(2) - &P::one()).pow(3);
        assert_eq!(f.multiplicity(&t), 4);
        assert_eq!(f.multiplicity(&P::from_ints(&[-1, 1])), 3);
        assert_eq!(f.shift(&Rational::from_integer(1.into())).low_order(), 3);
    }

    #[test]
    fn rational_roots_found() {
        let f = P::from_ints(&[0, -1, 0, 1]).scale(&super::super::field::q(1, 2));
        assert_eq!(
            f.rational_roots(),
            vec![Rational::from_integer((-1).into()), Rational::zero(), Rational::one()]
        );
        assert!(P::from_ints(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn coprime_basis_splits_shared_factors() {
        let a = P::from_ints(&[0, -1, 0, 1]);
        let b = P::from_ints(&[-1, 0, 1]).pow(2);
        let basis = coprime_basis(&[a.clone(), b]);
        assert_eq!(basis.len(), 2);
        let prod = basis.iter().fold(P::one(), |acc, f| &acc * f);
        assert_eq!(prod, a);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                assert!(P::gcd(&basis[i], &basis[j]).is_constant());
            }
        }
    }

    #[test]
    fn squarefree_decomposition_recovers_input() {
        let f = &(&P::from_ints(&[1, 0, 1]) * &P::from_ints(&[2, 0, 1]).pow(2)) * &P::x().pow(3);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.iter().map(|(i, _)| *i).collect::<Vec<_>>(), vec![1, 2, 3]);
        let back = parts.iter().fold(P::one(), |acc, (i, g)| &acc * &g.pow(*i));
        assert_eq!(back, f.monic());
        let basis = coprime_basis(&[f]);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn display() {
        assert_eq!(P::from_ints(&[1, 0, -2, 0, 1]).to_string(), "t^4 - 2*t^2 + 1");
        assert_eq!(P::from_ints(&[0, -1]).display_in("u"), "-u");
        assert_eq!(P::zero().to_string(), "0");
    }
}
