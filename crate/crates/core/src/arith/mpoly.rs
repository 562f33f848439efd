use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::field::Field;
use crate::error::{Error, Result};

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

/// Rewrite rule `var² ↦ replacement`.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub var: usize,
    pub replacement: MPoly<F>,
}

impl<F: Field> Relation<F> {
    pub fn new(var: usize, replacement: MPoly<F>) -> Self {
        Relation { var, replacement }
    }
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn int(nvars: usize, n: i64) -> Self {
        Self::constant(nvars, F::from_int(n))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(nvars, e, F::one())
    }

    pub fn term(nvars: usize, exps: Vec<u32>, c: F) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(a) => {
                let s = a.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *a = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &[F]) -> F {
        assert_eq!(at.len(), self.nvars);
        self.terms.iter().fold(F::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(at)
                .fold(c.clone(), |m, (&k, x)| m * x.powu(k));
            acc + m
        })
    }

    /// Substitute polynomials for every variable.
    pub fn substitute(&self, images: &[MPoly<F>]) -> MPoly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut m = MPoly::constant(target, c.clone());
            for (k, img) in e.iter().zip(images) {
                if *k > 0 {
                    m = &m * &img.pow(*k);
                }
            }
            out = &out + &m;
        }
        out
    }

    pub fn partial(&self, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[v] -= 1;
            out.add_term(e2, c.clone() * F::from_int(e[v] as i64));
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Reduce modulo rules `v² ↦ R_v` until every eliminated variable has
    /// degree below 2.
    ///
    /// The rules must be triangular: each variable eliminated once, each
    /// replacement of degree ≤ 1 in its own variable, and no cycles among the
    /// eliminated variables through the replacements. Under these conditions
    /// each rewrite lowers the exponent vector lexicographically (upstream
    /// variables first), so the loop terminates.
    pub fn normal_form(&self, relations: &[Relation<F>]) -> Result<Self> {
        check_triangular(relations, self.nvars)?;
        let mut cur = self.clone();
        loop {
            let mut changed = false;
            let mut next = Self::zero(self.nvars);
            for (e, c) in &cur.terms {
                match relations.iter().find(|r| e[r.var] >= 2) {
                    Some(rel) => {
                        changed = true;
                        let mut rest = e.clone();
                        let half = rest[rel.var] / 2;
                        rest[rel.var] %= 2;
                        let piece = &Self::term(self.nvars, rest, c.clone())
                            * &rel.replacement.pow(half);
                        next = &next + &piece;
                    }
                    None => next.add_term(e.clone(), c.clone()),
                }
            }
            cur = next;
            if !changed {
                return Ok(cur);
            }
        }
    }
}

fn check_triangular<F: Field>(relations: &[Relation<F>], nvars: usize) -> Result<()> {
    let mut seen = vec![false; nvars];
    for r in relations {
        if r.var >= nvars || r.replacement.nvars != nvars {
            return Err(Error::NonTriangular(format!("variable index {} out of range", r.var)));
        }
        if std::mem::replace(&mut seen[r.var], true) {
            return Err(Error::NonTriangular(format!("variable {} eliminated twice", r.var)));
        }
        if r.replacement.degree_in(r.var) >= 2 {
            return Err(Error::NonTriangular(format!(
                "replacement for variable {} has degree >= 2 in it",
                r.var
            )));
        }
    }
    // depth-first cycle search over "replacement of a mentions b"
    let mentions = |a: &Relation<F>, b: &Relation<F>| a.var != b.var && a.replacement.degree_in(b.var) > 0;
    let n = relations.len();
    let mut state = vec![0u8; n];
    fn visit<F: Field>(
        i: usize,
        rels: &[Relation<F>],
        state: &mut [u8],
        mentions: &dyn Fn(&Relation<F>, &Relation<F>) -> bool,
    ) -> bool {
        state[i] = 1;
        for j in 0..rels.len() {
            if mentions(&rels[i], &rels[j])
                && (state[j] == 1 || (state[j] == 0 && !visit(j, rels, state, mentions)))
            {
                return false;
            }
        }
        state[i] = 2;
        true
    }
    for i in 0..n {
        if state[i] == 0 && !visit(i, relations, &mut state, &mentions) {
            return Err(Error::NonTriangular("cyclic dependency among eliminated variables".into()));
        }
    }
    Ok(())
}

impl<F: Field> Add for &MPoly<F> {
    type Output = MPoly<F>;
    fn add(self, r: &MPoly<F>) -> MPoly<F> {
        let mut out = self.clone();
        for (e, c) in &r.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &MPoly<F> {
    type Output = MPoly<F>;
    fn sub(self, r: &MPoly<F>) -> MPoly<F> {
        let mut out = self.clone();
        for (e, c) in &r.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &MPoly<F> {
    type Output = MPoly<F>;
    fn mul(self, r: &MPoly<F>) -> MPoly<F> {
        let mut out = MPoly::zero(self.nvars.max(r.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &r.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        self.scale(&-F::one())
    }
}

super::poly::forward_by_value!(MPoly, Add add, Sub sub, Mul mul);

impl<F: Field> MPoly<F> {
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(names)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}
