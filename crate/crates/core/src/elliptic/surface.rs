//! Identities on the quartic `XY(X²+Y²-W²) = Z³W` checked over `Q(ζ₁₂)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::linalg::{nullspace, rref};
use crate::arith::{Field, HasOmega, MPoly, NfElem, Relation, Zeta12};

type Z = NfElem<Zeta12>;
type M = MPoly<Z>;

/// Knobs for deliberately broken variants of the check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InoseOptions {
    /// Constant `c` in `y² = x³ - c·t²(t-1)²(t+1)²(t²+1)²`.
    pub coefficient: i64,
    /// Negate `W'`.
    pub flip_w_prime: bool,
}

impl Default for InoseOptions {
    fn default() -> Self {
        InoseOptions { coefficient: 432, flip_w_prime: false }
    }
}

// variables t, x, y
fn tv(cs: &[i64]) -> M {
    cs.iter().enumerate().fold(M::zero(3), |acc, (k, &c)| {
        &acc + &M::term(3, vec![k as u32, 0, 0], Z::from_int(c))
    })
}

fn c(z: Z) -> M {
    M::constant(3, z)
}

/// Reduced residuals of the two quartic models pulled back to the second
/// fibration: `(XY(X²+Y²-W²) - Z³W, X'(X'³+Y'³) - Z'(Z'³+W'³))`.
pub fn inose_residuals(opts: InoseOptions) -> (M, M) {
    let (x, y) = (M::var(3, 1), M::var(3, 2));
    let t = tv(&[0, 1]);
    let s3 = c(Z::sqrt3());
    let sm3 = c(Z::sqrt_minus3());
    let i = c(Z::i());
    let k = |n: i64| c(Z::from_int(n));
    let t2p1 = tv(&[1, 0, 1]);
    let t4m1 = tv(&[-1, 0, 0, 0, 1]);

    let big_x = &(&(&k(72) * &s3) * &t) * &t2p1.pow(2);
    let big_y = &(&k(3) * &y) - &(&(&(&k(36) * &sm3) * &t) * &t4m1);
    let big_z = &(&(&k(-6) * &sm3) * &t2p1) * &x;
    let big_w = -&(&t
        * &(&(&(&k(3) * &i) * &y) - &(&(&(&(&k(36) * &s3) * &t) * &tv(&[3, 0, 1])) * &t2p1)));
    let quartic = &(&(&big_x * &big_y)
        * &(&(&big_x.pow(2) + &big_y.pow(2)) - &big_w.pow(2)))
        - &(&big_z.pow(3) * &big_w);

    let x2 = x.pow(2);
    let xp = &(&(&(&k(-2) * &tv(&[1, 0, 0, 0, 1])) * &y) - &(&t * &x2))
        + &(&(&(&k(12) * &tv(&[0, 0, 0, 1])) * &x) - &(&(&k(72) * &t) * &t4m1.pow(2)));
    let yp = &(&(&(&k(-2) * &tv(&[-1, 0, 0, 0, 2])) * &y) + &(&t * &x2))
        + &(&(&(&(&k(-12) * &tv(&[0, 0, 0, 1])) * &t4m1) * &x) + &(&(&k(72) * &t) * &t4m1));
    let zp = &t * &xp;
    let mut wp = &(&(&(&k(2) * &t) * &tv(&[-2, 0, 0, 0, 1])) * &y) + &(&tv(&[0, 0, 1]) * &x2);
    wp = &(&wp + &(&(&k(12) * &t4m1) * &x)) - &(&(&k(72) * &tv(&[0, 0, 0, 0, 0, 0, 1])) * &t4m1);
    if opts.flip_w_prime {
        wp = -&wp;
    }
    let inose = &(&xp * &(&xp.pow(3) + &yp.pow(3))) - &(&zp * &(&zp.pow(3) + &wp.pow(3)));

    let base = &(&t * &tv(&[-1, 0, 1])) * &t2p1;
    let rhs = &x.pow(3) - &(&k(opts.coefficient) * &base.pow(2));
    let rel = [Relation::new(2, rhs)];
    (
        quartic.normal_form(&rel).expect("triangular"),
        inose.normal_form(&rel).expect("triangular"),
    )
}

/// Both substitutions land on their quartics identically.
pub fn verify_inose_and_eps2() -> bool {
    let (a, b) = inose_residuals(InoseOptions::default());
    a.is_zero() && b.is_zero()
}

/// `XY(X²+Y²-W²) - Z³W` in `X, Y, Z, W`.
pub fn quartic() -> M {
    let v = |i| M::var(4, i);
    let (x, y, z, w) = (v(0), v(1), v(2), v(3));
    &(&(&x * &y) * &(&(&x.pow(2) + &y.pow(2)) - &w.pow(2))) - &(&z.pow(3) * &w)
}

/// The 18 lines, each cut out by two linear forms in `(X, Y, Z, W)`.
pub fn lines() -> Vec<[[Z; 4]; 2]> {
    let o = Z::from_int(0);
    let e = Z::from_int(1);
    let n = Z::from_int(-1);
    let i = Z::i();
    let w = Z::omega();
    let w2 = w.powu(2);
    let form = |a: [&Z; 4]| a.map(Clone::clone);
    let mut out = vec![
        [form([&e, &o, &o, &o]), form([&o, &o, &e, &o])],
        [form([&o, &e, &o, &o]), form([&o, &o, &e, &o])],
        [form([&e, &o, &o, &o]), form([&o, &o, &o, &e])],
        [form([&o, &e, &o, &o]), form([&o, &o, &o, &e])],
        [form([&e, &(-i.clone()), &o, &o]), form([&o, &o, &o, &e])],
        [form([&e, &i, &o, &o]), form([&o, &o, &o, &e])],
    ];
    // X = ±W, Y = ±ωᵏZ and Y = ±W, X = ±ωᵏZ
    for swap in [false, true] {
        for sign in [&e, &n] {
            for r in [&e, &w, &w2] {
                let sr = -(sign.clone() * r.clone());
                let (p, q) = if swap { (1, 0) } else { (0, 1) };
                let mut f1 = [o.clone(), o.clone(), o.clone(), o.clone()];
                f1[p] = e.clone();
                f1[3] = -sign.clone();
                let mut f2 = [o.clone(), o.clone(), o.clone(), o.clone()];
                f2[q] = e.clone();
                f2[2] = sr;
                out.push([f1, f2]);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinesReport {
    /// Per singular point: quartic and all partials vanish.
    pub singular_points: Vec<bool>,
    /// Per line: the quartic vanishes on it.
    pub lines_on_surface: Vec<bool>,
    /// Orbits of the symmetry group on the lines, 1-based, sorted.
    pub orbits: Vec<Vec<usize>>,
}

impl LinesReport {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn all_pass(&self) -> bool {
        let expected: Vec<Vec<usize>> =
            vec![vec![1, 2], vec![3, 4], vec![5, 6], (7..=18).collect()];
        self.singular_points.iter().all(|&b| b)
            && self.lines_on_surface.iter().all(|&b| b)
            && self.orbits == expected
    }
}

/// Row-reduced spanning set of the line, comparable across representations.
fn span_key(basis: &[Vec<Z>]) -> Vec<Vec<Z>> {
    rref(basis)
}

fn act(g: usize, v: &[Z]) -> Vec<Z> {
    let mut out = v.to_vec();
    match g {
        0 => {
            out[0] = -v[0].clone();
            out[2] = -v[2].clone();
        }
        1 => {
            out[1] = -v[1].clone();
            out[2] = -v[2].clone();
        }
        2 => out.swap(0, 1),
        _ => out[2] = Z::omega() * v[2].clone(),
    }
    out
}

pub fn verify_lines_and_singular_points() -> LinesReport {
    let f = quartic();
    let partials: Vec<M> = (0..4).map(|i| f.partial(i)).collect();
    let points: [[i64; 4]; 5] = [[0, 0, 0, 1], [1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, 0, 1], [0, -1, 0, 1]];
    let singular_points = points
        .iter()
        .map(|p| {
            let at: Vec<Z> = p.iter().map(|&c| Z::from_int(c)).collect();
            f.eval(&at).is_zero() && partials.iter().all(|d| d.eval(&at).is_zero())
        })
        .collect();

    let bases: Vec<Vec<Vec<Z>>> = lines()
        .iter()
        .map(|[a, b]| nullspace(&[a.to_vec(), b.to_vec()], 4))
        .collect();
    let lines_on_surface = bases
        .iter()
        .map(|basis| {
            // a·v1 + b·v2 with a, b formal
            let pa = MPoly::<Z>::var(2, 0);
            let pb = MPoly::<Z>::var(2, 1);
            let images: Vec<MPoly<Z>> = (0..4)
                .map(|j| {
                    &pa.scale(&basis[0][j]) + &pb.scale(&basis[1][j])
                })
                .collect();
            basis.len() == 2 && f.substitute(&images).is_zero()
        })
        .collect();

    let keys: Vec<Vec<Vec<Z>>> = bases.iter().map(|b| span_key(b)).collect();
    let mut orbit_of = vec![usize::MAX; keys.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..keys.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut stack = vec![start];
        while let Some(l) = stack.pop() {
            for g in 0..4 {
                let img: Vec<Vec<Z>> = bases[l].iter().map(|v| act(g, v)).collect();
                let key = span_key(&img);
                if let Some(j) = keys.iter().position(|k| *k == key) {
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        members.sort();
        orbits.push(members.into_iter().map(|m| m + 1).collect());
    }
    LinesReport { singular_points, lines_on_surface, orbits }
}
