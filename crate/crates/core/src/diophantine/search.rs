use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::solution::SolutionXYZ;
use crate::arith::integer::icbrt_u128;
use crate::error::{Error, Result};

/// Largest bound for which `xy(x²+y²-1)` fits in a `u128`.
pub const MAX_BOUND: u64 = 1_000_000_000;

/// Moduli whose cubic residues give a cheap sieve before the cube root.
const SIEVE_MODULI: [u64; 3] = [63, 247, 37];

pub struct SearchOptions<'a> {
    pub bound: u64,
    pub include_trivial: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Called with `(rows done, total rows)` as `y`-rows finish.
    pub progress: Option<&'a (dyn Fn(u64, u64) + Sync)>,
}

impl SearchOptions<'_> {
    pub fn new(bound: u64) -> Self {
        SearchOptions { bound, include_trivial: false, jobs: None, progress: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub bound: u64,
    pub include_trivial: bool,
    /// Sorted by `(x, y)`.
    pub solutions: Vec<SolutionXYZ>,
    /// Size of the `(x, 1, x)` family inside the box, reported either way.
    pub trivial_count: u64,
    pub nontrivial_count: u64,
}

/// All `0 < y ≤ x ≤ bound` with `xy(x²+y²-1)` a positive cube.
pub fn search(bound: &BigInt, include_trivial: bool) -> Result<Vec<SolutionXYZ>> {
    let b = bound
        .to_u64()
        .filter(|b| (1..=MAX_BOUND).contains(b))
        .ok_or_else(|| Error::BoundOutOfRange(bound.to_string(), MAX_BOUND))?;
    let mut opts = SearchOptions::new(b);
    opts.include_trivial = include_trivial;
    Ok(search_with(&opts)?.solutions)
}

pub fn search_with(opts: &SearchOptions<'_>) -> Result<SearchReport> {
    let bound = opts.bound;
    if !(1..=MAX_BOUND).contains(&bound) {
        return Err(Error::BoundOutOfRange(bound.to_string(), MAX_BOUND));
    }
    let residues: Vec<Vec<bool>> = SIEVE_MODULI.iter().map(|&m| cube_residues(m)).collect();
    let done = std::sync::atomic::AtomicU64::new(0);
    let run = || -> Vec<(u64, u64, u128)> {
        (1..=bound)
            .into_par_iter()
            .flat_map_iter(|y| {
                let row = scan_row(y, bound, &residues);
                let d = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                if let Some(cb) = opts.progress {
                    cb(d, bound);
                }
                row
            })
            .collect()
    };
    let raw = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut solutions: Vec<SolutionXYZ> = raw
        .into_iter()
        .filter(|&(x, y, z)| opts.include_trivial || !(y == 1 && x as u128 == z))
        .map(|(x, y, z)| SolutionXYZ::new_unchecked(x, y, BigInt::from(z)))
        .collect();
    solutions.sort();
    let trivial_count = bound;
    let nontrivial_count =
        solutions.len() as u64 - if opts.include_trivial { trivial_count } else { 0 };
    Ok(SearchReport {
        bound,
        include_trivial: opts.include_trivial,
        solutions,
        trivial_count,
        nontrivial_count,
    })
}

fn cube_residues(m: u64) -> Vec<bool> {
    let mut r = vec![false; m as usize];
    for a in 0..m {
        r[((a * a % m) * a % m) as usize] = true;
    }
    r
}

/// Solutions `(x, y, z)` with this `y` and `y ≤ x ≤ bound`.
fn scan_row(y: u64, bound: u64, residues: &[Vec<bool>]) -> Vec<(u64, u64, u128)> {
    // row[i][x mod m] says whether xy(x²+y²-1) is a cube residue mod m
    let rows: Vec<Vec<bool>> = SIEVE_MODULI
        .iter()
        .zip(residues)
        .map(|(&m, res)| {
            let (ym, y2) = (y % m, (y % m) * (y % m) % m);
            (0..m)
                .map(|xm| {
                    let inner = (xm * xm + y2 + m - 1) % m;
                    res[((xm * ym % m) * inner % m) as usize]
                })
                .collect()
        })
        .collect();
    let mut idx: Vec<usize> = SIEVE_MODULI.iter().map(|&m| (y % m) as usize).collect();
    let y128 = y as u128;
    let c = y128 * y128 - 1;
    let mut out = Vec::new();
    for x in y..=bound {
        if rows.iter().zip(&idx).all(|(r, &i)| r[i]) {
            let x128 = x as u128;
            let n = x128 * y128 * (x128 * x128 + c);
            let z = icbrt_u128(n);
            if z * z * z == n && z > 0 {
                out.push((x, y, z));
            }
        }
        for (i, &m) in idx.iter_mut().zip(&SIEVE_MODULI) {
            *i += 1;
            if *i == m as usize {
                *i = 0;
            }
        }
    }
    out
}
