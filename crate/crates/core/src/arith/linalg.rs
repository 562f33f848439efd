//! Dense Gaussian elimination over an exact field.

use super::field::Field;

/// Reduced row echelon form with zero rows dropped.
pub fn rref<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot nonzero");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let sub = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Basis of `{v : A v = 0}`.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let red = rref(rows);
    let pivots: Vec<usize> = red
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Determinant of a square matrix.
pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = d * a[c][c].clone();
        let inv = a[c][c].inv().expect("pivot nonzero");
        for i in c + 1..n {
            let f = a[i][c].clone() * inv.clone();
            for j in c..n {
                let sub = f.clone() * a[c][j].clone();
                a[i][j] = a[i][j].clone() - sub;
            }
        }
    }
    d
}
