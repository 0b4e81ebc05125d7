//! Dense linear algebra over GF(p) on row-major `Vec<Vec<u64>>` matrices.

use crate::field::PrimeField;

pub type FpMatrix = Vec<Vec<u64>>;
pub type FpVector = Vec<u64>;

pub fn identity(n: usize) -> FpMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(f: &PrimeField, a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let p = f.p() as u128;
    let mut out = vec![vec![0u64; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            let mut acc: u128 = 0;
            for k in 0..inner {
                acc += a[i][k] as u128 * b[k][j] as u128;
            }
            out[i][j] = (acc % p) as u64;
        }
    }
    out
}

pub fn mat_vec(f: &PrimeField, a: &FpMatrix, v: &[u64]) -> FpVector {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

pub fn transpose(a: &FpMatrix) -> FpMatrix {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

/// `xᵀ G y`.
pub fn bilinear(f: &PrimeField, g: &FpMatrix, x: &[u64], y: &[u64]) -> u64 {
    let gy = mat_vec(f, g, y);
    dot(f, x, &gy)
}

pub fn dot(f: &PrimeField, x: &[u64], y: &[u64]) -> u64 {
    x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Reduced row echelon form in place; returns pivot columns. Pivots are chosen
/// as the first nonzero entry at or below the current row.
pub fn rref(f: &PrimeField, m: &mut FpMatrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let t = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &PrimeField, m: &FpMatrix) -> usize {
    let mut a = m.clone();
    rref(f, &mut a).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column (in increasing order).
pub fn null_space(f: &PrimeField, m: &FpMatrix, cols: usize) -> Vec<FpVector> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[r][fc]);
            }
            v
        })
        .collect()
}

pub fn inverse(f: &PrimeField, m: &FpMatrix) -> Option<FpMatrix> {
    let n = m.len();
    let mut aug: FpMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    let piv = rref(f, &mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det(f: &PrimeField, m: &FpMatrix) -> u64 {
    let n = m.len();
    let mut a = m.clone();
    let mut d = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            a.swap(pr, c);
            d = f.neg(d);
        }
        d = f.mul(d, a[c][c]);
        let inv = f.inv(a[c][c]);
        for i in c + 1..n {
            if a[i][c] != 0 {
                let factor = f.mul(a[i][c], inv);
                for j in c..n {
                    let t = f.mul(factor, a[c][j]);
                    a[i][j] = f.sub(a[i][j], t);
                }
            }
        }
    }
    d
}

/// Gram matrix of the form `g` on the listed vectors.
pub fn restrict_form(f: &PrimeField, g: &FpMatrix, basis: &[FpVector]) -> FpMatrix {
    basis
        .iter()
        .map(|x| basis.iter().map(|y| bilinear(f, g, x, y)).collect())
        .collect()
}
