//! Dense square integer matrices and integer polynomials.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    n: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows<T: Copy + Into<i128>>(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "matrix must be square");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x.into();
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn scale(&self, c: i128) -> Self {
        IntMat {
            n: self.n,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &IntMat) -> Self {
        assert_eq!(self.n, other.n);
        IntMat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a = self.data.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for c in 0..n {
                    a.swap(k * n + c, r * n + c);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
                }
                a[i * n + k] = 0;
            }
            prev = pivot;
        }
        sign * a[n * n - 1]
    }

    /// Characteristic polynomial det(xI − M) by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n;
        // c holds coefficients from highest degree down.
        let mut c: Vec<i128> = vec![1];
        for r in 0..n {
            // Leading principal block of size r+1: A = [[M_rr?]] partitioned as
            // [[a, R], [C, A_r]] where the new row/column is index r.
            let a = self[(r, r)];
            // R: row r restricted to columns 0..r ; C: column r restricted to rows 0..r.
            let row: Vec<i128> = (0..r).map(|j| self[(r, j)]).collect();
            let col: Vec<i128> = (0..r).map(|i| self[(i, r)]).collect();
            // Toeplitz column: [1, -a, -R C, -R A C, -R A^2 C, ...] of length r+2.
            let mut t = vec![0i128; r + 2];
            t[0] = 1;
            t[1] = -a;
            let mut v = col.clone();
            for k in 2..r + 2 {
                let rv: i128 = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                t[k] = -rv;
                // v <- A_r v
                v = (0..r)
                    .map(|i| (0..r).map(|j| self[(i, j)] * v[j]).sum())
                    .collect();
            }
            // new c = T * c, T lower-triangular Toeplitz (r+2) x (r+1).
            let mut nc = vec![0i128; r + 2];
            for (i, slot) in nc.iter_mut().enumerate() {
                for (j, &cj) in c.iter().enumerate() {
                    if i >= j {
                        *slot += t[i - j] * cj;
                    }
                }
            }
            c = nc;
        }
        c.reverse();
        IntPoly::new(c)
    }

    /// Evaluate an integer polynomial at this matrix (Horner).
    pub fn eval_poly(&self, poly: &IntPoly) -> IntMat {
        let mut acc = Self::zeros(self.n);
        for &coef in poly.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..self.n {
                acc[(i, i)] += coef;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &IntMat {
    type Output = IntMat;

    fn mul(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

/// Integer polynomial, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// From coefficients listed highest degree first.
    pub fn from_high(high: &[i128]) -> Self {
        let mut c = high.to_vec();
        c.reverse();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut c = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    /// Remainder of `x^e` modulo this monic polynomial.
    pub fn x_pow_mod(&self, e: u32) -> IntPoly {
        assert_eq!(*self.coeffs.last().unwrap(), 1, "modulus must be monic");
        let d = self.degree();
        let mut r = vec![0i128; d.max(1)];
        r[0] = 1;
        for _ in 0..e {
            // r <- x * r mod self
            let top = if d > 0 { r[d - 1] } else { 0 };
            for i in (1..d).rev() {
                r[i] = r[i - 1];
            }
            if d > 0 {
                r[0] = 0;
            }
            for i in 0..d {
                r[i] -= top * self.coeffs[i];
            }
        }
        IntPoly::new(r)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match deg {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a == 1 => write!(f, "x^{deg}")?,
                _ => write!(f, "{a}x^{deg}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_char_poly() {
        let p = IntMat::identity(2).char_poly();
        assert_eq!(p, IntPoly::from_high(&[1, -2, 1]));
        assert_eq!(p.to_string(), "x^2 - 2x + 1");
    }

    #[test]
    fn char_poly_matches_det_expansion() {
        let m = IntMat::from_rows(&[vec![2i64, -1, 0], vec![3, 1, 4], vec![-2, 5, 7]]);
        let cp = m.char_poly();
        // Constant term is (-1)^n det(M).
        assert_eq!(cp.coeffs()[0], -m.det());
        // Trace appears as minus the subleading coefficient.
        assert_eq!(cp.coeffs()[2], -(2 + 1 + 7));
        assert!(m.eval_poly(&cp).is_zero());
    }

    #[test]
    fn bareiss_det() {
        let m = IntMat::from_rows(&[vec![0i64, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(m.det(), -2);
        assert_eq!(IntMat::identity(5).det(), 1);
    }

    #[test]
    fn x_pow_mod_small() {
        // x^3 mod (x^2 - 1) = x
        let m = IntPoly::from_high(&[1, 0, -1]);
        assert_eq!(m.x_pow_mod(3), IntPoly::from_high(&[1, 0]));
    }
}
