//! Small dense matrices over GF(p) with `p < 256` and dimension at most 8,
//! stored inline so they can be hashed and copied cheaply.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::intmat::IntMat;
use crate::linalg::FpMatrix;

pub const MAX_DIM: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat {
    n: u8,
    p: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

/// Column vector over GF(p), inline storage.
pub type Vector = [u8; MAX_DIM];

pub fn check_params(n: usize, p: u64) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::Unsupported(format!(
            "matrix dimension {n} outside 1..={MAX_DIM}"
        )));
    }
    PrimeField::new(p)?;
    if p > 255 {
        return Err(Error::Unsupported(format!(
            "group engine supports p < 256, got {p}"
        )));
    }
    Ok(())
}

impl Mat {
    pub fn zero(n: usize, p: u64) -> Mat {
        debug_assert!(n <= MAX_DIM && p < 256);
        Mat {
            n: n as u8,
            p: p as u8,
            e: [0; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize, p: u64) -> Mat {
        let mut m = Mat::zero(n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn scalar(n: usize, p: u64, c: i64) -> Mat {
        let f = PrimeField::new(p).expect("prime");
        let mut m = Mat::zero(n, p);
        for i in 0..n {
            m.set(i, i, f.reduce(c) as u8);
        }
        m
    }

    pub fn from_fp(f: &PrimeField, rows: &FpMatrix) -> Result<Mat> {
        let n = rows.len();
        check_params(n, f.p())?;
        let mut m = Mat::zero(n, f.p());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, (x % f.p()) as u8);
            }
        }
        Ok(m)
    }

    pub fn from_int(m: &IntMat, p: u64) -> Result<Mat> {
        let n = m.n();
        check_params(n, p)?;
        let f = PrimeField::new(p)?;
        let mut out = Mat::zero(n, p);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, f.reduce_i128(m[(i, j)]) as u8);
            }
        }
        Ok(out)
    }

    pub fn to_fp(&self) -> FpMatrix {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.get(i, j) as u64).collect())
            .collect()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n as usize + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.e[i * self.n as usize + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n();
        let p = self.p as u32;
        let mut out = Mat::zero(n, self.p());
        for i in 0..n {
            let row = &self.e[i * n..i * n + n];
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += row[k] as u32 * rhs.e[k * n + j] as u32;
                }
                out.e[i * n + j] = (acc % p) as u8;
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut t = *self;
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        let f = PrimeField::new(self.p()).ok()?;
        crate::linalg::inverse(&f, &self.to_fp()).map(|m| Mat::from_fp(&f, &m).expect("same shape"))
    }

    pub fn det(&self) -> u64 {
        let f = PrimeField::new(self.p()).expect("prime");
        crate::linalg::det(&f, &self.to_fp())
    }

    pub fn pow(&self, mut e: u128) -> Mat {
        let mut base = *self;
        let mut acc = Mat::identity(self.n(), self.p());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `M v` for a column vector.
    #[inline]
    pub fn apply(&self, v: &Vector) -> Vector {
        let n = self.n();
        let p = self.p as u32;
        let mut out = [0u8; MAX_DIM];
        for i in 0..n {
            let mut acc = 0u32;
            for k in 0..n {
                acc += self.e[i * n + k] as u32 * v[k] as u32;
            }
            out[i] = (acc % p) as u8;
        }
        out
    }

    /// Whether `Mᵀ G M = G`.
    pub fn preserves(&self, gram: &Mat) -> bool {
        self.transpose().mul(gram).mul(self) == *gram
    }

    /// Injective radix-p packing of all n² entries, row-major.
    pub fn code(&self) -> u128 {
        let n = self.n();
        let p = self.p as u128;
        let mut c: u128 = 0;
        for k in (0..n * n).rev() {
            c = c * p + self.e[k] as u128;
        }
        c
    }

    pub fn decode(code: u128, n: usize, p: u64) -> Mat {
        let mut m = Mat::zero(n, p);
        let mut c = code;
        for k in 0..n * n {
            m.e[k] = (c % p as u128) as u8;
            c /= p as u128;
        }
        m
    }

    /// Least `k ≥ 1` with `M^k = I`. With a known multiple of the order, strip
    /// prime factors; otherwise iterate.
    pub fn order(&self, multiple: Option<u128>) -> u128 {
        if let Some(mut k) = multiple {
            debug_assert!(self.pow(k).is_identity());
            for q in prime_factors(k) {
                while k % q == 0 && self.pow(k / q).is_identity() {
                    k /= q;
                }
            }
            return k;
        }
        let mut acc = *self;
        let mut k = 1u128;
        while !acc.is_identity() {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }
}

pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn vector_code(v: &Vector, n: usize, p: u64) -> u64 {
    let mut c = 0u64;
    for k in (0..n).rev() {
        c = c * p + v[k] as u64;
    }
    c
}

pub fn vector_decode(code: u64, n: usize, p: u64) -> Vector {
    let mut v = [0u8; MAX_DIM];
    let mut c = code;
    for x in v.iter_mut().take(n) {
        *x = (c % p) as u8;
        c /= p;
    }
    v
}

pub fn unit_vector(n: usize, k: usize) -> Vector {
    debug_assert!(k < n);
    let mut v = [0u8; MAX_DIM];
    v[k] = 1;
    v
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat(p={}, {:?})", self.p, self.to_fp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip() {
        let f = PrimeField::new(13).unwrap();
        let m = Mat::from_fp(&f, &vec![vec![1, 12, 0], vec![5, 3, 7], vec![0, 0, 11]]).unwrap();
        assert_eq!(Mat::decode(m.code(), 3, 13), m);
        let v = [3, 0, 12, 0, 0, 0, 0, 0];
        assert_eq!(vector_decode(vector_code(&v, 3, 13), 3, 13), v);
    }

    #[test]
    fn inverse_and_order() {
        let f = PrimeField::new(7).unwrap();
        let m = Mat::from_fp(&f, &vec![vec![0, 6], vec![1, 6]]).unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat::identity(2, 7));
        assert_eq!(m.order(None), 3);
        assert_eq!(m.order(Some(12)), 3);
        assert_eq!(Mat::identity(4, 7).order(None), 1);
    }

    #[test]
    fn prime_factorisation() {
        assert_eq!(prime_factors(103680), vec![2, 3, 5]);
        assert_eq!(prime_factors(13), vec![13]);
    }
}
