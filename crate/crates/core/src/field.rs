//! Prime fields GF(p), their quadratic extensions GF(p²), and square classes.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square class of a field element: zero, a nonzero square, or a non-square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

impl SquareClass {
    /// `+1` for squares, `-1` for non-squares, `0` for zero.
    pub fn sign(self) -> i32 {
        match self {
            SquareClass::Zero => 0,
            SquareClass::Square => 1,
            SquareClass::NonSquare => -1,
        }
    }
}

impl Mul for SquareClass {
    type Output = SquareClass;

    fn mul(self, rhs: SquareClass) -> SquareClass {
        use SquareClass::*;
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (Square, x) | (x, Square) => x,
            (NonSquare, NonSquare) => Square,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SquareClass::Zero => "zero",
            SquareClass::Square => "square",
            SquareClass::NonSquare => "non-square",
        };
        f.write_str(s)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field GF(p) for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Canonical representative of an arbitrary integer.
    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn reduce_i128(&self, a: i128) -> u64 {
        a.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    /// Inverse of 2, used to halve doubled Gram entries.
    pub fn half(&self) -> u64 {
        (self.p + 1) / 2
    }

    /// Euler's criterion.
    pub fn square_class(&self, a: u64) -> SquareClass {
        let a = a % self.p;
        if a == 0 {
            return SquareClass::Zero;
        }
        if self.pow(a, (self.p - 1) / 2) == 1 {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }
    }

    /// Smallest positive non-residue.
    pub fn smallest_nonresidue(&self) -> u64 {
        (2..self.p)
            .find(|&a| self.square_class(a) == SquareClass::NonSquare)
            .expect("every odd prime field has a non-residue")
    }

    /// Square root in GF(p) by Tonelli–Shanks, choosing the smaller canonical root.
    /// Returns `None` for non-residues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        match self.square_class(a) {
            SquareClass::Zero => return Some(0),
            SquareClass::NonSquare => return None,
            SquareClass::Square => {}
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = self.smallest_nonresidue();
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r.min(p - r))
    }
}

/// Legendre symbol as a square class. Rejects p = 2 and composite moduli.
pub fn legendre(a: i64, p: u64) -> Result<SquareClass> {
    let f = PrimeField::new(p)?;
    Ok(f.square_class(f.reduce(a)))
}

/// An element `a + b·√d` of GF(p²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp2 {
    pub a: u64,
    pub b: u64,
}

impl Fp2 {
    pub const ZERO: Fp2 = Fp2 { a: 0, b: 0 };
    pub const ONE: Fp2 = Fp2 { a: 1, b: 0 };

    pub fn from_base(a: u64) -> Fp2 {
        Fp2 { a, b: 0 }
    }

    pub fn is_base(&self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}√d", self.a, self.b)
        }
    }
}

/// GF(p²) = GF(p)(√d) with d the smallest positive non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadExtField {
    base: PrimeField,
    d: u64,
}

impl QuadExtField {
    pub fn new(base: PrimeField) -> Self {
        let d = base.smallest_nonresidue();
        QuadExtField { base, d }
    }

    pub fn with_nonresidue(base: PrimeField, d: u64) -> Result<Self> {
        if base.square_class(d) != SquareClass::NonSquare {
            return Err(Error::Unsupported(format!(
                "{d} is not a non-residue mod {}",
                base.p()
            )));
        }
        Ok(QuadExtField { base, d })
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn add(&self, x: Fp2, y: Fp2) -> Fp2 {
        Fp2 {
            a: self.base.add(x.a, y.a),
            b: self.base.add(x.b, y.b),
        }
    }

    pub fn sub(&self, x: Fp2, y: Fp2) -> Fp2 {
        Fp2 {
            a: self.base.sub(x.a, y.a),
            b: self.base.sub(x.b, y.b),
        }
    }

    pub fn neg(&self, x: Fp2) -> Fp2 {
        Fp2 {
            a: self.base.neg(x.a),
            b: self.base.neg(x.b),
        }
    }

    pub fn mul(&self, x: Fp2, y: Fp2) -> Fp2 {
        let f = &self.base;
        let bd = f.mul(f.mul(x.b, y.b), self.d);
        Fp2 {
            a: f.add(f.mul(x.a, y.a), bd),
            b: f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)),
        }
    }

    /// Norm `a² − d·b²`, an element of GF(p).
    pub fn norm(&self, x: Fp2) -> u64 {
        let f = &self.base;
        f.sub(f.mul(x.a, x.a), f.mul(self.d, f.mul(x.b, x.b)))
    }

    pub fn inv(&self, x: Fp2) -> Fp2 {
        let f = &self.base;
        let n = self.norm(x);
        assert!(n != 0, "inverse of zero in GF({}²)", f.p());
        let ni = f.inv(n);
        Fp2 {
            a: f.mul(x.a, ni),
            b: f.mul(f.neg(x.b), ni),
        }
    }
}

/// A square root that lives either in GF(p) or, for non-residues, in GF(p²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Root {
    Base(u64),
    Ext(Fp2),
}

impl Root {
    pub fn as_ext(&self) -> Fp2 {
        match *self {
            Root::Base(a) => Fp2::from_base(a),
            Root::Ext(x) => x,
        }
    }
}

/// Square root of `a` mod p. Residues get the smaller canonical root in GF(p);
/// non-residues get `b·√d` in GF(p²) with the smaller canonical `b`.
pub fn sqrt_mod(a: i64, p: u64) -> Result<Root> {
    let f = PrimeField::new(p)?;
    let a = f.reduce(a);
    if let Some(r) = f.sqrt(a) {
        return Ok(Root::Base(r));
    }
    let ext = QuadExtField::new(f);
    let ratio = f.mul(a, f.inv(ext.d()));
    let b = f.sqrt(ratio).expect("a/d is a residue when a and d are not");
    Ok(Root::Ext(Fp2 { a: 0, b }))
}
