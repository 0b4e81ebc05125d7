//! Symmetric bilinear spaces over GF(p): radicals, discriminants, Witt type,
//! subspaces `V_J`, quotient forms and embeddings of isometries.

use crate::coxeter::BasicSystem;
use crate::error::{Error, Result};
use crate::field::{PrimeField, SquareClass};
use crate::linalg::{self, FpMatrix, FpVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularSpace {
    field: PrimeField,
    gram: FpMatrix,
    radical: Vec<FpVector>,
    disc: SquareClass,
}

impl ModularSpace {
    pub fn new(field: PrimeField, gram: FpMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: gram.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(n),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidDiagram("form is not symmetric".into()));
                }
            }
        }
        let radical = linalg::null_space(&field, &gram, n);
        let disc = field.square_class(linalg::det(&field, &gram));
        Ok(ModularSpace {
            field,
            gram,
            radical,
            disc,
        })
    }

    /// The space `V` of a basic system: Gram matrix `B = gram2 / 2` reduced mod p.
    pub fn from_system(system: &BasicSystem, p: u64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let half = f.half();
        let gram = system
            .gram2
            .iter()
            .map(|r| r.iter().map(|&x| f.mul(f.reduce(x), half)).collect())
            .collect();
        Self::new(f, gram)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &FpMatrix {
        &self.gram
    }

    pub fn dot(&self, x: &[u64], y: &[u64]) -> u64 {
        linalg::bilinear(&self.field, &self.gram, x, y)
    }

    pub fn radical(&self) -> &[FpVector] {
        &self.radical
    }

    pub fn is_singular(&self) -> bool {
        !self.radical.is_empty()
    }

    pub fn disc(&self) -> SquareClass {
        self.disc
    }

    /// Witt type: 0 in odd dimension, otherwise +1 iff `(−1)^m disc` is a square.
    pub fn witt_epsilon(&self) -> Result<i8> {
        if self.is_singular() {
            return Err(Error::SingularSpace(self.radical.len()));
        }
        Ok(epsilon_from_disc(&self.field, self.dim(), self.disc))
    }

    /// `V_J`: the span of `b_j, j ∉ J`, with the restricted Gram matrix.
    pub fn subspace(&self, deleted: &[usize]) -> ModularSpace {
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !deleted.contains(i)).collect();
        let gram = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        ModularSpace::new(self.field, gram).expect("principal submatrix of a symmetric form")
    }

    /// Representatives spanning a complement of the radical: the standard basis
    /// vectors off the pivot columns of the reduced radical basis.
    pub fn radical_complement(&self) -> Vec<FpVector> {
        let mut r = self.radical.clone();
        let pivots = linalg::rref(&self.field, &mut r);
        let n = self.dim();
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = vec![0u64; n];
                v[c] = 1;
                v
            })
            .collect()
    }

    /// The induced nonsingular form on `V/rad(V)`.
    pub fn quotient_form(&self) -> ModularSpace {
        if !self.is_singular() {
            return self.clone();
        }
        let basis = self.radical_complement();
        let gram = linalg::restrict_form(&self.field, &self.gram, &basis);
        ModularSpace::new(self.field, gram).expect("induced form is symmetric")
    }

    /// Orthogonal complement of the span of `vectors`.
    pub fn perp(&self, vectors: &[FpVector]) -> Vec<FpVector> {
        let rows: FpMatrix = vectors
            .iter()
            .map(|v| linalg::mat_vec(&self.field, &self.gram, v))
            .collect();
        if rows.is_empty() {
            return (0..self.dim())
                .map(|i| (0..self.dim()).map(|j| u64::from(i == j)).collect())
                .collect();
        }
        linalg::null_space(&self.field, &rows, self.dim())
    }

    /// Reflection `x ↦ x − 2 (x·v)/(v·v) v` as a matrix acting on columns.
    pub fn reflection(&self, v: &[u64]) -> Result<FpMatrix> {
        let f = &self.field;
        let vv = self.dot(v, v);
        if vv == 0 {
            return Err(Error::Unsupported("reflection in an isotropic vector".into()));
        }
        let c = f.mul(2, f.inv(vv));
        let gv = linalg::mat_vec(f, &self.gram, v);
        let n = self.dim();
        let mut m = linalg::identity(n);
        for i in 0..n {
            for j in 0..n {
                let t = f.mul(c, f.mul(v[i], gv[j]));
                m[i][j] = f.sub(m[i][j], t);
            }
        }
        Ok(m)
    }

    pub fn preserves(&self, g: &FpMatrix) -> bool {
        let f = &self.field;
        let gt = linalg::transpose(g);
        linalg::mat_mul(f, &linalg::mat_mul(f, &gt, &self.gram), g) == self.gram
    }

    /// Extend an isometry `g` of a nonsingular subspace `W` (given by a basis in
    /// ambient coordinates; `g` acts on that basis by columns) by the identity on `W^⊥`.
    pub fn embed_isometry(&self, w_basis: &[FpVector], g: &FpMatrix) -> Result<FpMatrix> {
        let f = &self.field;
        let k = w_basis.len();
        if g.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: g.len(),
            });
        }
        let w_form = linalg::restrict_form(f, &self.gram, w_basis);
        let w_rad = linalg::null_space(f, &w_form, k);
        if !w_rad.is_empty() {
            return Err(Error::SingularSpace(w_rad.len()));
        }
        let comp = self.perp(w_basis);
        let n = self.dim();
        let mut cols: Vec<FpVector> = w_basis.to_vec();
        cols.extend(comp);
        if cols.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: cols.len(),
            });
        }
        let pmat = linalg::transpose(&cols);
        let pinv = linalg::inverse(f, &pmat).ok_or(Error::SingularSpace(0))?;
        let mut block = linalg::identity(n);
        for i in 0..k {
            for j in 0..k {
                block[i][j] = g[i][j];
            }
        }
        Ok(linalg::mat_mul(
            f,
            &linalg::mat_mul(f, &pmat, &block),
            &pinv,
        ))
    }
}

/// ε from dimension and discriminant class of a nonsingular form.
pub fn epsilon_from_disc(f: &PrimeField, dim: usize, disc: SquareClass) -> i8 {
    if dim % 2 == 1 {
        return 0;
    }
    let m = dim / 2;
    let sign = if m % 2 == 1 {
        f.square_class(f.neg(1))
    } else {
        SquareClass::Square
    };
    match sign * disc {
        SquareClass::Square => 1,
        _ => -1,
    }
}

/// Witt index by repeatedly splitting off hyperbolic planes; exhaustive search
/// for isotropic vectors, so only for small `p^dim`.
pub fn witt_index_bruteforce(f: &PrimeField, gram: &FpMatrix) -> usize {
    let n = gram.len();
    if n < 2 {
        return 0;
    }
    let p = f.p();
    let total = p.pow(n as u32);
    let mut iso = None;
    for code in 1..total {
        let mut v = vec![0u64; n];
        let mut c = code;
        for x in v.iter_mut() {
            *x = c % p;
            c /= p;
        }
        if linalg::bilinear(f, gram, &v, &v) == 0 {
            iso = Some(v);
            break;
        }
    }
    let Some(v) = iso else { return 0 };
    let gv = linalg::mat_vec(f, gram, &v);
    let Some(j) = gv.iter().position(|&x| x != 0) else {
        // v in the radical; callers pass nonsingular forms
        return 0;
    };
    let mut u = vec![0u64; n];
    u[j] = f.inv(gv[j]);
    let rows = vec![gv, linalg::mat_vec(f, gram, &u)];
    let comp = linalg::null_space(f, &rows, n);
    let sub = linalg::restrict_form(f, gram, &comp);
    1 + witt_index_bruteforce(f, &sub)
}

/// ε of a nonsingular form read off from its Witt index.
pub fn epsilon_from_witt_index(dim: usize, index: usize) -> i8 {
    if dim % 2 == 1 {
        0
    } else if index == dim / 2 {
        1
    } else {
        -1
    }
}
