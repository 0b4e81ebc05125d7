use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::intmat::IntMat;

use super::bsgs::{Bsgs, ElementIter};
use super::mat::{check_params, unit_vector, Mat};

/// Default cap on explicit enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 30_000_000;

/// A finite matrix group over GF(p) given by generators.
#[derive(Debug)]
pub struct MatGroup {
    n: usize,
    p: u64,
    gens: Vec<Mat>,
    gram: Option<Mat>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for MatGroup {
    fn clone(&self) -> Self {
        let bsgs = OnceLock::new();
        if let Some(b) = self.bsgs.get() {
            let _ = bsgs.set(b.clone());
        }
        MatGroup {
            n: self.n,
            p: self.p,
            gens: self.gens.clone(),
            gram: self.gram,
            bsgs,
        }
    }
}

impl MatGroup {
    pub fn new(n: usize, p: u64, gens: Vec<Mat>) -> Result<MatGroup> {
        check_params(n, p)?;
        for g in &gens {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.n(),
                });
            }
            if g.p() != p {
                return Err(Error::FieldMismatch {
                    expected: p,
                    got: g.p(),
                });
            }
            if g.det() == 0 {
                return Err(Error::Unsupported("singular generator".into()));
            }
        }
        Ok(MatGroup {
            n,
            p,
            gens,
            gram: None,
            bsgs: OnceLock::new(),
        })
    }

    pub fn from_int(gens: &[IntMat], p: u64) -> Result<MatGroup> {
        let n = gens.first().map(|g| g.n()).unwrap_or(1);
        let mats = gens
            .iter()
            .map(|g| Mat::from_int(g, p))
            .collect::<Result<Vec<_>>>()?;
        MatGroup::new(n, p, mats)
    }

    /// Attach an invariant form; every generator must preserve it.
    pub fn with_form(mut self, gram: Mat) -> Result<MatGroup> {
        if gram.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: gram.n(),
            });
        }
        if let Some(k) = self.gens.iter().position(|g| !g.preserves(&gram)) {
            return Err(Error::Unsupported(format!(
                "generator {k} does not preserve the form"
            )));
        }
        self.gram = Some(gram);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    pub fn form(&self) -> Option<&Mat> {
        self.gram.as_ref()
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.n, self.p)
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.n, self.p, &self.gens, &[]))
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    fn check(&self, g: &Mat) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: g.n(),
            });
        }
        if g.p() != self.p {
            return Err(Error::FieldMismatch {
                expected: self.p,
                got: g.p(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, g: &Mat) -> Result<bool> {
        self.check(g)?;
        Ok(self.bsgs().contains(g))
    }

    /// Each element exactly once (BSGS transversal products).
    pub fn elements(&self) -> ElementIter<'_> {
        self.bsgs().elements()
    }

    /// Period of an element of this group.
    pub fn element_order(&self, g: &Mat) -> Result<u128> {
        if !self.contains(g)? {
            return Ok(g.order(None));
        }
        Ok(g.order(Some(self.order())))
    }

    /// `H ∩ K` by enumerating the smaller group and sifting into the larger.
    pub fn intersect(&self, other: &MatGroup, cap: u128) -> Result<MatGroup> {
        let (small, big) = self.ordered_pair(other, cap)?;
        let mut acc = Bsgs::build(self.n, self.p, &[], &[]);
        let mut gens = Vec::new();
        let mut count: u128 = 0;
        for x in small.elements() {
            if big.bsgs().contains(&x) {
                count += 1;
                if !acc.contains(&x) {
                    acc.add_generator(&x);
                    gens.push(x);
                }
            }
        }
        if acc.order() != count {
            return Err(Error::Unsupported(format!(
                "intersection not closed: {count} elements vs generated order {}",
                acc.order()
            )));
        }
        let out = MatGroup {
            n: self.n,
            p: self.p,
            gens,
            gram: self.gram,
            bsgs: OnceLock::new(),
        };
        let _ = out.bsgs.set(acc);
        Ok(out)
    }

    /// `|H ∩ K|` without building generators.
    pub fn intersection_order(&self, other: &MatGroup, cap: u128) -> Result<u128> {
        let (small, big) = self.ordered_pair(other, cap)?;
        let b = big.bsgs();
        Ok(small.elements().filter(|x| b.contains(x)).count() as u128)
    }

    fn ordered_pair<'a>(&'a self, other: &'a MatGroup, cap: u128) -> Result<(&'a MatGroup, &'a MatGroup)> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        if other.p != self.p {
            return Err(Error::FieldMismatch {
                expected: self.p,
                got: other.p,
            });
        }
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        if small.order() > cap {
            return Err(Error::Capacity {
                what: "intersection".into(),
                needed: small.order(),
                cap,
            });
        }
        Ok((small, big))
    }

    /// `{g ∈ G : row_k(g) = e_kᵀ}`, via the stabilizer of `e_k` under `g ↦ g^{-T}`.
    pub fn row_stabilizer(&self, k: usize) -> Result<MatGroup> {
        if k >= self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: k,
            });
        }
        let dual: Vec<Mat> = self
            .gens
            .iter()
            .map(|g| g.inverse().expect("invertible").transpose())
            .collect();
        let b = Bsgs::build(self.n, self.p, &dual, &[unit_vector(self.n, k)]);
        let gens: Vec<Mat> = b
            .stabilizer_gens(1)
            .iter()
            .map(|g| g.transpose().inverse().expect("invertible"))
            .collect();
        let mut out = MatGroup::new(self.n, self.p, gens)?;
        out.gram = self.gram;
        Ok(out)
    }
}
