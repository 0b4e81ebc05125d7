//! Deterministic Schreier–Sims for matrix groups acting on vectors.

use rustc_hash::FxHashMap;

use super::mat::{unit_vector, vector_code, vector_decode, Mat, Vector};

#[derive(Debug, Clone)]
struct Level {
    base: Vector,
    gens: Vec<Mat>,
    gens_inv: Vec<Mat>,
    orbit: FxHashMap<u64, u32>,
    points: Vec<Vector>,
    reps: Vec<Mat>,
    reps_inv: Vec<Mat>,
    // progress[g] = number of orbit points whose Schreier generator with gens[g] sifted
    progress: Vec<usize>,
}

impl Level {
    fn new(base: Vector, n: usize, p: u64) -> Level {
        let id = Mat::identity(n, p);
        let mut orbit = FxHashMap::default();
        orbit.insert(vector_code(&base, n, p), 0);
        Level {
            base,
            gens: vec![],
            gens_inv: vec![],
            orbit,
            points: vec![base],
            reps: vec![id],
            reps_inv: vec![id],
            progress: vec![],
        }
    }

    fn push_point(&mut self, pt: Vector, rep: Mat, rep_inv: Mat, n: usize, p: u64) -> bool {
        let code = vector_code(&pt, n, p);
        if self.orbit.contains_key(&code) {
            return false;
        }
        self.orbit.insert(code, self.points.len() as u32);
        self.points.push(pt);
        self.reps.push(rep);
        self.reps_inv.push(rep_inv);
        true
    }

    /// Add a strong generator and close the orbit; existing representatives are kept.
    fn add_gen(&mut self, g: Mat, g_inv: Mat, n: usize, p: u64) {
        self.gens.push(g);
        self.gens_inv.push(g_inv);
        self.progress.push(0);
        let old = self.points.len();
        for idx in 0..old {
            let img = g.apply(&self.points[idx]);
            let rep = g.mul(&self.reps[idx]);
            let rep_inv = self.reps_inv[idx].mul(&g_inv);
            self.push_point(img, rep, rep_inv, n, p);
        }
        let mut idx = old;
        while idx < self.points.len() {
            for k in 0..self.gens.len() {
                let img = self.gens[k].apply(&self.points[idx]);
                if self.orbit.contains_key(&vector_code(&img, n, p)) {
                    continue;
                }
                let rep = self.gens[k].mul(&self.reps[idx]);
                let rep_inv = self.reps_inv[idx].mul(&self.gens_inv[k]);
                self.push_point(img, rep, rep_inv, n, p);
            }
            idx += 1;
        }
    }

    fn index_of(&self, v: &Vector, n: usize, p: u64) -> Option<usize> {
        self.orbit.get(&vector_code(v, n, p)).map(|&i| i as usize)
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct Bsgs {
    n: usize,
    p: u64,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Build from generators. `base_prefix` fixes the leading base points; later
    /// base points are the first standard basis vector moved by a new residue.
    pub fn build(n: usize, p: u64, gens: &[Mat], base_prefix: &[Vector]) -> Bsgs {
        let mut b = Bsgs {
            n,
            p,
            levels: base_prefix.iter().map(|&v| Level::new(v, n, p)).collect(),
        };
        for g in gens {
            b.add_generator(g);
        }
        b
    }

    /// Add a generator of the whole group and restore the BSGS property.
    pub fn add_generator(&mut self, g: &Mat) {
        if g.is_identity() || self.contains(g) {
            return;
        }
        if self.levels.is_empty() {
            let base = self.first_moved(g);
            self.levels.push(Level::new(base, self.n, self.p));
        }
        let inv = g.inverse().expect("generators are invertible");
        self.levels[0].add_gen(*g, inv, self.n, self.p);
        self.complete();
    }

    fn first_moved(&self, g: &Mat) -> Vector {
        (0..self.n)
            .map(|k| unit_vector(self.n, k))
            .find(|v| g.apply(v) != *v)
            .expect("non-identity matrix moves a basis vector")
    }

    fn complete(&mut self) {
        let (n, p) = (self.n, self.p);
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let Some((gk, pt_idx)) = self.next_pending(lvl) else {
                i -= 1;
                continue;
            };
            let level = &self.levels[lvl];
            let s = level.gens[gk];
            let img = s.apply(&level.points[pt_idx]);
            let b = level.index_of(&img, n, p).expect("orbit is closed");
            let h = level.reps_inv[b].mul(&s).mul(&level.reps[pt_idx]);
            self.levels[lvl].progress[gk] += 1;
            if h.is_identity() {
                continue;
            }
            let (residue, fail) = self.sift_from(h, lvl + 1);
            if residue.is_identity() {
                continue;
            }
            if fail == self.levels.len() {
                let base = self.first_moved(&residue);
                self.levels.push(Level::new(base, n, p));
            }
            let rinv = residue.inverse().expect("invertible");
            for l in lvl + 1..=fail {
                self.levels[l].add_gen(residue, rinv, n, p);
            }
            i = fail as isize;
        }
    }

    fn next_pending(&self, lvl: usize) -> Option<(usize, usize)> {
        let level = &self.levels[lvl];
        level
            .progress
            .iter()
            .enumerate()
            .find(|(_, &done)| done < level.points.len())
            .map(|(g, &done)| (g, done))
    }

    /// Sift through levels `from..`; returns the residue and the level where it
    /// stopped (`levels.len()` when it passed every level).
    fn sift_from(&self, mut h: Mat, from: usize) -> (Mat, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let img = h.apply(&level.base);
            match level.index_of(&img, self.n, self.p) {
                Some(k) => h = level.reps_inv[k].mul(&h),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Mat) -> bool {
        let (r, _) = self.sift_from(*g, 0);
        r.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.points.len() as u128).product()
    }

    pub fn base(&self) -> Vec<Vector> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.points.len()).collect()
    }

    /// Strong generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Mat> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Orbit of the first base point as decoded vectors.
    pub fn first_orbit(&self) -> Vec<Vector> {
        self.levels
            .first()
            .map(|l| l.points.clone())
            .unwrap_or_default()
    }

    pub fn decode_point(&self, code: u64) -> Vector {
        vector_decode(code, self.n, self.p)
    }

    /// Every element exactly once, as products of transversal elements.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter::new(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Odometer over transversals: `g = u_0 u_1 ⋯ u_{k-1}`.
pub struct ElementIter<'a> {
    bsgs: &'a Bsgs,
    idx: Vec<usize>,
    prefix: Vec<Mat>,
    done: bool,
}

impl<'a> ElementIter<'a> {
    fn new(bsgs: &'a Bsgs) -> Self {
        let k = bsgs.levels.len();
        let id = Mat::identity(bsgs.n, bsgs.p);
        let mut it = ElementIter {
            bsgs,
            idx: vec![0; k],
            prefix: vec![id; k + 1],
            done: false,
        };
        it.refresh(0);
        it
    }

    fn refresh(&mut self, from: usize) {
        for l in from..self.idx.len() {
            self.prefix[l + 1] = self.prefix[l].mul(&self.bsgs.levels[l].reps[self.idx[l]]);
        }
    }
}

impl Iterator for ElementIter<'_> {
    type Item = Mat;

    fn next(&mut self) -> Option<Mat> {
        if self.done {
            return None;
        }
        let out = *self.prefix.last().unwrap();
        let mut l = self.idx.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.idx[l] += 1;
            if self.idx[l] < self.bsgs.levels[l].points.len() {
                self.refresh(l);
                break;
            }
            self.idx[l] = 0;
        }
        Some(out)
    }
}
