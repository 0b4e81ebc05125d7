//! A diagram reduced modulo a prime: reflections, invariant form and standard subgroups.

use crate::coxeter::{build_basic_system, BasicSystem, CoxeterDiagram};
use crate::error::Result;
use crate::matgroup::{Mat, MatGroup};
use crate::space::ModularSpace;

#[derive(Debug, Clone)]
pub struct Instance {
    pub diagram: CoxeterDiagram,
    pub system: BasicSystem,
    pub space: ModularSpace,
    pub reflections: Vec<Mat>,
    pub gram: Mat,
}

impl Instance {
    pub fn new(diagram: &CoxeterDiagram, p: u64) -> Result<Instance> {
        let system = build_basic_system(diagram)?;
        Self::from_system(diagram.clone(), system, p)
    }

    pub fn from_system(diagram: CoxeterDiagram, system: BasicSystem, p: u64) -> Result<Instance> {
        let space = ModularSpace::from_system(&system, p)?;
        let gram = Mat::from_fp(space.field(), space.gram())?;
        let reflections = system
            .reflection_matrices()
            .iter()
            .map(|r| Mat::from_int(r, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance {
            diagram,
            system,
            space,
            reflections,
            gram,
        })
    }

    pub fn p(&self) -> u64 {
        self.space.p()
    }

    pub fn rank(&self) -> usize {
        self.reflections.len()
    }

    /// `⟨r_i : i ∈ idx⟩` acting on the whole space.
    pub fn subgroup(&self, idx: &[usize]) -> MatGroup {
        let gens = idx.iter().map(|&i| self.reflections[i]).collect();
        MatGroup::new(self.rank(), self.p(), gens)
            .and_then(|g| g.with_form(self.gram))
            .expect("reflections are invertible isometries")
    }

    pub fn group(&self) -> MatGroup {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.subgroup(&all)
    }

    /// `G_J`: generated by the reflections not indexed by `deleted`.
    pub fn parabolic(&self, deleted: &[usize]) -> MatGroup {
        let keep: Vec<usize> = (0..self.rank()).filter(|i| !deleted.contains(i)).collect();
        self.subgroup(&keep)
    }

    /// Product `r_{i_1} r_{i_2} ⋯` of reflections.
    pub fn word(&self, idx: &[usize]) -> Mat {
        idx.iter()
            .fold(Mat::identity(self.rank(), self.p()), |acc, &i| acc.mul(&self.reflections[i]))
    }
}
