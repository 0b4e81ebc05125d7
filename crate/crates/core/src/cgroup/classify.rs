//! Identify a reflection group over GF(p) among orthogonal and spherical types by order.

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterDiagram;
use crate::error::Result;
use crate::instance::Instance;
use crate::matgroup::{spinor_norm, MatGroup};
use crate::space::ModularSpace;

use super::orders::{
    hat_o1_order, hat_orthogonal_order, is_exceptional, o1_order, orthogonal_order,
    spherical_orders,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Tag {
    FullOrthogonal { n: usize, p: u64, eps: i8 },
    SpinorKernel { n: usize, p: u64, eps: i8 },
    HatO { n: usize, p: u64 },
    HatO1 { n: usize, p: u64 },
    Spherical { name: String },
    Reducible,
    Unidentified,
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tag::FullOrthogonal { n, p, eps } => write!(f, "O({n},{p},{eps:+})"),
            Tag::SpinorKernel { n, p, eps } => write!(f, "O1({n},{p},{eps:+})"),
            Tag::HatO { n, p } => write!(f, "Ohat({n},{p})"),
            Tag::HatO1 { n, p } => write!(f, "Ohat1({n},{p})"),
            Tag::Spherical { name } => write!(f, "[{name}]"),
            Tag::Reducible => write!(f, "reducible"),
            Tag::Unidentified => write!(f, "unidentified"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tags: Vec<Tag>,
    pub order: u128,
    pub dim: usize,
    pub radical_dim: usize,
    pub disc: String,
    pub eps: Option<i8>,
    /// Spinor norms of the generators, when the form is nonsingular.
    pub generator_spinor_norms: Option<Vec<String>>,
    /// Set for `O(3,3,0)` with disc ∼ 1 and `O(4,3,+1)`, where `O₁` has index 3
    /// in the spinor kernel.
    pub exceptional: bool,
}

impl Classification {
    pub fn has(&self, t: &Tag) -> bool {
        self.tags.contains(t)
    }
}

fn form_graph_connected(space: &ModularSpace) -> bool {
    let n = space.dim();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && space.gram()[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// All tags whose order equals `|group|`; ties are kept.
pub fn classify(group: &MatGroup, space: &ModularSpace) -> Classification {
    let order = group.order();
    let (n, p) = (space.dim(), space.p());
    let mut tags = Vec::new();
    let mut eps = None;
    let mut exceptional = false;
    let mut norms = None;
    if !space.is_singular() {
        let e = space.witt_epsilon().expect("nonsingular");
        eps = Some(e);
        if order == orthogonal_order(n, p, e) {
            tags.push(Tag::FullOrthogonal { n, p, eps: e });
        }
        if order == o1_order(n, p, e, space.disc()) {
            tags.push(Tag::SpinorKernel { n, p, eps: e });
        }
        exceptional = is_exceptional(n, p, e, space.disc());
        if let Some(gram) = group.form() {
            norms = group
                .gens()
                .iter()
                .map(|g| spinor_norm(g, gram).map(|c| c.to_string()))
                .collect::<Result<Vec<_>>>()
                .ok();
        }
    } else {
        let q = space.quotient_form();
        let qe = q.witt_epsilon().expect("quotient nonsingular");
        let r = space.radical().len();
        if order == hat_orthogonal_order(n, r, p, qe) {
            tags.push(Tag::HatO { n, p });
        }
        if order == hat_o1_order(n, r, p, qe, q.disc()) {
            tags.push(Tag::HatO1 { n, p });
        }
    }
    for (name, o) in spherical_orders(n) {
        if o == order {
            tags.push(Tag::Spherical { name });
        }
    }
    if n > 1 && !form_graph_connected(space) {
        tags.push(Tag::Reducible);
    }
    if tags.is_empty() {
        tags.push(Tag::Unidentified);
    }
    Classification {
        tags,
        order,
        dim: n,
        radical_dim: space.radical().len(),
        disc: space.disc().to_string(),
        eps,
        generator_spinor_norms: norms,
        exceptional,
    }
}

pub fn classify_diagram(diagram: &CoxeterDiagram, p: u64) -> Result<Classification> {
    let inst = Instance::new(diagram, p)?;
    Ok(classify(&inst.group(), &inst.space))
}

/// Comparison of `[3^k]^p` with `O₁(V)` (or `Ô₁(V)` when `V` is singular).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainKernelReport {
    pub k: usize,
    pub p: u64,
    pub group_order: u128,
    pub target: String,
    pub target_order: u128,
    pub equal: bool,
}

pub fn chain_kernel_check(k: usize, p: u64) -> Result<ChainKernelReport> {
    let d = crate::coxeter::three_infinity(k, 0, 0)?;
    let inst = Instance::new(&d, p)?;
    let order = inst.group().order();
    let n = k + 1;
    let (target, target_order) = if inst.space.is_singular() {
        let q = inst.space.quotient_form();
        let qe = q.witt_epsilon()?;
        (
            format!("Ohat1({n},{p})"),
            hat_o1_order(n, inst.space.radical().len(), p, qe, q.disc()),
        )
    } else {
        let e = inst.space.witt_epsilon()?;
        (
            format!("O1({n},{p},{e:+})"),
            o1_order(n, p, e, inst.space.disc()),
        )
    };
    Ok(ChainKernelReport {
        k,
        p,
        group_order: order,
        target,
        target_order,
        equal: order == target_order,
    })
}

/// Prediction for `−e ∈ [4,3,4,3]^p`: contained unless `p ≡ −1 (mod 8)`.
pub fn rank5_minus_identity_expected(p: u64) -> bool {
    p % 8 != 7
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{preset, three_infinity};

    #[test]
    fn rank5_classification() {
        let d = preset("[4,3,4,3]").unwrap().diagram;
        let c = classify_diagram(&d, 5).unwrap();
        assert!(c.has(&Tag::FullOrthogonal { n: 5, p: 5, eps: 0 }), "{c:?}");
        let c = classify_diagram(&d, 7).unwrap();
        assert!(c.has(&Tag::SpinorKernel { n: 5, p: 7, eps: 0 }), "{c:?}");
        let c = classify_diagram(&d, 3).unwrap();
        assert_eq!(c.order, 103680);
        assert!(c.has(&Tag::FullOrthogonal { n: 5, p: 3, eps: 0 }));
    }

    #[test]
    fn small_cases() {
        let c = classify_diagram(&three_infinity(1, 0, 0).unwrap(), 5).unwrap();
        assert_eq!(c.order, 6);
        assert!(c.has(&Tag::SpinorKernel { n: 2, p: 5, eps: -1 }));
        assert!(c.has(&Tag::Spherical { name: "A2".into() }));
        let c = classify_diagram(&three_infinity(2, 0, 0).unwrap(), 5).unwrap();
        assert!(c.has(&Tag::Spherical { name: "A3".into() }));
        assert_eq!(c.order, 24);
    }

    #[test]
    fn infinity_is_hat_o1() {
        for p in [3, 5, 7, 11] {
            let c = classify_diagram(&preset("[inf]").unwrap().diagram, p).unwrap();
            assert_eq!(c.order, 2 * p as u128);
            assert!(c.has(&Tag::HatO1 { n: 2, p }));
        }
    }

    #[test]
    fn chain_kernel_cases() {
        let r = chain_kernel_check(1, 5).unwrap();
        assert!(r.equal && r.group_order == 6);
        let r = chain_kernel_check(1, 7).unwrap();
        assert!(r.equal && r.group_order == 6);
        let r = chain_kernel_check(2, 5).unwrap();
        assert_eq!(r.group_order, 24);
        assert_eq!(r.target_order, 120);
        assert!(!r.equal);
    }

    #[test]
    fn exceptional_groups_are_flagged() {
        // [4,3] with labels (2,1,1) at p = 3 is B3 of order 48 = |O(3,3,0)|
        let d = crate::coxeter::CoxeterDiagram::parse_shorthand("[3,4]").unwrap();
        let c = classify_diagram(&d, 3).unwrap();
        assert_eq!(c.order, 48);
        assert!(c.has(&Tag::Spherical { name: "B3".into() }));
        assert!(c.tags.len() >= 2, "{c:?}");
    }
}
