//! Recursive string C-group test and the intersection profile of `G_0 ∩ G_{n−1}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterDiagram;
use crate::error::Result;
use crate::instance::Instance;
use crate::matgroup::MatGroup;

use super::orders::space_orders;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Generator indices of the two subgroups whose intersection is too large.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub intersection_order: u128,
    pub expected_order: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub range: (usize, usize),
    pub intersection_order: u128,
    pub expected_order: u128,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CGroupVerdict {
    pub is_cgroup: bool,
    pub witness: Option<Witness>,
    pub trace: Vec<TraceStep>,
}

type MemoKey = (String, u64, usize, usize);

fn memo() -> &'static Mutex<HashMap<MemoKey, CGroupVerdict>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, CGroupVerdict>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// `|⟨r_{a+1..b}⟩ ∩ ⟨r_{a..b−1}⟩|`.
///
/// Every element of `⟨r_{a+1..b}⟩` has row `a` equal to `e_aᵀ`, and every element
/// of `⟨r_{a..b−1}⟩` has row `b` equal to `e_bᵀ`; so the intersection lies in both
/// row stabilizers. The smaller stabilizer is enumerated and sifted into the other group.
pub fn end_intersection_order(inst: &Instance, a: usize, b: usize, cap: u128) -> Result<u128> {
    let left = inst.subgroup(&range(a + 1, b));
    let right = inst.subgroup(&range(a, b - 1));
    let x = left.row_stabilizer(b)?;
    let y = right.row_stabilizer(a)?;
    if x.order() <= y.order() {
        x.intersection_order(&right, cap)
    } else {
        y.intersection_order(&left, cap)
    }
}

/// The same intersection as a group (for profiles).
pub fn end_intersection(inst: &Instance, a: usize, b: usize, cap: u128) -> Result<MatGroup> {
    let left = inst.subgroup(&range(a + 1, b));
    let right = inst.subgroup(&range(a, b - 1));
    let x = left.row_stabilizer(b)?;
    let y = right.row_stabilizer(a)?;
    if x.order() <= y.order() {
        x.intersect(&right, cap)
    } else {
        y.intersect(&left, cap)
    }
}

fn verdict_range(inst: &Instance, key: &str, a: usize, b: usize, cap: u128) -> Result<CGroupVerdict> {
    if b - a < 2 {
        return Ok(CGroupVerdict {
            is_cgroup: true,
            witness: None,
            trace: vec![],
        });
    }
    let mkey = (key.to_string(), inst.p(), a, b);
    if let Some(v) = memo().lock().expect("memo lock").get(&mkey) {
        return Ok(v.clone());
    }
    let mut trace = Vec::new();
    for (sa, sb) in [(a + 1, b), (a, b - 1)] {
        let sub = verdict_range(inst, key, sa, sb, cap)?;
        trace.extend(sub.trace.iter().cloned());
        if !sub.is_cgroup {
            let v = CGroupVerdict {
                is_cgroup: false,
                witness: sub.witness,
                trace,
            };
            memo().lock().expect("memo lock").insert(mkey, v.clone());
            return Ok(v);
        }
    }
    let inter = end_intersection_order(inst, a, b, cap)?;
    let expected = if b - a >= 2 {
        inst.subgroup(&range(a + 1, b - 1)).order()
    } else {
        1
    };
    let ok = inter == expected;
    trace.push(TraceStep {
        range: (a, b),
        intersection_order: inter,
        expected_order: expected,
        ok,
    });
    let v = CGroupVerdict {
        is_cgroup: ok,
        witness: (!ok).then(|| Witness {
            left: range(a + 1, b),
            right: range(a, b - 1),
            intersection_order: inter,
            expected_order: expected,
        }),
        trace,
    };
    memo().lock().expect("memo lock").insert(mkey, v.clone());
    Ok(v)
}

/// Decide whether `G^p` is a string C-group (ranks ≤ 2 always are).
pub fn is_string_cgroup(diagram: &CoxeterDiagram, p: u64, cap: u128) -> Result<CGroupVerdict> {
    let inst = Instance::new(diagram, p)?;
    is_string_cgroup_instance(&inst, cap)
}

pub fn is_string_cgroup_instance(inst: &Instance, cap: u128) -> Result<CGroupVerdict> {
    if !inst.diagram.is_string() {
        return Err(crate::error::Error::InvalidDiagram(
            "C-group recursion needs a string diagram".into(),
        ));
    }
    let key = format!("{}|{:?}", inst.diagram.to_json(), inst.system.gram2);
    verdict_range(inst, &key, 0, inst.rank() - 1, cap)
}

/// Which case of the subspace criteria the singularity pattern selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubspaceCase {
    /// `V_0`, `V_{n−1}`, `V_{0,n−1}` nonsingular.
    A,
    /// `V`, `V_0`, `V_{n−1}` nonsingular, `V_{0,n−1}` singular.
    B,
    /// `V`, `V_{0,n−1}` nonsingular, `V_0` or `V_{n−1}` singular.
    C,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionProfile {
    pub d_order: u128,
    pub g_0n_order: u128,
    pub o_order: u128,
    pub o1_order: u128,
    pub middle_singular: bool,
    /// Names among `O`, `O1`, `Ohat`, `Ohat1`, `G_0,n-1` whose order equals `|D|`.
    pub matches: Vec<String>,
    pub contains_g_0n: bool,
    pub case: SubspaceCase,
    pub singular: [bool; 4],
}

pub fn intersection_profile(diagram: &CoxeterDiagram, p: u64, cap: u128) -> Result<IntersectionProfile> {
    let inst = Instance::new(diagram, p)?;
    let n = inst.rank();
    if n < 3 {
        return Err(crate::error::Error::InvalidDiagram(
            "intersection profile needs rank >= 3".into(),
        ));
    }
    let d = end_intersection(&inst, 0, n - 1, cap)?;
    let g0n = inst.parabolic(&[0, n - 1]);
    let middle = inst.space.subspace(&[0, n - 1]);
    let (o, o1) = space_orders(&middle);
    let singular = [
        inst.space.is_singular(),
        inst.space.subspace(&[0]).is_singular(),
        inst.space.subspace(&[n - 1]).is_singular(),
        middle.is_singular(),
    ];
    let [sv, s0, sn, s0n] = singular;
    let case = if !s0 && !sn && !s0n {
        SubspaceCase::A
    } else if !sv && !s0 && !sn && s0n {
        SubspaceCase::B
    } else if !sv && !s0n && (s0 || sn) {
        SubspaceCase::C
    } else {
        SubspaceCase::None
    };
    let hat = middle.is_singular();
    let mut matches = Vec::new();
    let (on, o1n) = if hat { ("Ohat", "Ohat1") } else { ("O", "O1") };
    if d.order() == o {
        matches.push(on.to_string());
    }
    if d.order() == o1 {
        matches.push(o1n.to_string());
    }
    if d.order() == g0n.order() {
        matches.push("G_0,n-1".to_string());
    }
    let contains = g0n.gens().iter().all(|g| d.bsgs().contains(g));
    Ok(IntersectionProfile {
        d_order: d.order(),
        g_0n_order: g0n.order(),
        o_order: o,
        o1_order: o1,
        middle_singular: hat,
        matches,
        contains_g_0n: contains,
        case,
        singular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{preset, CoxeterDiagram};
    use crate::matgroup::DEFAULT_ENUM_CAP;

    fn sh(s: &str) -> CoxeterDiagram {
        CoxeterDiagram::parse_shorthand(s).unwrap()
    }

    #[test]
    fn inf_three_inf() {
        let v = is_string_cgroup(&sh("[inf,3,inf]"), 11, DEFAULT_ENUM_CAP).unwrap();
        assert!(!v.is_cgroup);
        let w = v.witness.unwrap();
        assert_eq!((w.intersection_order, w.expected_order), (12, 6));
        assert!(is_string_cgroup(&sh("[inf,3,inf]"), 5, DEFAULT_ENUM_CAP).unwrap().is_cgroup);
    }

    #[test]
    fn rank5_cgroup() {
        let d = preset("[4,3,4,3]").unwrap().diagram;
        for p in [3, 5, 7] {
            assert!(is_string_cgroup(&d, p, DEFAULT_ENUM_CAP).unwrap().is_cgroup, "p={p}");
        }
    }

    #[test]
    fn profiles() {
        let pr = intersection_profile(&sh("[inf,3,inf]"), 11, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(pr.d_order, 12);
        assert!(pr.matches.contains(&"O1".to_string()), "{pr:?}");
        assert!(pr.contains_g_0n);
        let pr = intersection_profile(&sh("[inf,3,3,inf]"), 7, DEFAULT_ENUM_CAP).unwrap();
        assert!(pr.d_order > 24 && pr.g_0n_order == 24, "{pr:?}");
        let pr = intersection_profile(&sh("[3,inf,3]"), 5, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(pr.d_order, pr.g_0n_order);
    }
}
