//! String Coxeter diagrams, basic systems of roots, exact Gram and Cartan data,
//! and the discriminant formulas for the 3-infinity family.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::IntMat;

pub type Rational = Ratio<i128>;

/// Branch mark of a crystallographic diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Finite(u32),
    Infinite,
}

impl Mark {
    /// `4 cos²(π/q)`, which must be an integer for crystallographic marks.
    fn four_cos_sq(self) -> Option<i64> {
        match self {
            Mark::Finite(2) => Some(0),
            Mark::Finite(3) => Some(1),
            Mark::Finite(4) => Some(2),
            Mark::Finite(6) => Some(3),
            Mark::Infinite => Some(4),
            Mark::Finite(_) => None,
        }
    }

    /// Period of `r_{i-1} r_i` in characteristic zero (`None` for ∞).
    pub fn period(self) -> Option<u32> {
        match self {
            Mark::Finite(q) => Some(q),
            Mark::Infinite => None,
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::Finite(q) => write!(f, "{q}"),
            Mark::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Mark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mark> {
        match s.trim() {
            "inf" | "∞" | "oo" | "infinity" => Ok(Mark::Infinite),
            t => {
                let q: u32 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad branch mark `{t}`")))?;
                match q {
                    2 | 3 | 4 | 6 => Ok(Mark::Finite(q)),
                    _ => Err(Error::InvalidDiagram(format!(
                        "mark {q} is not crystallographic (allowed: 2, 3, 4, 6, inf)"
                    ))),
                }
            }
        }
    }
}

impl Serialize for Mark {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Mark::Finite(q) => s.serialize_u32(*q),
            Mark::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Mark {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Mark, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Str(String),
        }
        let raw = Raw::deserialize(d)?;
        let s = match raw {
            Raw::Int(q) => q.to_string(),
            Raw::Str(s) => s,
        };
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Branch {
    pub i: usize,
    pub j: usize,
    pub mark: Mark,
}

/// A Coxeter diagram with node labels `b_i²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterDiagram {
    #[serde(rename = "nodes")]
    pub node_labels: Vec<i64>,
    pub branches: Vec<Branch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram2_override: Option<Vec<Vec<i64>>>,
}

impl CoxeterDiagram {
    /// String diagram with branch `(i-1, i)` marked `marks[i-1]`.
    pub fn string(marks: &[Mark], labels: &[i64]) -> Result<Self> {
        if labels.len() != marks.len() + 1 {
            return Err(Error::InvalidDiagram(format!(
                "{} marks need {} labels, got {}",
                marks.len(),
                marks.len() + 1,
                labels.len()
            )));
        }
        let branches = marks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != Mark::Finite(2))
            .map(|(k, &mark)| Branch {
                i: k,
                j: k + 1,
                mark,
            })
            .collect();
        let d = CoxeterDiagram {
            node_labels: labels.to_vec(),
            branches,
            gram2_override: None,
        };
        d.validate()?;
        Ok(d)
    }

    /// Shorthand such as `[4,3,4,3]` or `[3^2,inf^3]`, labelled left to right:
    /// start at 1, multiply by 2 across a 4, by 3 across a 6, keep otherwise.
    pub fn parse_shorthand(s: &str) -> Result<Self> {
        let marks = parse_marks(s)?;
        let mut labels = vec![1i64];
        for m in &marks {
            let last = *labels.last().unwrap();
            labels.push(match m {
                Mark::Finite(4) => last * 2,
                Mark::Finite(6) => last * 3,
                _ => last,
            });
        }
        Self::string(&marks, &labels)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let d: CoxeterDiagram =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }

    pub fn rank(&self) -> usize {
        self.node_labels.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank();
        if n == 0 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        if let Some(&l) = self.node_labels.iter().find(|&&l| l <= 0) {
            return Err(Error::InvalidDiagram(format!("node label {l} is not positive")));
        }
        for b in &self.branches {
            if b.i >= b.j || b.j >= n {
                return Err(Error::InvalidDiagram(format!(
                    "branch ({}, {}) must satisfy i < j < {n}",
                    b.i, b.j
                )));
            }
        }
        if let Some(g) = &self.gram2_override {
            if g.len() != n || g.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidDiagram("gram2_override must be n×n".into()));
            }
        }
        Ok(())
    }

    /// True when every non-2 branch joins consecutive nodes.
    pub fn is_string(&self) -> bool {
        self.branches
            .iter()
            .all(|b| b.mark == Mark::Finite(2) || b.j == b.i + 1)
    }

    /// Marks `p_1..p_{n-1}` of a string diagram (2 where no branch is drawn).
    pub fn marks(&self) -> Vec<Mark> {
        (1..self.rank())
            .map(|j| {
                self.branches
                    .iter()
                    .find(|b| b.i == j - 1 && b.j == j)
                    .map(|b| b.mark)
                    .unwrap_or(Mark::Finite(2))
            })
            .collect()
    }

    pub fn is_connected_string(&self) -> bool {
        self.is_string() && self.marks().iter().all(|&m| m != Mark::Finite(2))
    }

    /// Sub-diagram on the nodes `keep` (in order), re-indexed from zero.
    pub fn sub_diagram(&self, keep: &[usize]) -> CoxeterDiagram {
        let pos = |x: usize| keep.iter().position(|&k| k == x);
        let branches = self
            .branches
            .iter()
            .filter_map(|b| {
                Some(Branch {
                    i: pos(b.i)?,
                    j: pos(b.j)?,
                    mark: b.mark,
                })
            })
            .collect();
        CoxeterDiagram {
            node_labels: keep.iter().map(|&k| self.node_labels[k]).collect(),
            branches,
            gram2_override: self
                .gram2_override
                .as_ref()
                .map(|g| keep.iter().map(|&i| keep.iter().map(|&j| g[i][j]).collect()).collect()),
        }
    }

    pub fn schlafli(&self) -> String {
        let marks: Vec<String> = self.marks().iter().map(|m| m.to_string()).collect();
        format!("[{}]", marks.join(","))
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.node_labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{} labels ({})", self.schlafli(), labels.join(","))
    }
}

/// Parse `[4,3,4,3]`, `[3^2,inf^3]`, `[∞]` into a mark list.
pub fn parse_marks(s: &str) -> Result<Vec<Mark>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{t}`")))?;
    let mut marks = Vec::new();
    if inner.trim().is_empty() {
        return Ok(marks);
    }
    for tok in inner.split(',') {
        let tok = tok.trim();
        let (base, count) = match tok.split_once('^') {
            Some((b, e)) => {
                let e = e.trim().trim_start_matches('{').trim_end_matches('}');
                let c: usize = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                (b, c)
            }
            None => (tok, 1),
        };
        let m: Mark = base.parse()?;
        marks.extend(std::iter::repeat_n(m, count));
    }
    Ok(marks)
}

fn isqrt_exact(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&x| x >= 0 && x * x == v)
}

/// Exact basic system: doubled Gram matrix `2B` and Cartan integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasicSystem {
    pub gram2: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
}

pub fn build_basic_system(diagram: &CoxeterDiagram) -> Result<BasicSystem> {
    diagram.validate()?;
    let n = diagram.rank();
    let gram2 = match &diagram.gram2_override {
        Some(g) => g.clone(),
        None => {
            let mut g = vec![vec![0i64; n]; n];
            for i in 0..n {
                g[i][i] = 2 * diagram.node_labels[i];
            }
            for b in &diagram.branches {
                let (li, lj) = (diagram.node_labels[b.i], diagram.node_labels[b.j]);
                let err = || Error::NonCrystallographic {
                    i: b.i,
                    j: b.j,
                    mark: b.mark.to_string(),
                    li,
                    lj,
                };
                let c = b.mark.four_cos_sq().ok_or_else(err)?;
                // (2 b_i·b_j)² = b_i² b_j² · 4cos²(π/q)
                let s = isqrt_exact(li * lj * c).ok_or_else(err)?;
                g[b.i][b.j] = -s;
                g[b.j][b.i] = -s;
            }
            g
        }
    };
    for i in 0..n {
        for j in 0..n {
            if gram2[i][j] != gram2[j][i] {
                return Err(Error::InvalidDiagram("Gram matrix is not symmetric".into()));
            }
        }
        if gram2[i][i] <= 0 {
            return Err(Error::InvalidDiagram(format!(
                "node {i} has non-positive norm"
            )));
        }
    }
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // a_ij = 2 (b_i·b_j) / b_i² = 2·gram2_ij / gram2_ii
            let num = 2 * gram2[i][j];
            if num % gram2[i][i] != 0 {
                let (a, b) = (i.min(j), i.max(j));
                return Err(Error::NonCrystallographic {
                    i: a,
                    j: b,
                    mark: diagram
                        .branches
                        .iter()
                        .find(|br| br.i == a && br.j == b)
                        .map(|br| br.mark.to_string())
                        .unwrap_or_else(|| "override".into()),
                    li: gram2[a][a] / 2,
                    lj: gram2[b][b] / 2,
                });
            }
            cartan[i][j] = num / gram2[i][i];
        }
    }
    Ok(BasicSystem { gram2, cartan })
}

impl BasicSystem {
    pub fn rank(&self) -> usize {
        self.gram2.len()
    }

    /// Entry of `B` (not doubled) as a rational.
    pub fn gram(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.gram2[i][j] as i128, 2)
    }

    pub fn gram2_matrix(&self) -> IntMat {
        IntMat::from_rows(&self.gram2)
    }

    /// Gram data restricted to `keep` (deleting the other rows and columns).
    pub fn restrict(&self, keep: &[usize]) -> BasicSystem {
        let pick = |m: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            keep.iter().map(|&i| keep.iter().map(|&j| m[i][j]).collect()).collect()
        };
        BasicSystem {
            gram2: pick(&self.gram2),
            cartan: pick(&self.cartan),
        }
    }

    fn is_tridiagonal(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || self.gram2[i][j] == 0))
    }

    /// `det(B)` by the string recursion `det B = b_0² det B_0 − (b_0·b_1)² det B_{0,1}`.
    pub fn det_recursion(&self) -> Result<Rational> {
        if !self.is_tridiagonal() {
            return Err(Error::InvalidDiagram(
                "determinant recursion needs a string diagram".into(),
            ));
        }
        let n = self.rank();
        // tail[k] = det of B restricted to nodes k..n-1
        let mut tail = vec![Rational::from_integer(1); n + 2];
        for k in (0..n).rev() {
            let diag = self.gram(k, k);
            let rest = if k + 1 < n {
                let off = self.gram(k, k + 1);
                off * off * tail[k + 2]
            } else {
                Rational::from_integer(0)
            };
            tail[k] = diag * tail[k + 1] - rest;
        }
        Ok(tail[0])
    }

    /// `det(B)` via a fraction-free determinant of `2B`, divided by `2^n`.
    pub fn det_direct(&self) -> Rational {
        let d = self.gram2_matrix().det();
        Rational::new(d, 1i128 << self.rank())
    }

    /// Integer reflection matrices `R_j: b_k ↦ b_k − a_{jk} b_j` (column convention).
    pub fn reflection_matrices(&self) -> Vec<IntMat> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                let mut r = IntMat::identity(n);
                for k in 0..n {
                    r[(j, k)] -= self.cartan[j][k] as i128;
                }
                r
            })
            .collect()
    }
}

/// Discriminant of `[∞^{n-1}]` with all labels 1: closed form, extended by `d_{-1} = 0`.
pub fn d_n(n: i64) -> i64 {
    if n == -1 {
        return 0;
    }
    assert!(n >= 0, "d_n defined for n >= -1");
    match n % 6 {
        0 | 1 => 1,
        2 | 5 => 0,
        _ => -1,
    }
}

/// `d_n` by the recursion `d_n = d_{n-1} − d_{n-2}`, `d_0 = d_1 = 1`.
pub fn d_n_recursive(n: u64) -> i64 {
    let (mut a, mut b) = (1i64, 1i64);
    if n == 0 {
        return 1;
    }
    for _ in 1..n {
        let c = b - a;
        a = b;
        b = c;
    }
    b
}

/// Discriminant of the all-ones basic system for `[3^k, ∞^l, 3^m]`.
/// `l = 0` is accepted through `d_{-1} = 0`.
pub fn e_klm(k: u32, l: u32, m: u32) -> Result<Rational> {
    if k + l + m == 0 {
        return Err(Error::InvalidDiagram("need k + l + m >= 1".into()));
    }
    let (k, l, m) = (k as i128, l as i64, m as i128);
    let num = d_n(l + 1) as i128 * (4 + 2 * k + 2 * m)
        - d_n(l - 1) as i128 * (2 * k + 2 * m + 3 * k * m);
    Ok(Rational::new(num, 1i128 << (k + m + 2)))
}

/// Discriminants of `V`, `V_0` (= `V_{n-1}`) and `V_{0,n-1}` for `[∞, 3^k, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfThreeInfDiscs {
    pub whole: Rational,
    pub end_deleted: Rational,
    pub both_deleted: Rational,
}

pub fn disc_infty_3k_infty(k: u32) -> Result<InfThreeInfDiscs> {
    if k == 0 {
        return Err(Error::InvalidDiagram("need k >= 1".into()));
    }
    let k = k as i128;
    let den = 1i128 << (k + 1);
    Ok(InfThreeInfDiscs {
        whole: Rational::new(k - 2, den),
        end_deleted: Rational::new(-k, den),
        both_deleted: Rational::new(k + 2, den),
    })
}

/// `p` is generic when `p ≥ 5`, or `p = 3` and no branch is marked 6.
pub fn is_generic(diagram: &CoxeterDiagram, p: u64) -> bool {
    p >= 5 || (p == 3 && diagram.branches.iter().all(|b| b.mark != Mark::Finite(6)))
}

/// A named diagram with its basic system and, for Euclidean groups, a radical vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preset {
    pub name: String,
    pub diagram: CoxeterDiagram,
    pub system: BasicSystem,
    pub radical: Option<Vec<i64>>,
}

fn mk(name: &str, marks: &str, labels: &[i64], radical: Option<Vec<i64>>) -> Result<Preset> {
    let diagram = CoxeterDiagram::string(&parse_marks(marks)?, labels)?;
    let system = build_basic_system(&diagram)?;
    Ok(Preset {
        name: name.to_string(),
        diagram,
        system,
        radical,
    })
}

/// Names accepted by [`preset`] besides the generic shorthand families.
pub const PRESET_NAMES: &[&str] = &[
    "[3,3,4,3]",
    "[3,4,3,3]",
    "[3,6]",
    "[3,6]'",
    "[6,3]",
    "[6,3]'",
    "[inf]",
    "[4,3,4,3]",
    "rank6-G",
    "rank6-H",
    "rank6-K",
];

/// Look up a preset. Besides the named ones, `[4,3^{m-2},4]` (cubic tessellations)
/// and any `[3^k,∞^l,3^m]`-style shorthand (all labels 1) are accepted.
pub fn preset(name: &str) -> Result<Preset> {
    let key = name.trim().replace('∞', "inf").replace(' ', "");
    match key.as_str() {
        "[3,3,4,3]" => mk(&key, "[3,3,4,3]", &[1, 1, 1, 2, 2], Some(vec![1, 2, 3, 2, 1])),
        "[3,4,3,3]" => mk(&key, "[3,4,3,3]", &[1, 1, 2, 2, 2], Some(vec![2, 4, 3, 2, 1])),
        "[3,6]" => mk(&key, "[3,6]", &[1, 1, 3], Some(vec![1, 2, 1])),
        "[3,6]'" => mk(&key, "[3,6]", &[3, 3, 1], None),
        "[6,3]" => mk(&key, "[6,3]", &[1, 3, 3], None),
        "[6,3]'" => mk(&key, "[6,3]", &[3, 1, 1], None),
        "[inf]" => mk(&key, "[inf]", &[1, 1], Some(vec![1, 1])),
        "[4,3,4,3]" => mk(&key, "[4,3,4,3]", &[2, 1, 1, 2, 2], None),
        "rank6-G" | "[3,4,3,3,3]" => mk("rank6-G", "[3,4,3,3,3]", &[1, 1, 2, 2, 2, 2], None),
        "rank6-H" | "[3,3,4,3,3]" => mk("rank6-H", "[3,3,4,3,3]", &[1, 1, 1, 2, 2, 2], None),
        "rank6-K" | "[4,3,3,4,3]" => mk("rank6-K", "[4,3,3,4,3]", &[2, 1, 1, 1, 2, 2], None),
        _ => {
            let marks = parse_marks(&key).map_err(|_| Error::UnknownPreset(name.to_string()))?;
            let n = marks.len() + 1;
            let cubic = n >= 3
                && marks[0] == Mark::Finite(4)
                && marks[n - 2] == Mark::Finite(4)
                && marks[1..n - 2].iter().all(|&m| m == Mark::Finite(3));
            if cubic {
                let mut labels = vec![1i64; n];
                labels[0] = 2;
                labels[n - 1] = 2;
                let mut c = vec![2i64; n];
                c[0] = 1;
                c[n - 1] = 1;
                return mk(&key, &key, &labels, Some(c));
            }
            if !marks.is_empty()
                && marks
                    .iter()
                    .all(|&m| m == Mark::Finite(3) || m == Mark::Infinite)
            {
                return mk(&key, &key, &vec![1; n], None);
            }
            Err(Error::UnknownPreset(name.to_string()))
        }
    }
}

/// The all-ones diagram `[3^k, ∞^l, 3^m]`.
pub fn three_infinity(k: usize, l: usize, m: usize) -> Result<CoxeterDiagram> {
    let mut marks = vec![Mark::Finite(3); k];
    marks.extend(std::iter::repeat_n(Mark::Infinite, l));
    marks.extend(std::iter::repeat_n(Mark::Finite(3), m));
    CoxeterDiagram::string(&marks, &vec![1; k + l + m + 1])
}

/// Resolve a CLI/diagram argument: preset name, shorthand string, or JSON object.
pub fn resolve_diagram(spec: &str) -> Result<CoxeterDiagram> {
    let t = spec.trim();
    if t.starts_with('{') {
        return CoxeterDiagram::from_json(t);
    }
    match preset(t) {
        Ok(p) => Ok(p.diagram),
        Err(Error::UnknownPreset(_)) => CoxeterDiagram::parse_shorthand(t),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn infinity_gram() {
        let p = preset("[∞]").unwrap();
        assert_eq!(p.system.gram2, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(p.radical, Some(vec![1, 1]));
    }

    #[test]
    fn rank5_gram() {
        let p = preset("[4,3,4,3]").unwrap();
        let g = &p.system.gram2;
        assert_eq!((0..5).map(|i| g[i][i]).collect::<Vec<_>>(), vec![4, 2, 2, 4, 4]);
        assert_eq!((0..4).map(|i| g[i][i + 1]).collect::<Vec<_>>(), vec![-2, -1, -2, -2]);
    }

    #[test]
    fn three_six_gram() {
        let p = preset("[3,6]").unwrap();
        assert_eq!(
            p.system.gram2,
            vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -3, 6]]
        );
    }

    #[test]
    fn non_crystallographic_rejected() {
        let d = CoxeterDiagram::string(&[Mark::Finite(4)], &[1, 1]).unwrap();
        match build_basic_system(&d) {
            Err(Error::NonCrystallographic { i: 0, j: 1, .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!("5".parse::<Mark>().is_err());
    }

    #[test]
    fn determinant_examples() {
        for n in 1..=10usize {
            let d = three_infinity(n - 1, 0, 0).unwrap();
            let s = build_basic_system(&d).unwrap();
            assert_eq!(s.det_recursion().unwrap(), r(n as i128 + 1, 1 << n));
        }
        let rank5 = preset("[4,3,4,3]").unwrap().system.det_recursion().unwrap();
        // square class of -2
        assert_eq!(rank5, r(-1, 2));
        for name in PRESET_NAMES {
            let s = preset(name).unwrap().system;
            assert_eq!(s.det_recursion().unwrap(), s.det_direct(), "{name}");
        }
    }

    #[test]
    fn d_n_closed_form_matches_recursion() {
        for n in 0..=60 {
            assert_eq!(d_n(n as i64), d_n_recursive(n), "n={n}");
        }
        assert_eq!(d_n(2), 0);
        assert_eq!(d_n(3), -1);
        assert_eq!(d_n(0), 1);
    }

    #[test]
    fn e_klm_examples() {
        assert_eq!(e_klm(3, 1, 0).unwrap(), r(-3, 16));
        let inf2 = build_basic_system(&three_infinity(0, 2, 0).unwrap()).unwrap();
        assert_eq!(e_klm(0, 2, 0).unwrap(), inf2.det_recursion().unwrap());
        for k in 0..5u32 {
            for l in 1..5u32 {
                let eq8 = r(
                    (k as i128 + 2) * d_n(l as i64 + 1) as i128 - k as i128 * d_n(l as i64 - 1) as i128,
                    1 << (k + 1),
                );
                assert_eq!(e_klm(k, l, 0).unwrap(), eq8);
            }
        }
    }

    #[test]
    fn inf_three_inf_discs() {
        assert_eq!(disc_infty_3k_infty(2).unwrap().whole, r(0, 1));
        assert_eq!(disc_infty_3k_infty(1).unwrap().end_deleted, r(-1, 4));
        assert_eq!(disc_infty_3k_infty(3).unwrap().both_deleted, r(5, 16));
        for k in 1..6usize {
            let mut marks = vec![Mark::Infinite];
            marks.extend(std::iter::repeat_n(Mark::Finite(3), k));
            marks.push(Mark::Infinite);
            let d = CoxeterDiagram::string(&marks, &vec![1; k + 3]).unwrap();
            let sys = build_basic_system(&d).unwrap();
            let n = k + 3;
            let discs = disc_infty_3k_infty(k as u32).unwrap();
            assert_eq!(sys.det_recursion().unwrap(), discs.whole);
            let v0: Vec<usize> = (1..n).collect();
            assert_eq!(sys.restrict(&v0).det_recursion().unwrap(), discs.end_deleted);
            let v0n: Vec<usize> = (1..n - 1).collect();
            assert_eq!(sys.restrict(&v0n).det_recursion().unwrap(), discs.both_deleted);
        }
    }

    #[test]
    fn reflection_matrices_examples() {
        let p = preset("[inf]").unwrap();
        let rs = p.system.reflection_matrices();
        assert_eq!(rs[0].rows(), vec![vec![-1, 2], vec![0, 1]]);
        let b = p.system.gram2_matrix();
        for rj in &rs {
            assert_eq!(&(&rj.transpose() * &b) * rj, b);
            assert_eq!(rj * rj, IntMat::identity(2));
        }
        let a2 = build_basic_system(&three_infinity(1, 0, 0).unwrap()).unwrap();
        let r = a2.reflection_matrices();
        assert_eq!((&r[0] * &r[1]).pow(3), IntMat::identity(2));
    }

    #[test]
    fn reflections_negate_their_roots() {
        for name in PRESET_NAMES {
            let s = preset(name).unwrap().system;
            let n = s.rank();
            for (j, rj) in s.reflection_matrices().iter().enumerate() {
                for i in 0..n {
                    let expect = if i == j { -1 } else { 0 };
                    assert_eq!(rj[(i, j)], expect, "{name} R_{j}");
                }
            }
        }
    }

    #[test]
    fn genericity() {
        let d63 = CoxeterDiagram::parse_shorthand("[6,3]").unwrap();
        assert!(!is_generic(&d63, 3));
        assert!(is_generic(&d63, 5));
        assert!(is_generic(&preset("[4,3,4,3]").unwrap().diagram, 3));
    }

    #[test]
    fn preset_metadata() {
        assert_eq!(preset("[3,3,4,3]").unwrap().radical, Some(vec![1, 2, 3, 2, 1]));
        assert_eq!(preset("rank6-K").unwrap().diagram.node_labels, vec![2, 1, 1, 1, 2, 2]);
        assert!(matches!(preset("[5,3]"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn euclidean_radicals_are_exact() {
        let mut names: Vec<String> = PRESET_NAMES.iter().map(|s| s.to_string()).collect();
        names.extend(["[4,4]", "[4,3,4]", "[4,3,3,4]", "[4,3,3,3,4]"].map(String::from));
        for name in names {
            let p = preset(&name).unwrap();
            let Some(c) = &p.radical else { continue };
            for row in &p.system.gram2 {
                let v: i64 = row.iter().zip(c).map(|(a, b)| a * b).sum();
                assert_eq!(v, 0, "{name}");
            }
        }
    }

    #[test]
    fn shorthand_parsing() {
        let d = CoxeterDiagram::parse_shorthand("[3^2,inf^3]").unwrap();
        assert_eq!(
            d.marks(),
            vec![
                Mark::Finite(3),
                Mark::Finite(3),
                Mark::Infinite,
                Mark::Infinite,
                Mark::Infinite
            ]
        );
        assert_eq!(d.node_labels, vec![1; 6]);
        let d = CoxeterDiagram::parse_shorthand("[4,3,4,3]").unwrap();
        assert_eq!(d.node_labels, vec![1, 2, 2, 4, 4]);
        assert!(CoxeterDiagram::parse_shorthand("4,3").is_err());
    }

    #[test]
    fn json_round_trip() {
        let j = r#"{"nodes":[1,1],"branches":[{"i":0,"j":1,"mark":"inf"}]}"#;
        let d = CoxeterDiagram::from_json(j).unwrap();
        assert_eq!(d, preset("[inf]").unwrap().diagram);
        assert_eq!(CoxeterDiagram::from_json(&d.to_json()).unwrap(), d);
        let j = r#"{"nodes":[1,1],"branches":[{"i":0,"j":1,"mark":3}],
                   "gram2_override":[[2,-1],[-1,2]]}"#;
        let d = CoxeterDiagram::from_json(j).unwrap();
        assert_eq!(build_basic_system(&d).unwrap().gram2[0][1], -1);
    }
}
