//! Semidirect covers of the rank-6 groups at p = 3: `Λ = Z₃ ⋊ G³` and
//! `Σ = (Z₃ ⊕ Z₃) ⋊ H³`, their generators, relations and the covering maps between them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coxeter::preset;
use crate::error::{Error, Result};
use crate::field::SquareClass;
use crate::instance::Instance;
use crate::matgroup::{spinor_norm, Mat};
use crate::polytope::{duality_check_h, word_subgroup, DualityWitness, H_WORDS, K_WORDS};

const P: u64 = 3;
const SAMPLE_SEED: u64 = 0x5eed_0003;

/// `(y; g)` with `y` over Z₃ (one coordinate for `Λ`, two for `Σ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtElement {
    pub y: [u8; 2],
    pub g: Mat,
}

impl ExtElement {
    pub fn is_identity(&self) -> bool {
        self.y == [0, 0] && self.g.is_identity()
    }
}

fn z3(v: i64) -> u8 {
    v.rem_euclid(3) as u8
}

fn sign(c: SquareClass) -> i64 {
    match c {
        SquareClass::Square => 1,
        _ => -1,
    }
}

/// `χ(g) = θ(g)·det(g)` as ±1.
pub fn chi(g: &Mat, gram: &Mat) -> Result<i64> {
    let det = if g.det() == 1 { 1 } else { -1 };
    Ok(sign(spinor_norm(g, gram)?) * det)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverKind {
    /// `Z₃ ⋊ G³` with `g z = χ(g) z`.
    Lambda,
    /// `Λ` with the action twisted by `w`: `g z = χ_w(g) z`.
    LambdaTwisted,
    /// `(Z₃ ⊕ Z₃) ⋊ H³` with `g(y₁, y₂) = (χ_w(g) y₁, χ(g) y₂)`.
    Sigma,
}

/// A cover group over the rank-6 `G³`, with generators given as extension elements.
#[derive(Debug, Clone)]
pub struct CoverGroup {
    pub kind: CoverKind,
    pub inst: Instance,
    pub w: Option<DualityWitness>,
    pub gens: Vec<ExtElement>,
}

impl CoverGroup {
    fn new(kind: CoverKind, gens_of: impl Fn(&Instance) -> Vec<ExtElement>) -> Result<CoverGroup> {
        let inst = Instance::new(&preset("rank6-G")?.diagram, P)?;
        let w = match kind {
            CoverKind::Lambda => None,
            _ => Some(duality_check_h(P)?),
        };
        let gens = gens_of(&inst);
        Ok(CoverGroup { kind, inst, w, gens })
    }

    fn width(&self) -> usize {
        if self.kind == CoverKind::Sigma {
            2
        } else {
            1
        }
    }

    pub fn chi(&self, g: &Mat) -> Result<i64> {
        chi(g, &self.inst.gram)
    }

    /// `χ_w(g) = θ(wgw)·det(g)`; `wgw` must have entries in GF(3).
    pub fn chi_w(&self, g: &Mat) -> Result<i64> {
        let w = self
            .w
            .as_ref()
            .ok_or_else(|| Error::Unsupported("no duality witness".into()))?;
        let c = w
            .conjugate(g)
            .ok_or_else(|| Error::Unsupported("wgw leaves GF(3)".into()))?;
        let det = if g.det() == 1 { 1 } else { -1 };
        Ok(sign(spinor_norm(&c, &self.inst.gram)?) * det)
    }

    fn action(&self, g: &Mat) -> Result<[i64; 2]> {
        Ok(match self.kind {
            CoverKind::Lambda => [self.chi(g)?, 1],
            CoverKind::LambdaTwisted => [self.chi_w(g)?, 1],
            CoverKind::Sigma => [self.chi_w(g)?, self.chi(g)?],
        })
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement {
            y: [0, 0],
            g: Mat::identity(6, P),
        }
    }

    pub fn element(&self, y: &[i64], g: Mat) -> ExtElement {
        let mut out = [0u8; 2];
        for (o, &v) in out.iter_mut().zip(y).take(self.width()) {
            *o = z3(v);
        }
        ExtElement { y: out, g }
    }

    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement> {
        let act = self.action(&a.g)?;
        let mut y = [0u8; 2];
        for k in 0..self.width() {
            y[k] = z3(a.y[k] as i64 + act[k] * b.y[k] as i64);
        }
        Ok(ExtElement { y, g: a.g.mul(&b.g) })
    }

    pub fn inverse(&self, a: &ExtElement) -> Result<ExtElement> {
        let gi = a.g.inverse().expect("invertible");
        let act = self.action(&gi)?;
        let mut y = [0u8; 2];
        for k in 0..self.width() {
            y[k] = z3(-act[k] * a.y[k] as i64);
        }
        Ok(ExtElement { y, g: gi })
    }

    pub fn pow(&self, a: &ExtElement, e: i64) -> Result<ExtElement> {
        let base = if e < 0 { self.inverse(a)? } else { *a };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    /// Product of generators by index.
    pub fn word(&self, idx: &[usize]) -> Result<ExtElement> {
        idx.iter()
            .try_fold(self.identity(), |acc, &i| self.mul(&acc, &self.gens[i]))
    }

    /// Product of arbitrary elements.
    pub fn product(&self, xs: &[ExtElement]) -> Result<ExtElement> {
        xs.iter().try_fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    /// Period: `k = |g|`, then `a^k = (y; e)` has period 1 or 3.
    pub fn element_order(&self, a: &ExtElement) -> Result<u128> {
        let k = a.g.order(None);
        let ak = self.pow(a, k as i64)?;
        Ok(if ak.y == [0, 0] { k } else { 3 * k })
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Result<ExtElement> {
        let word: Vec<usize> = (0..40).map(|_| rng.gen_range(0..self.gens.len())).collect();
        self.word(&word)
    }

    /// Associativity of the multiplication on random triples.
    pub fn associative_sample(&self, count: usize) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..count {
            let a = self.random_element(&mut rng)?;
            let b = self.random_element(&mut rng)?;
            let c = self.random_element(&mut rng)?;
            let l = self.mul(&self.mul(&a, &b)?, &c)?;
            let r = self.mul(&a, &self.mul(&b, &c)?)?;
            if l != r {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

fn rel(relation: impl Into<String>, holds: bool) -> RelationCheck {
    RelationCheck {
        relation: relation.into(),
        holds,
    }
}

/// Coxeter relations `(x_i x_j)^{m_ij} = 1` with exact adjacent periods.
fn coxeter_relations(c: &CoverGroup, gens: &[ExtElement], marks: &[u128]) -> Result<Vec<RelationCheck>> {
    let n = gens.len();
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        out.push(rel(format!("x{i}^2"), c.mul(g, g)?.is_identity()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let prod = c.mul(&gens[i], &gens[j])?;
            let m = if j == i + 1 { marks[i] } else { 2 };
            let ord = c.element_order(&prod)?;
            out.push(rel(format!("period(x{i} x{j}) = {m}"), ord == m));
        }
    }
    Ok(out)
}

/// `(x_a σ τ σ)^3` with `σ = x_b x_c x_d x_c x_b`, `τ = x_e x_d x_c x_d x_e`
/// (index pattern of the `{3,4,3,3}` and `{3,3,4,3}` toroid relations).
fn toroid_relation(c: &CoverGroup, x: &[ExtElement], idx: [usize; 5], label: &str) -> Result<RelationCheck> {
    let [a, b, cc, d, e] = idx;
    let sigma = c.product(&[x[b], x[cc], x[d], x[cc], x[b]])?;
    let tau = c.product(&[x[e], x[d], x[cc], x[d], x[e]])?;
    let y = c.product(&[x[a], sigma, tau, sigma])?;
    Ok(rel(label.to_string(), c.pow(&y, 3)?.is_identity()))
}

/// `(x_0 x_1 ⋯ x_{m} x_{m−1} ⋯ x_1)^3` for the cubic toroid `{4,3,…,3,4}_(3,0,…,0)`.
fn cubic_toroid_relation(c: &CoverGroup, x: &[ExtElement], label: &str) -> Result<RelationCheck> {
    let m = x.len() - 1;
    let mut w: Vec<ExtElement> = x.to_vec();
    w.extend(x[1..m].iter().rev());
    let y = c.product(&w)?;
    Ok(rel(label.to_string(), c.pow(&y, 3)?.is_identity()))
}

fn fmt_ext(e: &ExtElement, width: usize) -> String {
    let y: Vec<String> = e.y[..width]
        .iter()
        .map(|&v| if v == 2 { "-1".into() } else { v.to_string() })
        .collect();
    let g = if e.g.is_identity() {
        "e".to_string()
    } else if e.g == Mat::scalar(6, P, -1) {
        "-e".to_string()
    } else {
        "g".to_string()
    };
    format!("({},{g})", y.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    pub order: u128,
    pub base_order: u128,
    pub eta: Vec<i64>,
    pub eta_matches: bool,
    pub theta_matches_labels: bool,
    pub chi_homomorphism: bool,
    pub associative: bool,
    pub relations: Vec<RelationCheck>,
    pub sigma_tau_form: bool,
    pub pi_13: String,
    pub pi_order: u128,
    pub kernel_generated: bool,
}

impl LambdaReport {
    pub fn holds(&self) -> bool {
        self.eta_matches
            && self.theta_matches_labels
            && self.chi_homomorphism
            && self.associative
            && self.sigma_tau_form
            && self.kernel_generated
            && self.pi_order == 39
            && self.relations.iter().all(|r| r.holds)
    }
}

/// `Λ` with `ρ_i = (δ_{i0}, r_i)`.
pub fn build_lambda() -> Result<CoverGroup> {
    CoverGroup::new(CoverKind::Lambda, |inst| {
        (0..6)
            .map(|i| ExtElement {
                y: [(i == 0) as u8, 0],
                g: inst.reflections[i],
            })
            .collect()
    })
}

fn chi_hom_sample(c: &CoverGroup, count: usize, twisted: bool) -> Result<bool> {
    let f = |g: &Mat| if twisted { c.chi_w(g) } else { c.chi(g) };
    let gens: Vec<Mat> = c.gens.iter().map(|x| x.g).collect();
    for a in &gens {
        for b in &gens {
            if f(&a.mul(b))? != f(a)? * f(b)? {
                return Ok(false);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ twisted as u64);
    for _ in 0..count {
        let a = c.random_element(&mut rng)?.g;
        let b = c.random_element(&mut rng)?.g;
        if f(&a.mul(&b))? != f(&a)? * f(&b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relations of `[3,4,3,3,3]` on the `ρ_i`, the facet relation `(ρ_4στσ)³`, and `π = (1,h)` of period 39.
pub fn verify_universal_relations_g(lam: &CoverGroup, samples: usize) -> Result<LambdaReport> {
    let inst = &lam.inst;
    let eta: Vec<i64> = inst
        .reflections
        .iter()
        .map(|r| lam.chi(r))
        .collect::<Result<_>>()?;
    let eta_matches = eta == vec![-1, -1, 1, 1, 1, 1];
    let f = *inst.space.field();
    let theta_matches_labels = inst
        .reflections
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let label = f.reduce_i128(inst.system.gram2[i][i] as i128 / 2);
            Ok(spinor_norm(r, &inst.gram)? == f.square_class(label))
        })
        .collect::<Result<Vec<bool>>>()?
        .iter()
        .all(|&b| b);
    let rho = &lam.gens;
    let mut relations = coxeter_relations(lam, rho, &[3, 4, 3, 3, 3])?;
    relations.push(toroid_relation(lam, rho, [4, 3, 2, 1, 0], "(ρ4 σ τ σ)^3")?);
    let sigma = lam.word(&[3, 2, 1, 2, 3])?;
    let tau = lam.word(&[0, 1, 2, 1, 0])?;
    let sigma_tau_form = sigma.y == [0, 0]
        && sigma.g == inst.word(&[3, 2, 1, 2, 3])
        && tau.y == [0, 0]
        && tau.g == inst.word(&[0, 1, 2, 1, 0]);
    let pi = lam.word(&[0, 1, 2, 3, 4, 5])?;
    let pi13 = lam.pow(&pi, 13)?;
    let pi_order = lam.element_order(&pi)?;
    relations.push(rel("π^13 = (1,e)", pi13.y[0] == 1 && pi13.g.is_identity()));
    let base_order = inst.group().order();
    let kernel_generated = pi13.g.is_identity() && pi13.y[0] != 0;
    Ok(LambdaReport {
        order: if kernel_generated { 3 * base_order } else { base_order },
        base_order,
        eta,
        eta_matches,
        theta_matches_labels,
        chi_homomorphism: chi_hom_sample(lam, samples, false)?,
        associative: lam.associative_sample(samples)?,
        relations,
        sigma_tau_form,
        pi_13: fmt_ext(&pi13, 1),
        pi_order,
        kernel_generated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauReport {
    pub relations: Vec<RelationCheck>,
    pub pi1: String,
    pub pi1_13: String,
    pub pi1_order: u128,
    pub h1_order: u128,
    pub tau1_pi13_squared: String,
    pub generates_lambda: bool,
}

impl TauReport {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
            && self.pi1_13 == "(-1,-e)"
            && self.pi1_order == 26
            && self.h1_order == 26
            && self.tau1_pi13_squared == "(-1,e)"
            && self.generates_lambda
    }
}

/// `τ = (ρ_2, ρ_1, ρ_0, ρ_3ρ_2ρ_1ρ_2ρ_3, ρ_4, ρ_5)`: relations of `U_{K³}`, `π_1 = (−1,h_1)`.
pub fn tau_generators(lam: &CoverGroup) -> Result<(Vec<ExtElement>, TauReport)> {
    let tau: Vec<ExtElement> = K_WORDS
        .iter()
        .map(|w| lam.word(w))
        .collect::<Result<_>>()?;
    let mut relations = coxeter_relations(lam, &tau, &[4, 3, 3, 4, 3])?;
    relations.push(cubic_toroid_relation(lam, &tau[..5], "(τ0τ1τ2τ3τ4τ3τ2τ1)^3")?);
    relations.push(toroid_relation(lam, &tau, [1, 2, 3, 4, 5], "(τ1 σ' τ' σ')^3")?);
    let pi1 = lam.product(&tau)?;
    let pi1_13 = lam.pow(&pi1, 13)?;
    let sq = lam.pow(&lam.mul(&tau[1], &pi1_13)?, 2)?;
    let generates = sq.g.is_identity() && sq.y[0] != 0;
    relations.push(rel("π1 = (-1,h1)", pi1.y[0] == 2));
    let report = TauReport {
        relations,
        pi1: fmt_ext(&pi1, 1),
        pi1_13: fmt_ext(&pi1_13, 1),
        pi1_order: lam.element_order(&pi1)?,
        h1_order: pi1.g.order(None),
        tau1_pi13_squared: fmt_ext(&sq, 1),
        generates_lambda: generates,
    };
    Ok((tau, report))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub order: u128,
    pub base_order: u128,
    pub relations: Vec<RelationCheck>,
    pub chi_w_homomorphism: bool,
    pub associative: bool,
    pub pi2: String,
    pub h2_order: u128,
    pub h2_13_is_minus_e: bool,
    pub gamma0: String,
    pub gamma5: String,
    pub gamma0_squared: String,
    pub gamma5_squared: String,
    pub delta_swaps_generators: bool,
    pub delta_involutory: bool,
    pub delta_homomorphism: bool,
}

impl SigmaReport {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
            && self.chi_w_homomorphism
            && self.associative
            && self.pi2.starts_with("(-1,-1,")
            && self.h2_order == 26
            && self.h2_13_is_minus_e
            && self.gamma0_squared == "(0,-1,e)"
            && self.gamma5_squared == "(-1,0,e)"
            && self.delta_swaps_generators
            && self.delta_involutory
            && self.delta_homomorphism
            && self.order == 9 * self.base_order
    }
}

/// `Σ` with `σ_i = (δ_{i4}, δ_{i1}, s_i)`.
pub fn build_sigma() -> Result<CoverGroup> {
    CoverGroup::new(CoverKind::Sigma, |inst| {
        H_WORDS
            .iter()
            .enumerate()
            .map(|(i, w)| ExtElement {
                y: [(i == 4) as u8, (i == 1) as u8],
                g: inst.word(w),
            })
            .collect()
    })
}

/// `δ(y₁, y₂, g) = (y₂, y₁, wgw)`.
pub fn delta(sig: &CoverGroup, a: &ExtElement) -> Result<ExtElement> {
    let w = sig.w.as_ref().expect("Σ carries w");
    let g = w
        .conjugate(&a.g)
        .ok_or_else(|| Error::Unsupported("wgw leaves GF(3)".into()))?;
    Ok(ExtElement {
        y: [a.y[1], a.y[0]],
        g,
    })
}

pub fn verify_sigma(sig: &CoverGroup, samples: usize) -> Result<SigmaReport> {
    let s = &sig.gens;
    let mut relations = coxeter_relations(sig, s, &[3, 3, 4, 3, 3])?;
    relations.push(toroid_relation(sig, s, [0, 1, 2, 3, 4], "(σ0 σ' τ' σ')^3 facet")?);
    relations.push(toroid_relation(sig, s, [5, 4, 3, 2, 1], "(σ5 σ τ σ)^3 vertex-figure")?);
    let pi2 = sig.product(s)?;
    let pi2_13 = sig.pow(&pi2, 13)?;
    let gamma0 = sig.mul(&s[0], &pi2_13)?;
    let gamma5 = sig.mul(&s[5], &sig.pow(&pi2, -13)?)?;
    let g0sq = sig.mul(&gamma0, &gamma0)?;
    let g5sq = sig.mul(&gamma5, &gamma5)?;
    let kernel_generated = g0sq.g.is_identity()
        && g5sq.g.is_identity()
        && g0sq.y[1] != 0
        && g0sq.y[0] == 0
        && g5sq.y[0] != 0;
    let base_order = word_subgroup(&sig.inst, &H_WORDS)?.order();
    let mut delta_swaps_generators = true;
    for i in 0..6 {
        delta_swaps_generators &= delta(sig, &s[i])? == s[5 - i];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED + 1);
    let mut delta_involutory = true;
    let mut delta_homomorphism = true;
    for _ in 0..samples {
        let a = sig.random_element(&mut rng)?;
        let b = sig.random_element(&mut rng)?;
        delta_involutory &= delta(sig, &delta(sig, &a)?)? == a;
        let lhs = delta(sig, &sig.mul(&a, &b)?)?;
        let rhs = sig.mul(&delta(sig, &a)?, &delta(sig, &b)?)?;
        delta_homomorphism &= lhs == rhs;
    }
    Ok(SigmaReport {
        order: if kernel_generated { 9 * base_order } else { base_order },
        base_order,
        relations,
        chi_w_homomorphism: chi_hom_sample(sig, samples, true)?,
        associative: sig.associative_sample(samples)?,
        pi2: fmt_ext(&pi2, 2),
        h2_order: pi2.g.order(None),
        h2_13_is_minus_e: pi2_13.g == Mat::scalar(6, P, -1),
        gamma0: fmt_ext(&gamma0, 2),
        gamma5: fmt_ext(&gamma5, 2),
        gamma0_squared: fmt_ext(&g0sq, 2),
        gamma5_squared: fmt_ext(&g5sq, 2),
        delta_swaps_generators,
        delta_involutory,
        delta_homomorphism,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEdge {
    pub from: String,
    pub to: String,
    pub map: String,
    pub index: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringDiagram {
    pub nodes: Vec<String>,
    pub edges: Vec<CoverEdge>,
    pub phi_homomorphism: bool,
    pub phi_star_homomorphism: bool,
    pub ker_phi: usize,
    pub ker_phi_star: usize,
    pub phi_images_generate: bool,
    pub order_sigma: u128,
    pub order_lambda: u128,
    pub order_base: u128,
    pub phi_gamma0_sq_order: u128,
    pub phi_gamma5_sq_order: u128,
}

impl CoveringDiagram {
    pub fn holds(&self) -> bool {
        self.phi_homomorphism
            && self.phi_star_homomorphism
            && self.ker_phi == 3
            && self.ker_phi_star == 3
            && self.phi_images_generate
            && self.order_sigma == 3 * self.order_lambda
            && self.order_lambda == 3 * self.order_base
            && self.phi_gamma0_sq_order != self.phi_gamma5_sq_order
    }
}

fn project(a: &ExtElement, coord: usize) -> ExtElement {
    ExtElement {
        y: [a.y[coord], 0],
        g: a.g,
    }
}

/// The maps `φ: (y₁,y₂,g) ↦ (y₂,g)` onto `Λ` and `φ*: (y₁,y₂,g) ↦ (y₁,g)` onto the
/// `w`-twisted copy of `Λ`.
pub fn covering_diagram(sig: &CoverGroup, samples: usize) -> Result<CoveringDiagram> {
    let lam = build_lambda()?;
    let twisted = CoverGroup::new(CoverKind::LambdaTwisted, |_| Vec::new())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED + 2);
    let mut phi_hom = true;
    let mut phi_star_hom = true;
    for _ in 0..samples {
        let a = sig.random_element(&mut rng)?;
        let b = sig.random_element(&mut rng)?;
        let ab = sig.mul(&a, &b)?;
        phi_hom &= project(&ab, 1) == lam.mul(&project(&a, 1), &project(&b, 1))?;
        phi_star_hom &= project(&ab, 0) == twisted.mul(&project(&a, 0), &project(&b, 0))?;
    }
    // kernels among the torsor elements (y₁, y₂; e)
    let torsor: Vec<ExtElement> = (0..9)
        .map(|k| sig.element(&[k / 3, k % 3], Mat::identity(6, P)))
        .collect();
    let ker_phi = torsor.iter().filter(|t| project(t, 1).is_identity()).count();
    let ker_phi_star = torsor.iter().filter(|t| project(t, 0).is_identity()).count();
    let r = verify_sigma(sig, 0)?;
    let s = &sig.gens;
    let pi2 = sig.product(s)?;
    let gamma0 = sig.mul(&s[0], &sig.pow(&pi2, 13)?)?;
    let gamma5 = sig.mul(&s[5], &sig.pow(&pi2, -13)?)?;
    let g0 = project(&sig.mul(&gamma0, &gamma0)?, 1);
    let g5 = project(&sig.mul(&gamma5, &gamma5)?, 1);
    let phi_gamma0_sq_order = lam.element_order(&g0)?;
    let phi_gamma5_sq_order = lam.element_order(&g5)?;
    // φ(σ_i) generate Λ: they project onto H³ = G³ and reach the kernel (−1, e)
    let phi_images_generate = g0.g.is_identity() && g0.y[0] != 0;
    let order_base = r.base_order;
    let order_lambda = 3 * order_base;
    let edges = vec![
        CoverEdge {
            from: "U_H3".into(),
            to: "P(Lambda)".into(),
            map: "phi".into(),
            index: 3,
        },
        CoverEdge {
            from: "U_H3".into(),
            to: "P(Lambda)*".into(),
            map: "phi*".into(),
            index: 3,
        },
        CoverEdge {
            from: "P(Lambda)".into(),
            to: "P(H3)".into(),
            map: "(y,g) -> g".into(),
            index: 3,
        },
        CoverEdge {
            from: "P(Lambda)*".into(),
            to: "P(H3)".into(),
            map: "(y,g) -> g".into(),
            index: 3,
        },
    ];
    Ok(CoveringDiagram {
        nodes: vec![
            "U_H3".into(),
            "P(Lambda)".into(),
            "P(Lambda)*".into(),
            "P(H3)".into(),
        ],
        edges,
        phi_homomorphism: phi_hom,
        phi_star_homomorphism: phi_star_hom,
        ker_phi,
        ker_phi_star,
        phi_images_generate,
        order_sigma: r.order,
        order_lambda,
        order_base,
        phi_gamma0_sq_order,
        phi_gamma5_sq_order,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub p: u64,
    pub g_order: u128,
    pub s_order: u128,
    pub t_order: u128,
    pub s2_involution: bool,
    pub t3_involution: bool,
}

impl CollapseReport {
    pub fn holds(&self) -> bool {
        self.s_order == self.g_order && self.t_order == self.g_order && self.s2_involution && self.t3_involution
    }
}

/// `⟨s_i⟩ = ⟨t_i⟩ = G^p`: the characteristic-0 indices 5 and 10 collapse mod p.
pub fn subgroup_collapse_check(p: u64) -> Result<CollapseReport> {
    let inst = Instance::new(&preset("rank6-G")?.diagram, p)?;
    let g = inst.group().order();
    let s = word_subgroup(&inst, &H_WORDS)?.order();
    let t = word_subgroup(&inst, &K_WORDS)?.order();
    let s2 = inst.word(H_WORDS[2]);
    let t3 = inst.word(K_WORDS[3]);
    Ok(CollapseReport {
        p,
        g_order: g,
        s_order: s,
        t_order: t,
        s2_involution: !s2.is_identity() && s2.mul(&s2).is_identity(),
        t3_involution: !t3.is_identity() && t3.mul(&t3).is_identity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda() {
        let lam = build_lambda().unwrap();
        let r = verify_universal_relations_g(&lam, 50).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.order, 72783360);
        assert_eq!(r.pi_13, "(1,e)");
        let (_, t) = tau_generators(&lam).unwrap();
        assert!(t.holds(), "{t:?}");
    }

    #[test]
    fn sigma() {
        let sig = build_sigma().unwrap();
        let r = verify_sigma(&sig, 50).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.gamma0, "(-1,1,g)");
        let d = covering_diagram(&sig, 50).unwrap();
        assert!(d.holds(), "{d:?}");
        assert_eq!((d.phi_gamma0_sq_order, d.phi_gamma5_sq_order), (3, 1));
    }

    #[test]
    fn collapse() {
        let r = subgroup_collapse_check(3).unwrap();
        assert!(r.holds());
        assert_eq!(r.g_order, 24261120);
    }
}
