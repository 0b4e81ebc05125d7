//! Singular spaces: translation subgroups of Euclidean groups and the
//! transvection tower for `[3^k, ∞^l]`.

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterDiagram, Mark};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::instance::Instance;
use crate::matgroup::{Mat, MatGroup, Vector, MAX_DIM};

fn to_vec(v: &[u64]) -> Vector {
    let mut out = [0u8; MAX_DIM];
    for (o, &x) in out.iter_mut().zip(v) {
        *o = x as u8;
    }
    out
}

/// Transvection `x ↦ x − (x·a) c` as a matrix.
pub fn transvection(inst: &Instance, a: &[u64], c: &[u64]) -> Mat {
    let f = inst.space.field();
    let n = inst.rank();
    let mut m = Mat::identity(n, inst.p());
    for k in 0..n {
        let mut e = vec![0u64; n];
        e[k] = 1;
        let s = inst.space.dot(&e, a);
        for i in 0..n {
            let v = f.sub(m.get(i, k) as u64, f.mul(s, c[i]));
            m.set(i, k, v as u8);
        }
    }
    m
}

/// Action of `g` on `V / rad(V)` in the basis of [`ModularSpace::radical_complement`].
pub fn quotient_action(inst: &Instance, g: &Mat) -> Result<Mat> {
    let sp = &inst.space;
    let f = sp.field();
    let n = sp.dim();
    let mut rad = sp.radical().to_vec();
    let pivots = crate::linalg::rref(f, &mut rad);
    let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let k = comp.len();
    let mut out = vec![vec![0u64; k]; k];
    for (col, &j) in comp.iter().enumerate() {
        let mut v: Vec<u64> = (0..n).map(|i| g.get(i, j) as u64).collect();
        // subtract radical components to clear pivot coordinates
        for (r, &pc) in pivots.iter().enumerate() {
            let lam = v[pc];
            for i in 0..n {
                v[i] = f.sub(v[i], f.mul(lam, rad[r][i]));
            }
        }
        for (row, &i) in comp.iter().enumerate() {
            out[row][col] = v[i];
        }
    }
    Mat::from_fp(f, &out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclideanSplit {
    pub p: u64,
    pub order: u128,
    pub m: usize,
    pub translation_order: u128,
    pub point_group_order: u128,
    pub radical: Vec<u64>,
    pub radical_fixed: bool,
    pub transvections_in_group: bool,
    pub split_holds: bool,
}

/// Verify `|E^p| = p^m |H^p|` with `T` generated by the transvections `t_{b_j}`.
pub fn euclidean_split_check(diagram: &CoxeterDiagram, p: u64) -> Result<EuclideanSplit> {
    let inst = Instance::new(diagram, p)?;
    let rad = inst.space.radical();
    if rad.len() != 1 {
        return Err(Error::Unsupported(format!(
            "expected a 1-dimensional radical, got {}",
            rad.len()
        )));
    }
    let c = rad[0].clone();
    let cv = to_vec(&c);
    let g = inst.group();
    let radical_fixed = inst.reflections.iter().all(|r| r.apply(&cv) == cv);
    let n = inst.rank();
    let ts: Vec<Mat> = (0..n)
        .map(|j| {
            let mut b = vec![0u64; n];
            b[j] = 1;
            transvection(&inst, &b, &c)
        })
        .collect();
    let transvections_in_group = ts.iter().all(|t| g.bsgs().contains(t));
    let t_group = MatGroup::new(n, p, ts)?;
    let images = inst
        .reflections
        .iter()
        .map(|r| quotient_action(&inst, r))
        .collect::<Result<Vec<_>>>()?;
    let h = MatGroup::new(n - 1, p, images)?;
    let m = n - 1;
    let split_holds = g.order() == (p as u128).pow(m as u32) * h.order()
        && t_group.order() == (p as u128).pow(m as u32);
    Ok(EuclideanSplit {
        p,
        order: g.order(),
        m,
        translation_order: t_group.order(),
        point_group_order: h.order(),
        radical: c,
        radical_fixed,
        transvections_in_group,
        split_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerStep {
    pub j: usize,
    pub in_group: bool,
    pub formula_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransvectionTower {
    pub p: u64,
    pub radical: Vec<u64>,
    pub q: u64,
    pub h_in_g0: bool,
    pub steps: Vec<TowerStep>,
    pub fixes_radical: bool,
    pub order: u128,
    pub g0_order: u128,
    pub order_identity_holds: bool,
}

/// Build `t_1 = (h^{-1} r_0)^q` and `t_{j+1}` from `t_{j-1}^{-α} t_j r_j t_j r_j = t_{j+1}^β`
/// (with `t_0 = e`), checking `t_j(b_i) = b_i + δ_{ij} c` and `|G| = p^{n−1}|G_0|`.
pub fn transvection_tower(diagram: &CoxeterDiagram, p: u64) -> Result<TransvectionTower> {
    let marks = diagram.marks();
    let l_start = marks.iter().position(|&m| m == Mark::Infinite);
    let valid = l_start.is_some_and(|s| {
        marks[..s].iter().all(|&m| m == Mark::Finite(3))
            && marks[s..].iter().all(|&m| m == Mark::Infinite)
    }) && diagram.node_labels.iter().all(|&l| l == 1);
    if !valid {
        return Err(Error::InvalidDiagram(
            "transvection tower needs [3^k, inf^l] with l >= 1 and unit labels".into(),
        ));
    }
    let inst = Instance::new(diagram, p)?;
    let sp = &inst.space;
    let f: PrimeField = *sp.field();
    if sp.radical().len() != 1 {
        return Err(Error::Unsupported(format!(
            "space must be singular with 1-dimensional radical (got {})",
            sp.radical().len()
        )));
    }
    let n = inst.rank();
    let mut c = sp.radical()[0].clone();
    if c[0] == 0 {
        return Err(Error::Unsupported("radical vector has x_0 = 0".into()));
    }
    let s = f.inv(c[0]);
    for x in c.iter_mut() {
        *x = f.mul(*x, s);
    }
    let cv = to_vec(&c);
    let cartan = &inst.system.cartan;

    // h: c ↦ c and b_i ↦ π(r_0 b_i) = b_i + a_{0i} Σ_{j≥1} c_j b_j for i ≥ 1.
    let mut hb: Vec<Vec<u64>> = vec![vec![0; n]; n]; // columns h(b_i)
    for i in 1..n {
        let a0i = f.reduce(cartan[0][i]);
        let mut col = vec![0u64; n];
        col[i] = 1;
        for j in 1..n {
            col[j] = f.add(col[j], f.mul(a0i, c[j]));
        }
        hb[i] = col;
    }
    // h(b_0) = c − Σ_{i≥1} c_i h(b_i)
    let mut col0 = c.clone();
    for i in 1..n {
        for r in 0..n {
            col0[r] = f.sub(col0[r], f.mul(c[i], hb[i][r]));
        }
    }
    hb[0] = col0;
    let hrows: Vec<Vec<u64>> = (0..n).map(|r| (0..n).map(|k| hb[k][r]).collect()).collect();
    let h = Mat::from_fp(&f, &hrows)?;
    let g0 = inst.parabolic(&[0]);
    let h_in_g0 = g0.bsgs().contains(&h);

    let q = if marks[0] == Mark::Finite(3) { 1 } else { (p + 1) / 2 };
    let hinv = h.inverse().ok_or_else(|| Error::Unsupported("h is singular".into()))?;
    let g = inst.group();
    let expected = |j: usize| -> Mat {
        // t_j(b_i) = b_i + δ_ij c
        let mut m = Mat::identity(n, p);
        for r in 0..n {
            let v = f.add(m.get(r, j) as u64, c[r]);
            m.set(r, j, v as u8);
        }
        // fix t_j(b_0) from t_j(c) = c: b_0 = c − Σ c_i b_i
        let mut b0 = c.clone();
        for i in 1..n {
            for r in 0..n {
                b0[r] = f.sub(b0[r], f.mul(c[i], m.get(r, i) as u64));
            }
        }
        for r in 0..n {
            m.set(r, 0, b0[r] as u8);
        }
        m
    };
    let mut ts: Vec<Mat> = vec![Mat::identity(n, p)];
    let t1 = hinv.mul(&inst.reflections[0]).pow(q as u128);
    ts.push(t1);
    for j in 1..n - 1 {
        let alpha = f.reduce(-cartan[j][j - 1]);
        let beta = f.reduce(-cartan[j][j + 1]);
        let rj = inst.reflections[j];
        let tj = ts[j];
        let prev_inv = ts[j - 1].inverse().expect("invertible");
        let lhs = prev_inv
            .pow(alpha as u128)
            .mul(&tj)
            .mul(&rj)
            .mul(&tj)
            .mul(&rj);
        let binv = f.inv(beta);
        ts.push(lhs.pow(binv as u128));
    }
    let steps: Vec<TowerStep> = (1..n)
        .map(|j| TowerStep {
            j,
            in_group: g.bsgs().contains(&ts[j]),
            formula_holds: ts[j] == expected(j),
        })
        .collect();
    let fixes_radical = ts.iter().all(|t| t.apply(&cv) == cv);
    let order = g.order();
    let g0_order = g0.order();
    Ok(TransvectionTower {
        p,
        radical: c,
        q,
        h_in_g0,
        steps,
        fixes_radical,
        order,
        g0_order,
        order_identity_holds: order == (p as u128).pow((n - 1) as u32) * g0_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;

    fn sh(s: &str) -> CoxeterDiagram {
        CoxeterDiagram::parse_shorthand(s).unwrap()
    }

    #[test]
    fn three_six_split() {
        let r = euclidean_split_check(&preset("[3,6]").unwrap().diagram, 5).unwrap();
        assert_eq!(r.order, 300);
        assert_eq!(r.translation_order, 25);
        assert_eq!(r.point_group_order, 12);
        assert!(r.split_holds && r.radical_fixed && r.transvections_in_group);
    }

    #[test]
    fn cubic_split() {
        let r = euclidean_split_check(&preset("[4,3,4]").unwrap().diagram, 3).unwrap();
        assert_eq!(r.order, 27 * 48);
        assert!(r.split_holds);
        let r = euclidean_split_check(&preset("[3,3,4,3]").unwrap().diagram, 3).unwrap();
        assert!(r.radical_fixed);
    }

    #[test]
    fn tower_infinity() {
        for p in [3, 5, 7] {
            let t = transvection_tower(&sh("[inf]"), p).unwrap();
            assert_eq!(t.order, 2 * p as u128);
            assert!(t.h_in_g0 && t.order_identity_holds && t.fixes_radical);
            assert!(t.steps.iter().all(|s| s.in_group && s.formula_holds), "{t:?}");
        }
    }

    #[test]
    fn tower_rank5() {
        // [inf^4] is singular for every p (d_5 = 0)
        for p in [5, 7] {
            let t = transvection_tower(&sh("[inf^4]"), p).unwrap();
            assert!(t.h_in_g0 && t.order_identity_holds, "{t:?}");
            assert!(t.steps.iter().all(|s| s.in_group && s.formula_holds), "{t:?}");
        }
    }

    #[test]
    fn tower_at_three_collapses_to_symmetric_group() {
        // every rotation has period 3 mod 3, so G = S_6 and G_0 = S_5
        let t = transvection_tower(&sh("[3,3,3,inf]"), 3).unwrap();
        assert_eq!((t.order, t.g0_order), (720, 120));
        assert!(!t.order_identity_holds);
        assert!(t.steps.iter().all(|s| s.formula_holds && !s.in_group));
    }
}
