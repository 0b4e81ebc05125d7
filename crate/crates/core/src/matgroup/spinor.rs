//! Spinor norms of isometries of a nonsingular form.

use crate::error::{Error, Result};
use crate::field::{PrimeField, SquareClass};

use super::mat::{unit_vector, Mat, Vector, MAX_DIM};

fn form(gram: &Mat, x: &Vector, y: &Vector) -> u64 {
    let gy = gram.apply(y);
    let p = gram.p();
    (0..gram.n()).map(|i| x[i] as u64 * gy[i] as u64).sum::<u64>() % p
}

fn sub(x: &Vector, y: &Vector, n: usize, p: u64) -> Vector {
    let mut out = [0u8; MAX_DIM];
    for i in 0..n {
        out[i] = ((x[i] as u64 + p - y[i] as u64) % p) as u8;
    }
    out
}

/// Reflection in an anisotropic vector `v` for the form `gram`.
pub fn reflection(gram: &Mat, v: &Vector) -> Option<Mat> {
    let (n, p) = (gram.n(), gram.p());
    let f = PrimeField::new(p).ok()?;
    let q = form(gram, v, v);
    if q == 0 {
        return None;
    }
    let c = f.mul(2, f.inv(q));
    let gv = gram.apply(v);
    let mut m = Mat::identity(n, p);
    for i in 0..n {
        for j in 0..n {
            let t = f.mul(c, f.mul(v[i] as u64, gv[j] as u64));
            m.set(i, j, f.sub(m.get(i, j) as u64, t) as u8);
        }
    }
    Some(m)
}

/// Vectors of `span(basis)`: the basis, sums and differences of pairs, then every
/// combination (lazily, in coefficient-code order).
fn span_vectors<'a>(basis: &'a [Vector], n: usize, p: u64) -> impl Iterator<Item = Vector> + 'a {
    let k = basis.len();
    let combo = move |coef: &[u64]| -> Vector {
        let mut out = [0u8; MAX_DIM];
        for (c, b) in coef.iter().zip(basis) {
            for i in 0..n {
                out[i] = ((out[i] as u64 + c * b[i] as u64) % p) as u8;
            }
        }
        out
    };
    let short = (0..k).flat_map(move |a| {
        let single = std::iter::once((a, None, 1));
        let pairs = (a + 1..k).flat_map(move |b| [(a, Some(b), 1), (a, Some(b), p - 1)]);
        single.chain(pairs)
    });
    let short = short.map(move |(a, b, s)| {
        let mut coef = vec![0u64; k];
        coef[a] = 1;
        if let Some(b) = b {
            coef[b] = s;
        }
        combo(&coef)
    });
    let total = p.checked_pow(k as u32).unwrap_or(u64::MAX);
    let full = (1..total).map(move |mut code| {
        let mut coef = vec![0u64; k];
        for c in coef.iter_mut() {
            *c = code % p;
            code /= p;
        }
        combo(&coef)
    });
    short.chain(full)
}

/// Basis of `{y ∈ span(basis) : y·x = 0}`.
fn perp_in(f: &PrimeField, gram: &Mat, basis: &[Vector], x: &Vector) -> Vec<Vector> {
    let n = gram.n();
    let row: Vec<u64> = basis.iter().map(|b| form(gram, b, x)).collect();
    crate::linalg::null_space(f, &vec![row], basis.len())
        .iter()
        .map(|coef| {
            let mut out = [0u8; MAX_DIM];
            for (c, b) in coef.iter().zip(basis) {
                for i in 0..n {
                    out[i] = f.add(out[i] as u64, f.mul(*c, b[i] as u64)) as u8;
                }
            }
            out
        })
        .collect()
}

/// An anisotropic `x ∈ W` that `h` fixes or moves by an anisotropic difference.
fn good_vector(h: &Mat, gram: &Mat, w: &[Vector]) -> Option<(Vector, Option<Vector>)> {
    let (n, p) = (h.n(), h.p());
    span_vectors(w, n, p).find_map(|x| {
        if form(gram, &x, &x) == 0 {
            return None;
        }
        let v = sub(&h.apply(&x), &x, n, p);
        if v[..n].iter().all(|&c| c == 0) {
            Some((x, None))
        } else if form(gram, &v, &v) != 0 {
            Some((x, Some(v)))
        } else {
            None
        }
    })
}

/// Spinor norm by constructive Cartan–Dieudonné, `θ(r_b)` = class of `b·b`.
///
/// Works in a nondegenerate subspace `W` with `h = 1` on `W^⊥`. An anisotropic
/// `x ∈ W` fixed by `h`, or moved by an anisotropic `v = hx − x` (then `r_v h`
/// fixes `x`), lets `W` shrink to `W ∩ x^⊥`. If there is none, one extra
/// reflection `r_u` produces such an `x`. At most `2n` reflections are used.
pub fn spinor_norm(g: &Mat, gram: &Mat) -> Result<SquareClass> {
    let (n, p) = (g.n(), g.p());
    let f = PrimeField::new(p)?;
    if gram.det() == 0 {
        return Err(Error::SingularSpace(n));
    }
    if !g.preserves(gram) {
        return Err(Error::Unsupported("element does not preserve the form".into()));
    }
    let mut theta = SquareClass::Square;
    let mut h = *g;
    let mut w: Vec<Vector> = (0..n).map(|k| unit_vector(n, k)).collect();
    while !h.is_identity() {
        let step = match good_vector(&h, gram, &w) {
            Some(found) => found,
            None => {
                let (u, h2, found) = span_vectors(&w, n, p)
                    .filter(|u| form(gram, u, u) != 0)
                    .find_map(|u| {
                        let h2 = reflection(gram, &u).expect("anisotropic").mul(&h);
                        good_vector(&h2, gram, &w).map(|x| (u, h2, x))
                    })
                    .ok_or_else(|| Error::Unsupported("no reducing reflection found".into()))?;
                theta = theta * f.square_class(form(gram, &u, &u));
                h = h2;
                found
            }
        };
        let (x, v) = step;
        if let Some(v) = v {
            h = reflection(gram, &v).expect("anisotropic").mul(&h);
            theta = theta * f.square_class(form(gram, &v, &v));
        }
        w = perp_in(&f, gram, &w, &x);
        if w.is_empty() && !h.is_identity() {
            return Err(Error::Unsupported("reflection factorization did not terminate".into()));
        }
    }
    Ok(theta)
}

/// Independent spinor norm via the Wall form on `W = im(1 − g)`:
/// `[x, y] = B(x, u)` for `y = (1 − g)u`; `θ(g)` is the class of `2^{dim W} det`.
pub fn spinor_norm_wall(g: &Mat, gram: &Mat) -> Result<SquareClass> {
    let (n, p) = (g.n(), g.p());
    let f = PrimeField::new(p)?;
    let one_minus = {
        let mut m = Mat::identity(n, p);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f.sub(m.get(i, j) as u64, g.get(i, j) as u64) as u8);
            }
        }
        m
    };
    // independent images (1−g)e_j, keeping their preimages
    let mut ws: Vec<Vector> = Vec::new();
    let mut us: Vec<Vector> = Vec::new();
    let mut echelon: Vec<Vec<u64>> = Vec::new();
    for j in 0..n {
        let e = unit_vector(n, j);
        let w = one_minus.apply(&e);
        let mut rows = echelon.clone();
        rows.push(w[..n].iter().map(|&x| x as u64).collect());
        if crate::linalg::rank(&f, &rows) > echelon.len() {
            echelon = rows;
            ws.push(w);
            us.push(e);
        }
    }
    let k = ws.len();
    if k == 0 {
        return Ok(SquareClass::Square);
    }
    let wall: Vec<Vec<u64>> = (0..k)
        .map(|a| (0..k).map(|b| form(gram, &ws[a], &us[b])).collect())
        .collect();
    let d = crate::linalg::det(&f, &wall);
    Ok(f.square_class(f.mul(d, f.pow(2, k as u64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;
    use crate::matgroup::MatGroup;
    use crate::space::ModularSpace;

    fn setup(name: &str, p: u64) -> (MatGroup, Mat) {
        let sys = preset(name).unwrap().system;
        let sp = ModularSpace::from_system(&sys, p).unwrap();
        let gram = Mat::from_fp(sp.field(), sp.gram()).unwrap();
        let g = MatGroup::from_int(&sys.reflection_matrices(), p)
            .unwrap()
            .with_form(gram)
            .unwrap();
        (g, gram)
    }

    #[test]
    fn root_reflection_norm() {
        let (g, gram) = setup("[4,3,4,3]", 5);
        // b_0 has norm 2, a non-square mod 5
        assert_eq!(spinor_norm(&g.gens()[0], &gram).unwrap(), SquareClass::NonSquare);
        assert_eq!(spinor_norm(&g.identity(), &gram).unwrap(), SquareClass::Square);
    }

    #[test]
    fn minus_identity_matches_disc() {
        for p in [3u64, 5, 7, 17] {
            let (_, gram) = setup("[4,3,4,3]", p);
            let f = PrimeField::new(p).unwrap();
            let minus = Mat::scalar(5, p, -1);
            let expect = f.square_class(f.reduce(-2));
            assert_eq!(spinor_norm(&minus, &gram).unwrap(), expect, "p={p}");
            assert_eq!(spinor_norm_wall(&minus, &gram).unwrap(), expect, "p={p}");
        }
    }

    #[test]
    fn agrees_with_wall_form_on_group() {
        for (name, p) in [("[4,3,4,3]", 3u64), ("rank6-G", 5)] {
            let (g, gram) = setup(name, p);
            for x in g.elements().step_by(97).take(400) {
                assert_eq!(
                    spinor_norm(&x, &gram).unwrap(),
                    spinor_norm_wall(&x, &gram).unwrap(),
                    "{name} p={p}"
                );
            }
        }
    }
}
