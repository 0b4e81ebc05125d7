use polyfield::cgroup::orthogonal_order;
use polyfield::coxeter::{build_basic_system, preset, three_infinity, CoxeterDiagram, PRESET_NAMES};
use polyfield::field::{legendre, PrimeField, SquareClass};
use polyfield::instance::Instance;
use polyfield::linalg;
use polyfield::matgroup::{spinor_norm, Mat, MatGroup};
use polyfield::space::ModularSpace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn space(d: &CoxeterDiagram, p: u64) -> ModularSpace {
    Instance::new(d, p).unwrap().space
}

fn vectors(n: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    (1..p.pow(n as u32)).map(move |mut c| {
        (0..n)
            .map(|_| {
                let x = c % p;
                c /= p;
                x
            })
            .collect()
    })
}

#[test]
fn radical_examples() {
    let inf = preset("[inf]").unwrap().diagram;
    for p in PRIMES {
        let s = space(&inf, p);
        assert_eq!(s.radical().len(), 1);
        let r = &s.radical()[0];
        assert!(r[0] != 0 && r[0] == r[1], "p={p} {r:?}");
        assert_eq!(s.disc(), SquareClass::Zero);
    }
    for (k, p) in [(1, 3), (3, 5), (5, 7), (9, 11)] {
        let sys = build_basic_system(&three_infinity(k, 0, 0).unwrap()).unwrap();
        assert!(ModularSpace::from_system(&sys, p).unwrap().is_singular(), "k={k} p={p}");
    }
    let rank5 = preset("[4,3,4,3]").unwrap().diagram;
    for p in PRIMES {
        assert!(!space(&rank5, p).is_singular());
    }
}

#[test]
fn witt_type_examples() {
    for name in ["rank6-G", "rank6-H", "rank6-K"] {
        let d = preset(name).unwrap().diagram;
        for p in PRIMES {
            assert_eq!(space(&d, p).witt_epsilon().unwrap(), 1, "{name} p={p}");
        }
    }
    let rank5 = preset("[4,3,4,3]").unwrap().diagram;
    assert_eq!(space(&rank5, 7).witt_epsilon().unwrap(), 0);
    assert_eq!(space(&three_infinity(1, 0, 0).unwrap(), 5).witt_epsilon().unwrap(), -1);
    assert!(space(&preset("[inf]").unwrap().diagram, 5).witt_epsilon().is_err());
}

#[test]
fn subspace_examples() {
    let d = CoxeterDiagram::parse_shorthand("[inf,3,inf]").unwrap();
    for p in [5u64, 7, 11, 13] {
        let s = space(&d, p);
        assert_eq!(s.subspace(&[]).gram(), s.gram());
        assert_eq!(s.subspace(&[0, 3]).disc(), legendre(3, p).unwrap(), "p={p}");
    }
    let rank5 = space(&preset("[4,3,4,3]").unwrap().diagram, 5);
    assert!(rank5.subspace(&[4]).is_singular());
}

#[test]
fn quotient_examples() {
    for p in [3u64, 5, 7] {
        let q = space(&preset("[inf]").unwrap().diagram, p).quotient_form();
        assert_eq!(q.gram(), &vec![vec![1]]);
    }
    let s = space(&preset("[4,3,4,3]").unwrap().diagram, 5);
    assert_eq!(s.quotient_form().gram(), s.gram());
    // mod 3 the radical of [3,6] is 2-dimensional, not just the line of c = b_0 + 2b_1 + b_2
    let s = space(&preset("[3,6]").unwrap().diagram, 3);
    assert_eq!(s.radical().len(), 2);
    assert_eq!(s.quotient_form().dim(), 1);
    assert_eq!(space(&preset("[3,6]").unwrap().diagram, 5).quotient_form().dim(), 2);
}

#[test]
fn embedding_examples() {
    let f = PrimeField::new(5).unwrap();
    let gram = vec![vec![1, 2, 0, 1], vec![2, 3, 1, 0], vec![0, 1, 2, 4], vec![1, 0, 4, 1]];
    let v = ModularSpace::new(f, gram).unwrap();
    assert!(!v.is_singular());
    let w: Vec<Vec<u64>> = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 1]];
    let wf = ModularSpace::new(f, linalg::restrict_form(&f, v.gram(), &w)).unwrap();
    assert!(!wf.is_singular());
    assert_eq!(v.embed_isometry(&w, &linalg::identity(3)).unwrap(), linalg::identity(4));

    let gram_v = Mat::from_fp(&f, v.gram()).unwrap();
    let gram_w = Mat::from_fp(&f, wf.gram()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 10 {
        let c: Vec<u64> = (0..3).map(|_| rng.gen_range(0..5)).collect();
        if wf.dot(&c, &c) == 0 {
            continue;
        }
        let ambient: Vec<u64> = (0..4)
            .map(|i| (0..3).fold(0, |acc, j| f.add(acc, f.mul(c[j], w[j][i]))))
            .collect();
        let g = wf.reflection(&c).unwrap();
        let e = v.embed_isometry(&w, &g).unwrap();
        assert_eq!(e, v.reflection(&ambient).unwrap());
        assert!(v.preserves(&e));
        let small = spinor_norm(&Mat::from_fp(&f, &g).unwrap(), &gram_w).unwrap();
        let big = spinor_norm(&Mat::from_fp(&f, &e).unwrap(), &gram_v).unwrap();
        assert_eq!(small, big);
        assert_eq!(small, f.square_class(wf.dot(&c, &c)));
        done += 1;
    }
}

#[test]
fn disc_matches_rational_determinant() {
    for name in PRESET_NAMES {
        let pr = preset(name).unwrap();
        let det = pr.system.det_recursion().unwrap();
        for p in PRIMES {
            let f = PrimeField::new(p).unwrap();
            let num = f.reduce_i128(*det.numer());
            let den = f.reduce_i128(*det.denom());
            if den == 0 {
                continue;
            }
            let s = space(&pr.diagram, p);
            assert_eq!(s.disc(), f.square_class(f.mul(num, den)), "{name} p={p}");
            let rank = linalg::rank(&f, s.gram());
            assert_eq!(s.radical().len() + rank, s.dim());
            if s.is_singular() {
                assert!(!s.quotient_form().is_singular(), "{name} p={p}");
            }
        }
    }
}

/// The group generated by every reflection of a small nonsingular space is `O(V)`;
/// its order singles out the Witt type.
#[test]
fn witt_type_matches_group_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f_of = |p| PrimeField::new(p).unwrap();
    for p in [3u64, 5, 7] {
        let f = f_of(p);
        for n in 2..=4usize {
            for _ in 0..3 {
                let gram = loop {
                    let mut g = vec![vec![0u64; n]; n];
                    for i in 0..n {
                        for j in i..n {
                            let x = rng.gen_range(0..p);
                            g[i][j] = x;
                            g[j][i] = x;
                        }
                    }
                    if linalg::det(&f, &g) != 0 {
                        break g;
                    }
                };
                let v = ModularSpace::new(f, gram.clone()).unwrap();
                let gens: Vec<Mat> = vectors(n, p)
                    .filter(|x| x.iter().find(|&&c| c != 0) == Some(&1) && v.dot(x, x) != 0)
                    .map(|x| Mat::from_fp(&f, &v.reflection(&x).unwrap()).unwrap())
                    .collect();
                let order = MatGroup::new(n, p, gens).unwrap().order();
                let eps = v.witt_epsilon().unwrap();
                assert_eq!(order, orthogonal_order(n, p, eps), "p={p} {gram:?}");
                if n % 2 == 0 {
                    assert_ne!(order, orthogonal_order(n, p, -eps));
                }
            }
        }
    }
}
