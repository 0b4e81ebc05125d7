use polyfield::cgroup::{
    classify_diagram, hat_orthogonal_order, intersection_profile, is_string_cgroup, chain_kernel_check,
    orthogonal_order, Tag,
};
use polyfield::coxeter::{preset, resolve_diagram, three_infinity, CoxeterDiagram};
use polyfield::instance::Instance;
use polyfield::matgroup::DEFAULT_ENUM_CAP;
use polyfield::space::ModularSpace;

const CAP: u128 = DEFAULT_ENUM_CAP;

fn d(s: &str) -> CoxeterDiagram {
    resolve_diagram(s).unwrap()
}

#[test]
fn cgroup_examples() {
    let v = is_string_cgroup(&d("[inf,3,inf]"), 11, CAP).unwrap();
    assert!(!v.is_cgroup);
    let w = v.witness.unwrap();
    assert_eq!((w.intersection_order, w.expected_order), (12, 6));
    assert!(is_string_cgroup(&d("[inf,3,inf]"), 5, CAP).unwrap().is_cgroup);
    for p in [3, 5, 7, 11] {
        assert!(is_string_cgroup(&d("[4,3,4,3]"), p, CAP).unwrap().is_cgroup, "p={p}");
    }
    assert!(is_string_cgroup(&d("[3]"), 5, CAP).unwrap().is_cgroup);
}

#[test]
fn classification_examples() {
    let c = classify_diagram(&d("[4,3,4,3]"), 5).unwrap();
    assert!(c.has(&Tag::FullOrthogonal { n: 5, p: 5, eps: 0 }));
    let c = classify_diagram(&d("[4,3,4,3]"), 7).unwrap();
    assert!(c.has(&Tag::SpinorKernel { n: 5, p: 7, eps: 0 }));
    assert!(!c.has(&Tag::FullOrthogonal { n: 5, p: 7, eps: 0 }));
    let c = classify_diagram(&d("[3]"), 5).unwrap();
    assert_eq!(c.order, 6);
    assert!(c.has(&Tag::SpinorKernel { n: 2, p: 5, eps: -1 }));
    let c = classify_diagram(&d("[3,3]"), 5).unwrap();
    assert_eq!(c.order, 24);
    assert!(c.has(&Tag::Spherical { name: "A3".into() }));
    let c = classify_diagram(&d("[inf]"), 5).unwrap();
    assert!(c.has(&Tag::HatO { n: 2, p: 5 }), "{c:?}");
}

#[test]
fn chain_kernel_equality_cases() {
    let r = chain_kernel_check(1, 5).unwrap();
    assert!(r.equal && r.group_order == 6);
    let r = chain_kernel_check(1, 7).unwrap();
    assert!(r.equal && r.target == "O1(2,7,+1)");
    let r = chain_kernel_check(2, 5).unwrap();
    assert!(!r.equal && r.group_order == 24 && r.target_order == 120);
}

#[test]
fn profile_of_inf3inf() {
    let pr = intersection_profile(&d("[inf,3,inf]"), 11, CAP).unwrap();
    // D = G_0 ∩ G_3 is all of O_1(V_{0,3}) = O_1(2,11,-1), twice |G_{0,3}|
    assert_eq!(pr.d_order, 12);
    assert_eq!(pr.g_0n_order, 6);
    assert_eq!(pr.o1_order, 12);
    assert!(pr.contains_g_0n);
    assert!(pr.matches.contains(&"O1".to_string()), "{pr:?}");
}

/// A string C-group stays a C-group on every connected sub-string.
#[test]
fn verdicts_are_monotone() {
    let mut corpus = Vec::new();
    for k in 0..=4usize {
        for l in 0..=4 - k {
            for m in 0..=4 - k - l {
                if k + l + m > 1 {
                    corpus.push(three_infinity(k, l, m).unwrap());
                }
            }
        }
    }
    corpus.push(preset("[4,3,4,3]").unwrap().diagram);
    corpus.push(preset("[3,3,4,3]").unwrap().diagram);
    let mut checked = 0;
    for dg in &corpus {
        for p in [3u64, 5, 7] {
            if !is_string_cgroup(dg, p, CAP).unwrap().is_cgroup {
                continue;
            }
            let n = dg.rank();
            for a in 0..n {
                for b in a + 1..n {
                    if (a, b) == (0, n - 1) {
                        continue;
                    }
                    let keep: Vec<usize> = (a..=b).collect();
                    let sub = dg.sub_diagram(&keep);
                    checked += 1;
                    assert!(
                        is_string_cgroup(&sub, p, CAP).unwrap().is_cgroup,
                        "{} mod {p}, nodes {a}..={b}",
                        dg.schlafli()
                    );
                }
            }
        }
    }
    assert!(checked > 100);
}

fn brute_force_hat_order(space: &ModularSpace) -> u128 {
    let n = space.dim();
    let p = space.p();
    let f = space.field();
    let total = p.pow((n * n) as u32);
    let mut count = 0;
    for mut code in 0..total {
        let mut g = vec![vec![0u64; n]; n];
        for row in g.iter_mut() {
            for x in row.iter_mut() {
                *x = code % p;
                code /= p;
            }
        }
        if polyfield::linalg::det(f, &g) == 0 || !space.preserves(&g) {
            continue;
        }
        let fixes = space
            .radical()
            .iter()
            .all(|r| polyfield::linalg::mat_vec(f, &g, r) == *r);
        if fixes {
            count += 1;
        }
    }
    count
}

#[test]
fn hat_orders_match_brute_force() {
    for (name, p) in [("[inf]", 3u64), ("[inf]", 5), ("[inf]", 7), ("[3]", 3), ("[3,6]", 5), ("[3,6]", 3), ("[6,3]", 5)] {
        let s = Instance::new(&d(name), p).unwrap().space;
        assert!(s.is_singular());
        let q = s.quotient_form();
        let want = hat_orthogonal_order(s.dim(), s.radical().len(), p, q.witt_epsilon().unwrap());
        assert_eq!(brute_force_hat_order(&s), want, "{name} mod {p}");
    }
}

#[test]
fn orthogonal_orders_match_brute_force() {
    for (name, p) in [("[3]", 5u64), ("[3]", 7), ("[inf,inf]", 3), ("[4,4]", 3), ("[3,3]", 3)] {
        let s = Instance::new(&d(name), p).unwrap().space;
        if s.is_singular() {
            continue;
        }
        let want = orthogonal_order(s.dim(), p, s.witt_epsilon().unwrap());
        assert_eq!(brute_force_hat_order(&s), want, "{name} mod {p}");
    }
}
