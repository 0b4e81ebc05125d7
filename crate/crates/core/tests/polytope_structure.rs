use polyfield::coxeter::preset;
use polyfield::instance::Instance;
use polyfield::matgroup::{Mat, DEFAULT_ENUM_CAP};
use polyfield::polytope::{
    coset_count, duality_check_h, quotient_cover_check_rank5, summarize, toroid_type, FaceKind,
};
use polyfield::Error;

#[test]
fn rank5_summary() {
    let s = summarize(&preset("[4,3,4,3]").unwrap().diagram, 3, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(s.flag_count, 103680);
    assert_eq!(s.f_vector[0], 90);
    assert_eq!(s.f_vector[4], 80);
    assert_eq!(s.schlafli, vec![4, 3, 4, 3]);
    assert!(s.flags_consistent);
    let FaceKind::Toroid(t) = &s.facet.kind else {
        panic!("{:?}", s.facet);
    };
    assert_eq!(t.label(), "{4,3,4}_(3,0,0)");
    assert_eq!(t.vertices, 27);
    assert_eq!(s.flag_count, s.f_vector[4] * s.facet.order);
    assert_eq!(s.flag_count, s.f_vector[0] * s.vertex_figure.order);
}

#[test]
fn rank6_summary() {
    let s = summarize(&preset("rank6-H").unwrap().diagram, 3, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(s.schlafli, vec![3, 3, 4, 3, 3]);
    assert_eq!(s.flag_count, 24261120);
    assert!(s.flags_consistent);
    assert_eq!(s.duality.self_dual, Some(true));
}

#[test]
fn toroid_examples() {
    let g = Instance::new(&preset("rank6-G").unwrap().diagram, 3).unwrap();
    let t = toroid_type(&g, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(t.label(), "{3,4,3,3}_(3,0,0,0)");
    assert_eq!(t.vertices, 243);
    assert!(t.vertices_match());
    let k = Instance::new(&preset("rank6-K").unwrap().diagram, 3).unwrap();
    let t = toroid_type(&k, &[1, 2, 3, 4, 5]).unwrap();
    assert_eq!(t.label(), "{3,3,4,3}_(3,0,0,0)");
    assert_eq!(t.translation_order, 81);
    for p in [5u64, 7] {
        let i = Instance::new(&preset("[4,3,4,3]").unwrap().diagram, p).unwrap();
        let t = toroid_type(&i, &[0, 1, 2, 3]).unwrap();
        assert_eq!(t.vertices, (p as u128).pow(3));
        assert_eq!(t.translation_order, (p as u128).pow(3));
    }
    assert!(matches!(toroid_type(&g, &[1, 2, 3]), Err(Error::Unsupported(_))));
}

#[test]
fn face_counts_by_cosets() {
    let i = Instance::new(&preset("[4,3,4,3]").unwrap().diagram, 3).unwrap();
    let s = summarize(&i.diagram, 3, DEFAULT_ENUM_CAP).unwrap();
    for j in 0..5 {
        assert_eq!(coset_count(&i, j, 100_000).unwrap() as u128, s.f_vector[j], "j={j}");
    }
}

#[test]
fn duality_examples() {
    let w = duality_check_h(7).unwrap();
    assert!(!w.extension && w.holds());
    let w = duality_check_h(5).unwrap();
    assert!(w.extension && w.holds());
    for p in [3u64, 11, 13] {
        let w = duality_check_h(p).unwrap();
        assert!(w.involution && w.conjugations.len() == 6 && w.holds(), "p={p}");
    }
    let w = duality_check_h(7).unwrap();
    let e = Mat::identity(6, 7);
    assert_eq!(w.conjugate(&e), Some(e));
}

#[test]
fn quotient_examples() {
    assert!(quotient_cover_check_rank5(3).unwrap().holds);
    let q = quotient_cover_check_rank5(5).unwrap();
    assert!(q.holds && q.minus_e_in_group);
    let q = quotient_cover_check_rank5(7).unwrap();
    assert!(q.vacuous && !q.minus_e_in_group);
}
