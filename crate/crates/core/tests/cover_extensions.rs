use polyfield::cover::{
    build_lambda, build_sigma, covering_diagram, delta, subgroup_collapse_check, tau_generators,
    verify_sigma, verify_universal_relations_g,
};
use polyfield::matgroup::Mat;

#[test]
fn lambda_examples() {
    let lam = build_lambda().unwrap();
    for i in 0..6 {
        let r = lam.word(&[i]).unwrap();
        assert!(lam.mul(&r, &r).unwrap().is_identity(), "ρ{i}^2");
    }
    let r01 = lam.word(&[0, 1]).unwrap();
    assert!(lam.pow(&r01, 3).unwrap().is_identity());
    let rep = verify_universal_relations_g(&lam, 200).unwrap();
    assert_eq!(rep.order, 72783360);
    assert_eq!(rep.pi_13, "(1,e)");
    assert_eq!(rep.pi_order, 39);
    assert!(rep.sigma_tau_form);
    assert_eq!(rep.eta, vec![-1, -1, 1, 1, 1, 1]);
    assert!(rep.holds(), "{rep:#?}");
}

#[test]
fn inverse_and_identity() {
    let lam = build_lambda().unwrap();
    let a = lam.word(&[0, 2, 3, 1, 5, 4, 1]).unwrap();
    let inv = lam.inverse(&a).unwrap();
    assert!(lam.mul(&a, &inv).unwrap().is_identity());
    assert!(lam.mul(&inv, &a).unwrap().is_identity());
    assert!(lam.identity().is_identity());
    assert!(lam.associative_sample(200).unwrap());
}

#[test]
fn tau_examples() {
    let lam = build_lambda().unwrap();
    let (tau, rep) = tau_generators(&lam).unwrap();
    assert_eq!(tau.len(), 6);
    assert_eq!(rep.pi1_13, "(-1,-e)");
    assert_eq!(rep.pi1_order, 26);
    assert_eq!(rep.tau1_pi13_squared, "(-1,e)");
    assert!(rep.holds(), "{rep:#?}");
}

#[test]
fn sigma_examples() {
    let sig = build_sigma().unwrap();
    let rep = verify_sigma(&sig, 200).unwrap();
    assert!(rep.pi2.starts_with("(-1,-1,"));
    assert_eq!(rep.gamma0_squared, "(0,-1,e)");
    assert_eq!(rep.gamma5_squared, "(-1,0,e)");
    assert_eq!(rep.order, 9 * 24261120);
    assert!(rep.holds(), "{rep:#?}");
    let a = sig.word(&[0, 3, 5, 1]).unwrap();
    assert_eq!(delta(&sig, &delta(&sig, &a).unwrap()).unwrap(), a);
}

#[test]
fn covering_diagram_examples() {
    let sig = build_sigma().unwrap();
    let c = covering_diagram(&sig, 200).unwrap();
    assert_eq!((c.ker_phi, c.ker_phi_star), (3, 3));
    assert_eq!((c.phi_gamma0_sq_order, c.phi_gamma5_sq_order), (3, 1));
    assert!(c.phi_images_generate);
    assert_eq!(c.order_sigma, 3 * c.order_lambda);
    assert!(c.holds());
}

#[test]
fn collapse_examples() {
    let c = subgroup_collapse_check(3).unwrap();
    assert_eq!((c.s_order, c.t_order), (24261120, 24261120));
    assert!(c.s2_involution && c.t3_involution);
    let lam = build_lambda().unwrap();
    let pi = lam.word(&[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(lam.pow(&pi, 13).unwrap().g, Mat::identity(6, 3));
}
