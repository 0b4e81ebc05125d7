use polyfield::coxeter::{preset, three_infinity, CoxeterDiagram};
use polyfield::field::SquareClass;
use polyfield::instance::Instance;
use polyfield::intmat::IntMat;
use polyfield::matgroup::{enumerate, spinor_norm, EnumCache, Mat, MatGroup};
use polyfield::polytope::{word_int, H_WORDS, K_WORDS};
use polyfield::Error;
use proptest::prelude::*;

fn inst(name: &str, p: u64) -> Instance {
    Instance::new(&polyfield::coxeter::resolve_diagram(name).unwrap(), p).unwrap()
}

#[test]
fn order_examples() {
    assert_eq!(inst("[4,3,4,3]", 3).group().order(), 103680);
    for name in ["rank6-G", "rank6-H", "rank6-K"] {
        assert_eq!(inst(name, 3).group().order(), 24261120, "{name}");
    }
    assert_eq!(inst("[3,3]", 5).group().order(), 24);
}

#[test]
fn membership_examples() {
    let i = inst("[4,3,4,3]", 5);
    let g = i.group();
    assert!(g.contains(&Mat::identity(5, 5)).unwrap());
    for r in &i.reflections {
        assert!(g.contains(r).unwrap());
    }
    assert!(g.contains(&Mat::scalar(5, 5, -1)).unwrap());
    assert!(!inst("[4,3,4,3]", 7).group().contains(&Mat::scalar(5, 7, -1)).unwrap());
    assert!(matches!(g.contains(&Mat::identity(4, 5)), Err(Error::DimensionMismatch { .. })));
    assert!(matches!(g.contains(&Mat::identity(5, 7)), Err(Error::FieldMismatch { .. })));
}

#[test]
fn element_order_examples() {
    let g = preset("rank6-G").unwrap().system.reflection_matrices();
    let h = Mat::from_int(&word_int(&g, &[0, 1, 2, 3, 4, 5]), 3).unwrap();
    assert_eq!(h.order(None), 13);
    let k: Vec<IntMat> = K_WORDS.iter().map(|w| word_int(&g, w)).collect();
    let h1 = Mat::from_int(&word_int(&k, &[0, 1, 2, 3, 4, 5]), 3).unwrap();
    assert_eq!(h1.order(None), 26);
    assert_eq!(h1.pow(13), Mat::scalar(6, 3, -1));
    let hh: Vec<IntMat> = H_WORDS.iter().map(|w| word_int(&g, w)).collect();
    let h2 = Mat::from_int(&word_int(&hh, &[0, 1, 2, 3, 4, 5]), 3).unwrap();
    assert_eq!(h2.order(None), 26);
    assert_eq!(Mat::identity(4, 7).order(None), 1);
}

#[test]
fn char_poly_examples() {
    let g = preset("rank6-G").unwrap().system.reflection_matrices();
    let h = word_int(&g, &[0, 1, 2, 3, 4, 5]);
    let mut c = h.char_poly().coeffs().to_vec();
    c.reverse();
    assert_eq!(c, vec![1, 0, -1, -1, -1, 0, 1]);
    let k: Vec<IntMat> = K_WORDS.iter().map(|w| word_int(&g, w)).collect();
    let mut c = word_int(&k, &[0, 1, 2, 3, 4, 5]).char_poly().coeffs().to_vec();
    c.reverse();
    assert_eq!(c, vec![1, -1, -1, 0, -1, -1, 1]);
    assert_eq!(IntMat::identity(2).char_poly().coeffs(), &[1, -2, 1]);
}

#[test]
fn spinor_examples() {
    let i = inst("[4,3,4,3]", 5);
    assert_eq!(spinor_norm(&i.reflections[0], &i.gram).unwrap(), SquareClass::NonSquare);
    assert_eq!(spinor_norm(&i.reflections[1], &i.gram).unwrap(), SquareClass::Square);
    assert_eq!(spinor_norm(&Mat::identity(5, 5), &i.gram).unwrap(), SquareClass::Square);
    let sing = inst("[inf]", 5);
    assert!(spinor_norm(&sing.reflections[0], &sing.gram).is_err());
}

#[test]
fn enumeration_examples() {
    let trivial = MatGroup::new(3, 5, vec![Mat::identity(3, 5)]).unwrap();
    let e = enumerate(&trivial, 10, None).unwrap();
    assert_eq!(e.len(), 1);
    assert!(e.contains(&Mat::identity(3, 5)));
    assert_eq!(enumerate(&inst("[3,6]", 5).group(), 1000, None).unwrap().len(), 300);
    assert_eq!(enumerate(&inst("[inf]", 7).group(), 1000, None).unwrap().len(), 14);
    assert!(matches!(
        enumerate(&inst("[3,6]", 5).group(), 100, None),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn enumeration_cache_roundtrip() {
    let dir = std::env::temp_dir().join(format!("pfec-test-{}", std::process::id()));
    let cache = EnumCache::new(&dir).unwrap();
    let g = inst("[4,3,4]", 5).group();
    let first = enumerate(&g, 1_000_000, Some(&cache)).unwrap();
    let second = enumerate(&g, 1_000_000, Some(&cache)).unwrap();
    assert_eq!(first.len(), second.len());
    assert_eq!(first.len() as u128, g.order());
    assert!(std::fs::read_dir(&dir).unwrap().count() >= 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bsgs_matches_enumeration_small() {
    for k in 0..=3usize {
        for l in 0..=3 - k {
            for m in 0..=3 - k - l {
                if k + l + m == 0 {
                    continue;
                }
                let d: CoxeterDiagram = three_infinity(k, l, m).unwrap();
                for p in [3u64, 5, 7] {
                    let g = Instance::new(&d, p).unwrap().group();
                    if g.order() > 200_000 {
                        continue;
                    }
                    let n = enumerate(&g, 200_000, None).unwrap().len() as u128;
                    assert_eq!(n, g.order(), "{} mod {p}", d.schlafli());
                }
            }
        }
    }
}

fn word_strategy(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..24)
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in word_strategy(5), b in word_strategy(5), c in word_strategy(5)) {
        let i = inst("[4,3,4,3]", 7);
        let (x, y, z) = (i.word(&a), i.word(&b), i.word(&c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse().unwrap()).is_identity());
        prop_assert!(x.preserves(&i.gram));
    }

    #[test]
    fn spinor_norm_is_multiplicative(a in word_strategy(6), b in word_strategy(6), p in prop::sample::select(vec![5u64, 7, 11])) {
        let i = inst("rank6-G", p);
        let (x, y) = (i.word(&a), i.word(&b));
        let t = |g: &Mat| spinor_norm(g, &i.gram).unwrap().sign();
        prop_assert_eq!(t(&x.mul(&y)), t(&x) * t(&y));
        let labels: i32 = a.iter().map(|&j| spinor_norm(&i.reflections[j], &i.gram).unwrap().sign()).product();
        prop_assert_eq!(t(&x), labels);
    }

    #[test]
    fn words_are_members(a in word_strategy(4)) {
        let i = inst("[inf,3,inf]", 7);
        prop_assert!(i.group().contains(&i.word(&a)).unwrap());
    }
}
