mod common;

use common::sample_fans;
use conormal::linalg::q;
use conormal::weights::{
    cap, check_morphism, degree, is_balanced, pushforward, weight_space, LatticeMap, MinkowskiWeight, PiecewiseLinearClass,
    SimplicialFan,
};
use conormal::Error;
use proptest::prelude::*;

fn class_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (0..sample_fans().len()).prop_flat_map(|i| {
        let fan = &sample_fans()[i];
        let class = proptest::collection::vec(-4i64..=4, fan.rays().len());
        (Just(i), proptest::collection::vec(class, 1..=fan.dim().max(1)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn caps_of_balanced_weights_stay_balanced((i, classes) in class_strategy()) {
        let fan = &sample_fans()[i];
        let mut w = MinkowskiWeight::fundamental(fan);
        for c in &classes {
            if w.k == 0 {
                break;
            }
            w = cap(fan, &PiecewiseLinearClass::from_integers(c), &w).unwrap();
            prop_assert!(is_balanced(fan, &w).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn caps_commute((i, classes) in class_strategy(), extra in proptest::collection::vec(-4i64..=4, 64)) {
        let fan = &sample_fans()[i];
        prop_assume!(fan.dim() >= 2);
        let a = PiecewiseLinearClass::from_integers(&classes[0]);
        let b = PiecewiseLinearClass::from_integers(&extra[..fan.rays().len()]);
        let one = MinkowskiWeight::fundamental(fan);
        let ab = cap(fan, &a, &cap(fan, &b, &one).unwrap()).unwrap();
        let ba = cap(fan, &b, &cap(fan, &a, &one).unwrap()).unwrap();
        prop_assert_eq!(ab.values, ba.values);
    }

    #[test]
    fn linear_classes_cap_to_zero(i in 0..sample_fans().len(), u in proptest::collection::vec(-5i64..=5, 16)) {
        let fan = &sample_fans()[i];
        let ell = PiecewiseLinearClass::linear(fan, &u[..fan.lattice_rank()]);
        let w = cap(fan, &ell, &MinkowskiWeight::fundamental(fan)).unwrap();
        prop_assert!(w.is_zero());
    }

    #[test]
    fn cap_is_linear_in_the_class((i, classes) in class_strategy(), s in -3i64..=3) {
        let fan = &sample_fans()[i];
        let a = PiecewiseLinearClass::from_integers(&classes[0]);
        let b = PiecewiseLinearClass::from_integers(classes.last().unwrap());
        let one = MinkowskiWeight::fundamental(fan);
        let lhs = cap(fan, &a.add(&b.scaled(q(s))), &one).unwrap();
        let rhs = cap(fan, &a, &one).unwrap().add(&cap(fan, &b, &one).unwrap().scaled(q(s))).unwrap();
        prop_assert_eq!(lhs.values, rhs.values);
    }
}

fn line_fan() -> SimplicialFan {
    SimplicialFan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap()
}

#[test]
fn projective_plane_degree() {
    let fan = SimplicialFan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let one = MinkowskiWeight::fundamental(&fan);
    assert!(is_balanced(&fan, &one).unwrap());
    let h = PiecewiseLinearClass::from_integers(&[1, 0, 0]);
    assert_eq!(degree(&fan, &[h.clone(), h], &one).unwrap(), q(1));
    assert_eq!(weight_space(&fan, 2).len(), 1);
    assert_eq!(weight_space(&fan, 1).len(), 1);
}

#[test]
fn unbalanced_weight_is_detected() {
    let fan = SimplicialFan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0], vec![1], vec![2]]).unwrap();
    let w = MinkowskiWeight::new(&fan, 1, vec![q(1), q(1), q(2)]).unwrap();
    assert!(!is_balanced(&fan, &w).unwrap());
    let ell = PiecewiseLinearClass::from_integers(&[1, 0, 0]);
    assert!(matches!(cap(&fan, &ell, &w), Err(Error::Unbalanced)));
}

#[test]
fn pushforward_to_the_line() {
    let source = SimplicialFan::new(2, vec![vec![1, 0], vec![-1, 0]], vec![vec![0], vec![1]]).unwrap();
    let target = line_fan();
    let map = LatticeMap { matrix: vec![vec![2, 0]] };
    check_morphism(&map, &source, &target).unwrap();
    let w = pushforward(&map, &source, &target, &MinkowskiWeight::fundamental(&source)).unwrap();
    assert_eq!(w.values, vec![q(2), q(2)]);
    assert!(is_balanced(&target, &w).unwrap());
}

#[test]
fn non_morphisms_are_refused() {
    let source = line_fan();
    let target = SimplicialFan::new(1, vec![vec![1]], vec![vec![0]]).unwrap();
    let map = LatticeMap { matrix: vec![vec![1]] };
    assert!(matches!(check_morphism(&map, &source, &target), Err(Error::NotAMorphism(_))));
}

#[test]
fn mismatched_class_is_refused() {
    let fan = line_fan();
    let ell = PiecewiseLinearClass::from_integers(&[1]);
    assert!(cap(&fan, &ell, &MinkowskiWeight::fundamental(&fan)).is_err());
}
