use conormal::conormal::{Bergman, Conormal};
use conormal::hodge::*;
use conormal::weights::{product, MinkowskiWeight, PiecewiseLinearClass, SimplicialFan};
use conormal::{corpus, Error, Matroid};
use num_traits::Signed;

fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).unwrap()
}

#[test]
fn desk_fans_satisfy_pd_hl_hr() {
    for (r, n) in [(2, 3), (2, 4), (3, 4)] {
        let cn = Conormal::new(&uniform(r, n)).unwrap();
        let rep = lefschetz_report(cn.fan(), &cn.support_function(), 1).unwrap();
        assert!(rep.all_hold(), "conormal U({r},{n}): {rep:?}");
        assert!(!rep.top_degree.starts_with('-') && rep.top_degree != "0");
    }
    for (r, n) in [(2, 3), (2, 4)] {
        let b = Bergman::new(&uniform(r, n)).unwrap();
        let rep = lefschetz_report(&b.fan, &b.support_function(), 1).unwrap();
        assert!(rep.all_hold(), "bergman U({r},{n}): {rep:?}");
    }
}

#[test]
fn hr_signature_formula() {
    let cn = Conormal::new(&uniform(3, 4)).unwrap();
    let rep = lefschetz_report(cn.fan(), &cn.support_function(), 1).unwrap();
    assert_eq!(rep.betti, vec![1, 7, 1]);
    assert_eq!(rep.hr[1].signature, 5);
    assert_eq!(expected_hr_signature(&[1, 7, 1], 1), 5);
    assert_eq!(expected_hr_signature(&[1, 2, 1], 1), 0);
}

#[test]
fn top_power_of_support_function_is_positive_on_corpus() {
    for m in corpus::standard_corpus(5, 5).unwrap() {
        let cn = Conormal::new(&m).unwrap();
        let one = MinkowskiWeight::fundamental(cn.fan());
        let d = top_degree(cn.fan(), &cn.support_function(), &one).unwrap();
        assert!(d.is_positive(), "{:?}: {d}", m.name());
    }
}

#[test]
fn minkowski_weights_are_dual_to_chow_groups() {
    for (r, n) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
        let cn = Conormal::new(&uniform(r, n)).unwrap();
        let chow = GradedChow::new(cn.fan()).unwrap();
        for k in 0..=chow.dim() {
            let (mw, rank, b) = weight_chow_duality(&chow, k).unwrap();
            assert_eq!((mw, rank), (b, b), "U({r},{n}) k={k}");
        }
    }
}

fn bergman_u23() -> SimplicialFan {
    Bergman::new(&uniform(2, 3)).unwrap().fan
}

#[test]
fn edge_subdivision_adds_star_betti_numbers() {
    let b = bergman_u23();
    for fan in [product(&b, &b), product(&b, &product(&b, &b))] {
        let before = GradedChow::new(&fan).unwrap().betti_numbers();
        let sigma: Vec<usize> = fan.cones(2)[0].iter().map(|&i| i as usize).collect();
        let blown = stellar_subdivision(&fan, &sigma).unwrap();
        let star = star_fan(&fan, &sigma).unwrap();
        let after = GradedChow::new(&blown).unwrap().betti_numbers();
        let st = GradedChow::new(&star).unwrap().betti_numbers();
        for i in 0..after.len() {
            let shifted = if i == 0 { 0 } else { st.get(i - 1).copied().unwrap_or(0) };
            assert_eq!(after[i], before[i] + shifted, "degree {i}");
        }
        let f = lefschetz_fundamental(&blown).unwrap();
        assert!(pd_check(&GradedChow::new(&blown).unwrap(), &f).unwrap().iter().all(|&x| x));
    }
}

#[test]
fn stellar_subdivision_refuses_missing_cones() {
    let b = bergman_u23();
    assert!(matches!(stellar_subdivision(&b, &[0, 1]), Err(Error::ConeNotInFan(_))));
}

#[test]
fn delta_is_not_strictly_convex_on_u34() {
    let cn = Conormal::new(&uniform(3, 4)).unwrap();
    assert!(!strictly_convex_member(cn.fan(), &cn.delta(0)));
    assert!(strictly_convex_member(cn.fan(), &cn.support_function()));
}

#[test]
fn linear_classes_are_not_strictly_convex() {
    let cn = Conormal::new(&uniform(2, 4)).unwrap();
    let zero = PiecewiseLinearClass::from_integers(&vec![0; cn.fan().rays().len()]);
    assert!(!strictly_convex_member(cn.fan(), &zero));
}

#[test]
fn budget_guard_refuses_large_fans() {
    let cn = Conormal::new(&uniform(3, 4)).unwrap();
    assert!(matches!(GradedChow::with_budget(cn.fan(), 3), Err(Error::ResourceGuard { .. })));
}

#[test]
fn unbalanced_fans_lack_a_fundamental_weight() {
    let b = bergman_u23();
    let broken = SimplicialFan::new(b.lattice_rank(), b.rays().to_vec(), vec![vec![0], vec![1]]).unwrap();
    assert!(matches!(lefschetz_fundamental(&broken), Err(Error::NotLefschetzEligible(_))));
}

#[test]
fn alexandrov_fenchel_on_pyramid() {
    let cn = Conormal::new(&corpus::pyramid()).unwrap();
    let af = conormal::verify::alexandrov_fenchel_degrees(&cn).unwrap();
    assert_eq!(af.len(), 2);
    assert!(af.iter().all(|x| x.holds));
    assert_eq!((af[0].mixed.as_str(), af[0].first.as_str(), af[0].second.as_str()), ("6", "4", "3"));
}
