mod common;

use common::permutation;
use conormal::bipermutohedral::Biflag;
use conormal::conormal::{csm_cycle, csm_via_fiber_sum, csm_via_pushforward, double_jumps, Bergman, Conormal};
use conormal::verify::{self, Theorem};
use conormal::weights::{is_balanced, MinkowskiWeight};
use conormal::{corpus, Error, Matroid};
use proptest::prelude::*;
use std::sync::OnceLock;

fn small_corpus() -> &'static [Matroid] {
    static C: OnceLock<Vec<Matroid>> = OnceLock::new();
    C.get_or_init(|| corpus::standard_corpus(5, 5).unwrap())
}

#[test]
fn top_delta_power_is_beta() {
    for m in small_corpus() {
        let cn = Conormal::new(m).unwrap();
        let empty = Biflag::new(m.ground_size(), vec![]).unwrap();
        assert_eq!(cn.deg_monomial_delta(&empty, cn.dim()).unwrap() as i64, m.beta(), "{:?}", m.name());
    }
}

#[test]
fn maximal_cones_have_one_double_jump() {
    let cn = Conormal::new(&corpus::pyramid()).unwrap();
    for f in cn.cones(cn.dim()) {
        assert_eq!(conormal::bits::len(double_jumps(&f)), 1, "{f}");
    }
}

#[test]
fn fundamental_and_csm_weights_are_balanced() {
    for m in small_corpus() {
        let cn = Conormal::new(m).unwrap();
        assert!(is_balanced(cn.fan(), &MinkowskiWeight::fundamental(cn.fan())).unwrap());
        let b = Bergman::new(m).unwrap();
        for k in 0..m.full_rank() {
            let w = csm_cycle(m, k).unwrap().to_minkowski(&b).unwrap();
            assert!(is_balanced(&b.fan, &w).unwrap(), "{:?} k={k}", m.name());
        }
    }
}

#[test]
fn csm_oracles_agree_on_small_corpus() {
    for m in small_corpus() {
        for k in 0..m.full_rank() {
            let c = csm_cycle(m, k).unwrap();
            assert_eq!(csm_via_fiber_sum(m, k).unwrap(), c);
            assert_eq!(csm_via_pushforward(m, k).unwrap(), c);
        }
    }
}

#[test]
fn pyramid_degrees() {
    let cn = Conormal::new(&corpus::pyramid()).unwrap();
    assert_eq!(cn.gamma_delta_degrees().unwrap(), vec![3, 6, 4, 1]);
}

#[test]
fn vanishing_on_u24() {
    let (agree, details) = verify::vanishing(&Matroid::uniform(2, 4).unwrap(), 2).unwrap();
    assert!(agree, "{details}");
    assert!(details["checked"].as_u64().unwrap() > 0);
}

#[test]
fn coloops_are_refused() {
    let bridge = Matroid::from_graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    assert!(bridge.has_coloops());
    assert!(matches!(Conormal::new(&bridge), Err(Error::HasLoopsOrColoops)));
    assert!(matches!(verify::run(&bridge, Theorem::Csm), Err(Error::HasLoopsOrColoops)));
    assert!(matches!(verify::run(&bridge, Theorem::CharPoly), Err(Error::HasLoopsOrColoops)));
}

#[test]
fn every_identity_agrees_on_small_corpus() {
    for m in small_corpus() {
        for t in Theorem::ALL {
            let v = verify::run(m, t).unwrap();
            assert!(v.agree, "{:?} {}: {}", m.name(), t.name(), v.details);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degrees_ignore_the_order(i in 0..small_corpus().len(), seed in any::<u64>()) {
        let m = &small_corpus()[i];
        let p = m.relabel(&permutation(m.ground_size(), seed)).unwrap();
        let a = Conormal::new(m).unwrap().gamma_delta_degrees().unwrap();
        let b = Conormal::new(&p).unwrap().gamma_delta_degrees().unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn expansions_end_in_maximal_cones(i in 0..small_corpus().len(), seed in any::<u64>()) {
        let m = small_corpus()[i].relabel(&permutation(small_corpus()[i].ground_size(), seed)).unwrap();
        let cn = Conormal::new(&m).unwrap();
        let empty = Biflag::new(m.ground_size(), vec![]).unwrap();
        let top = cn.canonical_expansion(&empty, cn.dim()).unwrap();
        for f in top.terms.keys() {
            prop_assert!(cn.check_biflag(f).is_ok());
            prop_assert_eq!(f.len(), cn.dim());
        }
        prop_assert_eq!(top.size() as i64, m.beta());
    }
}
