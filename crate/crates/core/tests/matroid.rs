mod common;

use common::{graph_matroid, graph_strategy, permutation};
use conormal::bits;
use conormal::matroid::{is_flawless, is_log_concave, is_unimodal};
use conormal::{corpus, Error, FlagOfFlats, Matroid};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution((v, edges) in graph_strategy(5, 7)) {
        let m = graph_matroid(v, &edges);
        let dd = m.dual().dual();
        prop_assert_eq!(dd.bases(), m.bases());
        prop_assert_eq!(m.dual().full_rank() + m.full_rank(), m.ground_size());
    }

    #[test]
    fn closure_is_idempotent_and_flats_meet((v, edges) in graph_strategy(5, 7), s in any::<u64>()) {
        let m = graph_matroid(v, &edges);
        let s = s & m.ground();
        let c = m.closure(s);
        prop_assert!(bits::is_subset(s, c));
        prop_assert_eq!(m.closure(c), c);
        prop_assert_eq!(m.rank(c), m.rank(s));
        for &a in m.all_flats() {
            for &b in m.all_flats() {
                prop_assert!(m.is_flat(a & b));
            }
        }
    }

    #[test]
    fn characteristic_polynomial_oracles_agree((v, edges) in graph_strategy(5, 7)) {
        let m = graph_matroid(v, &edges);
        prop_assert_eq!(m.characteristic_polynomial(), m.char_poly_deletion_contraction());
        prop_assert_eq!(m.beta(), m.beta_deletion_contraction());
        if !m.has_loops() && m.full_rank() > 0 {
            prop_assert_eq!(m.characteristic_polynomial().eval(1), 0);
        }
        // nbc bases count |chi(0)|
        if !m.has_loops() {
            prop_assert_eq!(m.nbc_bases().len() as i64, m.characteristic_polynomial().eval(0).abs());
        }
    }

    #[test]
    fn bnbc_bases_count_beta((v, edges) in graph_strategy(5, 7)) {
        let m = graph_matroid(v, &edges);
        prop_assume!(!m.has_loops() && !m.has_coloops());
        prop_assert_eq!(m.bnbc_bases().len() as i64, m.beta());
    }

    #[test]
    fn broken_circuit_h_vector_ignores_the_order((v, edges) in graph_strategy(5, 7), seed in any::<u64>()) {
        let m = graph_matroid(v, &edges);
        let p = m.relabel(&permutation(m.ground_size(), seed)).unwrap();
        prop_assert_eq!(m.broken_circuit_complex().h_vector(), p.broken_circuit_complex().h_vector());
        prop_assert_eq!(m.independence_complex().f_vector(), p.independence_complex().f_vector());
    }

    #[test]
    fn sequences_of_graphic_matroids_are_log_concave((v, edges) in graph_strategy(5, 7)) {
        let m = graph_matroid(v, &edges);
        for seq in [m.broken_circuit_complex().h_vector(), m.broken_circuit_complex().f_vector(), m.independence_complex().f_vector()] {
            prop_assert!(is_unimodal(&seq).unwrap());
            prop_assert!(is_log_concave(&seq).unwrap());
            prop_assert!(is_flawless(&seq).unwrap());
        }
    }
}

#[test]
fn pyramid_invariants() {
    let m = corpus::pyramid();
    assert_eq!(m.beta(), 3);
    assert_eq!(m.reduced_characteristic_polynomial().coefficients(), &[-14, 17, -7, 1]);
    assert_eq!(m.broken_circuit_complex().h_vector(), vec![1, 4, 6, 3, 0]);
    let bnbc: Vec<String> = m.bnbc_bases().into_iter().map(bits::label).collect();
    assert_eq!(bnbc, vec!["0456", "0457", "0467"]);
}

#[test]
fn uniform_betas() {
    assert_eq!(Matroid::uniform(1, 2).unwrap().beta(), 1);
    // beta(U_{r,n}) = C(n-2, r-1)
    assert_eq!(Matroid::uniform(2, 4).unwrap().beta(), 2);
    assert_eq!(Matroid::uniform(3, 6).unwrap().beta(), 6);
}

#[test]
fn exchange_violations_are_refused() {
    let err = Matroid::from_bases(4, &[0b0011, 0b1100]).unwrap_err();
    assert!(matches!(err, Error::NotAMatroid(_)));
}

#[test]
fn beta_of_flags_multiplies_intervals() {
    let m = Matroid::uniform(2, 4).unwrap();
    let flag = FlagOfFlats::new(vec![0b0001]);
    // [∅, 0] and [0, E] have beta 1 and beta(U_{1,3}) = 1
    assert_eq!(m.beta_of_flag(&flag).unwrap(), 1);
    assert_eq!(m.beta_of_flag(&FlagOfFlats::new(vec![])).unwrap(), m.beta());
}

#[test]
fn sequence_checks_reject_bad_input() {
    assert!(!is_unimodal(&[1, 0, 1]).unwrap());
    assert!(!is_log_concave(&[1, 1, 2]).unwrap());
    assert!(is_flawless(&[1, 3, 3, 1]).unwrap());
    assert!(is_log_concave(&[]).is_ok());
}
