use conormal::bipermutohedral::*;
use conormal::bits;
use proptest::prelude::*;

#[test]
fn bijection_round_trips_exhaustively() {
    for g in 2..=3 {
        let mut seen = std::collections::BTreeSet::new();
        for b in enumerate_bipermutations(g) {
            let f = biflag_of_bisequence(&b);
            assert_eq!(bisequence_of_biflag(&f).unwrap(), b);
            assert!(seen.insert(f.clone()), "two bisequences share a biflag");
            let rebuilt = Biflag::new(g, f.pairs().to_vec()).unwrap();
            assert_eq!(rebuilt, f);
        }
        assert_eq!(seen.len() as u128, count_chambers(g));
    }
}

#[test]
fn ray_and_chamber_counts() {
    for n in 1..=3u32 {
        let g = n as usize + 1;
        assert_eq!(enumerate_bisubsets(g).len(), 3 * (3usize.pow(n) - 1));
        let factorial: u128 = (1..=(2 * n as u128 + 2)).product();
        assert_eq!(count_chambers(g), factorial / 2u128.pow(n + 1));
        assert_eq!(enumerate_bipermutations(g).count() as u128, count_chambers(g));
    }
}

#[test]
fn displayed_vertex_matches() {
    let b = Bisequence::parse(4, "1|2|3|1|3|0|0").unwrap();
    let v = bipermutohedron_vertex(&b).unwrap();
    assert_eq!(v.x, vec![5, -7, 3, -1]);
    assert_eq!(v.y, vec![-7, -1, 11, -3]);
    assert!(vertex_satisfies_inequalities(&v));
}

#[test]
fn vertices_are_tight_exactly_on_their_biflag() {
    for b in enumerate_bipermutations(3) {
        let v = bipermutohedron_vertex(&b).unwrap();
        assert!(vertex_satisfies_inequalities(&v));
        let mut tight = tight_bisubsets(&v);
        let mut pairs = biflag_of_bisequence(&b).pairs().to_vec();
        tight.sort_unstable();
        pairs.sort_unstable();
        assert_eq!(tight, pairs);
    }
}

#[test]
fn invalid_biflags_are_refused() {
    assert!(Biflag::new(2, vec![(0b11, 0b11)]).is_err());
    assert!(Biflag::new(2, vec![(0b11, 0b01), (0b01, 0b11)]).is_err());
    assert!(Bisequence::parse(2, "0|0|1|1").is_err());
}

fn bipermutation(g: usize) -> impl Strategy<Value = Bisequence> {
    let all: Vec<Bisequence> = enumerate_bipermutations(g).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn configurations_recover_their_bisequence(b in (3usize..=4).prop_flat_map(bipermutation)) {
        let p = configuration_of_bisequence(&b);
        prop_assert_eq!(bisequence_of_configuration(&p).unwrap(), b);
    }

    #[test]
    fn interior_points_of_a_cone_recover_its_biflag(b in bipermutation(4), coeffs in proptest::collection::vec(1i64..20, 8)) {
        let f = biflag_of_bisequence(&b);
        let c: Vec<_> = coeffs.iter().take(f.len()).map(|&x| q(x)).collect();
        let p = configuration_of_biflag(&f, &c);
        prop_assert_eq!(biflag_of_bisequence(&bisequence_of_configuration(&p).unwrap()), f);
    }

    #[test]
    fn pinned_vectors_of_distinct_bisubsets_differ(g in 2usize..=4) {
        let rays: std::collections::BTreeSet<Vec<i64>> =
            enumerate_bisubsets(g).into_iter().map(|(s, t)| pinned_vector(g, s, t)).collect();
        prop_assert_eq!(rays.len(), enumerate_bisubsets(g).len());
        prop_assert!(enumerate_bisubsets(g).iter().all(|&(s, t)| is_bisubset(g, s, t) && (s | t) == bits::full(g)));
    }
}
