#![allow(dead_code)]

use conormal::conormal::{Bergman, Conormal};
use conormal::weights::{product, SimplicialFan};
use conormal::Matroid;
use proptest::prelude::*;
use std::sync::OnceLock;

/// Small balanced fans: Bergman and conormal fans of uniform matroids and a product.
pub fn sample_fans() -> &'static [SimplicialFan] {
    static FANS: OnceLock<Vec<SimplicialFan>> = OnceLock::new();
    FANS.get_or_init(|| {
        let mut out = Vec::new();
        for (r, n) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
            let m = Matroid::uniform(r, n).unwrap();
            out.push(Bergman::new(&m).unwrap().fan);
        }
        for (r, n) in [(2, 3), (2, 4), (3, 4)] {
            let m = Matroid::uniform(r, n).unwrap();
            out.push(Conormal::new(&m).unwrap().fan().clone());
        }
        let u23 = Bergman::new(&Matroid::uniform(2, 3).unwrap()).unwrap().fan;
        out.push(product(&u23, &u23));
        out
    })
}

/// Edge lists of simple or multi graphs without self-loops on `2..=max_v` vertices.
pub fn graph_strategy(max_v: usize, max_e: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2..=max_v).prop_flat_map(move |v| {
        let edge = (0..v, 1..v).prop_map(move |(a, d)| (a, (a + d) % v));
        (Just(v), proptest::collection::vec(edge, 1..=max_e))
    })
}

pub fn graph_matroid(v: usize, edges: &[(usize, usize)]) -> Matroid {
    Matroid::from_graph(v, edges).unwrap()
}

/// A uniformly random permutation of `0..n` driven by a seed.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    p
}
