//! Standard families of small matroids used by the census and the test suites.

use crate::error::Result;
use crate::matroid::Matroid;
use std::collections::BTreeSet;

/// The square pyramid graph: apex 4 over the square 0-1-2-3, edges labeled
/// so that `{0,1,5}` is a triangle.
pub const PYRAMID_EDGES: [(usize, usize); 8] = [(3, 4), (2, 4), (1, 4), (0, 4), (3, 0), (2, 3), (1, 2), (0, 1)];

/// Graphic matroid of the square pyramid (rank 4 on 8 elements).
pub fn pyramid() -> Matroid {
    Matroid::from_graph(5, &PYRAMID_EDGES).expect("valid graph").named("pyramid")
}

/// `U_{r,n}` for `2 ≤ n ≤ max_n` and `0 < r < n`, ordered by `(n, r)`.
pub fn uniform_corpus(max_n: usize) -> Vec<Matroid> {
    (2..=max_n).flat_map(|n| (1..n).map(move |r| Matroid::uniform(r, n).expect("valid rank"))).collect()
}

/// A multigraph without self-loops, as sorted vertex pairs.
pub type Graph = Vec<(usize, usize)>;

fn connected(v: usize, edges: &[(usize, usize)], skip: Option<usize>) -> bool {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = v;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

fn canonical(v: usize, edges: &[(usize, usize)]) -> Graph {
    let mut perm: Vec<usize> = (0..v).collect();
    let mut best: Option<Graph> = None;
    loop {
        let mut g: Graph = edges.iter().map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b]))).collect();
        g.sort_unstable();
        if best.as_ref().is_none_or(|b| g < *b) {
            best = Some(g);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one permutation")
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Connected bridgeless multigraphs (no self-loops) with `2..=max_edges`
/// edges, one per isomorphism class, in a fixed order.
pub fn bridgeless_graphs(max_edges: usize) -> Vec<(usize, Graph)> {
    let mut out = Vec::new();
    for m in 2..=max_edges {
        for v in 2..=m {
            let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
            let mut seen: BTreeSet<Graph> = BTreeSet::new();
            let mut choice = vec![0usize; m];
            loop {
                let edges: Graph = choice.iter().map(|&i| pairs[i]).collect();
                let mut degree = vec![0usize; v];
                for &(a, b) in &edges {
                    degree[a] += 1;
                    degree[b] += 1;
                }
                if degree.iter().all(|&d| d >= 2)
                    && connected(v, &edges, None)
                    && (0..m).all(|i| connected(v, &edges, Some(i)))
                {
                    seen.insert(canonical(v, &edges));
                }
                // next nondecreasing sequence of pair indices
                let mut i = m;
                while i > 0 && choice[i - 1] == pairs.len() - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                choice[i - 1] += 1;
                let c = choice[i - 1];
                choice[i..].iter_mut().for_each(|x| *x = c);
            }
            out.extend(seen.into_iter().map(|g| (v, g)));
        }
    }
    out
}

/// Readable label such as `graph(4:01,12,23,03)`.
pub fn graph_label(v: usize, edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
    format!("graph({v}:{})", parts.join(","))
}

/// Graphic matroids of [`bridgeless_graphs`], which are exactly the loopless
/// and coloopless ones.
pub fn graph_corpus(max_edges: usize) -> Result<Vec<Matroid>> {
    bridgeless_graphs(max_edges)
        .into_iter()
        .map(|(v, g)| Ok(Matroid::from_graph(v, &g)?.named(graph_label(v, &g))))
        .collect()
}

/// Uniform matroids up to `max_n` followed by graphic ones up to `max_edges`.
pub fn standard_corpus(max_n: usize, max_edges: usize) -> Result<Vec<Matroid>> {
    let mut out = uniform_corpus(max_n);
    out.extend(graph_corpus(max_edges)?);
    Ok(out)
}
