//! Matroids on the ground set `0..n`, stored by their bases.

mod complex;
mod invariants;

pub use complex::{is_flawless, is_log_concave, is_unimodal, SimplicialComplex};

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

/// A flat is stored as its bit-set.
pub type Flat = Set;

/// Largest ground set for which a full rank table is cached.
const RANK_TABLE_LIMIT: usize = 20;

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Set>,
    basis_lookup: HashSet<Set>,
    name: Option<String>,
    cache: OnceLock<Cache>,
}

#[derive(Clone)]
struct Cache {
    rank_table: Option<Vec<u8>>,
    flats: Vec<Flat>,
}

/// A strictly increasing chain of nonempty proper flats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FlagOfFlats {
    pub flats: Vec<Flat>,
}

impl FlagOfFlats {
    pub fn new(flats: Vec<Flat>) -> Self {
        FlagOfFlats { flats }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The chain `∅ = F_0 ⊊ F_1 ⊊ .. ⊊ F_k ⊊ F_{k+1} = E`.
    pub fn padded(&self, n: usize) -> Vec<Set> {
        let mut v = Vec::with_capacity(self.flats.len() + 2);
        v.push(0);
        v.extend_from_slice(&self.flats);
        v.push(bits::full(n));
        v
    }
}

impl fmt::Display for FlagOfFlats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.flats.iter().map(|&s| bits::label(s)).collect();
        write!(f, "({})", parts.join(" < "))
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self.bases.iter().map(|&b| bits::label(b)).collect();
        f.debug_struct("Matroid")
            .field("name", &self.name)
            .field("ground_size", &self.n)
            .field("rank", &self.rank)
            .field("bases", &bases)
            .finish()
    }
}

impl Matroid {
    /// Build a matroid from its bases, checking the exchange axiom exhaustively.
    pub fn from_bases(ground_size: usize, bases: &[Set]) -> Result<Matroid> {
        if ground_size == 0 || ground_size > 63 {
            return Err(Error::GroundTooLarge(ground_size));
        }
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        let full = bits::full(ground_size);
        if let Some(&b) = bases.iter().find(|&&b| !bits::is_subset(b, full)) {
            let e = bits::max(b & !full).unwrap_or(0);
            return Err(Error::ElementOutOfRange(e));
        }
        let r = bits::len(bases[0]);
        if bases.iter().any(|&b| bits::len(b) != r) {
            return Err(Error::SizeMismatch);
        }
        let lookup: HashSet<Set> = bases.iter().copied().collect();
        for &a in &lookup {
            for &b in &lookup {
                if a == b {
                    continue;
                }
                for x in bits::elements(a & !b) {
                    let ok = bits::elements(b & !a)
                        .any(|y| lookup.contains(&((a & !(1 << x)) | 1 << y)));
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "A={}, B={}, a={}",
                            bits::label(a),
                            bits::label(b),
                            x
                        )));
                    }
                }
            }
        }
        Ok(Self::trusted(ground_size, lookup))
    }

    /// Build from a basis set already known to satisfy the axioms.
    pub(crate) fn trusted(ground_size: usize, lookup: HashSet<Set>) -> Matroid {
        let mut bases: Vec<Set> = lookup.iter().copied().collect();
        bases.sort_unstable();
        let rank = bases.first().map_or(0, |&b| bits::len(b));
        Matroid { n: ground_size, rank, bases, basis_lookup: lookup, name: None, cache: OnceLock::new() }
    }

    /// The graphic matroid; edge `i` is ground element `i`.
    pub fn from_graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        let m = edges.len();
        if m == 0 || m > 63 {
            return Err(Error::GroundTooLarge(m));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::Parse(format!("edge ({u},{v}) uses a vertex outside 0..{vertex_count}")));
        }
        let forest_rank = spanning_forest_size(vertex_count, edges, bits::full(m));
        let lookup: HashSet<Set> = bits::subsets_of_size(bits::full(m), forest_rank)
            .filter(|&s| spanning_forest_size(vertex_count, edges, s) == forest_rank)
            .collect();
        Ok(Self::trusted(m, lookup))
    }

    /// `U_{rank, ground_size}`.
    pub fn uniform(rank: usize, ground_size: usize) -> Result<Matroid> {
        if rank > ground_size {
            return Err(Error::RankOutOfRange { rank, ground: ground_size });
        }
        if ground_size == 0 || ground_size > 63 {
            return Err(Error::GroundTooLarge(ground_size));
        }
        let lookup = bits::subsets_of_size(bits::full(ground_size), rank).collect();
        Ok(Self::trusted(ground_size, lookup).named(format!("U_{{{rank},{ground_size}}}")))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Set {
        bits::full(self.n)
    }

    /// Rank of the whole matroid (`r + 1` in the usual indexing).
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Set] {
        &self.bases
    }

    pub fn is_basis(&self, s: Set) -> bool {
        self.basis_lookup.contains(&s)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        let lookup = self.bases.iter().map(|&b| full & !b).collect();
        Matroid::trusted(self.n, lookup)
    }

    /// Apply the relabeling `i -> perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Parse("relabeling must be a permutation of the ground set".into()));
        }
        let lookup = self
            .bases
            .iter()
            .map(|&b| bits::elements(b).fold(0, |acc, i| acc | 1 << perm[i]))
            .collect();
        let mut m = Matroid::trusted(self.n, lookup);
        m.name = self.name.clone();
        Ok(m)
    }

    fn cache(&self) -> &Cache {
        self.cache.get_or_init(|| {
            let rank_table = (self.n <= RANK_TABLE_LIMIT).then(|| self.build_rank_table());
            let mut cache = Cache { rank_table, flats: Vec::new() };
            cache.flats = self.enumerate_flats(&cache);
            cache
        })
    }

    fn build_rank_table(&self) -> Vec<u8> {
        let size = 1usize << self.n;
        let mut indep = vec![false; size];
        for &b in &self.bases {
            indep[b as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] {
                continue;
            }
            indep[s] = (0..self.n).any(|i| s >> i & 1 == 0 && indep[s | 1 << i]);
        }
        let mut rank = vec![0u8; size];
        for s in 1..size {
            rank[s] = if indep[s] {
                (s as u64).count_ones() as u8
            } else {
                // a dependent set keeps its rank after dropping some element
                (0..self.n).filter(|&i| s >> i & 1 == 1).map(|i| rank[s & !(1 << i)]).max().unwrap_or(0)
            };
        }
        rank
    }

    fn rank_with(&self, cache: Option<&Cache>, s: Set) -> usize {
        if let Some(table) = cache.and_then(|c| c.rank_table.as_ref()) {
            return table[s as usize] as usize;
        }
        self.bases.iter().map(|&b| bits::len(b & s)).max().unwrap_or(0)
    }

    pub fn rank(&self, s: Set) -> usize {
        self.rank_with(Some(self.cache()), s & self.ground())
    }

    pub fn is_independent(&self, s: Set) -> bool {
        self.rank(s) == bits::len(s)
    }

    pub fn closure(&self, s: Set) -> Flat {
        let r = self.rank(s);
        (0..self.n).fold(s, |acc, i| if acc >> i & 1 == 0 && self.rank(s | 1 << i) == r { acc | 1 << i } else { acc })
    }

    pub fn is_flat(&self, s: Set) -> bool {
        bits::is_subset(s, self.ground()) && self.closure(s) == s
    }

    fn enumerate_flats(&self, cache: &Cache) -> Vec<Flat> {
        let rk = |s: Set| self.rank_with(Some(cache), s);
        let cl = |s: Set| {
            let r = rk(s);
            (0..self.n).fold(s, |acc, i| if acc >> i & 1 == 0 && rk(s | 1 << i) == r { acc | 1 << i } else { acc })
        };
        let mut all: Vec<Flat> = vec![cl(0)];
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next: HashSet<Flat> = HashSet::new();
            for &f in &layer {
                for i in bits::elements(self.ground() & !f) {
                    next.insert(cl(f | 1 << i));
                }
            }
            let mut next: Vec<Flat> = next.into_iter().collect();
            next.sort_unstable();
            all.extend_from_slice(&next);
            layer = next;
        }
        all
    }

    /// All flats, ordered by rank and then numerically.
    pub fn all_flats(&self) -> &[Flat] {
        &self.cache().flats
    }

    /// Flats, optionally only those of rank `k`.
    pub fn flats(&self, k: Option<usize>) -> Vec<Flat> {
        self.all_flats().iter().copied().filter(|&f| k.is_none_or(|k| self.rank(f) == k)).collect()
    }

    /// Minimal dependent sets, sorted numerically.
    pub fn circuits(&self) -> Vec<Set> {
        let mut found: HashSet<Set> = HashSet::new();
        for &b in &self.bases {
            for e in bits::elements(self.ground() & !b) {
                let c = bits::elements(b)
                    .filter(|&x| self.is_basis((b & !(1 << x)) | 1 << e))
                    .fold(1u64 << e, |acc, x| acc | 1 << x);
                found.insert(c);
            }
        }
        let mut v: Vec<Set> = found.into_iter().collect();
        v.sort_unstable();
        v
    }

    pub fn loops(&self) -> Set {
        self.closure(0)
    }

    pub fn coloops(&self) -> Set {
        self.bases.iter().fold(self.ground(), |acc, &b| acc & b)
    }

    pub fn has_loops(&self) -> bool {
        self.loops() != 0
    }

    pub fn has_coloops(&self) -> bool {
        self.coloops() != 0
    }

    /// The minor `M|high / low` on the ground set `high - low`, re-indexed
    /// preserving order. Returns the matroid and the map new index -> old element.
    pub fn minor(&self, low: Set, high: Set) -> Result<(Matroid, Vec<usize>)> {
        if !bits::is_subset(low, high) || !bits::is_subset(high, self.ground()) {
            return Err(Error::NotNested);
        }
        let map: Vec<usize> = bits::elements(high & !low).collect();
        let r_low = self.rank(low);
        let r = self.rank(high) - r_low;
        let lookup: HashSet<Set> = bits::subsets_of_size(high & !low, r)
            .filter(|&s| self.rank(s | low) - r_low == r)
            .map(|s| map.iter().enumerate().fold(0, |acc, (k, &e)| if bits::contains(s, e) { acc | 1 << k } else { acc }))
            .collect();
        Ok((Matroid::trusted(map.len(), lookup), map))
    }

    pub fn delete(&self, e: usize) -> Matroid {
        self.minor(0, self.ground() & !(1 << e)).expect("nested").0
    }

    pub fn contract(&self, e: usize) -> Matroid {
        self.minor(1 << e, self.ground()).expect("nested").0
    }
}

/// Number of edges in a spanning forest of the edge subset `s`.
fn spanning_forest_size(vertex_count: usize, edges: &[(usize, usize)], s: Set) -> usize {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = 0;
    for i in bits::elements(s) {
        let (u, v) = edges[i];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u23() -> Matroid {
        Matroid::uniform(2, 3).unwrap()
    }

    #[test]
    fn exchange_failure_is_reported() {
        // {0,1},{1,2} satisfies exchange: 1 is a coloop and 0,2 are parallel
        assert!(Matroid::from_bases(3, &[0b011, 0b110]).is_ok());
        let err = Matroid::from_bases(4, &[0b0011, 0b1100]).unwrap_err();
        assert!(matches!(err, Error::NotAMatroid(_)));
        assert_eq!(Matroid::from_bases(3, &[]).unwrap_err(), Error::EmptyBases);
        assert_eq!(Matroid::from_bases(3, &[0b1, 0b110]).unwrap_err(), Error::SizeMismatch);
    }

    #[test]
    fn small_constructions() {
        let u12 = Matroid::from_bases(2, &[0b01, 0b10]).unwrap();
        assert_eq!(u12, Matroid::uniform(1, 2).unwrap());
        let tri = Matroid::from_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri, u23());
        let parallel = Matroid::from_graph(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(parallel, u12);
        assert_eq!(Matroid::uniform(0, 2).unwrap().bases(), &[0]);
        assert_eq!(Matroid::uniform(2, 4).unwrap().bases().len(), 6);
        assert!(matches!(Matroid::uniform(3, 2), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn flats_and_closure() {
        let m = u23();
        assert_eq!(m.closure(0b001), 0b001);
        assert_eq!(m.flats(None), vec![0, 0b001, 0b010, 0b100, 0b111]);
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(u13.closure(0b001), 0b111);
        assert_eq!(m.dual(), u13);
    }

    #[test]
    fn minors_of_u23() {
        let m = u23();
        let (a, map) = m.minor(0, 0b001).unwrap();
        assert_eq!(a, Matroid::uniform(1, 1).unwrap());
        assert_eq!(map, vec![0]);
        let (b, map) = m.minor(0b001, 0b111).unwrap();
        assert_eq!(b, Matroid::uniform(1, 2).unwrap());
        assert_eq!(map, vec![1, 2]);
        assert_eq!(m.minor(0, m.ground()).unwrap().0, m);
        assert_eq!(m.minor(0b010, 0b001).unwrap_err(), Error::NotNested);
    }

    #[test]
    fn loops_and_coloops() {
        let m = Matroid::from_bases(3, &[0b001, 0b010]).unwrap();
        assert_eq!(m.loops(), 0b100);
        assert_eq!(m.coloops(), 0);
        assert_eq!(m.dual().coloops(), 0b100);
    }
}
