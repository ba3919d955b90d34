//! Bergman and conormal fans of a matroid, biflags of biflats, and the
//! canonical-expansion degree engine.

mod csm;
mod expansion;

pub use csm::{csm_cycle, csm_via_fiber_sum, csm_via_pushforward, CsmCycle};
pub use expansion::{Expansion, ExpansionTable};

use crate::bipermutohedral::{pinned_vector, Biflag};
use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::matroid::{FlagOfFlats, Matroid};
use crate::weights::{Cone, LatticeMap, MinkowskiWeight, PiecewiseLinearClass, SimplicialFan};
use std::collections::HashMap;
use std::sync::OnceLock;

/// A matroid prepared for conormal computations: its dual, its biflats
/// (sorted so that comparable biflats appear in chain order), and caches.
pub struct Conormal {
    m: Matroid,
    dual: Matroid,
    biflats: Vec<(Set, Set)>,
    lookup: HashMap<(Set, Set), u32>,
    comparable: Vec<Vec<bool>>,
    by_element: Vec<Vec<u32>>,
    fan: OnceLock<SimplicialFan>,
    delta_chain: OnceLock<Result<Vec<MinkowskiWeight>>>,
}

impl Conormal {
    /// Requires a matroid without loops and coloops.
    pub fn new(m: &Matroid) -> Result<Self> {
        if m.has_loops() || m.has_coloops() {
            return Err(Error::HasLoopsOrColoops);
        }
        let dual = m.dual();
        let e = m.ground();
        let mut biflats: Vec<(Set, Set)> = Vec::new();
        for &f in m.all_flats() {
            for &g in dual.all_flats() {
                if f != 0 && g != 0 && f | g == e && !(f == e && g == e) {
                    biflats.push((f, g));
                }
            }
        }
        biflats.sort_unstable_by_key(|&(f, g)| (bits::len(f), std::cmp::Reverse(bits::len(g)), f, std::cmp::Reverse(g)));
        let lookup = biflats.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let comparable = biflats
            .iter()
            .map(|&(f1, g1)| {
                biflats
                    .iter()
                    .map(|&(f2, g2)| {
                        (f1, g1) != (f2, g2)
                            && ((bits::is_subset(f1, f2) && bits::is_subset(g2, g1))
                                || (bits::is_subset(f2, f1) && bits::is_subset(g1, g2)))
                    })
                    .collect()
            })
            .collect();
        let by_element = (0..m.ground_size())
            .map(|x| (0..biflats.len() as u32).filter(|&i| bits::contains(biflats[i as usize].0 & biflats[i as usize].1, x)).collect())
            .collect();
        Ok(Conormal {
            m: m.clone(),
            dual,
            biflats,
            lookup,
            comparable,
            by_element,
            fan: OnceLock::new(),
            delta_chain: OnceLock::new(),
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.m
    }

    pub fn dual(&self) -> &Matroid {
        &self.dual
    }

    pub fn ground_size(&self) -> usize {
        self.m.ground_size()
    }

    /// Dimension `n - 1 = |E| - 2` of the conormal fan.
    pub fn dim(&self) -> usize {
        self.ground_size() - 2
    }

    /// `r` where the rank of `M` is `r + 1`.
    pub fn r(&self) -> usize {
        self.m.full_rank() - 1
    }

    pub fn biflats(&self) -> &[(Set, Set)] {
        &self.biflats
    }

    pub fn biflat_index(&self, pair: (Set, Set)) -> Option<u32> {
        self.lookup.get(&pair).copied()
    }

    pub(crate) fn chain_union(&self, chain: &[u32]) -> Set {
        chain.iter().fold(0, |acc, &i| {
            let (f, g) = self.biflats[i as usize];
            acc | (f & g)
        })
    }

    pub(crate) fn to_biflag(&self, chain: &[u32]) -> Biflag {
        Biflag::trusted(self.ground_size(), chain.iter().map(|&i| self.biflats[i as usize]).collect())
    }

    /// Sorted biflat indices of a biflag, checking that it is one.
    pub fn chain_of(&self, f: &Biflag) -> Result<Vec<u32>> {
        self.check_biflag(f)?;
        Ok(f.pairs().iter().map(|p| self.lookup[p]).collect())
    }

    /// All biflags of length `k`.
    pub fn cones(&self, k: usize) -> Vec<Biflag> {
        let mut out = Vec::new();
        self.for_each_chain(|chain| {
            if chain.len() == k {
                out.push(self.to_biflag(chain));
            }
            chain.len() < k
        });
        out
    }

    /// Visit every biflag (as a sorted index chain); the callback returns
    /// whether to keep extending the current chain.
    pub(crate) fn for_each_chain(&self, mut visit: impl FnMut(&[u32]) -> bool) {
        let e = self.m.ground();
        let mut chain: Vec<u32> = Vec::new();
        fn rec(
            cn: &Conormal,
            chain: &mut Vec<u32>,
            start: usize,
            union: Set,
            e: Set,
            visit: &mut dyn FnMut(&[u32]) -> bool,
        ) {
            if !visit(chain) {
                return;
            }
            for j in start..cn.biflats.len() {
                if let Some(&last) = chain.last() {
                    if !cn.comparable[last as usize][j] {
                        continue;
                    }
                }
                let (f, g) = cn.biflats[j];
                let u = union | (f & g);
                if u == e {
                    continue;
                }
                chain.push(j as u32);
                rec(cn, chain, j + 1, u, e, visit);
                chain.pop();
            }
        }
        rec(self, &mut chain, 0, 0, e, &mut visit);
    }

    /// Check the biflag invariants, that each pair is a biflat, and that
    /// every nonempty gap has at least two elements.
    pub fn check_biflag(&self, f: &Biflag) -> Result<()> {
        let checked = Biflag::new(self.ground_size(), f.pairs().to_vec())?;
        for &(s, t) in checked.pairs() {
            if !self.lookup.contains_key(&(s, t)) {
                return Err(Error::InvalidBiflag(format!("{}|{} is not a biflat", bits::label(s), bits::label(t))));
            }
        }
        if let Some(g) = gap_sequence(f).into_iter().find(|&g| bits::len(g) == 1) {
            return Err(Error::InvalidBiflag(format!("gap {} has a single element", bits::label(g))));
        }
        Ok(())
    }

    /// `F_i⊥ = cl⊥(E − F_i)`.
    pub fn orthogonal_flag(&self, flag: &FlagOfFlats) -> Vec<Set> {
        orthogonal_flag_with(&self.dual, self.m.ground(), flag)
    }

    /// The maximal biflag attached to a bnbc basis.
    pub fn beta_cone(&self, b: Set) -> Result<Biflag> {
        if !self.m.is_bnbc(b) {
            return Err(Error::NotBnbc(bits::label(b)));
        }
        let e = self.m.ground();
        let mut pairs = Vec::new();
        let flat_side: Vec<usize> = { let mut v: Vec<usize> = bits::elements(b & !1).collect(); v.reverse(); v };
        let mut acc = 0;
        for &x in &flat_side {
            acc |= 1 << x;
            pairs.push((self.m.closure(acc), e));
        }
        let coflat_side: Vec<usize> = bits::elements((e & !b) & !2).collect();
        for i in 0..coflat_side.len() {
            let s = coflat_side[i..].iter().fold(0, |a, &x| a | 1 << x);
            pairs.push((e, self.dual.closure(s)));
        }
        let f = Biflag::new(self.ground_size(), pairs)?;
        self.check_biflag(&f)?;
        Ok(f)
    }

    /// Sum of `deg(x_{𝓕|𝓖} δ^{n−k−1})` over all `𝓖` making `𝓕|𝓖` a biflag.
    pub fn deg_pullback_flag_delta(&self, flag: &FlagOfFlats) -> Result<u64> {
        let k = flag.len();
        if k > self.dim() {
            return Ok(0);
        }
        let mut total = 0;
        for g in self.coflag_completions(flag) {
            let pairs: Vec<(Set, Set)> = flag.flats.iter().copied().zip(g).collect();
            let f = Biflag::trusted(self.ground_size(), pairs);
            total += self.deg_monomial_delta(&f, self.dim() - k)?;
        }
        Ok(total)
    }

    /// All weakly decreasing coflag sequences `𝓖` for which `𝓕|𝓖` is a biflag.
    pub fn coflag_completions(&self, flag: &FlagOfFlats) -> Vec<Vec<Set>> {
        let e = self.m.ground();
        let mut out = Vec::new();
        let mut cur: Vec<Set> = Vec::new();
        fn rec(cn: &Conormal, flats: &[Set], cur: &mut Vec<Set>, union: Set, e: Set, out: &mut Vec<Vec<Set>>) {
            let i = cur.len();
            if i == flats.len() {
                out.push(cur.clone());
                return;
            }
            let f = flats[i];
            for &g in cn.dual.all_flats() {
                if g == 0 || f | g != e || (f == e && g == e) {
                    continue;
                }
                if let Some(&prev) = cur.last() {
                    if !bits::is_subset(g, prev) {
                        continue;
                    }
                }
                let u = union | (f & g);
                if u == e {
                    continue;
                }
                cur.push(g);
                rec(cn, flats, cur, u, e, out);
                cur.pop();
            }
        }
        rec(self, &flag.flats, &mut cur, 0, e, &mut out);
        out
    }

    /// The conormal fan, rays indexed like [`Conormal::biflats`].
    pub fn fan(&self) -> &SimplicialFan {
        self.fan.get_or_init(|| {
            let g = self.ground_size();
            let rays = self.biflats.iter().map(|&(f, t)| pinned_vector(g, f, t)).collect();
            let mut cones: Vec<Vec<Cone>> = vec![Vec::new(); self.dim() + 1];
            self.for_each_chain(|chain| {
                cones[chain.len()].push(chain.to_vec());
                true
            });
            SimplicialFan::from_closed_cones(2 * (g - 1), rays, cones, true)
        })
    }

    /// Cone of the fan for a biflag.
    pub fn cone_of(&self, f: &Biflag) -> Result<Cone> {
        self.chain_of(f)
    }

    /// `δ_j(e_{F|G}) = [j ∈ F ∩ G]`.
    pub fn delta(&self, j: usize) -> PiecewiseLinearClass {
        self.class(|f, g| bits::contains(f & g, j))
    }

    /// `γ_j(e_{F|G}) = [j ∈ F ≠ E]`.
    pub fn gamma(&self, j: usize) -> PiecewiseLinearClass {
        let e = self.m.ground();
        self.class(|f, _| f != e && bits::contains(f, j))
    }

    /// `γ̄_j(e_{F|G}) = [j ∈ G ≠ E]`.
    pub fn gamma_bar(&self, j: usize) -> PiecewiseLinearClass {
        let e = self.m.ground();
        self.class(|_, g| g != e && bits::contains(g, j))
    }

    /// Restriction of the bipermutohedron support function.
    pub fn support_function(&self) -> PiecewiseLinearClass {
        PiecewiseLinearClass::new(
            self.biflats.iter().map(|&(f, g)| linalg::q(crate::bipermutohedral::support_value(f, g))).collect(),
        )
    }

    fn class(&self, pred: impl Fn(Set, Set) -> bool) -> PiecewiseLinearClass {
        PiecewiseLinearClass::new(self.biflats.iter().map(|&(f, g)| if pred(f, g) { Q::from_integer(1) } else { Q::from_integer(0) }).collect())
    }

    /// `δ^j ∩ 1` for `j = 0..=n−1`, computed by repeated cap on the conormal fan.
    pub fn delta_power_weights(&self) -> Result<&[MinkowskiWeight]> {
        self.delta_chain
            .get_or_init(|| {
                let fan = self.fan();
                let delta = self.delta(0);
                let mut out = vec![MinkowskiWeight::fundamental(fan)];
                for _ in 0..self.dim() {
                    let next = crate::weights::cap(fan, &delta, out.last().expect("nonempty"))?;
                    out.push(next);
                }
                Ok(out)
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// `deg(γ^k δ^{n−k−1})` for `k = 0..=r` from the weights oracle.
    pub fn gamma_delta_degrees(&self) -> Result<Vec<i64>> {
        let fan = self.fan();
        let gamma = self.gamma(0);
        let chain = self.delta_power_weights()?;
        let n1 = self.dim();
        (0..=self.r())
            .map(|k| {
                let mut w = chain[n1 - k].clone();
                for _ in 0..k {
                    w = crate::weights::cap(fan, &gamma, &w)?;
                }
                q_to_i64(w.values[0])
            })
            .collect()
    }

    /// `χ̄_M(q+1)` assembled from the conormal degrees.
    pub fn reduced_char_shifted(&self) -> Result<crate::poly::IntPolynomial> {
        let degs = self.gamma_delta_degrees()?;
        let r = self.r();
        Ok(crate::poly::IntPolynomial::new(
            degs.iter().enumerate().map(|(k, &d)| if (r - k).is_multiple_of(2) { d } else { -d }).collect(),
        ))
    }

    /// The projection `N_{E,E} → N_E`, `(z, w) ↦ z`.
    pub fn projection(&self) -> LatticeMap {
        let n = self.ground_size() - 1;
        LatticeMap { matrix: (0..n).map(|i| (0..2 * n).map(|j| i64::from(i == j)).collect()).collect() }
    }
}

pub(crate) fn q_to_i64(v: Q) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::Internal(format!("expected an integer, got {v}")));
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::Internal("integer overflow".into()))
}

fn orthogonal_flag_with(dual: &Matroid, e: Set, flag: &FlagOfFlats) -> Vec<Set> {
    flag.flats.iter().map(|&f| dual.closure(e & !f)).collect()
}

/// `D_j = (F_{j+1} − F_j) ∩ (G_j − G_{j+1})` for `j = 0..=k`.
pub fn gap_sequence(f: &Biflag) -> Vec<Set> {
    f.padded().windows(2).map(|w| (w[1].0 & !w[0].0) & (w[0].1 & !w[1].1)).collect()
}

/// Index sets `{j : F_j ≠ F_{j+1}}` and `{j : G_j ≠ G_{j+1}}` for `j = 0..=k`.
pub fn jump_sets(f: &Biflag) -> (Set, Set) {
    f.padded().windows(2).enumerate().fold((0, 0), |(a, b), (j, w)| {
        (if w[0].0 != w[1].0 { a | 1 << j } else { a }, if w[0].1 != w[1].1 { b | 1 << j } else { b })
    })
}

pub fn double_jumps(f: &Biflag) -> Set {
    let (a, b) = jump_sets(f);
    a & b
}

/// Nonempty proper flats.
pub fn bergman_rays(m: &Matroid) -> Result<Vec<Set>> {
    if m.has_loops() {
        return Err(Error::HasLoops);
    }
    let e = m.ground();
    Ok(m.all_flats().iter().copied().filter(|&f| f != 0 && f != e).collect())
}

/// Flags of nonempty proper flats of length `k`.
pub fn bergman_cones(m: &Matroid, k: usize) -> Result<Vec<FlagOfFlats>> {
    let rays = bergman_rays(m)?;
    let mut out = Vec::new();
    all_flags(&rays, |chain| {
        if chain.len() == k {
            out.push(FlagOfFlats::new(chain.iter().map(|&i| rays[i as usize]).collect()));
        }
        chain.len() < k
    });
    Ok(out)
}

fn all_flags(rays: &[Set], mut visit: impl FnMut(&[u32]) -> bool) {
    fn rec(rays: &[Set], chain: &mut Vec<u32>, start: usize, visit: &mut dyn FnMut(&[u32]) -> bool) {
        if !visit(chain) {
            return;
        }
        for j in start..rays.len() {
            if let Some(&last) = chain.last() {
                let prev = rays[last as usize];
                if prev == rays[j] || !bits::is_subset(prev, rays[j]) {
                    continue;
                }
            }
            chain.push(j as u32);
            rec(rays, chain, j + 1, visit);
            chain.pop();
        }
    }
    rec(rays, &mut Vec::new(), 0, &mut visit);
}

/// The Bergman fan of a loopless matroid in `N_E`, with its ray flats.
pub struct Bergman {
    pub fan: SimplicialFan,
    pub flats: Vec<Set>,
    lookup: HashMap<Set, u32>,
    ground_size: usize,
}

impl Bergman {
    pub fn new(m: &Matroid) -> Result<Self> {
        let flats = bergman_rays(m)?;
        let g = m.ground_size();
        let rays = flats.iter().map(|&f| pinned_vector(g, f, 0)[..g - 1].to_vec()).collect();
        let mut cones: Vec<Vec<Cone>> = vec![Vec::new(); m.full_rank()];
        all_flags(&flats, |chain| {
            cones[chain.len()].push(chain.to_vec());
            true
        });
        let lookup = flats.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
        Ok(Bergman { fan: SimplicialFan::from_closed_cones(g - 1, rays, cones, true), flats, lookup, ground_size: g })
    }

    pub fn cone_of(&self, flag: &FlagOfFlats) -> Option<Cone> {
        flag.flats.iter().map(|f| self.lookup.get(f).copied()).collect()
    }

    pub fn flag_of(&self, cone: &[u32]) -> FlagOfFlats {
        FlagOfFlats::new(cone.iter().map(|&i| self.flats[i as usize]).collect())
    }

    /// `α_j(e_F) = [j ∈ F]`.
    pub fn alpha(&self, j: usize) -> PiecewiseLinearClass {
        PiecewiseLinearClass::new(self.flats.iter().map(|&f| Q::from_integer(i128::from(bits::contains(f, j)))).collect())
    }

    /// Restriction of the permutohedron support function `|F|·|E − F|`.
    pub fn support_function(&self) -> PiecewiseLinearClass {
        PiecewiseLinearClass::new(
            self.flats.iter().map(|&f| linalg::q((bits::len(f) * (self.ground_size - bits::len(f))) as i64)).collect(),
        )
    }
}

/// Free-function forms of the biflat queries.
pub fn biflats(m: &Matroid) -> Result<Vec<(Set, Set)>> {
    Ok(Conormal::new(m)?.biflats().to_vec())
}

pub fn conormal_cones(m: &Matroid, k: usize) -> Result<Vec<Biflag>> {
    Ok(Conormal::new(m)?.cones(k))
}

pub fn orthogonal_flag(m: &Matroid, flag: &FlagOfFlats) -> Vec<Set> {
    orthogonal_flag_with(&m.dual(), m.ground(), flag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23_biflats() {
        let m = Matroid::uniform(2, 3).unwrap();
        let cn = Conormal::new(&m).unwrap();
        assert_eq!(cn.biflats(), &[(0b001, 0b111), (0b010, 0b111), (0b100, 0b111)]);
        assert_eq!(cn.cones(1).len(), 3);
        assert!(cn.cones(2).is_empty());
    }

    #[test]
    fn refuses_loops_and_coloops() {
        let m = Matroid::from_bases(3, &[0b011, 0b110]).unwrap();
        assert!(matches!(Conormal::new(&m), Err(Error::HasLoopsOrColoops)));
        let u12 = Matroid::uniform(1, 2).unwrap();
        let cn = Conormal::new(&u12).unwrap();
        assert!(cn.biflats().is_empty());
        assert_eq!(cn.fan().num_cones(), 1);
    }

    #[test]
    fn bergman_of_u23() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(bergman_rays(&m).unwrap(), vec![0b001, 0b010, 0b100]);
        assert_eq!(bergman_cones(&m, 1).unwrap().len(), 3);
        assert!(bergman_cones(&m, 2).unwrap().is_empty());
        let b = Bergman::new(&m).unwrap();
        assert_eq!(b.fan.dim(), 1);
    }
}
