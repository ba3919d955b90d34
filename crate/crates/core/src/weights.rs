//! Rational simplicial fans, Minkowski weights, and the tropical cap product.

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::lp;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::OnceLock;

/// Sorted ray indices.
pub type Cone = Vec<u32>;

/// Largest number of maximal cones for which the pairwise fan condition is
/// checked by linear programming.
pub const FAN_CHECK_LIMIT: usize = 200;

/// A simplicial fan with integral primitive rays and all faces listed.
#[derive(Debug)]
pub struct SimplicialFan {
    lattice_rank: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<Cone>>,
    index: Vec<HashMap<Cone, usize>>,
    unimodular: bool,
    mults: OnceLock<Vec<Vec<i128>>>,
    cofaces: Vec<OnceLock<Vec<Vec<(u32, u32)>>>>,
}

impl Clone for SimplicialFan {
    fn clone(&self) -> Self {
        Self::assemble(self.lattice_rank, self.rays.clone(), self.cones.clone(), self.unimodular)
    }
}

impl PartialEq for SimplicialFan {
    fn eq(&self, other: &Self) -> bool {
        self.lattice_rank == other.lattice_rank && self.rays == other.rays && self.cones == other.cones
    }
}

impl SimplicialFan {
    /// Build and validate a fan from rays and a list of cones (faces are added).
    pub fn new(lattice_rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Self> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != lattice_rank {
                return Err(Error::InvalidFan(format!("ray {i} has length {} not {lattice_rank}", r.len())));
            }
            let g = r.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return Err(Error::InvalidFan(format!("ray {i} is not primitive")));
            }
        }
        let mut listed: Vec<Cone> = Vec::new();
        for c in &cones {
            let mut cone: Cone = c.iter().map(|&i| i as u32).collect();
            cone.sort_unstable();
            cone.dedup();
            if cone.len() != c.len() || cone.iter().any(|&i| i as usize >= rays.len()) {
                return Err(Error::InvalidFan(format!("bad cone {c:?}")));
            }
            let vecs: Vec<Vec<i64>> = cone.iter().map(|&i| rays[i as usize].clone()).collect();
            if linalg::saturation_index(&vecs, lattice_rank) == 0 {
                return Err(Error::InvalidFan(format!("cone {c:?} has dependent rays")));
            }
            listed.push(cone);
        }
        let closed = face_closure(&listed);
        let fan = Self::assemble(lattice_rank, rays, closed, false);
        let maximal = fan.maximal_cones();
        if maximal.len() <= FAN_CHECK_LIMIT {
            for (a, ca) in maximal.iter().enumerate() {
                for cb in &maximal[a + 1..] {
                    if !fan.meet_in_common_face(ca, cb) {
                        return Err(Error::InvalidFan(format!("cones {ca:?} and {cb:?} overlap")));
                    }
                }
            }
        }
        let unimodular = fan.compute_mults().iter().all(|level| level.iter().all(|&m| m == 1));
        Ok(Self::assemble(fan.lattice_rank, fan.rays, fan.cones, unimodular))
    }

    /// Build from a face-closed cone list without validation.
    pub fn from_closed_cones(lattice_rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<Cone>>, unimodular: bool) -> Self {
        Self::assemble(lattice_rank, rays, cones, unimodular)
    }

    fn assemble(lattice_rank: usize, rays: Vec<Vec<i64>>, mut cones: Vec<Vec<Cone>>, unimodular: bool) -> Self {
        if cones.is_empty() {
            cones.push(vec![vec![]]);
        }
        for level in cones.iter_mut() {
            level.sort_unstable();
            level.dedup();
        }
        while cones.len() > 1 && cones.last().is_some_and(|l| l.is_empty()) {
            cones.pop();
        }
        let index = cones.iter().map(|level| level.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
        let cofaces = (0..=cones.len()).map(|_| OnceLock::new()).collect();
        SimplicialFan { lattice_rank, rays, cones, index, unimodular, mults: OnceLock::new(), cofaces }
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Dimension of the largest cone.
    pub fn dim(&self) -> usize {
        self.cones.len() - 1
    }

    pub fn cones(&self, k: usize) -> &[Cone] {
        self.cones.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn cone_index(&self, cone: &[u32]) -> Option<usize> {
        self.index.get(cone.len())?.get(cone).copied()
    }

    pub fn contains_cone(&self, cone: &[u32]) -> bool {
        self.cone_index(cone).is_some()
    }

    pub fn is_unimodular(&self) -> bool {
        self.unimodular
    }

    pub fn num_cones(&self) -> usize {
        self.cones.iter().map(|l| l.len()).sum()
    }

    /// Cones not contained in a larger cone.
    pub fn maximal_cones(&self) -> Vec<Cone> {
        let mut out = Vec::new();
        for k in 0..=self.dim() {
            let up = if k < self.dim() { Some(self.cofaces(k + 1)) } else { None };
            for (i, c) in self.cones[k].iter().enumerate() {
                if up.is_none_or(|u| u[i].is_empty()) {
                    out.push(c.clone());
                }
            }
        }
        out
    }

    /// For each `(k-1)`-cone, the `k`-cones containing it with their extra ray.
    pub fn cofaces(&self, k: usize) -> &[Vec<(u32, u32)>] {
        assert!(k >= 1, "cofaces are defined for k >= 1");
        self.cofaces[k].get_or_init(|| {
            let mut out = vec![Vec::new(); self.cones(k - 1).len()];
            for (s, sigma) in self.cones(k).iter().enumerate() {
                for drop in 0..sigma.len() {
                    let mut tau = sigma.clone();
                    let extra = tau.remove(drop);
                    let t = self.index[k - 1][&tau];
                    out[t].push((s as u32, extra));
                }
            }
            out
        })
    }

    fn compute_mults(&self) -> Vec<Vec<i128>> {
        self.cones
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|c| {
                        let vecs: Vec<Vec<i64>> = c.iter().map(|&i| self.rays[i as usize].clone()).collect();
                        if vecs.is_empty() {
                            1
                        } else {
                            linalg::saturation_index(&vecs, self.lattice_rank)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Index of the sublattice spanned by the rays of cone `i` of dimension `k`.
    pub fn mult(&self, k: usize, i: usize) -> i128 {
        if self.unimodular {
            return 1;
        }
        self.mults.get_or_init(|| self.compute_mults())[k][i]
    }

    fn ray_q(&self, i: u32) -> Vec<Q> {
        self.rays[i as usize].iter().map(|&x| linalg::q(x)).collect()
    }

    fn meet_in_common_face(&self, a: &[u32], b: &[u32]) -> bool {
        let n = self.lattice_rank;
        let mut sys = lp::System::new(n);
        let row = |i: u32, sign: i64| self.rays[i as usize].iter().map(|&x| linalg::big(sign * x)).collect::<Vec<_>>();
        for &i in a {
            if b.contains(&i) {
                sys.eq(row(i, 1), linalg::big(0));
            } else {
                sys.ge(row(i, 1), linalg::big(1));
            }
        }
        for &i in b {
            if !a.contains(&i) {
                sys.ge(row(i, -1), linalg::big(1));
            }
        }
        sys.solve().is_some()
    }

    /// Coordinates of `v` in the rays of `cone`, when `v` lies in its span.
    pub fn coordinates_in(&self, cone: &[u32], v: &[Q]) -> Option<Vec<Q>> {
        let cols: Vec<Vec<Q>> = cone.iter().map(|&i| self.ray_q(i)).collect();
        linalg::solve_in_span(&cols, v)
    }

    /// The smallest cone containing `v`, with its coordinates, if any.
    pub fn locate(&self, v: &[Q]) -> Option<(Cone, Vec<Q>)> {
        if v.iter().all(|x| x.is_zero()) {
            return Some((vec![], vec![]));
        }
        for cone in self.maximal_cones() {
            if let Some(c) = self.coordinates_in(&cone, v) {
                if c.iter().all(|x| *x >= Q::zero()) {
                    let (face, coords): (Vec<u32>, Vec<Q>) =
                        cone.iter().zip(c).filter(|(_, x)| !x.is_zero()).map(|(&r, x)| (r, x)).unzip();
                    return Some((face, coords));
                }
            }
        }
        None
    }
}

/// All faces of the listed cones, grouped by dimension.
pub fn face_closure(listed: &[Cone]) -> Vec<Vec<Cone>> {
    let top = listed.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut sets: Vec<std::collections::HashSet<Cone>> = vec![Default::default(); top + 1];
    for c in listed {
        let k = c.len();
        for mask in 0u64..(1u64 << k) {
            let face: Cone = (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| c[j]).collect();
            sets[face.len()].insert(face);
        }
    }
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// A weight on the `k`-cones of a fan, stored parallel to `fan.cones(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiWeight {
    pub k: usize,
    pub values: Vec<Q>,
}

impl MinkowskiWeight {
    pub fn new(fan: &SimplicialFan, k: usize, values: Vec<Q>) -> Result<Self> {
        if values.len() != fan.cones(k).len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} cones of dimension {k}",
                values.len(),
                fan.cones(k).len()
            )));
        }
        Ok(MinkowskiWeight { k, values })
    }

    /// Weight `1` on every top-dimensional cone.
    pub fn fundamental(fan: &SimplicialFan) -> Self {
        let d = fan.dim();
        MinkowskiWeight { k: d, values: vec![Q::one(); fan.cones(d).len()] }
    }

    pub fn zero(fan: &SimplicialFan, k: usize) -> Self {
        MinkowskiWeight { k, values: vec![Q::zero(); fan.cones(k).len()] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn get(&self, fan: &SimplicialFan, cone: &[u32]) -> Q {
        if cone.len() != self.k {
            return Q::zero();
        }
        fan.cone_index(cone).map_or(Q::zero(), |i| self.values[i])
    }

    pub fn scaled(&self, c: Q) -> Self {
        MinkowskiWeight { k: self.k, values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.k != other.k || self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch("weights of different shape".into()));
        }
        Ok(MinkowskiWeight { k: self.k, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }
}

/// A piecewise linear function given by its values on the rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinearClass {
    pub values: Vec<Q>,
}

impl PiecewiseLinearClass {
    pub fn new(values: Vec<Q>) -> Self {
        PiecewiseLinearClass { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        PiecewiseLinearClass { values: values.iter().map(|&v| linalg::q(v)).collect() }
    }

    /// The global linear function `⟨u, ·⟩`.
    pub fn linear(fan: &SimplicialFan, u: &[i64]) -> Self {
        let values = fan.rays().iter().map(|r| linalg::q(r.iter().zip(u).map(|(a, b)| a * b).sum())).collect();
        PiecewiseLinearClass { values }
    }

    pub fn add(&self, other: &Self) -> Self {
        PiecewiseLinearClass { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scaled(&self, c: Q) -> Self {
        PiecewiseLinearClass { values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Value at a lattice point, by linear interpolation in the cone containing it.
    pub fn evaluate(&self, fan: &SimplicialFan, v: &[Q]) -> Option<Q> {
        let (cone, coords) = fan.locate(v)?;
        Some(cone.iter().zip(coords).fold(Q::zero(), |acc, (&r, c)| acc + c * self.values[r as usize]))
    }
}

fn check_class(fan: &SimplicialFan, ell: &PiecewiseLinearClass) -> Result<()> {
    if ell.values.len() != fan.rays().len() {
        return Err(Error::DimensionMismatch(format!("class has {} values for {} rays", ell.values.len(), fan.rays().len())));
    }
    Ok(())
}

fn check_weight(fan: &SimplicialFan, w: &MinkowskiWeight) -> Result<()> {
    if w.values.len() != fan.cones(w.k).len() {
        return Err(Error::DimensionMismatch(format!("weight has {} values for {} cones", w.values.len(), fan.cones(w.k).len())));
    }
    Ok(())
}

/// For every `(k-1)`-cone τ: `Σ w(σ) e_{σ/τ}` written in the rays of τ, or
/// `None` when it leaves `span(τ)`. Also returns `Σ w(σ) ℓ(e_{σ/τ})` when a
/// class is supplied.
fn local_sums(
    fan: &SimplicialFan,
    w: &MinkowskiWeight,
    ell: Option<&PiecewiseLinearClass>,
) -> Vec<Option<(Vec<Q>, Q)>> {
    let k = w.k;
    let cof = fan.cofaces(k);
    let n = fan.lattice_rank();
    fan.cones(k - 1)
        .iter()
        .enumerate()
        .map(|(t, tau)| {
            let mut v = vec![Q::zero(); n];
            let mut s1 = Q::zero();
            let tau_mult = fan.mult(k - 1, t);
            for &(s, extra) in &cof[t] {
                let wt = w.values[s as usize];
                if wt.is_zero() {
                    continue;
                }
                let m = Q::new(fan.mult(k, s as usize), tau_mult);
                let scale = wt / m;
                for (vi, &x) in v.iter_mut().zip(&fan.rays()[extra as usize]) {
                    *vi += scale * linalg::q(x);
                }
                if let Some(l) = ell {
                    s1 += scale * l.values[extra as usize];
                }
            }
            if v.iter().all(|x| x.is_zero()) {
                return Some((vec![Q::zero(); tau.len()], s1));
            }
            fan.coordinates_in(tau, &v).map(|c| (c, s1))
        })
        .collect()
}

/// `Σ_{σ⊃τ} w(σ) e_{σ/τ} ∈ span(τ)` for every `(k-1)`-cone τ.
pub fn is_balanced(fan: &SimplicialFan, w: &MinkowskiWeight) -> Result<bool> {
    check_weight(fan, w)?;
    if w.k == 0 {
        return Ok(true);
    }
    Ok(local_sums(fan, w, None).iter().all(|x| x.is_some()))
}

/// `(ℓ ∩ w)(τ) = Σ w(σ) ℓ(e_{σ/τ}) − ℓ_τ(Σ w(σ) e_{σ/τ})`.
pub fn cap(fan: &SimplicialFan, ell: &PiecewiseLinearClass, w: &MinkowskiWeight) -> Result<MinkowskiWeight> {
    check_class(fan, ell)?;
    check_weight(fan, w)?;
    if w.k == 0 {
        return Err(Error::DimensionMismatch("cannot cap a 0-dimensional weight".into()));
    }
    let sums = local_sums(fan, w, Some(ell));
    let values = fan
        .cones(w.k - 1)
        .iter()
        .zip(sums)
        .map(|(tau, entry)| {
            let (coords, s1) = entry.ok_or(Error::Unbalanced)?;
            let correction = tau.iter().zip(coords).fold(Q::zero(), |acc, (&r, c)| acc + c * ell.values[r as usize]);
            Ok(s1 - correction)
        })
        .collect::<Result<Vec<Q>>>()?;
    Ok(MinkowskiWeight { k: w.k - 1, values })
}

/// Iterated cap of `classes` (applied last to first) with `w`, evaluated at the origin.
pub fn degree(fan: &SimplicialFan, classes: &[PiecewiseLinearClass], w: &MinkowskiWeight) -> Result<Q> {
    if classes.len() != w.k {
        return Err(Error::DimensionMismatch(format!("{} classes for a weight of dimension {}", classes.len(), w.k)));
    }
    let mut cur = w.clone();
    for ell in classes.iter().rev() {
        cur = cap(fan, ell, &cur)?;
    }
    Ok(cur.values[0])
}

/// A basis of the balanced weights of dimension `k`.
pub fn weight_space(fan: &SimplicialFan, k: usize) -> Vec<MinkowskiWeight> {
    let ncols = fan.cones(k).len();
    if k == 0 || ncols == 0 {
        return linalg::kernel::<Q>(&[], ncols).into_iter().map(|values| MinkowskiWeight { k, values }).collect();
    }
    let cof = fan.cofaces(k);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (t, tau) in fan.cones(k - 1).iter().enumerate() {
        let tau_rays: Vec<Vec<i64>> = tau.iter().map(|&i| fan.rays()[i as usize].clone()).collect();
        let functionals = if tau_rays.is_empty() {
            (0..fan.lattice_rank()).map(|i| (0..fan.lattice_rank()).map(|j| i64::from(i == j)).collect()).collect()
        } else {
            linalg::integer_kernel(&tau_rays, fan.lattice_rank())
        };
        let tau_mult = fan.mult(k - 1, t);
        for u in functionals {
            let mut row = vec![Q::zero(); ncols];
            for &(s, extra) in &cof[t] {
                let pairing: i64 = u.iter().zip(&fan.rays()[extra as usize]).map(|(a, b)| a * b).sum();
                row[s as usize] += linalg::q(pairing) / Q::new(fan.mult(k, s as usize), tau_mult);
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    linalg::kernel(&rows, ncols).into_iter().map(|values| MinkowskiWeight { k, values }).collect()
}

/// An integer linear map `N_source → N_target`, one row per target coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    pub matrix: Vec<Vec<i64>>,
}

impl LatticeMap {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Image of a source cone: the smallest target cone containing it and, when
/// that cone has the same dimension, the lattice index of the image.
fn image_cone(
    map: &LatticeMap,
    source: &SimplicialFan,
    target: &SimplicialFan,
    ray_lookup: &HashMap<Vec<i64>, u32>,
    cone: &[u32],
) -> Result<(Cone, Option<Q>)> {
    let images: Vec<Vec<i64>> = cone.iter().map(|&r| map.apply(&source.rays()[r as usize])).collect();
    // fast path: every image is zero or a positive multiple of a target ray
    let mut hits: Vec<(u32, i64)> = Vec::new();
    let mut fast = true;
    for v in &images {
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            continue;
        }
        let prim: Vec<i64> = v.iter().map(|x| x / g).collect();
        match ray_lookup.get(&prim) {
            Some(&r) => hits.push((r, g)),
            None => {
                fast = false;
                break;
            }
        }
    }
    let describe = || format!("image of source cone {cone:?} lies in no target cone");
    let (face, index) = if fast {
        let mut face: Cone = hits.iter().map(|h| h.0).collect();
        face.sort_unstable();
        face.dedup();
        if !target.contains_cone(&face) {
            return Err(Error::NotAMorphism(describe()));
        }
        let index = (hits.len() == cone.len() && face.len() == cone.len())
            .then(|| Q::from_integer(hits.iter().map(|h| h.1 as i128).product::<i128>()));
        (face, index)
    } else {
        let qs: Vec<Vec<Q>> = images.iter().map(|v| v.iter().map(|&x| linalg::q(x)).collect()).collect();
        let mut found = None;
        for maximal in target.maximal_cones() {
            let coords: Option<Vec<Vec<Q>>> = qs.iter().map(|v| target.coordinates_in(&maximal, v)).collect();
            if let Some(coords) = coords {
                if coords.iter().all(|c| c.iter().all(|x| *x >= Q::zero())) {
                    let face: Cone = maximal
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| coords.iter().any(|c| !c[*j].is_zero()))
                        .map(|(_, &r)| r)
                        .collect();
                    found = Some((face, maximal, coords));
                    break;
                }
            }
        }
        let (face, maximal, coords) = found.ok_or_else(|| Error::NotAMorphism(describe()))?;
        let rank = linalg::rank(&coords, maximal.len());
        let index = if rank == cone.len() && face.len() == cone.len() {
            let cols: Vec<usize> = maximal.iter().enumerate().filter(|(_, r)| face.contains(r)).map(|(j, _)| j).collect();
            let sq: Vec<Vec<Q>> = coords.iter().map(|c| cols.iter().map(|&j| c[j]).collect()).collect();
            Some(num_traits::Signed::abs(&det_q(&sq)))
        } else {
            None
        };
        (face, index)
    };
    Ok((face, index))
}

fn det_q(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                let delta = f * a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    d
}

/// Check that every maximal source cone maps into some target cone.
pub fn check_morphism(map: &LatticeMap, source: &SimplicialFan, target: &SimplicialFan) -> Result<()> {
    let lookup = ray_lookup(target);
    for cone in source.maximal_cones() {
        image_cone(map, source, target, &lookup, &cone)?;
    }
    Ok(())
}

fn ray_lookup(fan: &SimplicialFan) -> HashMap<Vec<i64>, u32> {
    fan.rays().iter().enumerate().map(|(i, r)| (r.clone(), i as u32)).collect()
}

/// Pushforward of a weight along a map of fans.
pub fn pushforward(
    map: &LatticeMap,
    source: &SimplicialFan,
    target: &SimplicialFan,
    w: &MinkowskiWeight,
) -> Result<MinkowskiWeight> {
    check_weight(source, w)?;
    if map.matrix.len() != target.lattice_rank() || map.matrix.iter().any(|r| r.len() != source.lattice_rank()) {
        return Err(Error::DimensionMismatch("lattice map shape does not match the fans".into()));
    }
    check_morphism(map, source, target)?;
    let lookup = ray_lookup(target);
    let mut out = MinkowskiWeight::zero(target, w.k);
    for (i, cone) in source.cones(w.k).iter().enumerate() {
        let wt = w.values[i];
        if wt.is_zero() {
            continue;
        }
        let (face, index) = image_cone(map, source, target, &lookup, cone)?;
        let Some(index) = index else { continue };
        let t = target.cone_index(&face).ok_or_else(|| Error::Internal("image face missing".into()))?;
        let factor = index * Q::new(target.mult(w.k, t), 1) / Q::new(source.mult(w.k, i), 1);
        out.values[t] += wt * factor;
    }
    Ok(out)
}

/// Pull back a class along a map by evaluating it at the image of each ray.
pub fn pullback(
    map: &LatticeMap,
    source: &SimplicialFan,
    target: &SimplicialFan,
    ell: &PiecewiseLinearClass,
) -> Result<PiecewiseLinearClass> {
    check_class(target, ell)?;
    let values = source
        .rays()
        .iter()
        .map(|r| {
            let img: Vec<Q> = map.apply(r).into_iter().map(linalg::q).collect();
            ell.evaluate(target, &img).ok_or_else(|| Error::NotAMorphism("ray image outside the target fan".into()))
        })
        .collect::<Result<Vec<Q>>>()?;
    Ok(PiecewiseLinearClass { values })
}

/// Product fan in `N_1 ⊕ N_2`.
pub fn product(a: &SimplicialFan, b: &SimplicialFan) -> SimplicialFan {
    let (na, nb) = (a.lattice_rank(), b.lattice_rank());
    let mut rays: Vec<Vec<i64>> = a.rays().iter().map(|r| r.iter().copied().chain(std::iter::repeat_n(0, nb)).collect()).collect();
    rays.extend(b.rays().iter().map(|r| std::iter::repeat_n(0, na).chain(r.iter().copied()).collect()));
    let off = a.rays().len() as u32;
    let mut cones = vec![Vec::new(); a.dim() + b.dim() + 1];
    for ka in 0..=a.dim() {
        for ca in a.cones(ka) {
            for kb in 0..=b.dim() {
                for cb in b.cones(kb) {
                    let c: Cone = ca.iter().copied().chain(cb.iter().map(|&r| r + off)).collect();
                    cones[ka + kb].push(c);
                }
            }
        }
    }
    SimplicialFan::from_closed_cones(na + nb, rays, cones, a.is_unimodular() && b.is_unimodular())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The complete fan of P^2: rays e1, e2, -e1-e2.
    fn p2() -> SimplicialFan {
        SimplicialFan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn projective_plane_degree() {
        let fan = p2();
        assert!(fan.is_unimodular());
        let one = MinkowskiWeight::fundamental(&fan);
        assert!(is_balanced(&fan, &one).unwrap());
        let h = PiecewiseLinearClass::from_integers(&[0, 0, 1]);
        assert_eq!(degree(&fan, &[h.clone(), h], &one).unwrap(), Q::one());
        let lin = PiecewiseLinearClass::linear(&fan, &[2, -1]);
        assert!(cap(&fan, &lin, &one).unwrap().is_zero());
    }

    #[test]
    fn overlapping_cones_are_rejected() {
        let err = SimplicialFan::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::InvalidFan(_)));
    }

    #[test]
    fn weight_spaces_of_p2() {
        let fan = p2();
        assert_eq!(weight_space(&fan, 2).len(), 1);
        assert_eq!(weight_space(&fan, 1).len(), 1);
        assert_eq!(weight_space(&fan, 0).len(), 1);
    }

    #[test]
    fn non_unimodular_cone_multiplicity() {
        let fan = SimplicialFan::new(2, vec![vec![1, 0], vec![1, 2]], vec![vec![0, 1]]).unwrap();
        assert!(!fan.is_unimodular());
        let i = fan.cone_index(&[0, 1]).unwrap();
        assert_eq!(fan.mult(2, i), 2);
    }
}
