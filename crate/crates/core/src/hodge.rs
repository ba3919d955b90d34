//! Chow rings of simplicial fans and the Lefschetz properties, by exact
//! linear algebra over the rationals.

use crate::error::{Error, Result};
use crate::linalg::{self, big, q_to_big};
use crate::lp;
use crate::weights::{self, Cone, MinkowskiWeight, PiecewiseLinearClass, SimplicialFan};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default cap on the number of degree-`k` monomials handled in one degree.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 200_000;

/// Environment variable overriding [`DEFAULT_MONOMIAL_BUDGET`].
pub const BUDGET_ENV: &str = "CONORMAL_MAX_MONOMIALS";

/// The monomial budget, read from the environment when set.
pub fn monomial_budget() -> Result<usize> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MONOMIAL_BUDGET),
    }
}

/// A monomial in the ray variables, as a sorted list of ray indices with repetition.
pub type Monomial = Vec<u32>;

type SparseRow = Vec<(usize, BigRational)>;

/// One graded piece `A^k = (S/I)_k / (J·S)_k`.
#[derive(Debug, Clone)]
struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Indices into `monomials` of the quotient basis.
    basis: Vec<usize>,
    /// Normal form of every monomial in the quotient basis.
    normal_forms: Vec<Vec<(usize, BigRational)>>,
}

/// The graded Chow ring of a simplicial fan, degree by degree.
#[derive(Debug, Clone)]
pub struct GradedChow<'a> {
    fan: &'a SimplicialFan,
    pieces: Vec<Piece>,
}

fn support(m: &[u32]) -> Cone {
    let mut s = m.to_vec();
    s.dedup();
    s
}

fn is_squarefree(m: &[u32]) -> bool {
    m.windows(2).all(|w| w[0] != w[1])
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Number of face-supported monomials of degree `k`.
pub fn monomial_count(fan: &SimplicialFan, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    (1..=k.min(fan.dim())).map(|j| fan.cones(j).len().saturating_mul(binomial(k - 1, j - 1))).fold(0usize, usize::saturating_add)
}

fn compositions(k: usize, parts: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if parts == 1 {
        cur.push(k);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 1..=k - (parts - 1) {
        cur.push(first);
        compositions(k - first, parts - 1, out, cur);
        cur.pop();
    }
}

fn face_monomials(fan: &SimplicialFan, k: usize) -> Vec<Monomial> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for j in 1..=k.min(fan.dim()) {
        let mut comps = Vec::new();
        compositions(k, j, &mut comps, &mut Vec::new());
        for cone in fan.cones(j) {
            for c in &comps {
                let m: Monomial = cone.iter().zip(c).flat_map(|(&r, &e)| std::iter::repeat_n(r, e)).collect();
                out.push(m);
            }
        }
    }
    // non-squarefree monomials first so that the quotient basis is squarefree
    out.sort_by(|a, b| (is_squarefree(a), a).cmp(&(is_squarefree(b), b)));
    out
}

fn multiply(a: &[u32], b: &[u32]) -> Monomial {
    let mut m: Monomial = a.iter().chain(b).copied().collect();
    m.sort_unstable();
    m
}

/// Row echelon form over sparse rows whose leading entry is 1.
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, SparseRow>,
}

impl Echelon {
    fn insert(&mut self, row: BTreeMap<usize, BigRational>) {
        let mut work = row;
        loop {
            let Some((&lead, a)) = work.iter().next() else { return };
            let a = a.clone();
            match self.rows.get(&lead) {
                Some(r) => {
                    for (c, b) in r {
                        let v = work.entry(*c).or_insert_with(BigRational::zero);
                        *v -= &a * b;
                        if v.is_zero() {
                            work.remove(c);
                        }
                    }
                }
                None => {
                    let row = work.into_iter().map(|(c, v)| (c, v / &a)).collect();
                    self.rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Fully reduce a vector; the result is supported on non-pivot columns.
    fn reduce(&self, v: BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigRational> {
        let mut work = v;
        let mut out = BTreeMap::new();
        while let Some((c, a)) = work.pop_first() {
            match self.rows.get(&c) {
                Some(r) => {
                    for (c2, b) in r.iter().skip(1) {
                        let v = work.entry(*c2).or_insert_with(BigRational::zero);
                        *v -= &a * b;
                        if v.is_zero() {
                            work.remove(c2);
                        }
                    }
                }
                None => {
                    out.insert(c, a);
                }
            }
        }
        out
    }
}

impl<'a> GradedChow<'a> {
    /// Build every graded piece, refusing fans beyond the environment budget.
    pub fn new(fan: &'a SimplicialFan) -> Result<Self> {
        Self::with_budget(fan, monomial_budget()?)
    }

    pub fn with_budget(fan: &'a SimplicialFan, budget: usize) -> Result<Self> {
        let d = fan.dim();
        let needed = (0..=d).map(|k| monomial_count(fan, k)).max().unwrap_or(1);
        if needed > budget {
            return Err(Error::ResourceGuard { needed, budget });
        }
        let mut pieces: Vec<Piece> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let monomials = face_monomials(fan, k);
            let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            let mut ech = Echelon::default();
            if k > 0 {
                for m in &pieces[k - 1].monomials {
                    let supp = support(m);
                    let mut partners: Vec<u32> = supp.clone();
                    if supp.is_empty() {
                        partners = fan.cones(1).iter().map(|c| c[0]).collect();
                    } else {
                        let i = fan.cone_index(&supp).expect("face-supported");
                        if supp.len() < d {
                            partners.extend(fan.cofaces(supp.len() + 1)[i].iter().map(|&(_, extra)| extra));
                        }
                    }
                    for coord in 0..fan.lattice_rank() {
                        let mut row = BTreeMap::new();
                        for &rho in &partners {
                            let a = fan.rays()[rho as usize][coord];
                            if a != 0 {
                                let col = index[&multiply(m, &[rho])];
                                *row.entry(col).or_insert_with(BigRational::zero) += big(a);
                            }
                        }
                        row.retain(|_, v: &mut BigRational| !v.is_zero());
                        if !row.is_empty() {
                            ech.insert(row);
                        }
                    }
                }
            }
            let basis: Vec<usize> = (0..monomials.len()).filter(|c| !ech.rows.contains_key(c)).collect();
            let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let normal_forms = (0..monomials.len())
                .map(|c| {
                    let reduced = ech.reduce(BTreeMap::from([(c, BigRational::one())]));
                    reduced.into_iter().map(|(c, v)| (position[&c], v)).collect()
                })
                .collect();
            pieces.push(Piece { monomials, index, basis, normal_forms });
        }
        Ok(GradedChow { fan, pieces })
    }

    pub fn fan(&self) -> &SimplicialFan {
        self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    /// `b_k = dim A^k`.
    pub fn betti(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, |p| p.basis.len())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.betti(k)).collect()
    }

    /// Monomials forming the basis of `A^k`.
    pub fn basis(&self, k: usize) -> Vec<Monomial> {
        self.pieces.get(k).map_or(Vec::new(), |p| p.basis.iter().map(|&c| p.monomials[c].clone()).collect())
    }

    /// Coordinates of a monomial of degree `k` in the basis of `A^k`.
    pub fn normal_form(&self, m: &[u32]) -> Vec<BigRational> {
        let k = m.len();
        let mut out = vec![BigRational::zero(); self.betti(k)];
        let Some(p) = self.pieces.get(k) else { return out };
        let mut sorted = m.to_vec();
        sorted.sort_unstable();
        if let Some(&c) = p.index.get(&sorted) {
            for (i, v) in &p.normal_forms[c] {
                out[*i] += v;
            }
        }
        out
    }

    /// Product of `a ∈ A^i` and `b ∈ A^j` in `A^{i+j}`.
    pub fn multiply(&self, i: usize, a: &[BigRational], j: usize, b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.betti(i + j)];
        if i + j > self.dim() {
            return out;
        }
        let (ba, bb) = (self.basis(i), self.basis(j));
        for (x, ma) in a.iter().zip(&ba) {
            if x.is_zero() {
                continue;
            }
            for (y, mb) in b.iter().zip(&bb) {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, v) in out.iter_mut().zip(self.normal_form(&multiply(ma, mb))) {
                    *o += &xy * v;
                }
            }
        }
        out
    }

    /// A piecewise linear class as an element of `A^1`.
    pub fn class_vector(&self, ell: &PiecewiseLinearClass) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.betti(1)];
        for (rho, v) in ell.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let v = q_to_big(v);
            for (o, x) in out.iter_mut().zip(self.normal_form(&[rho as u32])) {
                *o += &v * x;
            }
        }
        out
    }

    /// Multiplication by `ℓ^p` as a matrix `A^k → A^{k+p}` (one row per target basis element).
    pub fn lefschetz_matrix(&self, ell: &PiecewiseLinearClass, k: usize, p: usize) -> Vec<Vec<BigRational>> {
        let l = self.class_vector(ell);
        let cols: Vec<Vec<BigRational>> = (0..self.betti(k))
            .map(|i| {
                let mut v = vec![BigRational::zero(); self.betti(k)];
                v[i] = BigRational::one();
                for step in 0..p {
                    v = self.multiply(k + step, &v, 1, &l);
                }
                v
            })
            .collect();
        (0..self.betti(k + p)).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    }

    /// `deg: A^d → Q` on the basis, from a top-dimensional weight.
    pub fn degree_map(&self, fundamental: &MinkowskiWeight) -> Result<Vec<BigRational>> {
        let d = self.dim();
        if fundamental.k != d {
            return Err(Error::DimensionMismatch(format!("weight of dimension {} on a fan of dimension {d}", fundamental.k)));
        }
        self.basis(d)
            .iter()
            .map(|m| {
                if !is_squarefree(m) {
                    return Err(Error::Internal("top degree basis is not squarefree".into()));
                }
                let i = self.fan.cone_index(m).ok_or_else(|| Error::Internal("basis monomial is not a cone".into()))?;
                Ok(q_to_big(&fundamental.values[i]) / big(self.fan.mult(d, i) as i64))
            })
            .collect()
    }

    /// Gram matrix of `A^k × A^{d−k} → Q`.
    pub fn poincare_pairing(&self, k: usize, fundamental: &MinkowskiWeight) -> Result<Vec<Vec<BigRational>>> {
        let d = self.dim();
        let deg = self.degree_map(fundamental)?;
        let (bk, bd) = (self.basis(k), self.basis(d - k));
        Ok(bk
            .iter()
            .map(|a| {
                bd.iter()
                    .map(|b| self.normal_form(&multiply(a, b)).iter().zip(&deg).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect())
    }
}

/// A positive generator of the top weights, if that space is one-dimensional.
pub fn lefschetz_fundamental(fan: &SimplicialFan) -> Result<MinkowskiWeight> {
    let space = weights::weight_space(fan, fan.dim());
    if space.len() != 1 {
        return Err(Error::NotLefschetzEligible(format!("top weight space has dimension {}", space.len())));
    }
    let w = &space[0];
    let first = w.values.first().copied().unwrap_or_default();
    if w.values.iter().any(|v| v.is_zero() || v.is_positive() != first.is_positive()) {
        return Err(Error::NotLefschetzEligible("top weight space has no positive generator".into()));
    }
    let scale = w.values.iter().fold(first.abs(), |acc, v| acc.min(v.abs()));
    Ok(w.scaled(first.signum() / scale))
}

/// Poincaré duality verdict in each degree `0..=d`.
pub fn pd_check(chow: &GradedChow, fundamental: &MinkowskiWeight) -> Result<Vec<bool>> {
    let d = chow.dim();
    if !weights::is_balanced(chow.fan(), fundamental)? || fundamental.is_zero() {
        return Ok(vec![false; d + 1]);
    }
    (0..=d)
        .map(|k| {
            let (bk, bd) = (chow.betti(k), chow.betti(d - k));
            if bk != bd {
                return Ok(false);
            }
            Ok(linalg::rank(&chow.poincare_pairing(k, fundamental)?, bd) == bk)
        })
        .collect()
}

/// Hard Lefschetz in degree `k`: `ℓ^{d−2k}: A^k → A^{d−k}` is invertible.
pub fn hl_check(chow: &GradedChow, ell: &PiecewiseLinearClass, k: usize) -> bool {
    let d = chow.dim();
    if 2 * k > d || chow.betti(k) != chow.betti(d - k) {
        return false;
    }
    linalg::rank(&chow.lefschetz_matrix(ell, k, d - 2 * k), chow.betti(k)) == chow.betti(k)
}

/// Inertia of `(η₁, η₂) ↦ (−1)^k deg(ℓ^{d−2k} η₁ η₂)` on `A^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HrSignature {
    pub k: usize,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub signature: i64,
    pub expected: i64,
}

impl HrSignature {
    pub fn holds(&self) -> bool {
        self.zero == 0 && self.signature == self.expected
    }
}

/// `Σ_{i≤k} (−1)^{k−i} (b_i − b_{i−1})`.
pub fn expected_hr_signature(betti: &[usize], k: usize) -> i64 {
    (0..=k)
        .map(|i| {
            let b = betti[i] as i64 - if i > 0 { betti[i - 1] as i64 } else { 0 };
            if (k - i).is_multiple_of(2) {
                b
            } else {
                -b
            }
        })
        .sum()
}

pub fn hr_signature(
    chow: &GradedChow,
    ell: &PiecewiseLinearClass,
    k: usize,
    fundamental: &MinkowskiWeight,
) -> Result<HrSignature> {
    let d = chow.dim();
    if 2 * k > d {
        return Err(Error::DimensionMismatch(format!("k = {k} exceeds half the dimension {d}")));
    }
    let lm = chow.lefschetz_matrix(ell, k, d - 2 * k);
    let pairing = chow.poincare_pairing(d - k, fundamental)?;
    let bk = chow.betti(k);
    let sign = if k.is_multiple_of(2) { big(1) } else { big(-1) };
    // form[i][j] = Σ_c lm[c][i] · pairing[c][j]
    let form: Vec<Vec<BigRational>> = (0..bk)
        .map(|i| {
            (0..bk)
                .map(|j| {
                    let s: BigRational = (0..chow.betti(d - k)).map(|c| &lm[c][i] * &pairing[c][j]).sum();
                    s * &sign
                })
                .collect()
        })
        .collect();
    let (positive, negative, zero) = linalg::inertia(&form);
    let betti = chow.betti_numbers();
    Ok(HrSignature {
        k,
        positive,
        negative,
        zero,
        signature: positive as i64 - negative as i64,
        expected: expected_hr_signature(&betti, k),
    })
}

/// `deg(ℓ^d)` against a fundamental weight, via the cap product.
pub fn top_degree(fan: &SimplicialFan, ell: &PiecewiseLinearClass, fundamental: &MinkowskiWeight) -> Result<BigRational> {
    let classes = vec![ell.clone(); fan.dim()];
    Ok(q_to_big(&weights::degree(fan, &classes, fundamental)?))
}

fn star_rays(fan: &SimplicialFan, cone: &[u32]) -> (Vec<u32>, Vec<Cone>) {
    let k = cone.len();
    let mut link: Vec<u32> = if k == 0 {
        (0..fan.rays().len() as u32).collect()
    } else if k < fan.dim() {
        let i = fan.cone_index(cone).expect("cone in fan");
        fan.cofaces(k + 1)[i].iter().map(|&(_, extra)| extra).collect()
    } else {
        Vec::new()
    };
    link.sort_unstable();
    let containing: Vec<Cone> = fan.maximal_cones().into_iter().filter(|m| cone.iter().all(|r| m.contains(r))).collect();
    (link, containing)
}

/// `ℓ` is strictly convex around every cone: some linear `h` agrees with `ℓ`
/// on the cone and lies strictly below it on the rest of the closed star.
pub fn strictly_convex_member(fan: &SimplicialFan, ell: &PiecewiseLinearClass) -> bool {
    let n = fan.lattice_rank();
    let value = |r: u32| q_to_big(&ell.values[r as usize]);
    let ray = |r: u32| fan.rays()[r as usize].iter().map(|&x| big(x)).collect::<Vec<_>>();
    (0..=fan.dim()).all(|k| {
        fan.cones(k).iter().all(|cone| {
            let (link, _) = star_rays(fan, cone);
            if link.is_empty() {
                return true;
            }
            // variables (h_1..h_n, s)
            let mut sys = lp::System::new(n + 1);
            for &r in cone {
                let mut a = ray(r);
                a.push(-value(r));
                sys.eq(a, big(0));
            }
            for &r in &link {
                let mut a: Vec<BigRational> = ray(r).into_iter().map(|x| -x).collect();
                a.push(value(r));
                sys.ge(a, big(1));
            }
            let mut s = vec![big(0); n];
            s.push(big(1));
            sys.ge(s, big(1));
            sys.solve().is_some()
        })
    })
}

/// `deg(ℓ₁ℓ₂ℓ₃⋯ℓ_d)² ≥ deg(ℓ₁ℓ₁ℓ₃⋯ℓ_d)·deg(ℓ₂ℓ₂ℓ₃⋯ℓ_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlexandrovFenchel {
    pub mixed: String,
    pub first: String,
    pub second: String,
    pub holds: bool,
}

pub fn alexandrov_fenchel_check(
    fan: &SimplicialFan,
    classes: &[PiecewiseLinearClass],
    fundamental: &MinkowskiWeight,
) -> Result<AlexandrovFenchel> {
    if classes.len() != fan.dim() || classes.len() < 2 {
        return Err(Error::DimensionMismatch(format!("{} classes on a fan of dimension {}", classes.len(), fan.dim())));
    }
    let rest = &classes[2..];
    let with = |a: &PiecewiseLinearClass, b: &PiecewiseLinearClass| -> Result<BigRational> {
        let mut list = vec![a.clone(), b.clone()];
        list.extend_from_slice(rest);
        Ok(q_to_big(&weights::degree(fan, &list, fundamental)?))
    };
    let mixed = with(&classes[0], &classes[1])?;
    let first = with(&classes[0], &classes[0])?;
    let second = with(&classes[1], &classes[1])?;
    let holds = &mixed * &mixed >= &first * &second;
    Ok(AlexandrovFenchel { mixed: mixed.to_string(), first: first.to_string(), second: second.to_string(), holds })
}

/// Replace `cone` by the cones over its boundary joined with the sum of its rays.
pub fn stellar_subdivision(fan: &SimplicialFan, cone: &[usize]) -> Result<SimplicialFan> {
    let mut sigma: Cone = cone.iter().map(|&i| i as u32).collect();
    sigma.sort_unstable();
    if !fan.contains_cone(&sigma) || sigma.len() != cone.len() {
        return Err(Error::ConeNotInFan(cone.to_vec()));
    }
    if sigma.len() <= 1 {
        return Ok(fan.clone());
    }
    let mut new_ray = vec![0i64; fan.lattice_rank()];
    for &r in &sigma {
        for (x, y) in new_ray.iter_mut().zip(&fan.rays()[r as usize]) {
            *x += y;
        }
    }
    let g = new_ray.iter().fold(0i64, |g, &x| g.gcd(&x));
    new_ray.iter_mut().for_each(|x| *x /= g);
    let mut rays = fan.rays().to_vec();
    rays.push(new_ray);
    let rho = fan.rays().len();
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for m in fan.maximal_cones() {
        let m: Vec<usize> = m.iter().map(|&r| r as usize).collect();
        if sigma.iter().all(|&r| m.contains(&(r as usize))) {
            for &nu in &sigma {
                let mut c: Vec<usize> = m.iter().copied().filter(|&r| r != nu as usize).collect();
                c.push(rho);
                cones.push(c);
            }
        } else {
            cones.push(m);
        }
    }
    SimplicialFan::new(fan.lattice_rank(), rays, cones)
}

/// The star of `cone` as a fan in `N / span(cone)`.
pub fn star_fan(fan: &SimplicialFan, cone: &[usize]) -> Result<SimplicialFan> {
    let mut sigma: Cone = cone.iter().map(|&i| i as u32).collect();
    sigma.sort_unstable();
    if !fan.contains_cone(&sigma) {
        return Err(Error::ConeNotInFan(cone.to_vec()));
    }
    let n = fan.lattice_rank();
    let functionals: Vec<Vec<i64>> = if sigma.is_empty() {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    } else {
        let rows: Vec<Vec<i64>> = sigma.iter().map(|&r| fan.rays()[r as usize].clone()).collect();
        linalg::integer_kernel(&rows, n)
    };
    let (link, containing) = star_rays(fan, &sigma);
    let project = |v: &[i64]| -> Vec<i64> {
        let p: Vec<i64> = functionals.iter().map(|u| u.iter().zip(v).map(|(a, b)| a * b).sum()).collect();
        let g = p.iter().fold(0i64, |g, &x| g.gcd(&x));
        p.into_iter().map(|x| x / g.max(1)).collect()
    };
    let position: HashMap<u32, usize> = link.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let rays: Vec<Vec<i64>> = link.iter().map(|&r| project(&fan.rays()[r as usize])).collect();
    let cones: Vec<Vec<usize>> = containing
        .iter()
        .map(|m| m.iter().filter(|r| !sigma.contains(r)).map(|r| position[r]).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    SimplicialFan::new(functionals.len(), rays, cones)
}

/// Weights-versus-Chow duality: every balanced `k`-weight gives a functional
/// on `A^k` (by capping ray indicator classes), and these functionals span
/// a space of dimension `b_k`. Returns `(dim MW_k, rank of pairing, b_k)`.
pub fn weight_chow_duality(chow: &GradedChow, k: usize) -> Result<(usize, usize, usize)> {
    let fan = chow.fan();
    let ws = weights::weight_space(fan, k);
    let courant = |r: u32| {
        let mut v = vec![0i64; fan.rays().len()];
        v[r as usize] = 1;
        PiecewiseLinearClass::from_integers(&v)
    };
    let p = &chow.pieces[k];
    let mut rows = Vec::new();
    for w in &ws {
        let on_monomial = |m: &Monomial| -> Result<BigRational> {
            let classes: Vec<PiecewiseLinearClass> = m.iter().map(|&r| courant(r)).collect();
            Ok(q_to_big(&weights::degree(fan, &classes, w)?))
        };
        let values: Vec<BigRational> = p.monomials.iter().map(on_monomial).collect::<Result<_>>()?;
        // the functional must factor through A^k: compare with its values on normal forms
        for (c, nf) in p.normal_forms.iter().enumerate() {
            let via_basis: BigRational = nf.iter().map(|(i, v)| v * &values[p.basis[*i]]).sum();
            if via_basis != values[c] {
                return Err(Error::Internal(format!("weight functional does not vanish on relations at monomial {c}")));
            }
        }
        rows.push(p.basis.iter().map(|&c| values[c].clone()).collect::<Vec<_>>());
    }
    let rank = linalg::rank(&rows, p.basis.len());
    Ok((ws.len(), rank, p.basis.len()))
}

/// Results of the Lefschetz tests on a fan with a chosen class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub dim: usize,
    pub betti: Vec<usize>,
    pub pd: Vec<bool>,
    pub strictly_convex: bool,
    pub top_degree: String,
    pub hl: Vec<(usize, bool)>,
    pub hr: Vec<HrSignature>,
}

impl LefschetzReport {
    pub fn all_hold(&self) -> bool {
        self.pd.iter().all(|&b| b) && self.strictly_convex && self.hl.iter().all(|h| h.1) && self.hr.iter().all(|h| h.holds())
    }
}

/// PD in every degree, and HL and HR for `k ≤ min(max_k, d/2)`.
pub fn lefschetz_report(fan: &SimplicialFan, ell: &PiecewiseLinearClass, max_k: usize) -> Result<LefschetzReport> {
    let fundamental = lefschetz_fundamental(fan)?;
    let chow = GradedChow::new(fan)?;
    let d = chow.dim();
    let pd = pd_check(&chow, &fundamental)?;
    let ks = 0..=max_k.min(d / 2);
    let hl = ks.clone().map(|k| (k, hl_check(&chow, ell, k))).collect();
    let hr = ks.map(|k| hr_signature(&chow, ell, k, &fundamental)).collect::<Result<_>>()?;
    Ok(LefschetzReport {
        dim: d,
        betti: chow.betti_numbers(),
        pd,
        strictly_convex: strictly_convex_member(fan, ell),
        top_degree: top_degree(fan, ell, &fundamental)?.to_string(),
        hl,
        hr,
    })
}
