//! Combinatorics of the bipermutohedral fan: bisubsets, bisequences,
//! biflags, plane configurations, and bipermutohedron vertices.
//!
//! Vectors of `N_{E,E} = Z^E/Z e_E ⊕ Z^E/Z f_E` are written in the pinned
//! basis: coordinate 0 of each block is subtracted off, leaving `2(|E|-1)`
//! integer coordinates.

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `S|T` is a bisubset iff both are nonempty, `S ∪ T = E` and `S ∩ T ≠ E`.
pub fn is_bisubset(ground_size: usize, s: Set, t: Set) -> bool {
    let e = bits::full(ground_size);
    s != 0 && t != 0 && s | t == e && s & t != e && bits::is_subset(s | t, e)
}

/// All bisubsets, ordered by `(S, T)` numerically.
pub fn enumerate_bisubsets(ground_size: usize) -> Vec<(Set, Set)> {
    let e = bits::full(ground_size);
    let mut out = Vec::new();
    for s in bits::subsets(e) {
        // T must contain E - S
        for extra in bits::subsets(s) {
            let t = (e & !s) | extra;
            if is_bisubset(ground_size, s, t) {
                out.push((s, t));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Pinned lattice vector of `e_S + f_T`.
pub fn pinned_vector(ground_size: usize, s: Set, t: Set) -> Vec<i64> {
    let block = |x: Set| -> Vec<i64> {
        let base = i64::from(bits::contains(x, 0));
        (1..ground_size).map(|i| i64::from(bits::contains(x, i)) - base).collect()
    };
    let mut v = block(s);
    v.extend(block(t));
    v
}

/// An ordered sequence of nonempty parts covering `E`, each element in at most
/// two parts and some element in exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bisequence {
    ground_size: usize,
    parts: Vec<Set>,
}

impl Bisequence {
    pub fn new(ground_size: usize, parts: Vec<Set>) -> Result<Self> {
        let e = bits::full(ground_size);
        if parts.iter().any(|&p| p == 0 || !bits::is_subset(p, e)) {
            return Err(Error::InvalidBisequence("parts must be nonempty subsets of E".into()));
        }
        let counts = occurrence_counts(ground_size, &parts);
        if counts.iter().any(|&c| c == 0 || c > 2) {
            return Err(Error::InvalidBisequence("each element must appear once or twice".into()));
        }
        if !counts.contains(&1) {
            return Err(Error::InvalidBisequence("some element must appear exactly once".into()));
        }
        Ok(Bisequence { ground_size, parts })
    }

    /// Parse `2|0|1|1|0` style text (digits per part, or comma lists).
    pub fn parse(ground_size: usize, text: &str) -> Result<Self> {
        let parts = text
            .split('|')
            .map(|p| bits::parse_label(p).ok_or_else(|| Error::InvalidBisequence(format!("bad part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground_size, parts)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn parts(&self) -> &[Set] {
        &self.parts
    }

    /// Elements occurring in exactly one part.
    pub fn singles(&self) -> Set {
        occurrence_counts(self.ground_size, &self.parts)
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| if c == 1 { acc | 1 << i } else { acc })
    }

    /// A bisequence with `2|E| - 1` singleton parts.
    pub fn is_bipermutation(&self) -> bool {
        self.parts.len() == 2 * self.ground_size - 1 && self.parts.iter().all(|&p| bits::len(p) == 1)
    }
}

impl fmt::Display for Bisequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|&p| bits::label(p)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

fn occurrence_counts(ground_size: usize, parts: &[Set]) -> Vec<u32> {
    let mut counts = vec![0u32; ground_size];
    for &p in parts {
        for i in bits::elements(p) {
            if i < ground_size {
                counts[i] += 1;
            }
        }
    }
    counts
}

/// A chain of pairwise comparable bisubsets `S_1|T_1, .., S_k|T_k` with `S`
/// increasing, `T` decreasing and `∪ (S_i ∩ T_i) ≠ E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Biflag {
    ground_size: usize,
    pairs: Vec<(Set, Set)>,
}

impl Biflag {
    pub fn new(ground_size: usize, pairs: Vec<(Set, Set)>) -> Result<Self> {
        let e = bits::full(ground_size);
        for &(s, t) in &pairs {
            if !is_bisubset(ground_size, s, t) {
                return Err(Error::InvalidBiflag(format!("{}|{} is not a bisubset", bits::label(s), bits::label(t))));
            }
        }
        for w in pairs.windows(2) {
            let ((s0, t0), (s1, t1)) = (w[0], w[1]);
            if !bits::is_subset(s0, s1) || !bits::is_subset(t1, t0) || w[0] == w[1] {
                return Err(Error::InvalidBiflag("pairs must strictly increase in S and decrease in T".into()));
            }
        }
        if !pairs.is_empty() && pairs.iter().fold(0, |acc, &(s, t)| acc | (s & t)) == e {
            return Err(Error::InvalidBiflag("the intersections S_i ∩ T_i cover E".into()));
        }
        Ok(Biflag { ground_size, pairs })
    }

    pub(crate) fn trusted(ground_size: usize, pairs: Vec<(Set, Set)>) -> Self {
        Biflag { ground_size, pairs }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn pairs(&self) -> &[(Set, Set)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs padded with `∅|E` in front and `E|∅` at the back.
    pub fn padded(&self) -> Vec<(Set, Set)> {
        let e = bits::full(self.ground_size);
        let mut v = Vec::with_capacity(self.pairs.len() + 2);
        v.push((0, e));
        v.extend_from_slice(&self.pairs);
        v.push((e, 0));
        v
    }
}

impl fmt::Display for Biflag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = bits::full(self.ground_size);
        let lab = |s: Set| if s == e && self.ground_size > 1 { "E".to_string() } else { bits::label(s) };
        let parts: Vec<String> = self.pairs.iter().map(|&(s, t)| format!("{}|{}", lab(s), lab(t))).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `S_i = ∪_{j<i} B_j`, `T_i = ∪_{j≥i} B_j` for `i = 1..k`.
pub fn biflag_of_bisequence(b: &Bisequence) -> Biflag {
    let parts = b.parts();
    let k = parts.len();
    let pairs = (1..k)
        .map(|i| {
            let s = parts[..i].iter().fold(0, |a, &p| a | p);
            let t = parts[i..].iter().fold(0, |a, &p| a | p);
            (s, t)
        })
        .collect();
    Biflag::trusted(b.ground_size(), pairs)
}

/// `B_j = (S_{j+1} − S_j) ∪ (T_j − T_{j+1})` with the padded conventions.
pub fn bisequence_of_biflag(f: &Biflag) -> Result<Bisequence> {
    let padded = f.padded();
    let parts = padded.windows(2).map(|w| (w[1].0 & !w[0].0) | (w[0].1 & !w[1].1)).collect();
    Bisequence::new(f.ground_size(), parts).map_err(|e| Error::InvalidBiflag(e.to_string()))
}

/// Points `(z_i, w_i)` in the plane, one per element, up to common translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneConfiguration {
    pub points: Vec<(BigRational, BigRational)>,
}

impl PlaneConfiguration {
    pub fn new(points: Vec<(BigRational, BigRational)>) -> Self {
        PlaneConfiguration { points }
    }

    pub fn from_integers(points: &[(i64, i64)]) -> Self {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        PlaneConfiguration { points: points.iter().map(|&(z, w)| (q(z), q(w))).collect() }
    }

    /// The point `e_S + f_T`.
    pub fn of_bisubset(ground_size: usize, s: Set, t: Set) -> Self {
        let pts: Vec<(i64, i64)> =
            (0..ground_size).map(|i| (i64::from(bits::contains(s, i)), i64::from(bits::contains(t, i)))).collect();
        Self::from_integers(&pts)
    }

    /// Translate so that point 0 sits at the origin.
    pub fn normalized(&self) -> Self {
        let Some((z0, w0)) = self.points.first().cloned() else { return self.clone() };
        PlaneConfiguration { points: self.points.iter().map(|(z, w)| (z - &z0, w - &w0)).collect() }
    }

    /// `min_i (z_i + w_i)`, the position of the supporting line.
    pub fn support_value(&self) -> BigRational {
        self.points.iter().map(|(z, w)| z + w).min().unwrap_or_else(BigRational::zero)
    }
}

/// Read marks on the supporting line from right to left, merging coincident ones.
pub fn bisequence_of_configuration(p: &PlaneConfiguration) -> Result<Bisequence> {
    let m = p.support_value();
    let mut marks: Vec<(BigRational, usize)> = Vec::with_capacity(2 * p.points.len());
    for (i, (z, w)) in p.points.iter().enumerate() {
        marks.push((z.clone(), i));
        marks.push((&m - w, i));
    }
    marks.sort_by(|a, b| b.0.cmp(&a.0));
    let mut parts: Vec<Set> = Vec::new();
    let mut last: Option<BigRational> = None;
    for (pos, i) in marks {
        if last.as_ref() == Some(&pos) {
            *parts.last_mut().expect("nonempty") |= 1 << i;
        } else {
            parts.push(1 << i);
            last = Some(pos);
        }
    }
    Bisequence::new(p.points.len(), parts)
}

/// Indices `k` attaining `min (z_k + w_k)`.
pub fn chart_of(p: &PlaneConfiguration) -> Set {
    let m = p.support_value();
    p.points.iter().enumerate().fold(0, |acc, (i, (z, w))| if z + w == m { acc | 1 << i } else { acc })
}

/// Chart coordinates `Z_i = z_i − z_k`, `W_i = −w_i + w_k`.
pub fn chart_coordinates(k: usize, p: &PlaneConfiguration) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    if !bits::contains(chart_of(p), k) {
        return Err(Error::ChartMismatch(k));
    }
    let (zk, wk) = &p.points[k];
    let zs = p.points.iter().map(|(z, _)| z - zk).collect();
    let ws = p.points.iter().map(|(_, w)| wk - w).collect();
    Ok((zs, ws))
}

/// The minimum of `z_i + w_i` is attained at least twice.
pub fn in_cotangent_support(p: &PlaneConfiguration) -> bool {
    bits::len(chart_of(p)) >= 2
}

/// `(2g)! / 2^g` for ground size `g`.
pub fn count_chambers(ground_size: usize) -> u128 {
    let fact: u128 = (1..=(2 * ground_size) as u128).product();
    fact >> ground_size
}

/// Words from permutations of the multiset `{0,0,..,n,n}` with the last
/// letter dropped, in lexicographic order.
pub fn enumerate_bipermutations(ground_size: usize) -> impl Iterator<Item = Bisequence> {
    let mut out = Vec::new();
    let mut counts = vec![2u8; ground_size];
    let mut word = Vec::with_capacity(2 * ground_size);
    fn rec(counts: &mut [u8], word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, total: usize) {
        if word.len() == total {
            out.push(word[..total - 1].to_vec());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                word.push(i);
                rec(counts, word, out, total);
                word.pop();
                counts[i] += 1;
            }
        }
    }
    if ground_size > 0 {
        rec(&mut counts, &mut word, &mut out, 2 * ground_size);
    }
    out.into_iter().map(move |w| Bisequence { ground_size, parts: w.into_iter().map(|i| 1u64 << i).collect() })
}

/// Vertex of the bipermutohedron dual to a chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipermutohedronVertex {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

/// Letter values `π(j)` and `π(j̄)` of the word of a bipermutation, plus the
/// element appearing once.
pub fn bipermutation_word(b: &Bisequence) -> Result<(Vec<i64>, Vec<i64>, usize)> {
    if !b.is_bipermutation() {
        return Err(Error::NotABipermutation(b.to_string()));
    }
    let g = b.ground_size();
    let k = bits::min(b.singles()).expect("a bisequence has a single");
    let mut letters: Vec<(usize, bool)> = Vec::with_capacity(2 * g);
    let mut seen = vec![false; g];
    for &p in b.parts() {
        let j = bits::min(p).expect("singleton part");
        if j == k {
            letters.push((j, false));
            letters.push((j, true));
        } else {
            letters.push((j, seen[j]));
            seen[j] = true;
        }
    }
    let mut plain = vec![0i64; g];
    let mut barred = vec![0i64; g];
    for (idx, (j, bar)) in letters.into_iter().enumerate() {
        let value = 2 * idx as i64 - (2 * g as i64 - 1);
        if bar {
            barred[j] = value;
        } else {
            plain[j] = value;
        }
    }
    Ok((plain, barred, k))
}

/// `v = u − s(e_k + f_k)` with `x_j = π(j)`, `y_j = −π(j̄)`, `s = Σ x_j`.
pub fn bipermutohedron_vertex(b: &Bisequence) -> Result<BipermutohedronVertex> {
    let (plain, barred, k) = bipermutation_word(b)?;
    let mut x = plain;
    let mut y: Vec<i64> = barred.iter().map(|v| -v).collect();
    let s: i64 = x.iter().sum();
    x[k] -= s;
    y[k] -= s;
    Ok(BipermutohedronVertex { x, y })
}

/// Normal vector `(1_S, 1_T)` and offset `−(|S|+|S−T|)(|T|+|T−S|)` of the
/// facet inequality `Σ_S x + Σ_T y ≥ offset`.
pub fn bipermutohedron_inequality(ground_size: usize, s: Set, t: Set) -> (Vec<i64>, i64) {
    let mut normal: Vec<i64> = (0..ground_size).map(|i| i64::from(bits::contains(s, i))).collect();
    normal.extend((0..ground_size).map(|i| i64::from(bits::contains(t, i))));
    (normal, -support_value(s, t))
}

/// `(|S|+|S−T|)(|T|+|T−S|)`, the support function on the ray `e_{S|T}`.
pub fn support_value(s: Set, t: Set) -> i64 {
    ((bits::len(s) + bits::len(s & !t)) * (bits::len(t) + bits::len(t & !s))) as i64
}

/// Value of the facet functional of `S|T` at `v`.
pub fn facet_value(v: &BipermutohedronVertex, s: Set, t: Set) -> i64 {
    bits::elements(s).map(|i| v.x[i]).sum::<i64>() + bits::elements(t).map(|i| v.y[i]).sum::<i64>()
}

pub fn vertex_satisfies_inequalities(v: &BipermutohedronVertex) -> bool {
    let g = v.x.len();
    enumerate_bisubsets(g).into_iter().all(|(s, t)| facet_value(v, s, t) >= -support_value(s, t))
}

/// Bisubsets whose inequality is tight at `v`.
pub fn tight_bisubsets(v: &BipermutohedronVertex) -> Vec<(Set, Set)> {
    enumerate_bisubsets(v.x.len()).into_iter().filter(|&(s, t)| facet_value(v, s, t) == -support_value(s, t)).collect()
}

/// Positive combination of the rays of a biflag as a plane configuration.
pub fn configuration_of_biflag(f: &Biflag, coefficients: &[BigRational]) -> PlaneConfiguration {
    let g = f.ground_size();
    let mut pts = vec![(BigRational::zero(), BigRational::zero()); g];
    for (&(s, t), c) in f.pairs().iter().zip(coefficients) {
        for (i, pt) in pts.iter_mut().enumerate() {
            if bits::contains(s, i) {
                pt.0 += c;
            }
            if bits::contains(t, i) {
                pt.1 += c;
            }
        }
    }
    PlaneConfiguration::new(pts)
}

/// A configuration whose bisequence is `b`: part `j` of `ℓ` parts sits at
/// position `ℓ − 1 − j` on the line `z + w = 0`.
pub fn configuration_of_bisequence(b: &Bisequence) -> PlaneConfiguration {
    let len = b.parts().len() as i64;
    let g = b.ground_size();
    let mut first = vec![None; g];
    let mut last = vec![0i64; g];
    for (j, &p) in b.parts().iter().enumerate() {
        let pos = len - 1 - j as i64;
        for i in bits::elements(p) {
            if first[i].is_none() {
                first[i] = Some(pos);
            }
            last[i] = pos;
        }
    }
    let pts: Vec<(i64, i64)> = (0..g).map(|i| (first[i].unwrap_or(0), -last[i])).collect();
    PlaneConfiguration::from_integers(&pts)
}

/// Integer rational helper.
pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `1` as a rational.
pub fn q_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisubsets_of_two() {
        let got = enumerate_bisubsets(2);
        let mut want = vec![(0b01, 0b10), (0b10, 0b01), (0b11, 0b01), (0b11, 0b10), (0b01, 0b11), (0b10, 0b11)];
        want.sort_unstable();
        assert_eq!(got, want);
        assert_eq!(enumerate_bisubsets(3).len(), 24);
        assert!(!is_bisubset(3, 0b111, 0b111));
    }

    #[test]
    fn figure_biflag() {
        let b = Bisequence::parse(3, "2|0|1|1|0").unwrap();
        let f = biflag_of_bisequence(&b);
        assert_eq!(f.pairs(), &[(0b100, 0b011), (0b101, 0b011), (0b111, 0b011), (0b111, 0b001)]);
        assert_eq!(bisequence_of_biflag(&f).unwrap(), b);
        let short = Bisequence::parse(2, "1|0|1").unwrap();
        assert_eq!(biflag_of_bisequence(&short).pairs(), &[(0b10, 0b11), (0b11, 0b10)]);
    }

    #[test]
    fn configuration_of_a_ray() {
        let p = PlaneConfiguration::of_bisubset(4, 0b0111, 0b1110);
        let b = bisequence_of_configuration(&p).unwrap();
        assert_eq!(b.parts(), &[0b0111, 0b1110]);
        let origin = PlaneConfiguration::from_integers(&[(0, 0); 3]);
        assert_eq!(bisequence_of_configuration(&origin).unwrap().parts(), &[0b111]);
    }

    #[test]
    fn charts() {
        let p = PlaneConfiguration::from_integers(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(chart_of(&p), 0b001);
        assert!(!in_cotangent_support(&p));
        assert_eq!(chart_coordinates(1, &p).unwrap_err(), Error::ChartMismatch(1));
        let flat = PlaneConfiguration::from_integers(&[(2, -2), (0, 0), (5, -5)]);
        assert_eq!(chart_of(&flat), 0b111);
        assert!(in_cotangent_support(&PlaneConfiguration::from_integers(&[(0, 0), (0, 0), (1, 0)])));
        assert!(!in_cotangent_support(&PlaneConfiguration::from_integers(&[(0, 0), (1, 0), (1, 1)])));
    }

    #[test]
    fn chamber_counts() {
        assert_eq!(count_chambers(2), 6);
        assert_eq!(count_chambers(3), 90);
        assert_eq!(enumerate_bipermutations(2).count(), 6);
    }

    #[test]
    fn displayed_vertex() {
        let b = Bisequence::parse(4, "1|2|3|1|3|0|0").unwrap();
        let (plain, barred, k) = bipermutation_word(&b).unwrap();
        assert_eq!(k, 2);
        assert_eq!(plain, vec![5, -7, -5, -1]);
        assert_eq!(barred, vec![7, 1, -3, 3]);
        let v = bipermutohedron_vertex(&b).unwrap();
        assert_eq!(v.x, vec![5, -7, 3, -1]);
        assert_eq!(v.y, vec![-7, -1, 11, -3]);
    }
}
