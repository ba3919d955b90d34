use crate::bits::Set;
use crate::error::{Error, Result};

/// A simplicial complex given by its faces (including `∅` unless void).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub faces: Vec<Set>,
}

impl SimplicialComplex {
    /// Faces of the downward-closed family cut out by `is_face`, found by
    /// extending faces with larger elements only.
    pub fn generate(n: usize, is_face: impl Fn(Set) -> bool) -> Self {
        let mut faces = Vec::new();
        if !is_face(0) {
            return SimplicialComplex { faces };
        }
        let mut stack: Vec<(Set, usize)> = vec![(0, 0)];
        while let Some((s, from)) = stack.pop() {
            faces.push(s);
            for i in from..n {
                let t = s | 1 << i;
                if is_face(t) {
                    stack.push((t, i + 1));
                }
            }
        }
        faces.sort_unstable_by_key(|&s| (s.count_ones(), s));
        SimplicialComplex { faces }
    }

    /// `f_k` = number of faces with `k` elements, for `k = 0..=d`.
    pub fn f_vector(&self) -> Vec<i64> {
        let d = self.faces.iter().map(|s| s.count_ones() as usize).max();
        let Some(d) = d else { return Vec::new() };
        let mut f = vec![0i64; d + 1];
        for s in &self.faces {
            f[s.count_ones() as usize] += 1;
        }
        f
    }

    /// The h-vector, defined by `Σ h_k q^{d-k} = Σ f_k (q-1)^{d-k}`.
    pub fn h_vector(&self) -> Vec<i64> {
        h_from_f(&self.f_vector())
    }
}

/// Convert an f-vector `(f_0..f_d)` into the h-vector of the same length.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
    let Some(d) = f.len().checked_sub(1) else { return Vec::new() };
    let mut h = vec![0i64; d + 1];
    for (k, &fk) in f.iter().enumerate() {
        // f_k (q-1)^{d-k}: coefficient of q^{d-j} is f_k C(d-k, j-k) (-1)^{j-k}
        let m = d - k;
        let mut binom = 1i64;
        for t in 0..=m {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            h[k + t] += sign * binom * fk;
            binom = binom * (m - t) as i64 / (t as i64 + 1);
        }
    }
    h
}

fn check_nonnegative(seq: &[i64]) -> Result<()> {
    if seq.iter().any(|&a| a < 0) {
        return Err(Error::NegativeEntry);
    }
    Ok(())
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(seq: &[i64]) -> Result<bool> {
    check_nonnegative(seq)?;
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    Ok(i >= seq.len())
}

/// `a_{k-1} a_{k+1} <= a_k^2` for every interior index.
pub fn is_log_concave(seq: &[i64]) -> Result<bool> {
    check_nonnegative(seq)?;
    Ok(seq.windows(3).all(|w| (w[0] as i128) * (w[2] as i128) <= (w[1] as i128) * (w[1] as i128)))
}

/// `a_k <= a_{d-k}` for `k <= d/2`, where `d` is the last nonzero index.
pub fn is_flawless(seq: &[i64]) -> Result<bool> {
    check_nonnegative(seq)?;
    let Some(d) = seq.iter().rposition(|&a| a != 0) else { return Ok(true) };
    Ok((0..=d / 2).all(|k| seq[k] <= seq[d - k]))
}
