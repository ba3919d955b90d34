use super::{q_to_i64, Bergman, Conormal};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::matroid::{FlagOfFlats, Matroid};
use crate::weights::{self, MinkowskiWeight};
use std::collections::BTreeMap;

/// A weight on the `k`-dimensional cones of the Bergman fan, keyed by flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsmCycle {
    pub k: usize,
    pub weights: BTreeMap<FlagOfFlats, i64>,
}

impl CsmCycle {
    /// The same weights as a Minkowski weight on `bergman.fan`.
    pub fn to_minkowski(&self, bergman: &Bergman) -> Result<MinkowskiWeight> {
        let mut w = MinkowskiWeight::zero(&bergman.fan, self.k);
        for (flag, &v) in &self.weights {
            let cone = bergman.cone_of(flag).ok_or_else(|| Error::Internal(format!("flag {flag} is not a cone")))?;
            let i = bergman.fan.cone_index(&cone).ok_or_else(|| Error::Internal(format!("flag {flag} is not a cone")))?;
            w.values[i] = Q::from_integer(v as i128);
        }
        Ok(w)
    }

    fn from_minkowski(bergman: &Bergman, w: &MinkowskiWeight, sign: i64) -> Result<Self> {
        let weights = bergman
            .fan
            .cones(w.k)
            .iter()
            .zip(&w.values)
            .map(|(c, &v)| Ok((bergman.flag_of(c), sign * q_to_i64(v)?)))
            .collect::<Result<_>>()?;
        Ok(CsmCycle { k: w.k, weights })
    }
}

fn sign(r: usize, k: usize) -> i64 {
    if (r - k).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `w(σ_𝓕) = (−1)^{r−k} Π β(M[F_i, F_{i+1}])` on every `k`-flag.
pub fn csm_cycle(m: &Matroid, k: usize) -> Result<CsmCycle> {
    let bergman = Bergman::new(m)?;
    let r = m.full_rank() - 1;
    if k > r {
        return Ok(CsmCycle { k, weights: BTreeMap::new() });
    }
    let weights = bergman
        .fan
        .cones(k)
        .iter()
        .map(|c| {
            let flag = bergman.flag_of(c);
            let b = m.beta_of_flag(&flag)?;
            Ok((flag, sign(r, k) * b))
        })
        .collect::<Result<_>>()?;
    Ok(CsmCycle { k, weights })
}

/// Fiber sums `(−1)^{r−k} Σ_𝓖 deg(x_{𝓕|𝓖} δ^{n−k−1})` from canonical expansions.
pub fn csm_via_fiber_sum(m: &Matroid, k: usize) -> Result<CsmCycle> {
    let cn = Conormal::new(m)?;
    let bergman = Bergman::new(m)?;
    let r = cn.r();
    if k > r {
        return Ok(CsmCycle { k, weights: BTreeMap::new() });
    }
    let weights = bergman
        .fan
        .cones(k)
        .iter()
        .map(|c| {
            let flag = bergman.flag_of(c);
            let d = cn.deg_pullback_flag_delta(&flag)? as i64;
            Ok((flag, sign(r, k) * d))
        })
        .collect::<Result<_>>()?;
    Ok(CsmCycle { k, weights })
}

/// `(−1)^{r−k} π_*(δ^{n−k−1} ∩ 1)` using the cap product and pushforward of
/// Minkowski weights.
pub fn csm_via_pushforward(m: &Matroid, k: usize) -> Result<CsmCycle> {
    let cn = Conormal::new(m)?;
    let bergman = Bergman::new(m)?;
    let r = cn.r();
    if k > r {
        return Ok(CsmCycle { k, weights: BTreeMap::new() });
    }
    let capped = &cn.delta_power_weights()?[cn.dim() - k];
    let pushed = weights::pushforward(&cn.projection(), cn.fan(), &bergman.fan, capped)?;
    CsmCycle::from_minkowski(&bergman, &pushed, sign(r, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23_csm() {
        let m = Matroid::uniform(2, 3).unwrap();
        let c1 = csm_cycle(&m, 1).unwrap();
        assert_eq!(c1.weights.len(), 3);
        assert!(c1.weights.values().all(|&w| w == 1));
        let c0 = csm_cycle(&m, 0).unwrap();
        assert_eq!(c0.weights.values().copied().collect::<Vec<_>>(), vec![-1]);
        for k in 0..=1 {
            assert_eq!(csm_via_fiber_sum(&m, k).unwrap(), csm_cycle(&m, k).unwrap());
            assert_eq!(csm_via_pushforward(&m, k).unwrap(), csm_cycle(&m, k).unwrap());
        }
    }
}
