use super::{FlagOfFlats, Matroid, SimplicialComplex};
use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use std::collections::HashMap;

impl Matroid {
    /// Möbius values `μ(∅, F)` over the lattice of flats (empty when `M` has loops).
    pub fn mobius(&self) -> HashMap<Set, i64> {
        let mut mu: HashMap<Set, i64> = HashMap::new();
        if self.has_loops() {
            return mu;
        }
        let flats = self.all_flats();
        for &f in flats {
            let v = if f == 0 {
                1
            } else {
                -flats.iter().filter(|&&g| g != f && bits::is_subset(g, f)).map(|g| mu[g]).sum::<i64>()
            };
            mu.insert(f, v);
        }
        mu
    }

    /// `χ_M(q) = Σ_F μ(∅,F) q^{rk E - rk F}`; zero when `M` has a loop.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mu = self.mobius();
        let r = self.full_rank();
        let mut coeffs = vec![0i64; r + 1];
        for (&f, &m) in &mu {
            coeffs[r - self.rank(f)] += m;
        }
        IntPolynomial::new(coeffs)
    }

    /// `χ_M / (q - 1)`. The empty matroid has no reduced polynomial and yields zero.
    pub fn reduced_characteristic_polynomial(&self) -> IntPolynomial {
        let (quot, rem) = self.characteristic_polynomial().div_linear(1);
        if rem != 0 {
            assert_eq!(self.ground_size(), 0, "χ of a loopless matroid must vanish at 1");
            return IntPolynomial::zero();
        }
        quot
    }

    /// Independent oracle: `χ_M = χ_{M∖e} − χ_{M/e}` down to free matroids.
    pub fn char_poly_deletion_contraction(&self) -> IntPolynomial {
        if self.has_loops() {
            return IntPolynomial::zero();
        }
        let coloops = self.coloops();
        match bits::min(self.ground() & !coloops) {
            None => (0..self.ground_size()).fold(IntPolynomial::constant(1), |acc, _| &acc * &IntPolynomial::linear(-1)),
            Some(e) => {
                &self.delete(e).char_poly_deletion_contraction() - &self.contract(e).char_poly_deletion_contraction()
            }
        }
    }

    /// Crapo's invariant `(-1)^r χ̄(1)` where `r + 1` is the rank.
    pub fn beta(&self) -> i64 {
        let v = self.reduced_characteristic_polynomial().eval(1);
        if self.full_rank() % 2 == 1 {
            v
        } else {
            -v
        }
    }

    /// Same value computed from the deletion–contraction polynomial.
    pub fn beta_deletion_contraction(&self) -> i64 {
        let (quot, _) = self.char_poly_deletion_contraction().div_linear(1);
        let v = quot.eval(1);
        if self.full_rank() % 2 == 1 {
            v
        } else {
            -v
        }
    }

    /// Product of the betas of the interval minors `M[F_i, F_{i+1}]`.
    /// The empty flag gives `β_M`.
    pub fn beta_of_flag(&self, flag: &FlagOfFlats) -> Result<i64> {
        let chain = flag.padded(self.ground_size());
        let mut product = 1;
        for w in chain.windows(2) {
            if !bits::is_subset(w[0], w[1]) || w[0] == w[1] {
                return Err(Error::NotNested);
            }
            product *= self.minor(w[0], w[1])?.0.beta();
        }
        Ok(product)
    }

    /// Circuits minus their minimum element.
    pub fn broken_circuits(&self) -> Vec<Set> {
        let mut v: Vec<Set> = self.circuits().into_iter().map(|c| c & (c - 1)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn avoids(broken: &[Set], s: Set) -> bool {
        broken.iter().all(|&b| !bits::is_subset(b, s))
    }

    /// Subsets containing no broken circuit.
    pub fn broken_circuit_complex(&self) -> SimplicialComplex {
        let broken = self.broken_circuits();
        SimplicialComplex::generate(self.ground_size(), |s| Self::avoids(&broken, s))
    }

    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::generate(self.ground_size(), |s| self.is_independent(s))
    }

    /// Bases containing no broken circuit.
    pub fn nbc_bases(&self) -> Vec<Set> {
        let broken = self.broken_circuits();
        self.bases().iter().copied().filter(|&b| Self::avoids(&broken, b)).collect()
    }

    /// nbc bases `B` for which `(E - B) ∪ {0} - {1}` is an nbc basis of the dual.
    pub fn bnbc_bases(&self) -> Vec<Set> {
        if self.ground_size() < 2 {
            return Vec::new();
        }
        let dual = self.dual();
        let dual_broken = dual.broken_circuits();
        self.nbc_bases()
            .into_iter()
            .filter(|&b| {
                let c = ((self.ground() & !b) | 1) & !2;
                dual.is_basis(c) && Self::avoids(&dual_broken, c)
            })
            .collect()
    }

    pub fn is_bnbc(&self, b: Set) -> bool {
        self.bnbc_bases().contains(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23_polynomials() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.characteristic_polynomial(), IntPolynomial::new(vec![2, -3, 1]));
        assert_eq!(m.reduced_characteristic_polynomial(), IntPolynomial::new(vec![-2, 1]));
        assert_eq!(m.char_poly_deletion_contraction(), m.characteristic_polynomial());
        assert_eq!(m.beta(), 1);
        assert_eq!(m.nbc_bases(), vec![0b011, 0b101]);
        assert_eq!(m.bnbc_bases(), vec![0b101]);
    }

    #[test]
    fn loops_and_coloops_betas() {
        let lp = Matroid::uniform(0, 1).unwrap();
        let cl = Matroid::uniform(1, 1).unwrap();
        assert!(lp.characteristic_polynomial().is_zero());
        assert_eq!(lp.beta(), 0);
        assert_eq!(cl.beta(), 1);
        assert_eq!(
            Matroid::uniform(1, 2).unwrap().char_poly_deletion_contraction(),
            IntPolynomial::new(vec![-1, 1])
        );
    }

    #[test]
    fn empty_flag_beta_is_matroid_beta() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m.beta_of_flag(&FlagOfFlats::default()).unwrap(), m.beta());
    }
}
