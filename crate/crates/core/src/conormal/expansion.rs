use super::Conormal;
use crate::bipermutohedral::Biflag;
use crate::bits;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};

/// Terms of a canonical expansion with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expansion {
    pub terms: BTreeMap<Biflag, u64>,
}

impl Expansion {
    /// Number of terms counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.terms.len()
    }
}

/// One path of the expansion: the final biflag and the element used at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTable {
    pub biflag: Biflag,
    pub e_sequence: Vec<usize>,
}

impl Conormal {
    /// `max(E − ∪(F_i ∩ G_i))`, the element whose `δ_e` multiplies next.
    pub fn largest_gap_element(&self, chain: &[u32]) -> Option<usize> {
        bits::max(self.matroid().ground() & !self.chain_union(chain))
    }

    /// Biflats that can be inserted into `chain` by one multiplication with `δ_e`.
    fn insertions(&self, chain: &[u32]) -> (usize, Vec<u32>) {
        let e = self.largest_gap_element(chain).expect("a biflag never covers E");
        let ground = self.matroid().ground();
        let union = self.chain_union(chain);
        let cands = self.by_element[e]
            .iter()
            .copied()
            .filter(|&c| {
                let (f, g) = self.biflats[c as usize];
                union | (f & g) != ground && chain.iter().all(|&i| self.comparable[i as usize][c as usize])
            })
            .collect();
        (e, cands)
    }

    fn start_chain(&self, start: &Biflag, m: usize) -> Result<Vec<u32>> {
        let chain = self.chain_of(start)?;
        if chain.len() + m > self.dim() {
            return Err(Error::DimensionOverflow);
        }
        Ok(chain)
    }

    /// Multisets after `0, 1, .., m` multiplications by `δ`.
    pub fn expansion_levels(&self, start: &Biflag, m: usize) -> Result<Vec<Expansion>> {
        let chain = self.start_chain(start, m)?;
        let mut level: HashMap<Vec<u32>, u64> = HashMap::from([(chain, 1)]);
        let mut out = vec![self.collect(&level)];
        for _ in 0..m {
            let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
            for (chain, mult) in &level {
                let (_, cands) = self.insertions(chain);
                for c in cands {
                    let mut grown = chain.clone();
                    let pos = grown.partition_point(|&i| i < c);
                    grown.insert(pos, c);
                    *next.entry(grown).or_insert(0) += mult;
                }
            }
            out.push(self.collect(&next));
            level = next;
        }
        Ok(out)
    }

    fn collect(&self, level: &HashMap<Vec<u32>, u64>) -> Expansion {
        Expansion { terms: level.iter().map(|(c, &m)| (self.to_biflag(c), m)).collect() }
    }

    /// Canonical expansion of `x_{start} δ^m`.
    pub fn canonical_expansion(&self, start: &Biflag, m: usize) -> Result<Expansion> {
        Ok(self.expansion_levels(start, m)?.pop().expect("at least one level"))
    }

    /// Every path of the expansion tree with the elements chosen along it.
    pub fn expansion_tables(&self, start: &Biflag, m: usize) -> Result<Vec<ExpansionTable>> {
        let chain = self.start_chain(start, m)?;
        let mut out = Vec::new();
        fn rec(cn: &Conormal, chain: &mut Vec<u32>, seq: &mut Vec<usize>, left: usize, out: &mut Vec<ExpansionTable>) {
            if left == 0 {
                out.push(ExpansionTable { biflag: cn.to_biflag(chain), e_sequence: seq.clone() });
                return;
            }
            let (e, cands) = cn.insertions(chain);
            for c in cands {
                let pos = chain.partition_point(|&i| i < c);
                chain.insert(pos, c);
                seq.push(e);
                rec(cn, chain, seq, left - 1, out);
                seq.pop();
                chain.remove(pos);
            }
        }
        let mut chain = chain;
        rec(self, &mut chain, &mut Vec::new(), m, &mut out);
        out.sort_by(|a, b| (&a.biflag, &a.e_sequence).cmp(&(&b.biflag, &b.e_sequence)));
        Ok(out)
    }

    /// `deg(x_{𝓕|𝓖} δ^m)` with `len + m = n − 1`: the number of expansion terms.
    pub fn deg_monomial_delta(&self, f: &Biflag, m: usize) -> Result<u64> {
        if f.len() + m != self.dim() {
            return Err(Error::LengthMismatch { len: f.len(), m, dim: self.dim() });
        }
        Ok(self.canonical_expansion(f, m)?.size())
    }

    /// Largest gap element of a biflag (the `e(𝓕|𝓖)` of the expansion rule).
    pub fn gap_element(&self, f: &Biflag) -> Result<Option<usize>> {
        Ok(self.largest_gap_element(&self.chain_of(f)?))
    }

}
