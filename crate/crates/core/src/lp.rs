//! Exact feasibility for small linear programs (phase-one simplex, Bland's rule).

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Constraints over free real variables `x`.
#[derive(Debug, Clone, Default)]
pub struct System {
    pub nvars: usize,
    /// `a · x = b`
    pub equalities: Vec<(Vec<BigRational>, BigRational)>,
    /// `a · x ≥ b`
    pub inequalities: Vec<(Vec<BigRational>, BigRational)>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System { nvars, ..Default::default() }
    }

    pub fn eq(&mut self, a: Vec<BigRational>, b: BigRational) {
        self.equalities.push((a, b));
    }

    pub fn ge(&mut self, a: Vec<BigRational>, b: BigRational) {
        self.inequalities.push((a, b));
    }

    /// A feasible point, if one exists.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        // columns: x+ (nvars), x- (nvars), surplus (one per inequality), artificial (one per row)
        let nv = self.nvars;
        let ns = self.inequalities.len();
        let rows: Vec<(Vec<BigRational>, BigRational, Option<usize>)> = self
            .equalities
            .iter()
            .map(|(a, b)| (a.clone(), b.clone(), None))
            .chain(self.inequalities.iter().enumerate().map(|(i, (a, b))| (a.clone(), b.clone(), Some(i))))
            .collect();
        let m = rows.len();
        let ncols = 2 * nv + ns + m;
        let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
        for (r, (a, b, surplus)) in rows.into_iter().enumerate() {
            let mut row = vec![BigRational::zero(); ncols];
            for j in 0..nv {
                row[j] = a[j].clone();
                row[nv + j] = -a[j].clone();
            }
            if let Some(s) = surplus {
                row[2 * nv + s] = -BigRational::one();
            }
            let mut b = b;
            if b.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
                b = -b;
            }
            row[2 * nv + ns + r] = BigRational::one();
            tab.push(row);
            rhs.push(b);
        }
        let mut basis: Vec<usize> = (0..m).map(|r| 2 * nv + ns + r).collect();
        // objective: minimize sum of artificials; reduced costs c_j - c_B B^{-1} A_j
        let is_art = |j: usize| j >= 2 * nv + ns;
        loop {
            let mut entering = None;
            for j in 0..ncols {
                if basis.contains(&j) {
                    continue;
                }
                let cost = if is_art(j) { BigRational::one() } else { BigRational::zero() };
                let reduced = (0..m).fold(cost, |acc, r| {
                    if is_art(basis[r]) {
                        acc - tab[r][j].clone()
                    } else {
                        acc
                    }
                });
                if reduced.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { break };
            let mut leave: Option<(usize, BigRational)> = None;
            for r in 0..m {
                if tab[r][j].is_positive() {
                    let ratio = &rhs[r] / &tab[r][j];
                    let better = match &leave {
                        None => true,
                        Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { break };
            let piv = tab[r][j].clone();
            for x in tab[r].iter_mut() {
                *x = &*x / &piv;
            }
            rhs[r] = &rhs[r] / &piv;
            for i in 0..m {
                if i != r && !tab[i][j].is_zero() {
                    let f = tab[i][j].clone();
                    for c in 0..ncols {
                        let d = &f * &tab[r][c];
                        tab[i][c] -= d;
                    }
                    let d = &f * &rhs[r];
                    rhs[i] -= d;
                }
            }
            basis[r] = j;
        }
        let infeasible = (0..m).any(|r| is_art(basis[r]) && !rhs[r].is_zero());
        if infeasible {
            return None;
        }
        let mut x = vec![BigRational::zero(); ncols];
        for r in 0..m {
            x[basis[r]] = rhs[r].clone();
        }
        Some((0..nv).map(|j| &x[j] - &x[nv + j]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::big;

    #[test]
    fn feasible_and_infeasible() {
        let mut s = System::new(2);
        s.eq(vec![big(1), big(1)], big(3));
        s.ge(vec![big(1), big(-1)], big(1));
        let x = s.solve().unwrap();
        assert_eq!(&x[0] + &x[1], big(3));
        assert!(&x[0] - &x[1] >= big(1));

        let mut t = System::new(1);
        t.ge(vec![big(1)], big(1));
        t.ge(vec![big(-1)], big(0));
        assert!(t.solve().is_none());
    }

    #[test]
    fn negative_solutions_are_reachable() {
        let mut s = System::new(1);
        s.eq(vec![big(2)], big(-5));
        assert_eq!(s.solve().unwrap(), vec![BigRational::new((-5).into(), 2.into())]);
    }
}
