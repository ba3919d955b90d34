//! Exact linear algebra over rational fields and integer lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};
use std::ops::Neg;

/// Rational scalar used for Minkowski weights and fan computations.
pub type Q = Ratio<i128>;

/// Field operations needed by the eliminations below.
pub trait Field: Clone + Num + Neg<Output = Self> + PartialEq {}
impl<T: Clone + Num + Neg<Output = T> + PartialEq> Field for T {}

pub fn q(v: i64) -> Q {
    Q::from_integer(v as i128)
}

pub fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn q_to_big(v: &Q) -> BigRational {
    BigRational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))
}

/// Reduce `rows` in place to reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = factor.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}`.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `Σ c_j columns[j] = target`, or `None` if `target`
/// is outside their span. Columns must be linearly independent for uniqueness.
pub fn solve_in_span<F: Field>(columns: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let k = columns.len();
    let n = target.len();
    let mut rows: Vec<Vec<F>> =
        (0..n).map(|i| columns.iter().map(|c| c[i].clone()).chain(std::iter::once(target[i].clone())).collect()).collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![F::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut rows: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            v
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Counts `(positive, negative, zero)` of the inertia of a symmetric matrix,
/// by congruence diagonalization.
pub fn inertia(sym: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let mut a = sym.to_vec();
    let n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        let _ = first;
        // pick a nonzero diagonal pivot if available
        let diag = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let pivot = match diag {
            Some(p) => p,
            None => {
                // find an off-diagonal nonzero and make a diagonal entry nonzero
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    None => {
                        zero += active.len();
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j keeps congruence; a_ii becomes 2a_ij + a_jj = 2a_ij
                        for t in 0..n {
                            let v = a[j][t].clone();
                            a[i][t] += v;
                        }
                        for t in 0..n {
                            let v = a[t][j].clone();
                            a[t][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let rest: Vec<usize> = active.iter().copied().filter(|&i| i != pivot).collect();
        for &i in &rest {
            if a[i][pivot].is_zero() {
                continue;
            }
            let f = a[i][pivot].clone() / d.clone();
            for &j in &rest {
                let delta = f.clone() * a[pivot][j].clone();
                a[i][j] -= delta;
            }
            a[i][pivot] = BigRational::zero();
        }
        for &j in &rest {
            a[pivot][j] = BigRational::zero();
        }
        active = rest;
    }
    (pos, neg, zero)
}

/// Unimodular column reduction of an integer `k × n` matrix `A`: returns
/// `(H, U)` with `A U = [H | 0]`, `H` lower triangular `k × r` where `r` is
/// the rank, and `U` unimodular `n × n`.
pub fn column_hermite(a: &[Vec<i128>], ncols: usize) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let k = a.len();
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut u: Vec<Vec<i128>> = (0..ncols).map(|i| (0..ncols).map(|j| i128::from(i == j)).collect()).collect();
    let col_op = |m: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, c1: usize, c2: usize, coeffs: [i128; 4]| {
        // (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
        let [p, q, r, s] = coeffs;
        for row in m.iter_mut().chain(u.iter_mut()) {
            let (x, y) = (row[c1], row[c2]);
            row[c1] = p * x + q * y;
            row[c2] = r * x + s * y;
        }
    };
    let mut col = 0;
    for row in 0..k {
        if col == ncols {
            break;
        }
        for j in col + 1..ncols {
            if m[row][j] == 0 {
                continue;
            }
            let (x, y) = (m[row][col], m[row][j]);
            let eg = x.extended_gcd(&y);
            let g = eg.gcd;
            // [x y] * [[s, -y/g], [t, x/g]] = [g, 0]
            col_op(&mut m, &mut u, col, j, [eg.x, eg.y, -y / g, x / g]);
        }
        if m[row][col] != 0 {
            if m[row][col] < 0 {
                col_op(&mut m, &mut u, col, col, [-1, 0, -1, 0]);
            }
            col += 1;
        }
    }
    let h = m.iter().map(|r| r[..col].to_vec()).collect();
    (h, u)
}

/// Index of the lattice spanned by the rows of `a` inside its saturation;
/// zero if the rows are dependent.
pub fn saturation_index(a: &[Vec<i64>], ncols: usize) -> i128 {
    let rows: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (h, _) = column_hermite(&rows, ncols);
    if h.first().map_or(0, |r| r.len()) < rows.len() {
        return 0;
    }
    (0..rows.len()).map(|i| h[i][i]).product::<i128>().abs()
}

/// A basis of the integer vectors `u` with `a u = 0`.
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let rows: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (h, u) = column_hermite(&rows, ncols);
    let r = h.first().map_or(0, |row| row.len());
    (r..ncols).map(|c| (0..ncols).map(|i| u[i][c] as i64).collect()).collect()
}

/// Determinant of a square integer matrix (fraction-free elimination).
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rational matrix from integers.
pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect()
}

pub fn big_is_integer(v: &BigRational) -> bool {
    v.denom().is_one()
}
