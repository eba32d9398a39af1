//! Small dense integer matrices: exact rank, integer kernels, Lawrence liftings.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix with `rows` rows from column vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&v| v >= 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Image `M * a` of an exponent vector.
    pub fn apply(&self, a: &ExponentVector) -> Vec<i64> {
        debug_assert_eq!(a.len(), self.cols);
        let mut out = vec![0i64; self.rows];
        for (j, e) in a.iter_nonzero() {
            for (r, o) in out.iter_mut().enumerate() {
                *o += self.get(r, j) * i64::from(e);
            }
        }
        out
    }

    /// True when `M * a == M * b`.
    pub fn same_image(&self, a: &ExponentVector, b: &ExponentVector) -> bool {
        (0..self.rows).all(|r| {
            let row = self.row(r);
            let lhs: i64 = a.iter_nonzero().map(|(j, e)| row[j] * i64::from(e)).sum();
            let rhs: i64 = b.iter_nonzero().map(|(j, e)| row[j] * i64::from(e)).sum();
            lhs == rhs
        })
    }

    /// Column sums; for a code matrix these are the codeword weights.
    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c)).sum()).collect()
    }

    /// Reorders columns so that new column `k` is old column `perm[k]`.
    pub fn permute_columns(&self, perm: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, perm.len());
        for (new, &old) in perm.iter().enumerate() {
            for r in 0..self.rows {
                m.set(r, new, self.get(r, old));
            }
        }
        m
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<i128>> =
            (0..self.rows).map(|r| self.row(r).iter().map(|&v| i128::from(v)).collect()).collect();
        let mut rank = 0;
        let mut prev = 1i128;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[rank][col];
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Determinant of a square matrix (Bareiss).
    pub fn determinant(&self) -> Result<i128> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut a: Vec<Vec<i128>> =
            (0..n).map(|r| self.row(r).iter().map(|&v| i128::from(v)).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
                }
                a[r][k] = 0;
            }
            prev = a[k][k];
        }
        Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
    }

    /// A basis of the integer lattice `{ u in Z^cols : M u = 0 }`.
    ///
    /// Unimodular column operations bring `M` to column echelon form; the
    /// transform columns that end up multiplying zero columns span the kernel.
    pub fn integer_kernel(&self) -> Result<Vec<Vec<i64>>> {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<i64>> = (0..n).map(|c| self.column(c)).collect();
        let mut u: Vec<Vec<i64>> = (0..n)
            .map(|c| {
                let mut e = vec![0; n];
                e[c] = 1;
                e
            })
            .collect();
        let mut pivot = 0;
        for r in 0..m {
            if pivot == n {
                break;
            }
            for j in pivot + 1..n {
                let b = a[j][r];
                if b == 0 {
                    continue;
                }
                let p = a[pivot][r];
                if p == 0 {
                    a.swap(pivot, j);
                    u.swap(pivot, j);
                    continue;
                }
                let egcd = p.extended_gcd(&b);
                let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
                let (pg, bg) = (p / g, b / g);
                combine(&mut a, pivot, j, x, y, -bg, pg)?;
                combine(&mut u, pivot, j, x, y, -bg, pg)?;
            }
            if a[pivot][r] != 0 {
                pivot += 1;
            }
        }
        let mut basis: Vec<Vec<i64>> = u.split_off(pivot);
        for v in &mut basis {
            // prefer a positive leading entry
            if let Some(&first) = v.iter().find(|&&x| x != 0) {
                if first < 0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
        }
        reduce_basis_sizes(&mut basis);
        Ok(basis)
    }

    /// Lawrence lifting `[[A, 0], [I, I]]`.
    pub fn lawrence_lift(&self) -> IntMatrix {
        let (k, n) = (self.rows, self.cols);
        let mut out = IntMatrix::zeros(k + n, 2 * n);
        for r in 0..k {
            for c in 0..n {
                out.set(r, c, self.get(r, c));
            }
        }
        for i in 0..n {
            out.set(k + i, i, 1);
            out.set(k + i, n + i, 1);
        }
        out
    }
}

/// Replaces vectors `(vi, vj)` by `(x vi + y vj, s vi + t vj)`.
fn combine(v: &mut [Vec<i64>], i: usize, j: usize, x: i64, y: i64, s: i64, t: i64) -> Result<()> {
    for k in 0..v[i].len() {
        let (a, b) = (v[i][k], v[j][k]);
        let ni = x
            .checked_mul(a)
            .and_then(|p| y.checked_mul(b).and_then(|q| p.checked_add(q)))
            .ok_or(Error::Overflow("integer kernel"))?;
        let nj = s
            .checked_mul(a)
            .and_then(|p| t.checked_mul(b).and_then(|q| p.checked_add(q)))
            .ok_or(Error::Overflow("integer kernel"))?;
        v[i][k] = ni;
        v[j][k] = nj;
    }
    Ok(())
}

fn norm1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Greedy pairwise size reduction: replace `v_i` by `v_i ± v_j` while that
/// shrinks its 1-norm. Keeps the lattice unchanged.
fn reduce_basis_sizes(basis: &mut [Vec<i64>]) {
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand: Vec<i64> =
                        basis[i].iter().zip(&basis[j]).map(|(a, b)| a + sign * b).collect();
                    if norm1(&cand) < norm1(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row = self.row(r);
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>2}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 0, 1], &[0, 1, 1]]).rank(), 2);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(IntMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(IntMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant().unwrap(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), -1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).determinant().unwrap(), -3);
    }

    #[test]
    fn kernel_is_saturated_lattice() {
        // [2 4] has kernel spanned by (2,-1); a rational basis scaled by 2 would miss it.
        let a = m(&[&[2, 4]]);
        let k = a.integer_kernel().unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(norm1(&k[0]), 3);
        let a = m(&[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let k = a.integer_kernel().unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..a.rows() {
                assert_eq!(a.row(r).iter().zip(v).map(|(x, y)| x * y).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn lawrence_lift_of_row_of_ones() {
        let lifted = m(&[&[1, 1]]).lawrence_lift();
        assert_eq!(lifted, m(&[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1]]));
        let lifted = m(&[&[1, 1, 1]]).lawrence_lift();
        assert_eq!((lifted.rows(), lifted.cols()), (4, 6));
        let empty = IntMatrix::zeros(0, 2).lawrence_lift();
        assert_eq!(empty, m(&[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
    }
}
