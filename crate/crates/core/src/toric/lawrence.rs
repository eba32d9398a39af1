use alloc::vec::Vec;

use super::code_matrix;
use crate::binomial::{from_supports, Binomial};
use crate::code::{internal_code, Code};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Evidence that `T * M = Λ(A) P` for the internal code on `n` neurons, where
/// `A` is the `1 x (n-1)` all-ones matrix and `P` a column permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawrenceWitness {
    pub n: usize,
    /// The code matrix `M`, columns in canonical variable order.
    pub code_matrix: IntMatrix,
    /// The unimodular row transform `T`.
    pub transform: IntMatrix,
    pub determinant: i128,
    /// `T * M`.
    pub transformed: IntMatrix,
    /// `Λ(A)`.
    pub lift: IntMatrix,
    /// `column_map[j]` is the column of `Λ(A)` equal to column `j` of `T * M`.
    pub column_map: Vec<usize>,
    /// Whether the transform with rows `e_1`, `e_(i-1) - e_i`, `e_n` also works.
    pub literal_transform_holds: bool,
    pub holds: bool,
}

/// Rows `e_1`, `e_i - e_(i+1)` for `2 <= i <= n-1`, and `e_n`.
pub fn row_transform(n: usize) -> IntMatrix {
    let mut t = IntMatrix::zeros(n, n);
    t.set(0, 0, 1);
    for i in 1..n - 1 {
        t.set(i, i, 1);
        t.set(i, i + 1, -1);
    }
    t.set(n - 1, n - 1, 1);
    t
}

/// Rows `e_1`, `e_(i-1) - e_i` for `2 <= i <= n-1`, and `e_n`.
pub fn literal_row_transform(n: usize) -> IntMatrix {
    let mut t = IntMatrix::zeros(n, n);
    t.set(0, 0, 1);
    for i in 1..n - 1 {
        t.set(i, i - 1, 1);
        t.set(i, i, -1);
    }
    t.set(n - 1, n - 1, 1);
    t
}

/// Matches every column of `a` to a distinct equal column of `b`.
fn match_columns(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<usize>> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return None;
    }
    let mut used = alloc::vec![false; b.cols()];
    let mut map = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let col = a.column(j);
        let k = (0..b.cols()).find(|&k| !used[k] && b.column(k) == col)?;
        used[k] = true;
        map.push(k);
    }
    Some(map)
}

pub fn verify_lawrence_row_equivalence(n: usize) -> Result<LawrenceWitness> {
    if n < 3 {
        return Err(Error::domain("Lawrence verification needs n >= 3"));
    }
    let code = internal_code(n)?;
    let m = code_matrix(&code)?.matrix().clone();
    let lift = IntMatrix::from_rows(&[alloc::vec![1; n - 1]])?.lawrence_lift();
    let transform = row_transform(n);
    let determinant = transform.determinant()?;
    let transformed = transform.mul(&m)?;
    let found = match_columns(&transformed, &lift);
    let literal = literal_row_transform(n);
    let literal_transform_holds = literal.determinant()?.abs() == 1
        && match_columns(&literal.mul(&m)?, &lift).is_some();
    let holds = determinant.abs() == 1 && found.is_some();
    Ok(LawrenceWitness {
        n,
        code_matrix: m,
        transform,
        determinant,
        transformed,
        lift,
        column_map: found.unwrap_or_default(),
        literal_transform_holds,
        holds,
    })
}

/// True when `code` is the internal code on `n >= 3` neurons and its
/// Lawrence structure verifies.
pub fn is_lawrence_internal(code: &Code) -> bool {
    let n = code.n();
    n >= 3
        && internal_code(n).is_ok_and(|l| &l == code)
        && verify_lawrence_row_equivalence(n).is_ok_and(|w| w.holds)
}

/// `t_{1..j} t_{2..k} - t_{1..k} t_{2..j}` for `2 <= j < k <= n`, over the
/// variables of [`internal_code`].
pub fn internal_u_set(n: usize) -> Result<Vec<Binomial>> {
    let code = internal_code(n)?;
    let range = |a: usize, b: usize| -> Vec<usize> { (a..=b).collect() };
    let mut out = Vec::new();
    for j in 2..=n {
        for k in j + 1..=n {
            let (a, b, c, d) = (range(1, j), range(2, k), range(1, k), range(2, j));
            out.push(from_supports(&code, &[&a, &b], &[&c, &d])?.normalized());
        }
    }
    out.sort();
    Ok(out)
}
