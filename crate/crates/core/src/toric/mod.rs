//! Toric ideals of codes: matrices, fibers, generators, Graver bases,
//! indispensable binomials and universal Gröbner bases.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::binomial::Binomial;
use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::groebner::EngineConfig;
use crate::matrix::IntMatrix;
use crate::monomial::ExponentVector;

mod fiber;
mod generators;
mod graver;
mod indispensable;
mod lawrence;
mod universal;

pub use generators::saturation_generators as exact_generators;
pub use fiber::{fiber_of, fibers_up_to, for_each_fiber, Fiber};
pub use generators::{certify_generators, minimal_generators, toric_generators, GeneratorSet, Method};
pub use graver::{graver_basis, is_primitive, GraverBasis};
pub use indispensable::{indispensable_binomials, indispensable_by_membership};
pub use lawrence::{
    internal_u_set, is_lawrence_internal, literal_row_transform, row_transform, verify_lawrence_row_equivalence,
    LawrenceWitness,
};
pub use universal::{
    all_quadratic_binomials, named_orders, random_orders, universal_gb, universal_gb_with, ExactReason, UgbConfig,
    UniversalGb,
};

/// Binomials compared up to sign: every element is [`Binomial::normalized`].
pub type BinomialSet = BTreeSet<Binomial>;

/// Collects binomials into a sign-normalized set.
pub fn normalized_set<I: IntoIterator<Item = Binomial>>(iter: I) -> BinomialSet {
    iter.into_iter().map(Binomial::normalized).collect()
}

/// Guardrails shared by the toric computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToricConfig {
    pub engine: EngineConfig,
    /// Maximum number of monomials visited while enumerating fibers.
    pub monomial_budget: u64,
}

impl ToricConfig {
    pub const DEFAULT_MONOMIAL_BUDGET: u64 = 10_000_000;
}

impl Default for ToricConfig {
    fn default() -> Self {
        ToricConfig { engine: EngineConfig::default(), monomial_budget: Self::DEFAULT_MONOMIAL_BUDGET }
    }
}

/// Default bound on the weight `μ` of fibers: twice the largest codeword
/// weight plus two.
pub fn default_bound(code: &Code) -> u64 {
    2 * code.max_weight() as u64 + 2
}

/// The `n x m` matrix whose columns are the nonzero codewords in canonical
/// variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMatrix {
    matrix: IntMatrix,
    rank: usize,
}

impl CodeMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Checks that a binomial lies in the toric ideal.
    pub fn validate(&self, b: &Binomial) -> Result<()> {
        if b.num_vars() != self.cols() {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: b.num_vars() });
        }
        if b.in_kernel(&self.matrix) {
            Ok(())
        } else {
            Err(Error::NotInKernel)
        }
    }
}

pub fn code_matrix(code: &Code) -> Result<CodeMatrix> {
    if code.num_vars() == 0 {
        return Err(Error::domain("code has no nonzero codewords"));
    }
    Ok(matrix_of(code))
}

fn matrix_of(code: &Code) -> CodeMatrix {
    let columns: Vec<Vec<i64>> = code.zones().iter().map(|w| w.to_column()).collect();
    let matrix = IntMatrix::from_columns(code.n(), &columns).expect("columns have length n");
    let rank = matrix.rank();
    CodeMatrix { matrix, rank }
}

/// `t_{e_i} t_{e_j} - t_{e_i + e_j}` for every pair of weight-one codewords
/// whose sum is a codeword, sign-normalized and sorted.
pub fn a_set(code: &Code) -> Vec<Binomial> {
    let m = code.num_vars();
    let singles: Vec<(usize, u64)> =
        code.zones().iter().enumerate().filter(|(_, w)| w.weight() == 1).map(|(i, w)| (i, w.bits())).collect();
    let mut out = Vec::new();
    for (x, &(i, a)) in singles.iter().enumerate() {
        for &(j, b) in &singles[x + 1..] {
            if let Some(k) = code.var_index(&Codeword::from_bits(code.n(), a | b)) {
                let plus = ExponentVector::from_indices(m, &[i, j]);
                out.push(Binomial::new_unchecked(plus, ExponentVector::unit(m, k)).normalized());
            }
        }
    }
    out.sort();
    out
}

/// `t_c - prod_{j in supp c} t_{e_j}` for every codeword of weight at least
/// two. Requires an external code.
pub fn b_set(code: &Code) -> Result<Vec<Binomial>> {
    if !code.is_external() {
        return Err(Error::domain("B is defined for external codes only"));
    }
    let m = code.num_vars();
    let mut out = Vec::new();
    for (k, w) in code.zones().iter().enumerate().filter(|(_, w)| w.weight() >= 2) {
        let singles: Vec<usize> = w
            .support()
            .into_iter()
            .map(|i| code.var_index(&Codeword::unit(code.n(), i)).expect("external code"))
            .collect();
        out.push(Binomial::new_unchecked(ExponentVector::unit(m, k), ExponentVector::from_indices(m, &singles)).normalized());
    }
    out.sort();
    Ok(out)
}

/// True iff the toric ideal is zero, i.e. the codeword columns are linearly
/// independent.
pub fn ideal_is_zero(code: &Code) -> bool {
    code.num_vars() == 0 || matrix_of(code).rank == code.num_vars()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_binomial;

    fn c1() -> Code {
        Code::parse_lines(&["000", "100", "010", "001", "110", "101", "011", "111"]).unwrap()
    }

    #[test]
    fn code_matrices() {
        let ci = Code::parse_lines(&["000", "100", "001", "110", "101", "111"]).unwrap();
        let m = code_matrix(&ci).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank()), (3, 5, 3));
        assert_eq!(m.matrix().column(2), alloc::vec![1, 1, 0]);
        assert_eq!(code_matrix(&c1()).unwrap().cols(), 7);
        assert_eq!(code_matrix(&crate::code::internal_code(3).unwrap()).unwrap().cols(), 4);
        assert!(code_matrix(&Code::parse_lines(&["00"]).unwrap()).is_err());
    }

    #[test]
    fn zero_ideal_detection() {
        assert!(ideal_is_zero(&Code::parse_lines(&["000", "100", "010", "001"]).unwrap()));
        assert!(!ideal_is_zero(&c1()));
        assert!(ideal_is_zero(&Code::parse_lines(&["000", "100", "110"]).unwrap()));
        assert!(ideal_is_zero(&Code::parse_lines(&["0"]).unwrap()));
    }

    #[test]
    fn a_sets() {
        let code = c1();
        let want = normalized_set(
            ["t{1} t{2} - t{1,2}", "t{1} t{3} - t{1,3}", "t{2} t{3} - t{2,3}"].map(|s| parse_binomial(&code, s).unwrap()),
        );
        assert_eq!(normalized_set(a_set(&code)), want);
        let ci = Code::parse_lines(&["000", "100", "001", "110", "101", "111"]).unwrap();
        assert_eq!(a_set(&ci), alloc::vec![parse_binomial(&ci, "t{1} t{3} - t{1,3}").unwrap().normalized()]);
        assert!(a_set(&Code::parse_lines(&["000", "100", "010", "111"]).unwrap()).is_empty());
    }

    #[test]
    fn a_set_size_matches_weight_two_words_on_external_codes() {
        let code = Code::parse_lines(&["0000", "1000", "0100", "0010", "0001", "1100", "0011", "1110"]).unwrap();
        assert_eq!(a_set(&code).len(), 2);
        assert_eq!(b_set(&code).unwrap().len(), 3);
        assert!(b_set(&Code::parse_lines(&["00", "10", "11"]).unwrap()).is_err());
    }
}
