//! Binomials `t^plus - t^minus` with unit coefficients.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::monomial::ExponentVector;
use crate::order::{grevlex_cmp, TermOrder};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    /// Rejects `t^a - t^a` and terms over different variable counts.
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch { expected: plus.len(), found: minus.len() });
        }
        if plus == minus {
            return Err(Error::DegenerateBinomial);
        }
        Ok(Binomial { plus, minus })
    }

    /// Like [`Binomial::new`] but also checks both terms have the same image
    /// under `matrix`.
    pub fn checked(matrix: &IntMatrix, plus: ExponentVector, minus: ExponentVector) -> Result<Self> {
        let b = Self::new(plus, minus)?;
        if b.plus.len() != matrix.cols() {
            return Err(Error::DimensionMismatch { expected: matrix.cols(), found: b.plus.len() });
        }
        if !b.in_kernel(matrix) {
            return Err(Error::NotInKernel);
        }
        Ok(b)
    }

    /// Builds the binomial from an integer kernel vector `u = u+ - u-`.
    pub fn from_lattice_vector(u: &[i64]) -> Result<Self> {
        let to_u32 = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow("lattice vector exponent"));
        let mut plus = alloc::vec::Vec::with_capacity(u.len());
        let mut minus = alloc::vec::Vec::with_capacity(u.len());
        for &x in u {
            plus.push(to_u32(x.max(0))?);
            minus.push(to_u32((-x).max(0))?);
        }
        Self::new(ExponentVector::from_exponents(plus), ExponentVector::from_exponents(minus))
    }

    pub(crate) fn new_unchecked(plus: ExponentVector, minus: ExponentVector) -> Self {
        debug_assert!(plus != minus && plus.len() == minus.len());
        Binomial { plus, minus }
    }

    #[inline]
    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    #[inline]
    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn into_terms(self) -> (ExponentVector, ExponentVector) {
        (self.plus, self.minus)
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// `t^minus - t^plus`.
    pub fn negated(&self) -> Self {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Orients the binomial so that `plus` is the larger term.
    pub fn oriented<O: TermOrder + ?Sized>(self, order: &O) -> Self {
        match order.compare(&self.plus, &self.minus) {
            Ordering::Less => Binomial { plus: self.minus, minus: self.plus },
            _ => self,
        }
    }

    /// Orientation with the grevlex-leading term first; canonical form for
    /// comparing binomials up to sign.
    pub fn normalized(self) -> Self {
        match grevlex_cmp(self.plus.exponents(), self.minus.exponents()) {
            Ordering::Less => Binomial { plus: self.minus, minus: self.plus },
            _ => self,
        }
    }

    /// The larger term under `order`.
    pub fn leading_term<O: TermOrder + ?Sized>(&self, order: &O) -> &ExponentVector {
        match order.compare(&self.plus, &self.minus) {
            Ordering::Less => &self.minus,
            _ => &self.plus,
        }
    }

    /// Larger total degree of the two terms.
    pub fn degree(&self) -> u64 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    /// True if both terms have the same image under `matrix`.
    pub fn in_kernel(&self, matrix: &IntMatrix) -> bool {
        matrix.same_image(&self.plus, &self.minus)
    }

    /// Common image of the two terms as a vector over the neurons.
    pub fn image(&self, matrix: &IntMatrix) -> alloc::vec::Vec<i64> {
        matrix.apply(&self.plus)
    }

    /// Total weight `μ` of the terms (the `μ` of either term, which agree for
    /// kernel binomials).
    pub fn mu_weight(&self, code: &Code) -> u64 {
        code.mu_weight(&self.plus).max(code.mu_weight(&self.minus))
    }

    /// `plus - minus` as an integer vector.
    pub fn to_lattice_vector(&self) -> alloc::vec::Vec<i64> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    /// Moves the binomial to a different variable order; `perm[new] = old`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Binomial { plus: self.plus.permuted(perm), minus: self.minus.permuted(perm) }
    }

    /// Human-readable form with zone supports, e.g. `t{1,2} t{3} - t{1,3} t{2}`.
    pub fn display<'a>(&'a self, code: &'a Code) -> impl fmt::Display + 'a {
        DisplayBinomial { binomial: self, code }
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.plus, self.minus)
    }
}

/// Writes a monomial using zone supports as variable names.
pub fn format_monomial(m: &ExponentVector, code: &Code) -> String {
    if m.is_one() {
        return String::from("1");
    }
    let mut s = String::new();
    for (i, e) in m.iter_nonzero() {
        if !s.is_empty() {
            s.push(' ');
        }
        s.push_str("t{");
        s.push_str(&code.zones()[i].support_label());
        s.push('}');
        if e > 1 {
            s.push_str(&alloc::format!("^{e}"));
        }
    }
    s
}

struct DisplayBinomial<'a> {
    binomial: &'a Binomial,
    code: &'a Code,
}

impl fmt::Display for DisplayBinomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            format_monomial(&self.binomial.plus, self.code),
            format_monomial(&self.binomial.minus, self.code)
        )
    }
}

/// Builds a binomial from 1-based zone supports, e.g.
/// `from_supports(&code, &[&[1, 2]], &[&[1], &[2]])` for `t{1,2} - t{1} t{2}`.
pub fn from_supports(code: &Code, plus: &[&[usize]], minus: &[&[usize]]) -> Result<Binomial> {
    let term = |supports: &[&[usize]]| -> Result<ExponentVector> {
        let mut idx = alloc::vec::Vec::with_capacity(supports.len());
        for s in supports {
            idx.push(
                code.var_of_support(s)
                    .ok_or_else(|| Error::domain(alloc::format!("{s:?} is not a zone of the code")))?,
            );
        }
        Ok(ExponentVector::from_indices(code.num_vars(), &idx))
    };
    Binomial::new(term(plus)?, term(minus)?)
}

/// Parses the form written by [`Binomial::display`], e.g.
/// `t{1,3} t{2,3} - t{3} t{1,2,3}`. Factors may also be joined by `*`.
pub fn parse_binomial(code: &Code, text: &str) -> Result<Binomial> {
    let (p, m) = text
        .split_once(" - ")
        .ok_or_else(|| Error::domain(alloc::format!("expected `<monomial> - <monomial>`, got {text:?}")))?;
    Binomial::new(parse_monomial(code, p)?, parse_monomial(code, m)?)
}

/// Parses `t{1,2}^2 t{3}` or `1` into an exponent vector over the code's zones.
pub fn parse_monomial(code: &Code, text: &str) -> Result<ExponentVector> {
    let bad = || Error::domain(alloc::format!("bad monomial {text:?}"));
    let text = text.trim();
    let mut exps = alloc::vec![0u32; code.num_vars()];
    if text == "1" {
        return Ok(ExponentVector::from_exponents(exps));
    }
    for factor in text.split(|c: char| c.is_whitespace() || c == '*').filter(|f| !f.is_empty()) {
        let body = factor.strip_prefix("t{").ok_or_else(bad)?;
        let (inner, rest) = body.split_once('}').ok_or_else(bad)?;
        let power = match rest.strip_prefix('^') {
            Some(e) => e.parse::<u32>().map_err(|_| bad())?,
            None if rest.is_empty() => 1,
            None => return Err(bad()),
        };
        let mut support = alloc::vec::Vec::new();
        for idx in inner.split(',') {
            support.push(idx.trim().parse::<usize>().map_err(|_| bad())?);
        }
        let v = code
            .var_of_support(&support)
            .ok_or_else(|| Error::domain(alloc::format!("{{{inner}}} is not a zone of the code")))?;
        exps[v] += power;
    }
    Ok(ExponentVector::from_exponents(exps))
}
