//! Combinatorial neural codes.
//!
//! A code is a set of 0/1 codewords over `n` neurons. Every nonzero codeword
//! names one zone variable `t_{supp(w)}`; the all-zero word is accepted but
//! never gets a variable. Zone variables are kept in canonical order: by
//! weight, then by support as a sorted index sequence.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// Largest neuron count a [`Codeword`] can hold.
pub const MAX_NEURONS: usize = 64;

/// A 0/1 word over `len` neurons. Neuron `i` (0-based) is bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: u64,
    len: u8,
}

impl Codeword {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_NEURONS);
        Codeword { bits: 0, len: len as u8 }
    }

    /// Word with ones exactly at the given 0-based positions.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut w = Self::zero(len);
        for &i in support {
            assert!(i < len, "neuron {i} out of range for length {len}");
            w.bits |= 1 << i;
        }
        w
    }

    /// The standard basis word `e_i` (0-based).
    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_support(len, &[i])
    }

    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_NEURONS);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert_eq!(bits & !mask, 0, "bits beyond word length");
        Codeword { bits, len: len as u8 }
    }

    #[inline]
    pub fn len(&self) -> usize {
        usize::from(self.len)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// 0-based positions of the ones, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.bit(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, other: &Codeword) -> bool {
        other.bits & !self.bits == 0
    }

    /// Hamming distance.
    pub fn distance(&self, other: &Codeword) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }

    pub fn union(&self, other: &Codeword) -> Codeword {
        Codeword { bits: self.bits | other.bits, len: self.len }
    }

    /// 0/1 column vector.
    pub fn to_column(&self) -> Vec<i64> {
        (0..self.len()).map(|i| i64::from(self.bit(i))).collect()
    }

    /// Support as 1-based comma-joined indices, e.g. `"1,3"`.
    pub fn support_label(&self) -> String {
        let mut s = String::new();
        for (k, i) in self.support().into_iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{}", i + 1));
        }
        s
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then(self.weight().cmp(&other.weight()))
            .then_with(|| self.support().cmp(&other.support()))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A combinatorial neural code on `n` neurons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    contains_zero: bool,
    /// Nonzero words in canonical order; index = variable index.
    zones: Vec<Codeword>,
}

impl Code {
    /// Builds a code; duplicate words are merged.
    pub fn new(n: usize, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        if n > MAX_NEURONS {
            return Err(Error::domain(alloc::format!("at most {MAX_NEURONS} neurons supported")));
        }
        let mut set = BTreeSet::new();
        let mut contains_zero = false;
        for w in words {
            if w.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: w.len() });
            }
            if w.is_zero() {
                contains_zero = true;
            } else {
                set.insert(w);
            }
        }
        Ok(Code { n, contains_zero, zones: set.into_iter().collect() })
    }

    /// Builds a code from 1-based supports, always including the zero word.
    pub fn from_supports(n: usize, supports: &[&[usize]]) -> Result<Self> {
        let mut words = alloc::vec![Codeword::zero(n)];
        for s in supports {
            if s.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::domain("support index out of range"));
            }
            let zero_based: Vec<usize> = s.iter().map(|i| i - 1).collect();
            words.push(Codeword::from_support(n, &zero_based));
        }
        Code::new(n, words)
    }

    /// Parses 0/1 strings, one codeword per entry.
    pub fn parse_lines<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        let entries: Vec<(usize, &str)> =
            lines.iter().enumerate().map(|(i, l)| (i + 1, l.as_ref().trim())).collect();
        Self::parse_entries(&entries)
    }

    /// Parses the code file format: one word per line, `#` comments and blank lines ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let entries: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Self::parse_entries(&entries)
    }

    fn parse_entries(entries: &[(usize, &str)]) -> Result<Self> {
        let Some(&(_, first)) = entries.first() else {
            return Err(Error::Format { line: 0, message: "empty code".into() });
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::Format { line: entries[0].0, message: "empty codeword".into() });
        }
        if n > MAX_NEURONS {
            return Err(Error::Format {
                line: entries[0].0,
                message: alloc::format!("codewords longer than {MAX_NEURONS} are not supported"),
            });
        }
        let mut words = Vec::with_capacity(entries.len());
        for &(line, text) in entries {
            if text.len() != n {
                return Err(Error::Format {
                    line,
                    message: alloc::format!("expected {n} characters, found {}", text.len()),
                });
            }
            let mut bits = 0u64;
            for (i, ch) in text.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => bits |= 1 << i,
                    other => {
                        return Err(Error::Format {
                            line,
                            message: alloc::format!("illegal character {other:?}"),
                        })
                    }
                }
            }
            words.push(Codeword::from_bits(n, bits));
        }
        Code::new(n, words)
    }

    /// Neuron count.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_zero
    }

    /// Nonzero codewords in canonical variable order.
    #[inline]
    pub fn zones(&self) -> &[Codeword] {
        &self.zones
    }

    /// Number of zone variables.
    #[inline]
    pub fn num_vars(&self) -> usize {
        self.zones.len()
    }

    /// All codewords, the zero word first when present.
    pub fn words(&self) -> Vec<Codeword> {
        let mut out = Vec::with_capacity(self.zones.len() + 1);
        if self.contains_zero {
            out.push(Codeword::zero(self.n));
        }
        out.extend_from_slice(&self.zones);
        out
    }

    pub fn len(&self) -> usize {
        self.zones.len() + usize::from(self.contains_zero)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        if w.is_zero() {
            self.contains_zero
        } else {
            self.var_index(w).is_some()
        }
    }

    /// Variable index of a nonzero codeword.
    pub fn var_index(&self, w: &Codeword) -> Option<usize> {
        self.zones.binary_search(w).ok()
    }

    /// Variable index of the zone with the given 1-based support.
    pub fn var_of_support(&self, support: &[usize]) -> Option<usize> {
        if support.iter().any(|&i| i == 0 || i > self.n) {
            return None;
        }
        let zero_based: Vec<usize> = support.iter().map(|i| i - 1).collect();
        self.var_index(&Codeword::from_support(self.n, &zero_based))
    }

    /// Neurons (0-based) that never fire.
    pub fn silent_neurons(&self) -> Vec<usize> {
        let fired = self.zones.iter().fold(0u64, |acc, w| acc | w.bits());
        (0..self.n).filter(|&i| fired >> i & 1 == 0).collect()
    }

    pub fn every_neuron_fires(&self) -> bool {
        self.silent_neurons().is_empty()
    }

    pub fn max_weight(&self) -> usize {
        self.zones.iter().map(Codeword::weight).max().unwrap_or(0)
    }

    /// All `n` weight-one words `e_1, ..., e_n` are codewords.
    pub fn is_external(&self) -> bool {
        (0..self.n).all(|i| self.var_index(&Codeword::unit(self.n, i)).is_some())
    }

    /// Every word of weight at least two has a codeword one neuron below it,
    /// as zones of a diagram always border a zone with one curve fewer.
    pub fn has_lower_neighbors(&self) -> bool {
        self.zones.iter().filter(|w| w.weight() >= 2).all(|w| {
            w.support().into_iter().any(|i| self.contains(&Codeword::from_bits(self.n, w.bits() & !(1 << i))))
        })
    }

    /// `μ(t^a)`: the 1-norm of `Σ a_w w`, i.e. the weighted sum of codeword weights.
    pub fn mu_weight(&self, m: &ExponentVector) -> u64 {
        debug_assert_eq!(m.len(), self.num_vars());
        m.iter_nonzero().map(|(i, e)| u64::from(e) * self.zones[i].weight() as u64).sum()
    }

    /// Words whose support lies inside `mask`, i.e. the restriction of the
    /// code to the sub-cube on those neurons.
    pub fn restricted_to(&self, mask: u64) -> Vec<Codeword> {
        self.words().into_iter().filter(|w| w.bits() & !mask == 0).collect()
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words()).finish()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, w) in self.words().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// The nested/chained internal code on `n` neurons.
///
/// Its nonzero words are `c_j = e_1 + ... + e_j` and `c_j - e_1` for
/// `2 <= j <= n`: a big field containing field 1 and a chain of nested fields
/// `n ⊂ ... ⊂ 3`, each of them crossing field 1. Its matrix is row-equivalent
/// to the Lawrence lifting of the `1 x (n-1)` all-ones matrix.
pub fn internal_code(n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::domain("internal codes need n >= 2"));
    }
    let mut words = alloc::vec![Codeword::zero(n)];
    for j in 2..=n {
        let prefix: Vec<usize> = (0..j).collect();
        let c = Codeword::from_support(n, &prefix);
        words.push(c);
        words.push(Codeword::from_bits(n, c.bits() & !1));
    }
    Code::new(n, words)
}

/// Literal evaluation of `c_j = e_1 + sum_{i=2}^{j} e_i` (`j <= n`) and
/// `c_j = c_{j-n} - e_1` (`j > n`) for `1 <= j <= 2n`, deduplicated.
///
/// Unlike [`internal_code`] this keeps `c_1 = e_1`, which adds the
/// inhomogeneous relations `t_{1..j} - t_1 t_{2..j}`; it is kept for
/// comparison only.
pub fn internal_code_formula(n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::domain("internal codes need n >= 2"));
    }
    let c: Vec<Codeword> = (1..=n).map(|j| Codeword::from_support(n, &(0..j).collect::<Vec<_>>())).collect();
    let mut words = alloc::vec![Codeword::zero(n)];
    words.extend(c.iter().copied());
    words.extend(c.iter().map(|w| Codeword::from_bits(n, w.bits() & !1)));
    Code::new(n, words)
}
