//! Monomial orders on exponent vectors.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// A total, multiplicative well-order on exponent vectors of a fixed length.
pub trait TermOrder {
    /// Compares two exponent vectors of the same length.
    fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering;
}

impl<T: TermOrder + ?Sized> TermOrder for &T {
    fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        (**self).compare(a, b)
    }
}

pub type Rational = Ratio<i64>;

/// Lexicographic with `t_1 > t_2 > ...`.
pub fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Reverse lexicographic: the vector whose last differing entry is smaller wins.
pub fn revlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| revlex_cmp(a, b))
}

/// Orders that may break ties after a weight comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    Grevlex,
}

impl Tiebreak {
    fn compare(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            Tiebreak::Lex => lex_cmp(a, b),
            Tiebreak::Grevlex => grevlex_cmp(a, b),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Tiebreak::Lex => "lex",
            Tiebreak::Grevlex => "grevlex",
        }
    }
}

/// A rational weight vector together with its integer rescaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    rational: Vec<Rational>,
    scaled: Vec<i128>,
}

impl WeightVector {
    /// Weights must be nonnegative so the order stays a well-order.
    pub fn new(rational: Vec<Rational>) -> Result<Self> {
        if let Some(w) = rational.iter().find(|w| w.is_negative()) {
            return Err(Error::domain(alloc::format!("negative weight {w} does not give a well-order")));
        }
        let denom = rational.iter().fold(1i64, |acc, w| acc.lcm(w.denom()));
        let scaled = rational
            .iter()
            .map(|w| i128::from(*w.numer()) * i128::from(denom / w.denom()))
            .collect();
        Ok(WeightVector { rational, scaled })
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| Rational::from_integer(w)).collect())
    }

    pub fn len(&self) -> usize {
        self.rational.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rational.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.rational
    }

    /// `w . a`, scaled by the common denominator of the weights.
    pub fn scaled_dot(&self, a: &[u32]) -> i128 {
        self.scaled.iter().zip(a).map(|(w, &e)| w * i128::from(e)).sum()
    }
}

/// The monomial orders shipped with the library.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Weight { weights: WeightVector, tiebreak: Tiebreak },
}

impl MonomialOrder {
    pub fn weight(weights: WeightVector, tiebreak: Tiebreak) -> Self {
        MonomialOrder::Weight { weights, tiebreak }
    }

    /// Integer weight vector with grevlex tiebreak.
    pub fn weighted_grevlex(weights: &[i64]) -> Result<Self> {
        Ok(MonomialOrder::Weight { weights: WeightVector::from_integers(weights)?, tiebreak: Tiebreak::Grevlex })
    }

    /// The order `≺_ω` with `ω_i = wt(c_i) - 1` and grevlex tiebreak.
    pub fn prec_omega(code: &Code) -> Self {
        let w: Vec<i64> = code.zones().iter().map(|c| c.weight() as i64 - 1).collect();
        Self::weighted_grevlex(&w).expect("weights are nonnegative")
    }

    /// The weight `(0,0,0,1,1,1,0)` over `t1,t2,t3,t12,t13,t23,t123` with grevlex
    /// tiebreak, restricted to the zones actually present in a 3-neuron code.
    pub fn one_pierced_n3(code: &Code) -> Result<Self> {
        if code.n() != 3 {
            return Err(Error::domain(alloc::format!("order is defined for n = 3 only, got n = {}", code.n())));
        }
        let w: Vec<i64> = code.zones().iter().map(|c| i64::from(c.weight() == 2)).collect();
        Self::weighted_grevlex(&w)
    }

    /// Number of variables the order is tied to, if any.
    pub fn arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Weight { weights, .. } => Some(weights.len()),
            _ => None,
        }
    }

    /// Checked comparison.
    pub fn try_compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
        }
        if let Some(k) = self.arity() {
            if k != a.len() {
                return Err(Error::DimensionMismatch { expected: k, found: a.len() });
            }
        }
        Ok(self.compare(a, b))
    }

    /// Parses `lex`, `grevlex` or `weight:[q1,...,qm]:<lex|grevlex>`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        match spec {
            "lex" => return Ok(MonomialOrder::Lex),
            "grevlex" => return Ok(MonomialOrder::Grevlex),
            _ => {}
        }
        let bad = |msg: &str| Error::domain(alloc::format!("bad order spec {spec:?}: {msg}"));
        let rest = spec.strip_prefix("weight:").ok_or_else(|| bad("expected lex, grevlex or weight:[...]:tiebreak"))?;
        let rest = rest.trim_start().strip_prefix('[').ok_or_else(|| bad("missing '['"))?;
        let close = rest.find(']').ok_or_else(|| bad("missing ']'"))?;
        let (list, tail) = (&rest[..close], rest[close + 1..].trim());
        let tiebreak = match tail.strip_prefix(':').map(str::trim) {
            None if tail.is_empty() => Tiebreak::Grevlex,
            Some("grevlex") => Tiebreak::Grevlex,
            Some("lex") => Tiebreak::Lex,
            _ => return Err(bad("tiebreak must be lex or grevlex")),
        };
        let mut weights = Vec::new();
        if !list.trim().is_empty() {
            for item in list.split(',') {
                weights.push(parse_rational(item.trim()).ok_or_else(|| bad(&alloc::format!("bad weight {:?}", item.trim())))?);
            }
        }
        Ok(MonomialOrder::Weight { weights: WeightVector::new(weights)?, tiebreak })
    }

    /// Canonical textual form, accepted by [`MonomialOrder::parse`].
    pub fn spec(&self) -> String {
        self.to_string()
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>().ok()?, q.trim().parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl TermOrder for MonomialOrder {
    fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::Weight { weights, tiebreak } => {
                weights.scaled_dot(a).cmp(&weights.scaled_dot(b)).then_with(|| tiebreak.compare(a, b))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Weight { weights, tiebreak } => {
                f.write_str("weight:[")?;
                for (i, w) in weights.values().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, "]:{}", tiebreak.name())
            }
        }
    }
}

/// Weight order with an arbitrary tiebreak order, used internally.
pub(crate) struct Refined<O> {
    pub weights: Vec<u64>,
    pub tiebreak: O,
}

impl<O: TermOrder> TermOrder for Refined<O> {
    fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let dot = |v: &ExponentVector| -> u64 { self.weights.iter().zip(v.exponents()).map(|(w, &e)| w * u64::from(e)).sum() };
        dot(a).cmp(&dot(b)).then_with(|| self.tiebreak.compare(a, b))
    }
}

/// Reverse lexicographic order in which variable `last` is treated as the
/// smallest variable, the others keeping their relative order.
pub(crate) struct RevlexLast {
    pub last: usize,
}

impl TermOrder for RevlexLast {
    fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match a[self.last].cmp(&b[self.last]) {
            Ordering::Equal => {}
            other => return other.reverse(),
        }
        for i in (0..a.len()).rev() {
            if i == self.last {
                continue;
            }
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }
}

/// Boxed order, handy for heterogeneous order families.
pub type DynOrder = Box<dyn TermOrder + Send + Sync>;
