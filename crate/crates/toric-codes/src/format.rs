//! Code files, binomial serialization and basis reports.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toric_codes_core::binomial::from_supports;
use toric_codes_core::{Binomial, Code, ExponentVector, TermOrder};

use crate::error::{AppError, AppResult};

/// Reads a code file: one 0/1 word per line, `#` comments and blank lines ignored.
pub fn load_code(path: &Path) -> AppResult<Code> {
    let text = std::fs::read_to_string(path).map_err(|source| AppError::Io { path: path.into(), source })?;
    parse_code(&text).map_err(|e| AppError::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_code(text: &str) -> AppResult<Code> {
    Code::parse_text(text).map_err(|e| AppError::Parse(e.to_string()))
}

/// A term as a map from zone support (`"1,2,3"`, 1-based) to exponent.
pub type TermJson = BTreeMap<String, u32>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub plus: TermJson,
    pub minus: TermJson,
}

fn term_json(m: &ExponentVector, code: &Code) -> TermJson {
    m.iter_nonzero().map(|(i, e)| (code.zones()[i].support_label(), e)).collect()
}

impl BinomialJson {
    pub fn new(b: &Binomial, code: &Code) -> Self {
        BinomialJson { plus: term_json(b.plus(), code), minus: term_json(b.minus(), code) }
    }

    pub fn to_binomial(&self, code: &Code) -> AppResult<Binomial> {
        let supports = |t: &TermJson| -> AppResult<Vec<Vec<usize>>> {
            let mut out = Vec::new();
            for (label, &e) in t {
                let s: Vec<usize> = label
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| AppError::Parse(format!("bad support label {label:?}"))))
                    .collect::<AppResult<_>>()?;
                out.extend(std::iter::repeat_n(s, e as usize));
            }
            Ok(out)
        };
        let plus = supports(&self.plus)?;
        let minus = supports(&self.minus)?;
        let p: Vec<&[usize]> = plus.iter().map(Vec::as_slice).collect();
        let m: Vec<&[usize]> = minus.iter().map(Vec::as_slice).collect();
        Ok(from_supports(code, &p, &m)?)
    }
}

/// Orients every binomial by `order` and sorts by leading term, then by
/// trailing term.
pub fn sort_by_lead<O: TermOrder + ?Sized>(elements: Vec<Binomial>, order: &O) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = elements.into_iter().map(|b| b.oriented(order)).collect();
    out.sort_by(|a, b| match order.compare(a.plus(), b.plus()) {
        Ordering::Equal => order.compare(a.minus(), b.minus()),
        o => o,
    });
    out
}

/// The result of a basis computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub method: String,
    /// Order spec the elements are sorted by.
    pub order: String,
    pub degree_bound: Option<u64>,
    /// The element list is the full object, not a truncation or a bound.
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elements: Vec<BinomialJson>,
    /// Upper bound of a universal Gröbner basis sandwich.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<BinomialJson>>,
    /// Orders swept for a universal Gröbner basis.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orders: Vec<String>,
}

impl BasisReport {
    pub fn new(method: &str, order: &str, elements: &[Binomial], code: &Code) -> Self {
        BasisReport {
            method: method.into(),
            order: order.into(),
            degree_bound: None,
            complete: true,
            note: None,
            elements: elements.iter().map(|b| BinomialJson::new(b, code)).collect(),
            upper: None,
            orders: Vec::new(),
        }
    }

    pub fn to_json(&self) -> AppResult<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Human-readable form: a header and one binomial per line.
    pub fn to_text(&self, code: &Code) -> AppResult<String> {
        let mut s = String::new();
        write!(s, "{} [{}]", self.method, self.order).unwrap();
        if let Some(k) = self.degree_bound {
            write!(s, " mu <= {k}").unwrap();
        }
        writeln!(s, "{}", if self.complete { "" } else { " (incomplete)" }).unwrap();
        if let Some(note) = &self.note {
            writeln!(s, "# {note}").unwrap();
        }
        let section = |s: &mut String, title: &str, items: &[BinomialJson]| -> AppResult<()> {
            writeln!(s, "{title}: {}", items.len()).unwrap();
            for b in items {
                writeln!(s, "  {}", b.to_binomial(code)?.display(code)).unwrap();
            }
            Ok(())
        };
        match &self.upper {
            None => section(&mut s, "elements", &self.elements)?,
            Some(upper) => {
                section(&mut s, "lower", &self.elements)?;
                section(&mut s, "upper", upper)?;
            }
        }
        if !self.orders.is_empty() {
            writeln!(s, "orders: {}", self.orders.len()).unwrap();
        }
        Ok(s)
    }
}
