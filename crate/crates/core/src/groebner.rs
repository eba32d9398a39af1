//! Buchberger completion specialised to binomials with unit coefficients.
//!
//! Reducing a binomial by binomials only ever rewrites one term at a time, so
//! every intermediate result is again a binomial or zero. Basis elements are
//! stored oriented, `plus` being the leading term.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::binomial::Binomial;
use crate::error::{Error, Resource, Result};
use crate::monomial::ExponentVector;
use crate::order::{MonomialOrder, TermOrder};

/// Guardrails for completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum number of S-pairs reduced before giving up.
    pub pair_budget: u64,
}

impl EngineConfig {
    pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { pair_budget: Self::DEFAULT_PAIR_BUDGET }
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Elements, each oriented with its leading term as `plus`. Reduced bases
    /// are sorted by leading term, ascending.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of `b` modulo the basis.
    pub fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        reduce(b, &self.elements, &self.order)
    }

    /// Ideal membership test.
    pub fn contains(&self, b: &Binomial) -> bool {
        self.reduce(b).is_none()
    }
}

/// Cheap necessary condition for divisibility: support bits folded into 128.
#[inline]
fn signature(m: &ExponentVector) -> u128 {
    m.support().fold(0u128, |acc, i| acc | 1u128 << (i % 128))
}

/// Oriented binomials with cached leading-term signatures.
struct Rewriter {
    elems: Vec<Binomial>,
    sigs: Vec<u128>,
}

impl Rewriter {
    fn new() -> Self {
        Rewriter { elems: Vec::new(), sigs: Vec::new() }
    }

    fn from_oriented(elems: Vec<Binomial>) -> Self {
        let sigs = elems.iter().map(|b| signature(b.plus())).collect();
        Rewriter { elems, sigs }
    }

    fn push(&mut self, b: Binomial) {
        self.sigs.push(signature(b.plus()));
        self.elems.push(b);
    }

    fn find_divisor(&self, m: &ExponentVector, sig: u128) -> Option<usize> {
        (0..self.elems.len()).find(|&k| self.sigs[k] & !sig == 0 && self.elems[k].plus().divides(m))
    }

    /// Rewrites `m` until no leading term divides it.
    fn normal_form(&self, m: &ExponentVector) -> ExponentVector {
        let mut m = m.clone();
        let mut sig = signature(&m);
        while let Some(k) = self.find_divisor(&m, sig) {
            let g = &self.elems[k];
            m = m.div_mul(g.plus(), g.minus());
            sig = signature(&m);
        }
        m
    }

    fn reduce<O: TermOrder + ?Sized>(&self, b: &Binomial, order: &O) -> Option<Binomial> {
        let p = self.normal_form(b.plus());
        let q = self.normal_form(b.minus());
        (p != q).then(|| Binomial::new_unchecked(p, q).oriented(order))
    }
}

/// S-binomial `(L/lt f) f - (L/lt g) g`, oriented, or `None` if it vanishes.
pub fn s_binomial<O: TermOrder + ?Sized>(f: &Binomial, g: &Binomial, order: &O) -> Option<Binomial> {
    let f = f.clone().oriented(order);
    let g = g.clone().oriented(order);
    s_of_oriented(&f, &g, order)
}

fn s_of_oriented<O: TermOrder + ?Sized>(f: &Binomial, g: &Binomial, order: &O) -> Option<Binomial> {
    let l = f.plus().lcm(g.plus());
    let a = l.div_mul(g.plus(), g.minus());
    let b = l.div_mul(f.plus(), f.minus());
    (a != b).then(|| Binomial::new_unchecked(a, b).oriented(order))
}

/// Full normal form of `b` modulo `basis`; `None` means `b` reduces to zero.
pub fn reduce<O: TermOrder + ?Sized>(b: &Binomial, basis: &[Binomial], order: &O) -> Option<Binomial> {
    let rw = Rewriter::from_oriented(basis.iter().map(|g| g.clone().oriented(order)).collect());
    rw.reduce(b, order)
}

/// Buchberger's algorithm with the coprime and chain criteria. The result is
/// a (not necessarily reduced) Gröbner basis, oriented.
pub fn buchberger_with<O: TermOrder + ?Sized>(gens: &[Binomial], order: &O, config: &EngineConfig) -> Result<Vec<Binomial>> {
    let mut basis = Rewriter::new();
    // (lcm degree, lcm, i, j): smallest degree first, ties by lex on the lcm
    let mut queue: BTreeSet<(u64, ExponentVector, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let add = |h: Binomial, basis: &mut Rewriter, queue: &mut BTreeSet<_>, pending: &mut BTreeSet<_>| {
        let r = basis.elems.len();
        for i in 0..r {
            let lead_i = basis.elems[i].plus();
            if lead_i.is_coprime(h.plus()) {
                continue;
            }
            let l = lead_i.lcm(h.plus());
            queue.insert((l.degree(), l, i, r));
            pending.insert((i, r));
        }
        basis.push(h);
    };

    for g in gens {
        if let Some(h) = basis.reduce(g, order) {
            add(h, &mut basis, &mut queue, &mut pending);
        }
    }

    let mut spent = 0u64;
    while let Some((_, lcm, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let chain = (0..basis.elems.len()).any(|k| {
            k != i
                && k != j
                && basis.elems[k].plus().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        spent += 1;
        if spent > config.pair_budget {
            return Err(Error::Budget { resource: Resource::SPairs, limit: config.pair_budget, partial: true });
        }
        let Some(s) = s_of_oriented(&basis.elems[i], &basis.elems[j], order) else {
            continue;
        };
        if let Some(h) = basis.reduce(&s, order) {
            add(h, &mut basis, &mut queue, &mut pending);
        }
    }
    Ok(basis.elems)
}

/// Turns a Gröbner basis into the reduced one: drops elements with a
/// redundant leading term, reduces tails, sorts by leading term.
pub fn reduce_basis_with<O: TermOrder + ?Sized>(gb: &[Binomial], order: &O) -> Vec<Binomial> {
    let mut elems: Vec<Binomial> = gb.iter().map(|b| b.clone().oriented(order)).collect();
    elems.sort_by(|a, b| order.compare(a.plus(), b.plus()));
    let mut minimal = Rewriter::new();
    for g in elems {
        // divisors of a term are never larger, so only earlier leads can divide
        if minimal.find_divisor(g.plus(), signature(g.plus())).is_none() {
            minimal.push(g);
        }
    }
    let mut out: Vec<Binomial> = minimal
        .elems
        .iter()
        .map(|g| Binomial::new_unchecked(g.plus().clone(), minimal.normal_form(g.minus())))
        .collect();
    out.sort_by(|a, b| order.compare(a.plus(), b.plus()));
    out
}

/// True iff every S-pair of `set` reduces to zero modulo `set`.
pub fn is_groebner_with<O: TermOrder + ?Sized>(set: &[Binomial], order: &O) -> bool {
    let rw = Rewriter::from_oriented(set.iter().map(|g| g.clone().oriented(order)).collect());
    let n = rw.elems.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| match s_of_oriented(&rw.elems[i], &rw.elems[j], order) {
            None => true,
            Some(s) => rw.reduce(&s, order).is_none(),
        })
    })
}

/// Every leading term is minimal, no leading term divides another element's
/// tail, and every element is oriented.
pub fn is_reduced_with<O: TermOrder + ?Sized>(set: &[Binomial], order: &O) -> bool {
    set.iter().enumerate().all(|(i, g)| {
        order.compare(g.plus(), g.minus()) == Ordering::Greater
            && set.iter().enumerate().all(|(j, h)| {
                i == j || (!h.plus().divides(g.plus()) && !h.plus().divides(g.minus()))
            })
    })
}

pub fn buchberger(gens: &[Binomial], order: &MonomialOrder, config: &EngineConfig) -> Result<GroebnerBasis> {
    Ok(GroebnerBasis { elements: buchberger_with(gens, order, config)?, order: order.clone(), reduced: false })
}

pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    GroebnerBasis { elements: reduce_basis_with(&gb.elements, &gb.order), order: gb.order.clone(), reduced: true }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(gens: &[Binomial], order: &MonomialOrder, config: &EngineConfig) -> Result<GroebnerBasis> {
    Ok(reduce_basis(&buchberger(gens, order, config)?))
}

/// Wraps elements already known to be a reduced Gröbner basis.
pub fn assume_reduced(elements: Vec<Binomial>, order: MonomialOrder) -> GroebnerBasis {
    GroebnerBasis { elements, order, reduced: true }
}

pub fn is_groebner(set: &[Binomial], order: &MonomialOrder) -> bool {
    is_groebner_with(set, order)
}
