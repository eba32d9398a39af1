use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{code_matrix, for_each_fiber, ideal_is_zero, is_lawrence_internal, minimal_generators, ToricConfig};
use crate::binomial::Binomial;
use crate::code::Code;
use crate::error::Result;
use crate::monomial::ExponentVector;

/// Primitive binomials up to a bound on `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraverBasis {
    /// Sign-normalized, sorted.
    pub elements: Vec<Binomial>,
    pub bound: u64,
    /// True when the set is known to be the full Graver basis rather than
    /// its part below `bound`.
    pub complete: bool,
}

/// All primitive binomials with `μ <= bound`.
///
/// Fibers are visited by increasing `μ`. A pair of coprime members is
/// primitive unless an already found primitive binomial divides it, in
/// either orientation; any non-primitive binomial is divided by a primitive
/// one of smaller `μ`.
pub fn graver_basis(code: &Code, bound: u64, config: &ToricConfig) -> Result<GraverBasis> {
    if ideal_is_zero(code) {
        return Ok(GraverBasis { elements: Vec::new(), bound, complete: true });
    }
    let mut found: Vec<(ExponentVector, ExponentVector)> = Vec::new();
    for_each_fiber(code, bound, config.monomial_budget, |fiber| {
        let mut fresh = Vec::new();
        let ms = &fiber.members;
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                let (a, b) = (&ms[i], &ms[j]);
                if !a.is_coprime(b) {
                    continue;
                }
                let divided = found.iter().any(|(u, v)| {
                    (u.divides(a) && v.divides(b)) || (u.divides(b) && v.divides(a))
                });
                if !divided {
                    fresh.push((a.clone(), b.clone()));
                }
            }
        }
        found.extend(fresh);
        Ok(())
    })?;
    let mut elements: Vec<Binomial> =
        found.into_iter().map(|(a, b)| Binomial::new_unchecked(a, b).normalized()).collect();
    elements.sort();
    let complete = is_lawrence_internal(code) && {
        // Lawrence type: the Graver basis is the minimal generating set
        let gens = minimal_generators(code, bound, config.monomial_budget)?;
        gens == elements && super::certify_generators(code, &gens, &config.engine)?
    };
    Ok(GraverBasis { elements, bound, complete })
}

/// True iff no binomial `t^u - t^v` of the ideal other than `b` itself has
/// `t^u | t^plus` and `t^v | t^minus`. Decided by comparing images of all
/// sub-monomials of the two terms.
pub fn is_primitive(b: &Binomial, code: &Code) -> Result<bool> {
    let m = code_matrix(code)?;
    m.validate(b)?;
    let mut by_image: BTreeMap<Vec<i64>, Vec<ExponentVector>> = BTreeMap::new();
    for u in divisors(b.plus()) {
        by_image.entry(m.matrix().apply(&u)).or_default().push(u);
    }
    for v in divisors(b.minus()) {
        if let Some(us) = by_image.get(&m.matrix().apply(&v)) {
            for u in us {
                let whole = u == b.plus() && &v == b.minus();
                if u != &v && !whole {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn divisors(m: &ExponentVector) -> Vec<ExponentVector> {
    let mut out = alloc::vec![ExponentVector::one(m.len())];
    for (i, e) in m.iter_nonzero() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                let mut x = d.exponents().to_vec();
                x[i] = k;
                next.push(ExponentVector::from_exponents(x));
            }
        }
        out = next;
    }
    out
}
