use alloc::vec::Vec;

use super::{for_each_fiber, ideal_is_zero, ToricConfig};
use crate::binomial::Binomial;
use crate::code::Code;
use crate::error::Result;
use crate::groebner::{buchberger_with, reduce, reduce_basis_with};
use crate::monomial::ExponentVector;
use crate::order::MonomialOrder;

/// Indispensable binomials with `μ <= bound`: fibers with exactly two
/// members that share no variable.
///
/// The result is the full set once `bound` reaches the largest `μ` of a
/// minimal generator.
pub fn indispensable_binomials(code: &Code, bound: u64, config: &ToricConfig) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    if ideal_is_zero(code) {
        return Ok(out);
    }
    for_each_fiber(code, bound, config.monomial_budget, |fiber| {
        if let [a, b] = &fiber.members[..] {
            if a.is_coprime(b) {
                out.push(Binomial::new_unchecked(a.clone(), b.clone()).normalized());
            }
        }
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// Independent check of [`indispensable_binomials`] by ideal membership.
///
/// `t^a - t^b` is indispensable iff it does not lie in the ideal generated by
/// every other binomial of the toric ideal. By the multigrading only
/// binomials whose image is at most that of `t^a` matter: all binomials of
/// smaller `μ` plus every other pair from the same fiber. Each candidate is
/// settled by a Gröbner basis computation.
pub fn indispensable_by_membership(code: &Code, bound: u64, config: &ToricConfig) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    if ideal_is_zero(code) {
        return Ok(out);
    }
    let order = MonomialOrder::Grevlex;
    // (image, star binomials) of every fiber seen so far
    let mut lower: Vec<(Vec<u32>, Vec<Binomial>)> = Vec::new();
    for_each_fiber(code, bound, config.monomial_budget, |fiber| {
        let below: Vec<Binomial> = lower
            .iter()
            .filter(|(img, _)| img.iter().zip(&fiber.image).all(|(x, y)| x <= y))
            .flat_map(|(_, bs)| bs.iter().cloned())
            .collect();
        let base = reduce_basis_with(&buchberger_with(&below, &order, &config.engine)?, &order);
        let ms = &fiber.members;
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                let mut gens = base.clone();
                gens.extend(other_pairs(ms, i, j));
                let gb = buchberger_with(&gens, &order, &config.engine)?;
                let f = Binomial::new_unchecked(ms[i].clone(), ms[j].clone());
                if reduce(&f, &gb, &order).is_some() {
                    out.push(f.normalized());
                }
            }
        }
        let star = ms[1..].iter().map(|m| Binomial::new_unchecked(ms[0].clone(), m.clone())).collect();
        lower.push((fiber.image, star));
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

fn other_pairs(ms: &[ExponentVector], i: usize, j: usize) -> Vec<Binomial> {
    let mut out = Vec::new();
    for x in 0..ms.len() {
        for y in x + 1..ms.len() {
            if (x, y) != (i, j) {
                out.push(Binomial::new_unchecked(ms[x].clone(), ms[y].clone()));
            }
        }
    }
    out
}
