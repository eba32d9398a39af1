use alloc::vec;
use alloc::vec::Vec;

use crate::code::Code;
use crate::error::{Error, Resource, Result};
use crate::monomial::ExponentVector;

/// All monomials with one image under the code matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    /// Common image, one entry per neuron.
    pub image: Vec<u32>,
    /// `μ` of every member (the sum of `image`).
    pub mu: u64,
    /// Members in ascending lexicographic order of exponent vectors.
    pub members: Vec<ExponentVector>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

struct Enumerator<'a> {
    zones: Vec<u64>,
    /// Union of zone supports from index `k` on.
    suffix: Vec<u64>,
    n: usize,
    budget: u64,
    spent: &'a mut u64,
}

impl Enumerator<'_> {
    fn new<'a>(code: &Code, budget: u64, spent: &'a mut u64) -> Enumerator<'a> {
        let zones: Vec<u64> = code.zones().iter().map(|w| w.bits()).collect();
        let mut suffix = vec![0u64; zones.len() + 1];
        for k in (0..zones.len()).rev() {
            suffix[k] = suffix[k + 1] | zones[k];
        }
        Enumerator { zones, suffix, n: code.n(), budget, spent }
    }

    fn decompose(&mut self, image: &[u32]) -> Result<Vec<ExponentVector>> {
        let mut out = Vec::new();
        let mut rest = image.to_vec();
        let mut exps = vec![0u32; self.zones.len()];
        self.recurse(0, &mut rest, &mut exps, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn recurse(&mut self, k: usize, rest: &mut [u32], exps: &mut [u32], out: &mut Vec<ExponentVector>) -> Result<()> {
        let open = rest.iter().enumerate().fold(0u64, |acc, (i, &r)| if r > 0 { acc | 1 << i } else { acc });
        if open == 0 {
            *self.spent += 1;
            if *self.spent > self.budget {
                return Err(Error::Budget { resource: Resource::Monomials, limit: self.budget, partial: true });
            }
            out.push(ExponentVector::from_exponents(exps.to_vec()));
            return Ok(());
        }
        if k == self.zones.len() || open & !self.suffix[k] != 0 {
            return Ok(());
        }
        let z = self.zones[k];
        let max = (0..self.n).filter(|&i| z >> i & 1 == 1).map(|i| rest[i]).min().unwrap_or(0);
        for e in (0..=max).rev() {
            for i in (0..self.n).filter(|&i| z >> i & 1 == 1) {
                rest[i] -= e;
            }
            exps[k] = e;
            let r = self.recurse(k + 1, rest, exps, out);
            for i in (0..self.n).filter(|&i| z >> i & 1 == 1) {
                rest[i] += e;
            }
            exps[k] = 0;
            r?;
        }
        Ok(())
    }
}

/// All monomials mapping to `image`.
pub fn fiber_of(code: &Code, image: &[u32], monomial_budget: u64) -> Result<Fiber> {
    if image.len() != code.n() {
        return Err(Error::DimensionMismatch { expected: code.n(), found: image.len() });
    }
    let mut spent = 0;
    let members = Enumerator::new(code, monomial_budget, &mut spent).decompose(image)?;
    Ok(Fiber { image: image.to_vec(), mu: image.iter().map(|&x| u64::from(x)).sum(), members })
}

/// Visits every fiber with at least two members and `μ <= bound`, by
/// ascending `μ` and, within one `μ`, by descending lexicographic image.
pub fn for_each_fiber<F>(code: &Code, bound: u64, monomial_budget: u64, mut visit: F) -> Result<()>
where
    F: FnMut(Fiber) -> Result<()>,
{
    let n = code.n();
    let fired = code.zones().iter().fold(0u64, |acc, w| acc | w.bits());
    let mut spent = 0u64;
    let mut en = Enumerator::new(code, monomial_budget, &mut spent);
    for mu in 2..=bound {
        let mut image = vec![0u32; n];
        // compositions of mu into n parts, skipping neurons that never fire
        let mut images = Vec::new();
        compositions(n, mu as u32, fired, &mut image, 0, &mut images);
        for img in images {
            let members = en.decompose(&img)?;
            if members.len() >= 2 {
                visit(Fiber { image: img, mu, members })?;
            }
        }
    }
    Ok(())
}

fn compositions(n: usize, left: u32, fired: u64, cur: &mut Vec<u32>, i: usize, out: &mut Vec<Vec<u32>>) {
    if i == n {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if fired >> i & 1 == 0 {
        cur[i] = 0;
        compositions(n, left, fired, cur, i + 1, out);
        return;
    }
    for v in (0..=left).rev() {
        cur[i] = v;
        compositions(n, left - v, fired, cur, i + 1, out);
    }
    cur[i] = 0;
}

/// Fibers with at least two members and `μ <= bound`.
pub fn fibers_up_to(code: &Code, bound: u64, monomial_budget: u64) -> Result<Vec<Fiber>> {
    if bound < 2 {
        return Err(Error::domain("fiber bound must be at least 2"));
    }
    let mut out = Vec::new();
    for_each_fiber(code, bound, monomial_budget, |f| {
        out.push(f);
        Ok(())
    })?;
    Ok(out)
}
