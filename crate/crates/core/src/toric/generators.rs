use alloc::vec::Vec;

use super::{code_matrix, for_each_fiber, ideal_is_zero, ToricConfig};
use crate::binomial::Binomial;
use crate::code::Code;
use crate::error::Result;
use crate::groebner::{buchberger_with, reduce_basis_with, EngineConfig};
use crate::monomial::ExponentVector;
use crate::order::{grevlex_cmp, MonomialOrder, Refined, RevlexLast};

/// How a generating set was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Minimal generators read off fibers with `μ <= bound`.
    Bounded { bound: u64 },
    /// Lattice basis of the kernel, saturated by every variable.
    Saturation,
}

/// A generating set of a toric ideal with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    /// Sign-normalized, sorted.
    pub elements: Vec<Binomial>,
    pub method: Method,
    /// True when the set is known to generate the whole ideal.
    pub certified: bool,
}

impl GeneratorSet {
    /// Largest `μ` among the generators (0 for the zero ideal).
    pub fn max_mu(&self, code: &Code) -> u64 {
        self.elements.iter().map(|b| b.mu_weight(code)).max().unwrap_or(0)
    }

    /// Largest total degree among the generators (0 for the zero ideal).
    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

pub fn toric_generators(code: &Code, method: Method, config: &ToricConfig) -> Result<GeneratorSet> {
    match method {
        Method::Saturation => {
            Ok(GeneratorSet { elements: saturation_generators(code, &config.engine)?, method, certified: true })
        }
        Method::Bounded { bound } => {
            let elements = minimal_generators(code, bound, config.monomial_budget)?;
            let certified = certify_generators(code, &elements, &config.engine)?;
            Ok(GeneratorSet { elements, method, certified })
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Minimal generators of `μ <= bound`, built degree by degree.
///
/// Two members of a fiber are joined by lower-degree moves exactly when they
/// share a variable (both quotients then lie in one smaller fiber, which is
/// connected by induction). Each fiber with `k` such components contributes
/// `k - 1` binomials.
pub fn minimal_generators(code: &Code, bound: u64, monomial_budget: u64) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    if bound < 2 || ideal_is_zero(code) {
        return Ok(out);
    }
    for_each_fiber(code, bound, monomial_budget, |fiber| {
        let reps = component_representatives(&fiber.members);
        for r in &reps[1..] {
            out.push(Binomial::new_unchecked(reps[0].clone(), r.clone()).normalized());
        }
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// One representative (the grevlex-smallest member) per component of the
/// "shares a variable" relation, components ordered by their representative.
pub(crate) fn component_representatives(members: &[ExponentVector]) -> Vec<ExponentVector> {
    let k = members.len();
    let mut parent: Vec<usize> = (0..k).collect();
    for i in 0..k {
        for j in i + 1..k {
            if !members[i].is_coprime(&members[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut reps: Vec<Option<usize>> = alloc::vec![None; k];
    for i in 0..k {
        let root = find(&mut parent, i);
        match reps[root] {
            Some(r) if grevlex_cmp(members[r].exponents(), members[i].exponents()).is_le() => {}
            _ => reps[root] = Some(i),
        }
    }
    let mut out: Vec<ExponentVector> = reps.into_iter().flatten().map(|i| members[i].clone()).collect();
    out.sort_by(|a, b| grevlex_cmp(a.exponents(), b.exponents()));
    out
}

/// Exact generators from a lattice basis of `ker M`.
///
/// When the zones that are not disjoint unions of other zones are linearly
/// independent, every other zone `c` gives a basis vector
/// `t_c - prod t_s` over one such decomposition. Those binomials cut out a
/// polynomial ring in the independent zones, so they generate a prime ideal
/// of the right height contained in the toric ideal, hence equal to it.
///
/// Otherwise the basis comes from a Hermite normal form and is saturated one
/// variable at a time. Saturation by `t_i` uses an order graded by `μ` with
/// `t_i` the cheapest variable in reverse lexicographic order, so `t_i`
/// divides a leading term only if it divides the whole binomial.
pub fn saturation_generators(code: &Code, engine: &EngineConfig) -> Result<Vec<Binomial>> {
    if ideal_is_zero(code) {
        return Ok(Vec::new());
    }
    if let Some(mut gens) = triangular_generators(code) {
        gens.sort();
        return Ok(gens);
    }
    let m = code_matrix(code)?;
    let mut gens = Vec::new();
    for u in m.matrix().integer_kernel()? {
        gens.push(Binomial::from_lattice_vector(&u)?);
    }
    let weights: Vec<u64> = code.zones().iter().map(|w| w.weight() as u64).collect();
    for i in 0..code.num_vars() {
        let order = Refined { weights: weights.clone(), tiebreak: RevlexLast { last: i } };
        let gb = reduce_basis_with(&buchberger_with(&gens, &order, engine)?, &order);
        gens = gb.into_iter().filter_map(|b| strip_variable(b, i)).collect();
    }
    let gb = reduce_basis_with(&buchberger_with(&gens, &MonomialOrder::Grevlex, engine)?, &MonomialOrder::Grevlex);
    let mut out: Vec<Binomial> = gb.into_iter().map(Binomial::normalized).collect();
    out.sort();
    Ok(out)
}

/// The triangular basis described in [`saturation_generators`], if it exists.
fn triangular_generators(code: &Code) -> Option<Vec<Binomial>> {
    let zones: Vec<u64> = code.zones().iter().map(|w| w.bits()).collect();
    let mut basic = Vec::new();
    let mut decomposed = Vec::new();
    for (i, &z) in zones.iter().enumerate() {
        let parts: Vec<usize> = (0..zones.len()).filter(|&j| j != i && zones[j] & !z == 0).collect();
        match exact_cover(z, &parts, &zones) {
            Some(cover) => decomposed.push((i, cover)),
            None => basic.push(i),
        }
    }
    let columns: Vec<Vec<i64>> = basic.iter().map(|&i| code.zones()[i].to_column()).collect();
    let independent = crate::matrix::IntMatrix::from_columns(code.n(), &columns).ok()?.rank() == basic.len();
    if !independent {
        return None;
    }
    let m = code.num_vars();
    let mut out = Vec::with_capacity(decomposed.len());
    for (i, cover) in decomposed {
        // reduce the cover to basic zones
        let mut leaves = Vec::new();
        let mut stack = cover;
        while let Some(j) = stack.pop() {
            if basic.contains(&j) {
                leaves.push(j);
            } else {
                let parts: Vec<usize> = basic.iter().copied().filter(|&b| zones[b] & !zones[j] == 0).collect();
                stack.extend(exact_cover(zones[j], &parts, &zones)?);
            }
        }
        let b = Binomial::new(ExponentVector::unit(m, i), ExponentVector::from_indices(m, &leaves)).ok()?;
        out.push(b.normalized());
    }
    Some(out)
}

/// Some partition of the bit set `target` into members of `parts`.
fn exact_cover(target: u64, parts: &[usize], zones: &[u64]) -> Option<Vec<usize>> {
    if target == 0 {
        return Some(Vec::new());
    }
    let low = target & target.wrapping_neg();
    for &p in parts {
        let z = zones[p];
        if z & low != 0 && z & !target == 0 {
            if let Some(mut rest) = exact_cover(target & !z, parts, zones) {
                rest.push(p);
                return Some(rest);
            }
        }
    }
    None
}

fn strip_variable(b: Binomial, i: usize) -> Option<Binomial> {
    let k = b.plus()[i].min(b.minus()[i]);
    if k == 0 {
        return Some(b);
    }
    let mut t = alloc::vec![0u32; b.num_vars()];
    t[i] = k;
    let t = ExponentVector::from_exponents(t);
    let one = ExponentVector::one(b.num_vars());
    let (p, q) = (b.plus().div_mul(&t, &one), b.minus().div_mul(&t, &one));
    Binomial::new(p, q).ok()
}

/// True iff `candidate` generates the whole toric ideal: every exact
/// generator reduces to zero modulo a Gröbner basis of `candidate`.
pub fn certify_generators(code: &Code, candidate: &[Binomial], engine: &EngineConfig) -> Result<bool> {
    let exact = saturation_generators(code, engine)?;
    let gb = buchberger_with(candidate, &MonomialOrder::Grevlex, engine)?;
    Ok(exact.iter().all(|g| crate::groebner::reduce(g, &gb, &MonomialOrder::Grevlex).is_none()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::from_supports;
    use crate::groebner::reduce;

    fn ci() -> Code {
        Code::parse_lines(&["000", "100", "001", "110", "101", "111"]).unwrap()
    }

    fn same_ideal(a: &[Binomial], b: &[Binomial]) -> bool {
        let o = MonomialOrder::Grevlex;
        let ga = buchberger_with(a, &o, &EngineConfig::default()).unwrap();
        let gb = buchberger_with(b, &o, &EngineConfig::default()).unwrap();
        a.iter().all(|f| reduce(f, &gb, &o).is_none()) && b.iter().all(|f| reduce(f, &ga, &o).is_none())
    }

    #[test]
    fn eq_ci_generators() {
        let code = ci();
        let expected = [
            from_supports(&code, &[&[1], &[3]], &[&[1, 3]]).unwrap(),
            from_supports(&code, &[&[3], &[1, 2]], &[&[1, 2, 3]]).unwrap(),
            from_supports(&code, &[&[1, 2], &[1, 3]], &[&[1], &[1, 2, 3]]).unwrap(),
        ];
        let cfg = ToricConfig::default();
        let sat = toric_generators(&code, Method::Saturation, &cfg).unwrap();
        let bounded = toric_generators(&code, Method::Bounded { bound: 6 }, &cfg).unwrap();
        assert!(bounded.certified);
        assert!(same_ideal(&sat.elements, &expected));
        assert!(same_ideal(&bounded.elements, &expected));
        // the third listed binomial is redundant
        assert_eq!(bounded.elements.len(), 2);
    }

    #[test]
    fn zero_ideal_has_no_generators() {
        let code = Code::parse_lines(&["000", "100", "010", "001"]).unwrap();
        let cfg = ToricConfig::default();
        assert!(toric_generators(&code, Method::Saturation, &cfg).unwrap().elements.is_empty());
        let b = toric_generators(&code, Method::Bounded { bound: 4 }, &cfg).unwrap();
        assert!(b.elements.is_empty() && b.certified);
    }

    #[test]
    fn too_small_bound_is_not_certified() {
        let code = ci();
        let b = toric_generators(&code, Method::Bounded { bound: 2 }, &ToricConfig::default()).unwrap();
        assert!(!b.certified);
    }

    #[test]
    fn triangular_basis_matches_full_saturation() {
        let cfg = EngineConfig::default();
        for lines in [
            &["000", "100", "010", "001", "110", "101", "011", "111"][..],
            &["000", "100", "001", "110", "101", "111"],
            &["0000", "1000", "0100", "0010", "0001", "1100", "0110", "0011", "1111"],
        ] {
            let code = Code::parse_lines(lines).unwrap();
            let tri = triangular_generators(&code).expect("triangular basis");
            let lattice: Vec<Binomial> = code_matrix(&code)
                .unwrap()
                .matrix()
                .integer_kernel()
                .unwrap()
                .iter()
                .map(|u| Binomial::from_lattice_vector(u).unwrap())
                .collect();
            let mut sat = lattice;
            let weights: Vec<u64> = code.zones().iter().map(|w| w.weight() as u64).collect();
            for i in 0..code.num_vars() {
                let order = Refined { weights: weights.clone(), tiebreak: RevlexLast { last: i } };
                let gb = reduce_basis_with(&buchberger_with(&sat, &order, &cfg).unwrap(), &order);
                sat = gb.into_iter().filter_map(|b| strip_variable(b, i)).collect();
            }
            assert!(same_ideal(&tri, &sat), "{lines:?}");
        }
    }

    #[test]
    fn internal_codes_have_no_triangular_basis() {
        assert!(triangular_generators(&crate::code::internal_code(4).unwrap()).is_none());
    }

    #[test]
    fn bounded_and_exact_generators_agree() {
        let code = Code::parse_lines(&["000", "100", "110", "111", "010", "011", "001"]).unwrap();
        let cfg = ToricConfig::default();
        let sat = toric_generators(&code, Method::Saturation, &cfg).unwrap();
        let bounded = toric_generators(&code, Method::Bounded { bound: 8 }, &cfg).unwrap();
        assert!(bounded.certified);
        assert!(same_ideal(&sat.elements, &bounded.elements));
    }
}
