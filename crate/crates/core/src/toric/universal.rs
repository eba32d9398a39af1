use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generators::saturation_generators;
use super::{default_bound, graver_basis, ideal_is_zero, is_lawrence_internal, minimal_generators, ToricConfig};
use crate::binomial::Binomial;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::groebner::{reduce_basis_with, buchberger_with, GroebnerBasis};
use crate::monomial::ExponentVector;
use crate::order::{MonomialOrder, Tiebreak, WeightVector};

/// Settings for [`universal_gb`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UgbConfig {
    /// Number of random weight orders added to the named ones.
    pub random_orders: usize,
    pub seed: u64,
    /// Bound on `μ` for the Graver upper bound; defaults to
    /// [`default_bound`], raised if a computed Gröbner basis needs more.
    pub bound: Option<u64>,
    pub toric: ToricConfig,
}

impl Default for UgbConfig {
    fn default() -> Self {
        UgbConfig { random_orders: 16, seed: 0, bound: None, toric: ToricConfig::default() }
    }
}

/// Why an exact universal Gröbner basis could be given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactReason {
    ZeroIdeal,
    /// Lawrence type: Graver basis, universal Gröbner basis and minimal
    /// generating set coincide.
    Lawrence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniversalGb {
    Exact { elements: Vec<Binomial>, reason: ExactReason },
    /// `lower` is the union of the reduced bases for `orders`; `upper` the
    /// Graver basis up to `bound`.
    Sandwich { lower: Vec<Binomial>, upper: Vec<Binomial>, orders: Vec<MonomialOrder>, bound: u64 },
}

impl UniversalGb {
    pub fn is_exact(&self) -> bool {
        matches!(self, UniversalGb::Exact { .. })
    }

    /// True for exact results and for sandwiches whose bounds agree.
    pub fn is_closed(&self) -> bool {
        match self {
            UniversalGb::Exact { .. } => true,
            UniversalGb::Sandwich { lower, upper, .. } => lower == upper,
        }
    }

    /// The exact set, or the lower bound of a sandwich.
    pub fn lower(&self) -> &[Binomial] {
        match self {
            UniversalGb::Exact { elements, .. } => elements,
            UniversalGb::Sandwich { lower, .. } => lower,
        }
    }

    /// The exact set, or the upper bound of a sandwich.
    pub fn upper(&self) -> &[Binomial] {
        match self {
            UniversalGb::Exact { elements, .. } => elements,
            UniversalGb::Sandwich { upper, .. } => upper,
        }
    }
}

/// Lex, grevlex and, for external codes, `≺_ω`.
pub fn named_orders(code: &Code) -> Vec<MonomialOrder> {
    let mut orders = alloc::vec![MonomialOrder::Lex, MonomialOrder::Grevlex];
    if code.is_external() {
        orders.push(MonomialOrder::prec_omega(code));
    }
    orders
}

/// `count` weight orders with weights drawn uniformly from `{0, ..., 2m}`,
/// grevlex tiebreak. A draw is rejected while it ties the two terms of some
/// element of `avoid_ties`, up to a fixed number of attempts.
pub fn random_orders(code: &Code, count: usize, seed: u64, avoid_ties: &[Binomial]) -> Vec<MonomialOrder> {
    const ATTEMPTS: usize = 64;
    let m = code.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut w: Vec<i64> = Vec::new();
        for _ in 0..ATTEMPTS {
            w = (0..m).map(|_| rng.gen_range(0..=2 * m as i64)).collect();
            let dot = |e: &ExponentVector| -> i64 { w.iter().zip(e.exponents()).map(|(x, &y)| x * i64::from(y)).sum() };
            if avoid_ties.iter().all(|b| dot(b.plus()) != dot(b.minus())) {
                break;
            }
        }
        let weights = WeightVector::from_integers(&w).expect("weights are nonnegative");
        out.push(MonomialOrder::weight(weights, Tiebreak::Grevlex));
    }
    out
}

/// Universal Gröbner basis: exact for the zero ideal and for internal codes
/// (Lawrence type), otherwise bounded from both sides.
pub fn universal_gb(code: &Code, config: &UgbConfig) -> Result<UniversalGb> {
    universal_gb_with(code, config, |gens, orders| {
        orders
            .iter()
            .map(|o| {
                let gb = buchberger_with(gens, o, &config.toric.engine)?;
                Ok(crate::groebner::assume_reduced(reduce_basis_with(&gb, o), o.clone()))
            })
            .collect()
    })
}

/// [`universal_gb`] with a caller-supplied runner that computes the reduced
/// Gröbner basis of `gens` for each order, e.g. in parallel.
pub fn universal_gb_with<F>(code: &Code, config: &UgbConfig, mut run: F) -> Result<UniversalGb>
where
    F: FnMut(&[Binomial], &[MonomialOrder]) -> Result<Vec<GroebnerBasis>>,
{
    if ideal_is_zero(code) {
        return Ok(UniversalGb::Exact { elements: Vec::new(), reason: ExactReason::ZeroIdeal });
    }
    let gens = saturation_generators(code, &config.toric.engine)?;
    let gen_mu = gens.iter().map(|b| b.mu_weight(code)).max().unwrap_or(0);
    let mut bound = config.bound.unwrap_or_else(|| default_bound(code));

    if is_lawrence_internal(code) {
        let bound = bound.max(gen_mu);
        let graver = graver_basis(code, bound, &config.toric)?;
        let minimal = minimal_generators(code, bound, config.toric.monomial_budget)?;
        if graver.complete && graver.elements == minimal {
            return Ok(UniversalGb::Exact { elements: graver.elements, reason: ExactReason::Lawrence });
        }
        return Err(Error::Inconsistent("Lawrence-type code whose Graver basis differs from its minimal generators".into()));
    }

    let mut orders = named_orders(code);
    let mut bases = run(&gens, &orders)?;
    bound = bound.max(max_mu(code, &bases));
    let mut upper = graver_basis(code, bound, &config.toric)?.elements;
    let random = random_orders(code, config.random_orders, config.seed, &upper);
    bases.extend(run(&gens, &random)?);
    orders.extend(random);
    let needed = max_mu(code, &bases);
    if needed > bound {
        bound = needed;
        upper = graver_basis(code, bound, &config.toric)?.elements;
    }
    let mut lower: Vec<Binomial> = bases.into_iter().flat_map(|gb| gb.into_elements()).map(Binomial::normalized).collect();
    lower.sort();
    lower.dedup();
    Ok(UniversalGb::Sandwich { lower, upper, orders, bound })
}

fn max_mu(code: &Code, bases: &[GroebnerBasis]) -> u64 {
    bases.iter().flat_map(|gb| gb.elements()).map(|b| b.mu_weight(code)).max().unwrap_or(0)
}

/// Every homogeneous quadratic binomial `t_a t_b - t_c t_d` of the ideal with
/// coprime terms, found by grouping all degree-two monomials by image.
pub fn all_quadratic_binomials(code: &Code) -> Vec<Binomial> {
    let m = code.num_vars();
    let mut by_image: BTreeMap<u128, Vec<ExponentVector>> = BTreeMap::new();
    for i in 0..m {
        for j in i..m {
            let key = image_key(code, i, j);
            by_image.entry(key).or_default().push(ExponentVector::from_indices(m, &[i, j]));
        }
    }
    let mut out = Vec::new();
    for ms in by_image.values() {
        for x in 0..ms.len() {
            for y in x + 1..ms.len() {
                if ms[x].is_coprime(&ms[y]) {
                    out.push(Binomial::new_unchecked(ms[x].clone(), ms[y].clone()).normalized());
                }
            }
        }
    }
    out.sort();
    out
}

/// Image of `t_i t_j` packed two bits per neuron.
fn image_key(code: &Code, i: usize, j: usize) -> u128 {
    let (a, b) = (code.zones()[i].bits(), code.zones()[j].bits());
    (0..code.n()).fold(0u128, |acc, k| acc | (u128::from(a >> k & 1) + u128::from(b >> k & 1)) << (2 * k))
}
