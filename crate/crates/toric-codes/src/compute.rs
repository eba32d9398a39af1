//! Thin wrappers over the core that the commands and suites share.

use rayon::prelude::*;
use toric_codes_core::groebner::{buchberger_with, reduce_basis_with, reduced_groebner_basis, assume_reduced};
use toric_codes_core::toric::{
    default_bound, exact_generators, ideal_is_zero, indispensable_binomials, universal_gb_with, ToricConfig,
    UgbConfig, UniversalGb,
};
use toric_codes_core::{Binomial, Code, MonomialOrder};

use crate::error::{AppError, AppResult};

/// Name of the environment variable that overrides the default budget.
pub const BUDGET_ENV: &str = "TORIC_CODES_BUDGET";

/// Default configuration, with both the S-pair and the monomial budget set
/// to `budget` when one is given.
pub fn config(budget: Option<u64>) -> ToricConfig {
    let mut cfg = ToricConfig::default();
    if let Some(b) = budget {
        cfg.engine.pair_budget = b;
        cfg.monomial_budget = b;
    }
    cfg
}

/// Rejects weight orders whose length differs from the number of variables.
pub fn check_arity(order: &MonomialOrder, code: &Code) -> AppResult<()> {
    match order.arity() {
        Some(k) if k != code.num_vars() => Err(AppError::Parse(format!(
            "order has {k} weights but the code has {} variables",
            code.num_vars()
        ))),
        _ => Ok(()),
    }
}

/// Reduced Gröbner basis of the toric ideal, sorted by leading term.
pub fn reduced_gb(code: &Code, order: &MonomialOrder, cfg: &ToricConfig) -> AppResult<Vec<Binomial>> {
    check_arity(order, code)?;
    let gens = exact_generators(code, &cfg.engine)?;
    Ok(reduced_groebner_basis(&gens, order, &cfg.engine)?.into_elements())
}

/// A `μ` bound that every minimal generator respects: the largest `μ` of
/// an exact generating set, at least the default bound.
pub fn generator_bound(code: &Code, cfg: &ToricConfig) -> AppResult<u64> {
    let gens = exact_generators(code, &cfg.engine)?;
    let mu = gens.iter().map(|b| b.mu_weight(code)).max().unwrap_or(0);
    Ok(mu.max(default_bound(code)))
}

/// Indispensable binomials, the bound used, and whether the bound covers
/// every minimal generator.
pub fn indispensables(code: &Code, degbound: Option<u64>, cfg: &ToricConfig) -> AppResult<(Vec<Binomial>, u64, bool)> {
    if ideal_is_zero(code) {
        return Ok((Vec::new(), degbound.unwrap_or(0), true));
    }
    let needed = generator_bound(code, cfg)?;
    let bound = degbound.unwrap_or(needed);
    Ok((indispensable_binomials(code, bound, cfg)?, bound, bound >= needed))
}

/// Universal Gröbner basis with the order sweep spread over threads.
pub fn universal_gb(code: &Code, cfg: &UgbConfig) -> AppResult<UniversalGb> {
    let engine = cfg.toric.engine;
    let run = |gens: &[Binomial], orders: &[MonomialOrder]| {
        orders
            .par_iter()
            .map(|o| {
                let gb = buchberger_with(gens, o, &engine)?;
                Ok(assume_reduced(reduce_basis_with(&gb, o), o.clone()))
            })
            .collect()
    };
    Ok(universal_gb_with(code, cfg, run)?)
}
