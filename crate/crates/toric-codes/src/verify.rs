//! Named verification suites run by `verify-paper`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use toric_codes_core::binomial::parse_binomial;
use toric_codes_core::code::internal_code;
use toric_codes_core::graph::{
    delta_graph, depth1_indispensables, expected_quadratic_count, patterns, piercing_sequence,
};
use toric_codes_core::toric::{
    a_set, all_quadratic_binomials, default_bound, graver_basis, internal_u_set, is_primitive, normalized_set,
    verify_lawrence_row_equivalence, BinomialSet, ExactReason, ToricConfig, UgbConfig, UniversalGb,
};
use toric_codes_core::{Binomial, Code, Error as CoreError, MonomialOrder};

use crate::compute;
use crate::corpus;
use crate::error::{AppError, AppResult};
use crate::patterns::library;

/// The reduced grevlex basis of the three-curve Venn code.
pub const G1: [&str; 9] = [
    "t{1,3} t{2,3} - t{3} t{1,2,3}",
    "t{1,2} t{2,3} - t{2} t{1,2,3}",
    "t{1} t{2,3} - t{1,2,3}",
    "t{1,2} t{1,3} - t{1} t{1,2,3}",
    "t{2} t{1,3} - t{1,2,3}",
    "t{3} t{1,2} - t{1,2,3}",
    "t{2} t{3} - t{2,3}",
    "t{1} t{3} - t{1,3}",
    "t{1} t{2} - t{1,2}",
];

/// Its reduced basis under weight `(0,0,0,1,1,1,2)`, grevlex tiebreak.
pub const G2: [&str; 4] = ["t{2,3} - t{2} t{3}", "t{1,3} - t{1} t{3}", "t{1,2} - t{1} t{2}", "t{1,2,3} - t{1} t{2} t{3}"];

pub const G2_ORDER: &str = "weight:[0,0,0,1,1,1,2]:grevlex";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(s, "{tag} {}: {}", c.name, c.detail).unwrap();
        }
        writeln!(s, "{} {}", self.suite, if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ExampleGb,
    Internal(usize),
    ExternalTrees,
    Depth1Patterns,
    Lawrence,
}

impl FromStr for Suite {
    type Err = AppError;

    fn from_str(s: &str) -> AppResult<Self> {
        match s {
            "example-gb" => Ok(Suite::ExampleGb),
            "external-trees" => Ok(Suite::ExternalTrees),
            "depth1-patterns" => Ok(Suite::Depth1Patterns),
            "lawrence" => Ok(Suite::Lawrence),
            _ => {
                let n = s
                    .strip_prefix("internal:")
                    .and_then(|n| n.parse::<usize>().ok())
                    .ok_or_else(|| AppError::Parse(format!("unknown corpus {s:?}")))?;
                if n < 3 {
                    return Err(AppError::Parse(format!("internal codes need n >= 3, got {n}")));
                }
                Ok(Suite::Internal(n))
            }
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Suite::ExampleGb => f.write_str("example-gb"),
            Suite::Internal(n) => write!(f, "internal:{n}"),
            Suite::ExternalTrees => f.write_str("external-trees"),
            Suite::Depth1Patterns => f.write_str("depth1-patterns"),
            Suite::Lawrence => f.write_str("lawrence"),
        }
    }
}

struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    /// Records a check. Inconsistencies found by the core count as failures;
    /// budget and input errors abort the suite.
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> AppResult<(bool, String)>) -> AppResult<()> {
        let (status, detail) = match f() {
            Ok((ok, detail)) => (if ok { Status::Pass } else { Status::Fail }, detail),
            Err(AppError::Core(e @ CoreError::Inconsistent(_))) => (Status::Fail, e.to_string()),
            Err(e) => return Err(e),
        };
        self.checks.push(Check { name: name.into(), status, detail });
        Ok(())
    }

    fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skipped, detail: detail.into() });
    }
}

fn golden(code: &Code, items: &[&str]) -> BinomialSet {
    normalized_set(items.iter().map(|s| parse_binomial(code, s).expect("golden binomial parses")))
}

/// Runs a suite. `code` replaces the built-in corpus of `depth1-patterns`.
pub fn run(suite: Suite, code: Option<&Code>, cfg: &ToricConfig, seed: u64) -> AppResult<VerifyReport> {
    let mut r = Runner { checks: Vec::new() };
    match suite {
        Suite::ExampleGb => example_gb(&mut r, cfg)?,
        Suite::Internal(n) => internal(&mut r, n, cfg)?,
        Suite::ExternalTrees => external_trees(&mut r, cfg, seed)?,
        Suite::Depth1Patterns => depth1(&mut r, code, cfg)?,
        Suite::Lawrence => lawrence(&mut r)?,
    }
    Ok(VerifyReport { suite: suite.to_string(), checks: r.checks })
}

fn example_gb(r: &mut Runner, cfg: &ToricConfig) -> AppResult<()> {
    let code = corpus::code(corpus::C1);
    let g1 = golden(&code, &G1);
    let g2 = golden(&code, &G2);
    r.check("grevlex basis is G1", || {
        let gb = normalized_set(compute::reduced_gb(&code, &MonomialOrder::Grevlex, cfg)?);
        Ok((gb == g1, format!("{} binomials, expected {}", gb.len(), g1.len())))
    })?;
    r.check("weighted basis is G2", || {
        let order = MonomialOrder::parse(G2_ORDER)?;
        let gb = normalized_set(compute::reduced_gb(&code, &order, cfg)?);
        Ok((gb == g2, format!("{} binomials, expected {}", gb.len(), g2.len())))
    })?;
    r.check("indispensables are G1 and G2 in common", || {
        let (ind, _, complete) = compute::indispensables(&code, None, cfg)?;
        let ind = normalized_set(ind);
        let common: BinomialSet = g1.intersection(&g2).cloned().collect();
        let a = normalized_set(a_set(&code));
        Ok((complete && ind == common && ind == a, format!("{} indispensable binomials", ind.len())))
    })
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn internal(r: &mut Runner, n: usize, cfg: &ToricConfig) -> AppResult<()> {
    let code = internal_code(n)?;
    let u = normalized_set(internal_u_set(n)?);
    r.check("|U_n| = C(n-1, 2)", || Ok((u.len() == binom(n - 1, 2), format!("{} elements", u.len()))))?;
    r.check("Graver basis equals U_n", || {
        let g = graver_basis(&code, default_bound(&code), cfg)?;
        let set = normalized_set(g.elements);
        Ok((set == u && g.complete, format!("{} elements, certified complete: {}", set.len(), g.complete)))
    })?;
    r.check("universal Groebner basis is exact and equals U_n", || {
        let ugb = compute::universal_gb(&code, &UgbConfig { toric: *cfg, ..UgbConfig::default() })?;
        let ok = matches!(&ugb, UniversalGb::Exact { elements, reason: ExactReason::Lawrence }
            if normalized_set(elements.iter().cloned()) == u);
        Ok((ok, format!("exact: {}, {} elements", ugb.is_exact(), ugb.lower().len())))
    })?;
    r.check("every element of U_n is primitive", || {
        let mut bad = 0;
        for b in &u {
            bad += usize::from(!is_primitive(b, &code)?);
        }
        Ok((bad == 0, format!("{} of {} primitive", u.len() - bad, u.len())))
    })
}

/// Homogeneous quadratics `t_a t_b - t_c t_d` of a list.
pub fn quadratic_count(items: &[Binomial]) -> usize {
    items.iter().filter(|b| b.plus().degree() == 2 && b.minus().degree() == 2).count()
}

fn external_trees(r: &mut Runner, cfg: &ToricConfig, seed: u64) -> AppResult<()> {
    for (name, code) in corpus::codes(corpus::TREES) {
        r.check(format!("{name}: quadratics in the universal Groebner basis"), || {
            let expected = expected_quadratic_count(&delta_graph(&code))? as usize;
            let brute = all_quadratic_binomials(&code).len();
            let ugb = compute::universal_gb(&code, &UgbConfig { seed, toric: *cfg, ..UgbConfig::default() })?;
            let found = quadratic_count(ugb.lower());
            let ok = ugb.is_closed() && found == expected && brute == expected;
            Ok((ok, format!("closed: {}, found {found}, sum C(d,2) = {expected}, all quadratics {brute}", ugb.is_closed())))
        })?;
    }
    Ok(())
}

fn depth1(r: &mut Runner, code: Option<&Code>, cfg: &ToricConfig) -> AppResult<()> {
    r.check("pattern files match the built-in library", || {
        let files = library();
        Ok((files == patterns(), format!("{} patterns", files.len())))
    })?;
    let codes: Vec<(String, Code)> = match code {
        Some(c) => vec![("input".into(), c.clone())],
        None => corpus::codes(corpus::DEPTH1).into_iter().map(|(n, c)| (n.to_string(), c)).collect(),
    };
    for (name, code) in codes {
        if piercing_sequence(&code, 1, true).is_none() {
            let msg = "corpus mismatch: not a depth-1, 1-pierced code";
            eprintln!("warning: {name}: {msg}, skipped");
            r.skip(name, msg);
            continue;
        }
        r.check(format!("{name}: pattern binomials are the indispensables"), || {
            let (ind, _, complete) = compute::indispensables(&code, None, cfg)?;
            let d1 = depth1_indispensables(&code)?;
            let max_mu = ind.iter().map(|b| b.mu_weight(&code)).max().unwrap_or(0);
            Ok((complete && ind == d1 && max_mu < 6, format!("{} indispensable, max mu {max_mu}", ind.len())))
        })?;
    }
    Ok(())
}

fn lawrence(r: &mut Runner) -> AppResult<()> {
    for n in 3..=6 {
        r.check(format!("n = {n}: internal matrix is row-equivalent to a Lawrence lifting"), || {
            let w = verify_lawrence_row_equivalence(n)?;
            Ok((w.holds, format!("det T = {}, column map {:?}", w.determinant, w.column_map)))
        })?;
    }
    Ok(())
}
