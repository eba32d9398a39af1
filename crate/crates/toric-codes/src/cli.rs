//! Command-line interface.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use toric_codes_core::classify::{generated_by_quadratics, is_one_pierced_n3, is_zero_pierced};
use toric_codes_core::graph::dual_graph;
use toric_codes_core::toric::{graver_basis, ideal_is_zero, default_bound, ToricConfig, UgbConfig, UniversalGb};
use toric_codes_core::{Code, MonomialOrder};

use crate::compute::{self, BUDGET_ENV};
use crate::error::{AppError, AppResult};
use crate::export::edge_list;
use crate::format::{load_code, sort_by_lead, BasisReport, BinomialJson};
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "toric-codes", version, about = "Toric ideals of combinatorial neural codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on S-pairs and on enumerated monomials.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis for one monomial order.
    Gb {
        code: PathBuf,
        /// Order spec: lex, grevlex or weight:[q1,...,qm]:<lex|grevlex>.
        #[arg(value_name = "ORDER", conflicts_with = "order")]
        order_arg: Option<String>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Universal Gröbner basis, exact or as a sandwich of bounds.
    Ugb {
        code: PathBuf,
        /// Number of random weight orders in the sweep.
        #[arg(long, default_value_t = 16)]
        orders: usize,
        /// Bound on mu for the Graver upper bound.
        #[arg(long)]
        degbound: Option<u64>,
        /// Seed for the random weight orders.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Primitive binomials up to a bound on mu.
    Graver {
        code: PathBuf,
        #[arg(long)]
        degbound: Option<u64>,
    },
    /// Indispensable binomials.
    Indispensable {
        code: PathBuf,
        #[arg(long)]
        degbound: Option<u64>,
    },
    /// Piercing and quadratic-generation verdicts.
    Classify { code: PathBuf },
    /// Run a named verification suite: example-gb, internal:<n>,
    /// external-trees, depth1-patterns or lawrence.
    VerifyPaper {
        corpus: String,
        /// Code file replacing the built-in corpus (depth1-patterns only).
        code: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dual graph as an edge list with a weight column.
    DualGraph { code: PathBuf },
}

/// Runs a parsed command, writing to `out`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> AppResult<i32> {
    let cfg = compute::config(cli.budget);
    match &cli.command {
        Command::Gb { code, order_arg, order } => {
            let spec = order.as_deref().or(order_arg.as_deref()).unwrap_or("grevlex");
            let order = MonomialOrder::parse(spec).map_err(|e| AppError::Parse(format!("order {spec:?}: {e}")))?;
            let code = load_code(code)?;
            let gb = sort_by_lead(compute::reduced_gb(&code, &order, &cfg)?, &order);
            let mut report = BasisReport::new("reduced-groebner-basis", &order.spec(), &gb, &code);
            if gb.is_empty() {
                report.note = Some("zero ideal".into());
            }
            emit(cli.json, out, &report, &code)?;
        }
        Command::Ugb { code, orders, degbound, seed } => {
            let code = load_code(code)?;
            let ugb_cfg = UgbConfig { random_orders: *orders, seed: *seed, bound: *degbound, toric: cfg };
            let report = ugb_report(&code, &compute::universal_gb(&code, &ugb_cfg)?);
            emit(cli.json, out, &report, &code)?;
        }
        Command::Graver { code, degbound } => {
            let code = load_code(code)?;
            let bound = degbound.unwrap_or_else(|| default_bound(&code));
            let g = graver_basis(&code, bound, &cfg)?;
            let mut report =
                BasisReport::new("graver", "grevlex", &sort_by_lead(g.elements, &MonomialOrder::Grevlex), &code);
            report.degree_bound = Some(bound);
            report.complete = g.complete;
            if !g.complete {
                report.note = Some(format!("primitive binomials with mu <= {bound}"));
            }
            emit(cli.json, out, &report, &code)?;
        }
        Command::Indispensable { code, degbound } => {
            let code = load_code(code)?;
            let (ind, bound, complete) = compute::indispensables(&code, *degbound, &cfg)?;
            let mut report =
                BasisReport::new("indispensable", "grevlex", &sort_by_lead(ind, &MonomialOrder::Grevlex), &code);
            report.degree_bound = Some(bound);
            report.complete = complete;
            emit(cli.json, out, &report, &code)?;
        }
        Command::Classify { code } => {
            let code = load_code(code)?;
            let report = classify(&code, &cfg)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io_err)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io_err)?;
            }
        }
        Command::VerifyPaper { corpus, code, seed } => {
            let suite: Suite = corpus.parse()?;
            let code = code.as_deref().map(load_code).transpose()?;
            if code.is_some() && suite != Suite::Depth1Patterns {
                return Err(AppError::Parse(format!("{suite} takes no code file")));
            }
            let report = verify::run(suite, code.as_ref(), &cfg, *seed)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io_err)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io_err)?;
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::DualGraph { code } => {
            let code = load_code(code)?;
            write!(out, "{}", edge_list(&dual_graph(&code))).map_err(io_err)?;
        }
    }
    Ok(0)
}

fn io_err(source: std::io::Error) -> AppError {
    AppError::Io { path: Path::new("<stdout>").into(), source }
}

fn emit(json: bool, out: &mut dyn Write, report: &BasisReport, code: &Code) -> AppResult<()> {
    let text = if json { report.to_json()? + "\n" } else { report.to_text(code)? };
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn ugb_report(code: &Code, ugb: &UniversalGb) -> BasisReport {
    let grevlex = &MonomialOrder::Grevlex;
    match ugb {
        UniversalGb::Exact { elements, reason } => {
            let mut r = BasisReport::new("universal-exact", "grevlex", &sort_by_lead(elements.clone(), grevlex), code);
            r.note = Some(format!("{reason:?}").to_lowercase().replace("zeroideal", "zero ideal"));
            r
        }
        UniversalGb::Sandwich { lower, upper, orders, bound } => {
            let mut r = BasisReport::new("universal-sandwich", "grevlex", &sort_by_lead(lower.clone(), grevlex), code);
            r.upper = Some(sort_by_lead(upper.clone(), grevlex).iter().map(|b| BinomialJson::new(b, code)).collect());
            r.orders = orders.iter().map(MonomialOrder::spec).collect();
            r.degree_bound = Some(*bound);
            r.complete = ugb.is_closed();
            r.note = Some(if ugb.is_closed() { "bounds agree".into() } else { "lower and upper bounds differ".into() });
            r
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OnePiercedEvidence {
    pub one_pierced: bool,
    pub order: String,
    pub basis_size: usize,
    pub max_degree: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub zero_ideal: bool,
    pub zero_pierced: bool,
    pub generated_by_quadratics: bool,
    pub max_generator_degree: u64,
    pub generators: usize,
    pub certified: bool,
    /// Three-neuron codes only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_pierced_n3: Option<OnePiercedEvidence>,
}

impl ClassifyReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "zero ideal: {}\n0-pierced: {}\ngenerated by quadratics: {} (max generator degree {}, {} generators, certified {})\n",
            self.zero_ideal,
            self.zero_pierced,
            self.generated_by_quadratics,
            self.max_generator_degree,
            self.generators,
            self.certified
        );
        if let Some(e) = &self.one_pierced_n3 {
            s += &format!(
                "1-pierced (n = 3): {} (order {}, basis size {}, max degree {})\n",
                e.one_pierced, e.order, e.basis_size, e.max_degree
            );
        }
        s
    }
}

pub fn classify(code: &Code, cfg: &ToricConfig) -> AppResult<ClassifyReport> {
    let zero_pierced = is_zero_pierced(code)?;
    let q = generated_by_quadratics(code, None, cfg)?;
    let one_pierced_n3 = if code.n() == 3 {
        let v = is_one_pierced_n3(code, cfg)?;
        Some(OnePiercedEvidence {
            one_pierced: v.one_pierced,
            order: v.order.spec(),
            basis_size: v.basis.len(),
            max_degree: v.max_degree,
        })
    } else {
        None
    };
    Ok(ClassifyReport {
        zero_ideal: ideal_is_zero(code),
        zero_pierced,
        generated_by_quadratics: q.generated_by_quadratics,
        max_generator_degree: q.max_degree,
        generators: q.generators.len(),
        certified: q.certified,
        one_pierced_n3,
    })
}
