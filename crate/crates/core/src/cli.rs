//! Command-line front end. Every command prints one report with exact
//! rationals (`num`/`den` as integer strings) and a display-only decimal.
//!
//! Exit codes: 0 success (Infeasible/Unbounded included), 1 domain error,
//! 2 parse or usage error, 3 enumeration budget exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphapps::{self, parse_digraph, parse_graph, NeighborhoodSpec};
use crate::hypergraph::{
    format_hypergraph, parse_hypergraph, verify_alpha_beta, verify_chain, verify_hypergraph_complementation,
    Hypergraph, ParamKind,
};
use crate::limits::{Limits, DEFAULT_MAX_ENUM};
use crate::lpcomp::{complement, complementary_game_check, game_value, ip_scaled_pair, parse_game, verify_complementation};
use crate::matroid::{self, Matroid};
use crate::ratlp::{approx_decimal, format_lp, parse_lp, solve, LpOutcome, Rational};

pub const MAX_ENUM_ENV: &str = "FRACCOMP_MAX_ENUM";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fraccomp", version, about = "Exact LP complementation and fractional graph parameters")]
struct Cli {
    /// Cap on enumerated subsets or search nodes (overrides FRACCOMP_MAX_ENUM).
    #[arg(long, global = true)]
    max_enum: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Linear programs in the `lp` text format.
    Lp {
        #[command(subcommand)]
        cmd: LpCmd,
    },
    /// Matrix games with payoffs in [0, 1].
    Game {
        #[command(subcommand)]
        cmd: GameCmd,
    },
    /// Hypergraphs in the `hypergraph` text format.
    Hyper {
        #[command(subcommand)]
        cmd: HyperCmd,
    },
    /// Matroids from a basis list (hypergraph file) or a graph (cycle matroid).
    Matroid {
        #[command(subcommand)]
        cmd: MatroidCmd,
    },
    /// Graphs and digraphs (`graph`/`digraph` files or DIMACS).
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
}

#[derive(Subcommand, Debug)]
enum LpCmd {
    Solve {
        file: PathBuf,
    },
    /// Prints (and optionally writes) the complementary LP.
    Complement {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    Verify {
        file: PathBuf,
    },
    IpPair {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum GameCmd {
    Value { file: PathBuf },
    Verify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum HyperCmd {
    Params {
        file: PathBuf,
    },
    Dual {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    Complement {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    Verify {
        file: PathBuf,
    },
    Chain {
        file: PathBuf,
    },
    Alphabeta {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum MatroidCmd {
    Toughness {
        file: PathBuf,
        /// Check the basis exchange axiom.
        #[arg(long)]
        validate: bool,
    },
    Verify {
        file: PathBuf,
        #[arg(long)]
        validate: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Without `--spec`, checks the complementation identity for domination.
    Domination {
        file: PathBuf,
        /// in-open, in-closed, out-open or out-closed
        #[arg(long)]
        spec: Option<String>,
    },
    Chromatic {
        file: PathBuf,
    },
    Cfold {
        file: PathBuf,
        #[arg(long)]
        c: usize,
    },
    Budget {
        file: PathBuf,
        #[arg(long)]
        b: usize,
    },
    Toughness {
        file: PathBuf,
    },
    /// Checks the budget propositions for b = 1..=B.
    VerifyBudget {
        file: PathBuf,
        #[arg(long = "b")]
        b_max: usize,
    },
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    #[default]
    Ok,
    Infeasible,
    Unbounded,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
            Status::Error => "error",
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct RationalRecord {
    pub num: String,
    pub den: String,
    pub approx: String,
}

impl From<&Rational> for RationalRecord {
    fn from(x: &Rational) -> Self {
        RationalRecord {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
            approx: approx_decimal(x),
        }
    }
}

#[derive(Serialize, Debug, Default)]
pub struct JsonReport {
    pub status: Status,
    pub values: BTreeMap<String, RationalRecord>,
    pub booleans: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl JsonReport {
    fn value(&mut self, name: &str, x: &Rational) {
        self.values.insert(name.to_string(), x.into());
    }

    fn int(&mut self, name: &str, k: impl Into<BigInt>) {
        self.value(name, &Rational::from_integer(k.into()));
    }

    fn flag(&mut self, name: &str, b: bool) {
        self.booleans.insert(name.to_string(), b);
    }

    fn witness_entry(&mut self, key: &str, v: Value) {
        let w = self.witness.get_or_insert_with(|| json!({}));
        w[key] = v;
    }

    fn error(e: &Error) -> Self {
        JsonReport {
            status: Status::Error,
            error: Some(e.to_string()),
            ..Default::default()
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serialises");
                s.push('\n');
                s
            }
            OutputFormat::Table => {
                let mut out = String::new();
                let _ = writeln!(out, "status\t{}", self.status.as_str());
                for (k, v) in &self.values {
                    let frac = if v.den == "1" { v.num.clone() } else { format!("{}/{}", v.num, v.den) };
                    let _ = writeln!(out, "value\t{k}\t{frac}\t{}", v.approx);
                }
                for (k, b) in &self.booleans {
                    let _ = writeln!(out, "bool\t{k}\t{b}");
                }
                if let Some(w) = &self.witness {
                    let _ = writeln!(out, "witness\t{w}");
                }
                if let Some(e) = &self.error {
                    let _ = writeln!(out, "error\t{e}");
                }
                out
            }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::DimensionMismatch(_) | Error::InvalidArgument(_) => EXIT_USAGE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| json!(RationalRecord::from(x))).collect())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn outcome_status(o: &LpOutcome) -> Status {
    match o {
        LpOutcome::Optimal { .. } => Status::Ok,
        LpOutcome::Infeasible => Status::Infeasible,
        LpOutcome::Unbounded => Status::Unbounded,
    }
}

fn lp_cmd(cmd: LpCmd) -> Result<JsonReport> {
    let mut r = JsonReport::default();
    match cmd {
        LpCmd::Solve { file } => {
            let lp = parse_lp(&read(&file)?)?;
            let out = solve(&lp);
            r.status = outcome_status(&out);
            if let LpOutcome::Optimal { value, solution } = &out {
                r.value("opt", value);
                r.witness_entry("x", rationals(solution));
            }
        }
        LpCmd::Complement { file, out } => {
            let text = format_lp(&complement(&parse_lp(&read(&file)?)?));
            if let Some(path) = out {
                write(&path, &text)?;
            }
            r.witness_entry("lp", json!(text));
        }
        LpCmd::Verify { file } => {
            let rep = verify_complementation(&parse_lp(&read(&file)?)?);
            if let Some(v) = rep.opt_p.value() {
                r.value("opt_p", v);
            }
            if let Some(v) = rep.opt_c.value() {
                r.value("opt_c", v);
            }
            if let Some(l) = &rep.identity_lhs {
                r.value("identity_lhs", l);
            }
            if let Some(h) = rep.identity_holds {
                r.flag("identity", h);
            }
            if let Some(h) = rep.lemma_holds {
                r.flag("lemma", h);
            }
            r.flag("above_one_agrees", rep.above_one_agrees);
            r.witness_entry("case", json!(rep.case.label()));
            r.witness_entry("p", json!(rep.opt_p.label()));
            r.witness_entry("complement", json!(rep.opt_c.label()));
        }
        LpCmd::IpPair { file } => {
            let ip = ip_scaled_pair(&parse_lp(&read(&file)?)?)?;
            r.int("s", ip.s.clone());
            r.int("t", ip.t.clone());
            r.int("value", ip.value.clone());
            r.flag("primal_scaled", ip.primal_scaled_ok);
            r.flag("complement_scaled", ip.complement_scaled_ok);
            r.flag("value_is_s_plus_t", ip.value == &ip.s + &ip.t);
            r.witness_entry("x_hat", json!(ip.x_hat.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
        }
    }
    Ok(r)
}

fn game_cmd(cmd: GameCmd) -> Result<JsonReport> {
    let mut r = JsonReport::default();
    match cmd {
        GameCmd::Value { file } => {
            let g = game_value(&parse_game(&read(&file)?)?)?;
            r.value("value", &g.value);
            r.witness_entry("rose_strategy", rationals(&g.rose_strategy));
        }
        GameCmd::Verify { file } => {
            let g = complementary_game_check(&parse_game(&read(&file)?)?)?;
            r.value("v", &g.v);
            r.value("v_bar", &g.v_bar);
            r.flag("sum_is_one", g.sum_is_one);
            r.flag("lp_route_agrees", g.lp_route_agrees);
        }
    }
    Ok(r)
}

fn undefined(e: &Error) -> bool {
    matches!(e, Error::InfeasibleParameter(_) | Error::UnboundedParameter(_))
}

fn hyper_cmd(cmd: HyperCmd, limits: &Limits) -> Result<JsonReport> {
    let mut r = JsonReport::default();
    let load = |file: &Path| -> Result<Hypergraph> { parse_hypergraph(&read(file)?) };
    match cmd {
        HyperCmd::Params { file } => {
            let h = load(&file)?;
            let mut missing = Vec::new();
            for kind in ParamKind::ALL {
                let sym = kind.symbol();
                match h.fractional_param(kind) {
                    Ok(v) => r.value(&format!("{sym}_f"), &v),
                    Err(e) if undefined(&e) => {
                        missing.push(json!(kind.to_string()));
                        continue;
                    }
                    Err(e) => return Err(e),
                }
                r.int(sym, h.integer_param(kind, limits)?);
            }
            let flags = h.classify();
            r.flag("nontrivial", flags.nontrivial);
            if !missing.is_empty() {
                r.witness_entry("undefined", Value::Array(missing));
            }
        }
        HyperCmd::Dual { file, out } => {
            let text = format_hypergraph(&load(&file)?.dual());
            if let Some(path) = out {
                write(&path, &text)?;
            }
            r.witness_entry("hypergraph", json!(text));
        }
        HyperCmd::Complement { file, out } => {
            let text = format_hypergraph(&load(&file)?.complement());
            if let Some(path) = out {
                write(&path, &text)?;
            }
            r.witness_entry("hypergraph", json!(text));
        }
        HyperCmd::Verify { file } => {
            let rep = verify_hypergraph_complementation(&load(&file)?)?;
            for (kind, row) in ParamKind::ALL.iter().zip(&rep.identities) {
                let sym = kind.symbol();
                match row {
                    Some(id) => {
                        r.value(&format!("{sym}_f_dual"), &id.on_dual);
                        r.value(&format!("{sym}_f_complement"), &id.on_complement);
                        r.value(&format!("{sym}_lhs"), &id.lhs);
                        r.flag(&format!("{sym}_identity"), id.holds);
                    }
                    None => r.flag(&format!("{sym}_defined"), false),
                }
            }
            r.flag("all_defined_hold", rep.all_defined_hold());
        }
        HyperCmd::Chain { file } => {
            let c = verify_chain(&load(&file)?, limits)?;
            r.int("p", c.p);
            r.value("alpha", &c.alpha);
            r.value("p_f", &c.p_f);
            r.value("k_f", &c.k_f);
            r.value("beta", &c.beta);
            r.int("k", c.k);
            let names = ["p_le_alpha", "alpha_le_p_f", "p_f_eq_k_f", "k_f_le_beta", "beta_le_k"];
            for (name, ok) in names.iter().zip(c.links) {
                r.flag(name, ok);
            }
            r.flag("chain", c.holds());
        }
        HyperCmd::Alphabeta { file } => {
            let a = verify_alpha_beta(&load(&file)?, limits)?;
            r.value("alpha_complement", &a.alpha_complement);
            r.value("beta_dual", &a.beta_dual);
            r.value("lhs", &a.lhs);
            r.flag("identity", a.holds);
        }
    }
    Ok(r)
}

enum MatroidSource {
    Bases(Matroid),
    Graph(graphapps::Graph, Matroid),
}

fn load_matroid(file: &Path, validate: bool, limits: &Limits) -> Result<MatroidSource> {
    let text = read(file)?;
    let is_hyper = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("hypergraph"));
    if is_hyper {
        Ok(MatroidSource::Bases(Matroid::from_bases(&parse_hypergraph(&text)?, validate)?))
    } else {
        let g = parse_graph(&text)?;
        let m = matroid::cycle_matroid(&g, limits)?;
        Ok(MatroidSource::Graph(g, m))
    }
}

fn matroid_cmd(cmd: MatroidCmd, limits: &Limits) -> Result<JsonReport> {
    let mut r = JsonReport::default();
    match cmd {
        MatroidCmd::Toughness { file, validate } => {
            let src = load_matroid(&file, validate, limits)?;
            let m = match &src {
                MatroidSource::Bases(m) | MatroidSource::Graph(_, m) => m,
            };
            r.value("sigma", &matroid::edge_toughness_matroid(m, limits)?);
            r.int("rank", m.rank());
            r.int("bases", m.num_bases());
            r.flag("has_coloop", !m.coloops().is_empty());
            if let MatroidSource::Graph(g, _) = &src {
                r.value("sigma_graph", &matroid::edge_toughness_graph(g, limits)?);
                let cuts = matroid::cut_edges(g);
                r.flag("has_cut_edge", !cuts.is_empty());
                r.witness_entry("cut_edges", json!(cuts));
            }
            r.witness_entry("coloops", json!(m.coloops()));
        }
        MatroidCmd::Verify { file, validate } => {
            let m = match load_matroid(&file, validate, limits)? {
                MatroidSource::Bases(m) | MatroidSource::Graph(_, m) => m,
            };
            let t = matroid::verify_matroid_theorem(&m, limits)?;
            r.value("mu_f", &t.mu_f);
            r.value("tau_f", &t.tau_f);
            r.value("sigma", &t.sigma);
            r.value("beta_dual", &t.beta_dual);
            if let Some(k) = &t.k_f {
                r.value("k_f", k);
            }
            if let Some(a) = &t.alpha {
                r.value("alpha", a);
            }
            r.flag("all_equal", t.all_equal);
            r.flag("sigma_is_beta_dual", t.sigma_is_beta_dual);
            if let Some(b) = t.k_f_is_alpha {
                r.flag("k_f_is_alpha", b);
            }
            r.flag("dual_rank_formula", matroid::verify_dual_rank(&m, limits)?);
        }
    }
    Ok(r)
}

fn graph_cmd(cmd: GraphCmd, limits: &Limits) -> Result<JsonReport> {
    let mut r = JsonReport::default();
    match cmd {
        GraphCmd::Domination { file, spec } => {
            let d = parse_digraph(&read(&file)?)?;
            match spec {
                Some(s) => {
                    let spec: NeighborhoodSpec = s.parse()?;
                    r.value("gamma", &graphapps::fractional_domination(&d, spec)?);
                    r.witness_entry("spec", json!(spec.to_string()));
                }
                None => {
                    let rep = graphapps::verify_domination(&d)?;
                    r.value("gamma_in", &rep.gamma_in);
                    r.value("big_gamma_out_complement", &rep.big_gamma_out_complement);
                    r.value("lhs", &rep.lhs);
                    r.flag("identity", rep.holds);
                    if let Some(t) = &rep.tournament {
                        r.value("big_gamma_in", &t.big_gamma_in);
                        r.flag("tournament_identity", t.holds);
                    }
                    if let Some(reg) = &rep.regular {
                        r.int("k", reg.k);
                        r.flag("gamma_is_n_over_k_plus_1", reg.gamma_is_n_over_k_plus_1);
                        if let Some(g) = &reg.big_gamma_out {
                            r.value("big_gamma_out", g);
                        }
                        if let Some(b) = reg.big_gamma_is_n_over_k {
                            r.flag("big_gamma_is_n_over_k", b);
                        }
                    }
                }
            }
        }
        GraphCmd::Chromatic { file } => {
            let g = parse_graph(&read(&file)?)?;
            let b = graphapps::kappa_bounds(&g, limits)?;
            let k = graphapps::kappa_f(&g, limits)?;
            r.value("chi_f", &k.chi_f);
            r.value("kappa_f", &k.kappa);
            r.flag("identity", k.identity_holds);
            r.int("chi", b.chi);
            r.int("omega", b.omega);
            r.int("alpha", b.alpha);
            r.value("chi_bound", &b.chi_bound);
            r.value("alpha_bound", &b.alpha_bound);
            r.value("omega_bound", &b.omega_bound);
            r.flag("chi_bound_holds", b.chi_bound_holds);
            r.flag("alpha_bound_holds", b.alpha_bound_holds);
            r.flag("omega_bound_holds", b.omega_bound_holds);
            if let Some(h) = b.log_bound_holds {
                r.flag("log_bound_holds", h);
            }
            r.witness_entry("coloring", json!(graphapps::optimal_coloring(&g, limits)?));
        }
        GraphCmd::Cfold { file, c } => {
            let g = parse_graph(&read(&file)?)?;
            r.int("chi_c", graphapps::c_fold_chromatic(&g, c, limits)?);
            r.int("c", c);
        }
        GraphCmd::Budget { file, b } => {
            let g = parse_graph(&read(&file)?)?;
            let bc = graphapps::budget_cover(&g, b, limits)?;
            r.int("t", bc.t);
            r.int("c", bc.c);
            r.int("budget_used", bc.witness.budget_used);
            r.flag("witness_valid", bc.witness.is_valid_for(&g, b));
            r.witness_entry("covers", json!(bc.witness.covers));
        }
        GraphCmd::Toughness { file } => {
            let g = parse_graph(&read(&file)?)?;
            r.value("sigma", &matroid::edge_toughness_graph(&g, limits)?);
            let cuts = matroid::cut_edges(&g);
            r.flag("has_cut_edge", !cuts.is_empty());
            r.witness_entry("cut_edges", json!(cuts));
        }
        GraphCmd::VerifyBudget { file, b_max } => {
            let g = parse_graph(&read(&file)?)?;
            let rep = graphapps::verify_budget(&g, b_max, limits)?;
            r.value("kappa_f", &rep.kappa);
            r.int("chi", rep.chi);
            r.int("omega", rep.omega);
            r.int("window", rep.window);
            if let Some(b) = rep.kappa_attained_at {
                r.int("kappa_attained_at", b);
            }
            if let Some(b) = rep.beta {
                r.int("beta", b);
            }
            for row in &rep.rows {
                r.int(&format!("t_{}", row.b), row.t);
            }
            r.flag("floors", rep.rows.iter().all(|x| x.floors_hold));
            r.flag("ratio_within_kappa", rep.rows.iter().all(|x| x.ratio_within_kappa));
            r.flag("iff_theorem", rep.rows.iter().all(|x| x.iff_holds));
            r.flag("witnesses_valid", rep.rows.iter().all(|x| x.witness_valid));
            r.flag("bipartite_equivalence", rep.bipartite.equivalent());
            r.flag("is_bipartite", rep.bipartite.is_bipartite);
            r.flag("all_hold", rep.all_hold());
            r.witness_entry("t_values", json!(rep.t_values));
            r.witness_entry("chi_c", json!(rep.chi_c));
        }
    }
    Ok(r)
}

fn resolve_limits(flag: Option<u64>, env: Option<&str>) -> Result<Limits> {
    let from_env = env
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("{MAX_ENUM_ENV} must be a positive integer, got {s:?}")))
        })
        .transpose()?;
    Limits::new(flag.or(from_env).unwrap_or(DEFAULT_MAX_ENUM))
}

/// Runs one invocation; `env_max_enum` stands in for `FRACCOMP_MAX_ENUM`.
pub fn run_with_env<I, S>(argv: I, env_max_enum: Option<&str>) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_OK, e.to_string()),
                _ => {
                    let err = Error::InvalidArgument(e.to_string().trim_end().to_string());
                    (EXIT_USAGE, JsonReport::error(&err).render(OutputFormat::Json))
                }
            };
        }
    };
    let format = cli.output;
    let result = resolve_limits(cli.max_enum, env_max_enum).and_then(|limits| match cli.command {
        Command::Lp { cmd } => lp_cmd(cmd),
        Command::Game { cmd } => game_cmd(cmd),
        Command::Hyper { cmd } => hyper_cmd(cmd, &limits),
        Command::Matroid { cmd } => matroid_cmd(cmd, &limits),
        Command::Graph { cmd } => graph_cmd(cmd, &limits),
    });
    match result {
        Ok(report) => (EXIT_OK, report.render(format)),
        Err(e) => (exit_code(&e), JsonReport::error(&e).render(format)),
    }
}

/// Runs one invocation, reading the budget override from the environment.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(MAX_ENUM_ENV).ok();
    run_with_env(argv, env.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_precedence() {
        assert_eq!(resolve_limits(None, None).unwrap().max_enum, DEFAULT_MAX_ENUM);
        assert_eq!(resolve_limits(None, Some("64")).unwrap().max_enum, 64);
        assert_eq!(resolve_limits(Some(8), Some("64")).unwrap().max_enum, 8);
        assert!(resolve_limits(None, Some("lots")).is_err());
        assert!(resolve_limits(Some(0), None).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::parse(1, "x")), EXIT_USAGE);
        assert_eq!(exit_code(&Error::BudgetExceeded { limit: 1 }), EXIT_BUDGET);
        assert_eq!(exit_code(&Error::EmptyGraph), EXIT_DOMAIN);
    }

    #[test]
    fn usage_errors() {
        let (code, out) = run_with_env(["fraccomp", "lp", "frobnicate"], None);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("\"status\": \"error\""));
        let (code, _) = run_with_env(["fraccomp", "--help"], None);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn table_output() {
        let mut r = JsonReport::default();
        r.value("x", &Rational::new(3.into(), 2.into()));
        r.int("k", 2);
        r.flag("ok", true);
        assert_eq!(
            r.render(OutputFormat::Table),
            "status\tok\nvalue\tk\t2\t2\nvalue\tx\t3/2\t1.5\nbool\tok\ttrue\n"
        );
    }
}
