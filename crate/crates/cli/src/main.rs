//! Command-line front end for the invariant engines.
//!
//! Every command reads a ring description, parses ideal literals against
//! its variable list, dispatches to the exact engines, and prints JSON
//! (or CSV for table commands). Rationals are serialized as "num/den"
//! strings; nothing floating-point is emitted unless `--approx` asks for
//! display-only decimal companions.
//!
//! Exit codes: 0 success, 2 bad input, 3 violated precondition or
//! budget refusal, 4 verification disagreement, 1 internal error.

mod checks;

use clap::{Args, Parser, Subcommand};
use fsr_core::cartier::{
    b_value, cartier_core, cartier_threshold, contraction_contains, contraction_ideal,
    ct_sandwich_table, is_uniformly_compatible,
};
use fsr_core::error::Error;
use fsr_core::input::{parse_ideal, parse_ring_str};
use fsr_core::oracle::{bf_contraction_trace, bf_nu, bf_threshold_bracket, OracleBudget};
use fsr_core::rational::{approx_f64, ratio_u, to_fraction_string};
use fsr_core::regularity::{a_invariants_squarefree, regularity_limit, scaled_regularity_at_level};
use fsr_core::threshold::{convergence_table, f_threshold, nu_value};
use fsr_core::{BigRational, Monomial, MonomialIdeal, StanleyReisnerRing};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

pub const FAULT_ENV_VAR: &str = "FSR_FAULT_INJECT";

/// A command failure: an engine error, or a verify-mode disagreement.
pub enum Failure {
    Engine(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Engine(err)
    }
}

type CmdResult = Result<Output, Failure>;

/// What a command wants printed: a JSON document, and optionally a CSV
/// rendering used when `--csv` is given.
pub struct Output {
    json: Value,
    csv: Option<String>,
}

impl Output {
    fn json(json: Value) -> Self {
        Output { json, csv: None }
    }
}

#[derive(Parser)]
#[command(
    name = "fsr",
    version,
    about = "Exact prime-characteristic invariants of Stanley-Reisner rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal primes of j plus the defining ideal.
    #[command(name = "min-primes")]
    MinPrimes(MinPrimesArgs),
    /// Colon ideal (j : g) of plain monomial ideals.
    Colon(ColonArgs),
    /// Intersection of two monomial ideals.
    Intersect(IntersectArgs),
    /// Frobenius power j^[q].
    Frobenius(FrobeniusArgs),
    /// Largest m with a^m outside the bracket power of j.
    Nu(NuArgs),
    /// Exact F-threshold of a with respect to j.
    Threshold(ThresholdArgs),
    /// Cartier contractions, cores, compatibility, and thresholds.
    Cartier {
        #[command(subcommand)]
        sub: CartierCmd,
    },
    /// Regularity limits along Frobenius levels.
    Reg {
        #[command(subcommand)]
        sub: RegCmd,
    },
    /// Brute-force reference routes (budget-gated).
    Oracle {
        #[command(subcommand)]
        sub: OracleCmd,
    },
}

#[derive(Subcommand)]
enum CartierCmd {
    /// Level-e contraction of j, or membership of one monomial.
    Contraction(ContractionArgs),
    /// Largest uniformly compatible ideal inside j.
    Core(CoreArgs),
    /// Is j uniformly compatible?
    Compatible(CompatibleArgs),
    /// Largest m with a^m outside the level-e contraction of j.
    B(BArgs),
    /// Cartier threshold of a with respect to j.
    Threshold(CartierThresholdArgs),
    /// Two-sided approximation table for the Cartier threshold.
    Table(CartierTableArgs),
}

#[derive(Subcommand)]
enum RegCmd {
    /// Regularity limit with argmax witnesses and finite levels.
    Limit(RegLimitArgs),
    /// Scaled regularity at levels e = 0..emax.
    Table(RegTableArgs),
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Brute-force power count.
    Nu(OracleNuArgs),
    /// Trace-route contraction membership for one monomial.
    Je(OracleJeArgs),
    /// Two-sided F-threshold bracket from one brute-force count.
    Bracket(OracleBracketArgs),
}

#[derive(Args)]
struct RingArgs {
    /// Path to a JSON ring file.
    #[arg(long, value_name = "FILE")]
    ring: Option<PathBuf>,
    /// Inline JSON ring description.
    #[arg(long = "ring-inline", value_name = "JSON")]
    ring_inline: Option<String>,
    /// Override the ring's characteristic.
    #[arg(short = 'p', long = "p", value_name = "PRIME")]
    p: Option<u64>,
}

impl RingArgs {
    fn load(&self) -> Result<StanleyReisnerRing, Error> {
        let src = match (&self.ring, &self.ring_inline) {
            (Some(path), None) => std::fs::read_to_string(path).map_err(|err| {
                Error::input(format!("cannot read ring file {}: {err}", path.display()))
            })?,
            (None, Some(inline)) => inline.clone(),
            _ => {
                return Err(Error::input(
                    "give the ring as exactly one of --ring FILE or --ring-inline JSON",
                ))
            }
        };
        parse_ring_str(&src, self.p)
    }
}

#[derive(Args)]
struct MinPrimesArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Ideal literal; minimal primes are taken of j plus the relations.
    #[arg(long, default_value = "0")]
    j: String,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ColonArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    /// Divisor ideal.
    #[arg(long)]
    g: String,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct IntersectArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    /// Second ideal.
    #[arg(long)]
    k: String,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct FrobeniusArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct NuArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct ThresholdArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    /// Also print the convergence table up to this level.
    #[arg(long, value_name = "EMAX")]
    table: Option<u32>,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct ContractionArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    /// Query one monomial instead of printing the whole contraction.
    #[arg(long, value_name = "MONOMIAL")]
    m: Option<String>,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct CoreArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct CompatibleArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct BArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct CartierThresholdArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct CartierTableArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(long, default_value_t = 3)]
    emax: u32,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct RegLimitArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct RegTableArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(long, default_value_t = 4)]
    emax: u32,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct OracleNuArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
}

#[derive(Args)]
struct OracleJeArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    /// The monomial whose membership is tested.
    #[arg(long, value_name = "MONOMIAL")]
    m: String,
}

#[derive(Args)]
struct OracleBracketArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    j: String,
    #[arg(short = 'e', long)]
    e: u32,
    #[arg(long)]
    approx: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, csv_wanted) = dispatch(cli.command);
    match result {
        Ok(output) => {
            if csv_wanted {
                match output.csv {
                    Some(csv) => print!("{csv}"),
                    None => {
                        eprintln!("error: --csv is only available for table commands");
                        return ExitCode::from(2);
                    }
                }
            } else {
                println!("{}", serde_json::to_string_pretty(&output.json).expect("serializable"));
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Engine(err)) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Input(_) => 2,
                Error::Precondition(_) | Error::Budget(_) => 3,
                Error::Internal(_) => 1,
            };
            ExitCode::from(code)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("verify: DISAGREEMENT: {msg}");
            ExitCode::from(4)
        }
    }
}

fn dispatch(command: Command) -> (CmdResult, bool) {
    match command {
        Command::MinPrimes(args) => (cmd_min_primes(args), false),
        Command::Colon(args) => (cmd_colon(args), false),
        Command::Intersect(args) => (cmd_intersect(args), false),
        Command::Frobenius(args) => (cmd_frobenius(args), false),
        Command::Nu(args) => (cmd_nu(args), false),
        Command::Threshold(args) => {
            let csv = args.csv;
            (cmd_threshold(args), csv)
        }
        Command::Cartier { sub } => match sub {
            CartierCmd::Contraction(args) => (cmd_contraction(args), false),
            CartierCmd::Core(args) => (cmd_core(args), false),
            CartierCmd::Compatible(args) => (cmd_compatible(args), false),
            CartierCmd::B(args) => (cmd_b(args), false),
            CartierCmd::Threshold(args) => (cmd_cartier_threshold(args), false),
            CartierCmd::Table(args) => {
                let csv = args.csv;
                (cmd_cartier_table(args), csv)
            }
        },
        Command::Reg { sub } => match sub {
            RegCmd::Limit(args) => (cmd_reg_limit(args), false),
            RegCmd::Table(args) => {
                let csv = args.csv;
                (cmd_reg_table(args), csv)
            }
        },
        Command::Oracle { sub } => match sub {
            OracleCmd::Nu(args) => (cmd_oracle_nu(args), false),
            OracleCmd::Je(args) => (cmd_oracle_je(args), false),
            OracleCmd::Bracket(args) => (cmd_oracle_bracket(args), false),
        },
    }
}

// Serialization helpers.

fn rat(r: &BigRational) -> Value {
    Value::String(to_fraction_string(r))
}

fn ideal_json(ideal: &MonomialIdeal, vars: &[String]) -> Value {
    let gens: Vec<Vec<u64>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
    json!({ "gens": gens, "pretty": ideal.pretty(vars) })
}

fn monomial_json(m: &Monomial, vars: &[String]) -> Value {
    json!({ "exps": m.exponents().to_vec(), "pretty": m.pretty(vars) })
}

fn names_of(vars: &[String], indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| vars[i].clone()).collect()
}

/// Inserts `key_approx` next to an existing rational field, display only.
fn add_approx(obj: &mut Value, key: &str, r: &BigRational) {
    let map = obj.as_object_mut().expect("object output");
    map.insert(format!("{key}_approx"), json!(approx_f64(r)));
}

fn parse_one_monomial(src: &str, vars: &[String]) -> Result<Monomial, Error> {
    let ideal = parse_ideal(src, vars)?;
    match ideal.gens() {
        [only] => Ok(only.clone()),
        _ => Err(Error::input(format!(
            "expected exactly one monomial, got {:?}",
            src
        ))),
    }
}

// Command handlers.

fn cmd_min_primes(args: MinPrimesArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let full = j.sum(ring.defining_ideal());
    let primes = full.minimal_primes()?;
    if args.verify {
        checks::verify_min_primes(&full, &primes)?;
    }
    let list: Vec<Value> = primes
        .iter()
        .map(|fp| json!({ "vars": fp.vars().to_vec(), "names": names_of(ring.vars(), fp.vars()) }))
        .collect();
    Ok(Output::json(json!({ "count": list.len(), "primes": list })))
}

fn cmd_colon(args: ColonArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let g = parse_ideal(&args.g, ring.vars())?;
    let result = j.colon(&g)?;
    if args.verify {
        checks::verify_colon(&j, &g, &result)?;
    }
    Ok(Output::json(json!({ "ideal": ideal_json(&result, ring.vars()) })))
}

fn cmd_intersect(args: IntersectArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let k = parse_ideal(&args.k, ring.vars())?;
    let result = j.intersect(&k);
    if args.verify {
        checks::verify_intersect(&j, &k, &result)?;
    }
    Ok(Output::json(json!({ "ideal": ideal_json(&result, ring.vars()) })))
}

fn cmd_frobenius(args: FrobeniusArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let result = j.frobenius_power(level.q())?;
    if args.verify {
        checks::verify_frobenius(&j, level.q(), &result)?;
    }
    Ok(Output::json(json!({
        "q": level.q(),
        "ideal": ideal_json(&result, ring.vars()),
    })))
}

fn cmd_nu(args: NuArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let record = nu_value(&ring, &a, &j, level)?;
    let mut nu = record.nu;
    if std::env::var(FAULT_ENV_VAR).as_deref() == Ok("nu") {
        nu += 1;
    }
    let scaled = ratio_u(nu, record.q);
    if args.verify {
        checks::verify_nu(&ring, &a, &j, level, nu)?;
    }
    let mut out = json!({
        "p": record.p,
        "e": record.e,
        "q": record.q,
        "nu": nu,
        "scaled": rat(&scaled),
        "degenerate": record.degenerate,
    });
    if args.approx {
        add_approx(&mut out, "scaled", &scaled);
    }
    Ok(Output::json(out))
}

fn cmd_threshold(args: ThresholdArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let report = f_threshold(&ring, &a, &j)?;
    if args.verify {
        checks::verify_threshold(&ring, &a, &j, &report.value)?;
    }
    let per_prime: Vec<Value> = report
        .per_prime
        .iter()
        .map(|pt| {
            json!({
                "prime_vars": pt.prime_vars.to_vec(),
                "prime_names": names_of(ring.vars(), &pt.prime_vars),
                "value": rat(&pt.value),
                "degenerate": pt.degenerate,
            })
        })
        .collect();
    let mut out = json!({
        "value": rat(&report.value),
        "degenerate": report.degenerate,
        "per_prime": per_prime,
    });
    if args.approx {
        add_approx(&mut out, "value", &report.value);
    }
    let mut csv = None;
    if let Some(emax) = args.table {
        let table = convergence_table(&ring, &a, &j, emax)?;
        let rows: Vec<Value> = table
            .rows
            .iter()
            .map(|row| {
                json!({
                    "e": row.e,
                    "q": row.q,
                    "nu": row.nu,
                    "scaled": rat(&row.scaled),
                })
            })
            .collect();
        let map = out.as_object_mut().expect("object output");
        map.insert(
            "table".into(),
            json!({
                "mu": table.mu,
                "rows": rows,
                "limit": rat(&table.limit),
                "bracket_low": rat(&table.bracket_low),
                "bracket_high": rat(&table.bracket_high),
            }),
        );
        let mut text = String::from("e,q,nu,scaled\n");
        for row in &table.rows {
            text.push_str(&format!(
                "{},{},{},{}\n",
                row.e,
                row.q,
                row.nu,
                to_fraction_string(&row.scaled)
            ));
        }
        csv = Some(text);
    } else if args.csv {
        return Err(Failure::Engine(Error::input(
            "--csv needs --table EMAX on this command",
        )));
    }
    Ok(Output { json: out, csv })
}

fn cmd_contraction(args: ContractionArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    match args.m {
        Some(raw) => {
            let beta = parse_one_monomial(&raw, ring.vars())?;
            let query = contraction_contains(&ring, &j, level, &beta)?;
            if args.verify {
                checks::verify_contraction_query(&ring, &j, level, &query)?;
            }
            Ok(Output::json(json!({
                "p": level.p(),
                "e": level.e(),
                "q": level.q(),
                "monomial": monomial_json(&query.beta, ring.vars()),
                "theta": monomial_json(&query.theta, ring.vars()),
                "alpha": monomial_json(&query.alpha, ring.vars()),
                "support": query.support.to_vec(),
                "colon_gens": query.colon_gens.iter().map(|g| monomial_json(g, ring.vars())).collect::<Vec<_>>(),
                "contained": query.contained,
            })))
        }
        None => {
            let je = contraction_ideal(&ring, &j, level)?;
            if args.verify {
                checks::verify_contraction_ideal(&ring, &j, level, &je)?;
            }
            Ok(Output::json(json!({
                "p": level.p(),
                "e": level.e(),
                "q": level.q(),
                "ideal": ideal_json(&je, ring.vars()),
            })))
        }
    }
}

fn cmd_core(args: CoreArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let result = cartier_core(&ring, &j)?;
    if args.verify {
        checks::verify_core(&ring, &j, &result.core)?;
    }
    let removed: Vec<Value> = result
        .removed
        .iter()
        .map(|r| {
            json!({
                "support": r.support.to_vec(),
                "round": r.round,
                "witness": monomial_json(&r.witness, ring.vars()),
            })
        })
        .collect();
    Ok(Output::json(json!({
        "core": ideal_json(&result.core, ring.vars()),
        "rounds": result.rounds,
        "removed": removed,
        "splitting_vars": result.splitting_vars.to_vec(),
        "splitting_names": names_of(ring.vars(), &result.splitting_vars),
    })))
}

fn cmd_compatible(args: CompatibleArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let report = is_uniformly_compatible(&ring, &j)?;
    if args.verify {
        checks::verify_compatible(&ring, &j, report.compatible)?;
    }
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "gen": monomial_json(&w.gen, ring.vars()),
                "colon_gens": w.colon_gens.iter().map(|g| monomial_json(g, ring.vars())).collect::<Vec<_>>(),
                "contained": w.contained,
            })
        })
        .collect();
    Ok(Output::json(json!({
        "compatible": report.compatible,
        "witnesses": witnesses,
    })))
}

fn cmd_b(args: BArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let record = b_value(&ring, &a, &j, level)?;
    if args.verify {
        checks::verify_b(&ring, &a, &j, level, record.b)?;
    }
    let mut out = json!({
        "p": record.p,
        "e": record.e,
        "q": record.q,
        "b": record.b,
        "scaled": rat(&record.scaled),
    });
    if args.approx {
        add_approx(&mut out, "scaled", &record.scaled);
    }
    Ok(Output::json(out))
}

fn cmd_cartier_threshold(args: CartierThresholdArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let record = cartier_threshold(&ring, &a, &j)?;
    if args.verify {
        checks::verify_cartier_threshold(&ring, &a, &j, &record.value)?;
    }
    let per_prime: Vec<Value> = record
        .per_prime
        .iter()
        .map(|t| {
            json!({
                "prime_vars": t.prime_vars.to_vec(),
                "prime_names": names_of(ring.vars(), &t.prime_vars),
                "local_vars": t.local_vars.to_vec(),
                "core_gens": t.core_gens.iter().map(|g| monomial_json(g, &t.local_vars)).collect::<Vec<_>>(),
                "splitting_vars": t.splitting_vars.to_vec(),
                "a_in_core": t.a_in_core,
                "contribution": rat(&t.contribution),
            })
        })
        .collect();
    let mut out = json!({
        "value": rat(&record.value),
        "degenerate": record.degenerate,
        "per_prime": per_prime,
    });
    if args.approx {
        add_approx(&mut out, "value", &record.value);
    }
    Ok(Output::json(out))
}

fn cmd_cartier_table(args: CartierTableArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let table = ct_sandwich_table(&ring, &a, &j, args.emax)?;
    if args.verify {
        checks::verify_cartier_table(&ring, &a, &j, &table)?;
    }
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            json!({
                "e": row.e,
                "q": row.q,
                "b": row.b,
                "b_scaled": rat(&row.b_scaled),
                "c_level": rat(&row.c_level),
                "c_scaled": rat(&row.c_scaled),
            })
        })
        .collect();
    let mut out = json!({
        "mu": table.mu,
        "ct": rat(&table.ct),
        "rows": rows,
    });
    if args.approx {
        add_approx(&mut out, "ct", &table.ct);
    }
    let mut text = String::from("e,q,b,b_scaled,c_level,c_scaled\n");
    for row in &table.rows {
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.e,
            row.q,
            row.b,
            to_fraction_string(&row.b_scaled),
            to_fraction_string(&row.c_level),
            to_fraction_string(&row.c_scaled)
        ));
    }
    Ok(Output { json: out, csv: Some(text) })
}

fn cmd_reg_limit(args: RegLimitArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let report = regularity_limit(&ring, &j)?;
    if args.verify {
        eprintln!("verify: no independent route for regularity results; skipped");
    }
    let argmax: Vec<Value> = report
        .argmax
        .iter()
        .map(|entry| {
            json!({
                "alpha": entry.alpha.to_vec(),
                "size": entry.size,
                "i": entry.i,
                "a": entry.a_value,
            })
        })
        .collect();
    let mut levels: Vec<Value> = Vec::new();
    for level in &report.finite_levels {
        let mut row = json!({ "e": level.e, "q": level.q, "value": rat(&level.value) });
        if args.approx {
            add_approx(&mut row, "value", &level.value);
        }
        levels.push(row);
    }
    // a-invariants of the quotient by j + relations, when that ideal is
    // still squarefree; minus infinity prints as "-inf".
    let full = j.sum(ring.defining_ideal());
    let quotient_a = if full.is_squarefree() && full.is_proper() {
        let table = a_invariants_squarefree(ring.p(), &full)?;
        Value::Array(
            table
                .values
                .iter()
                .map(|v| match v {
                    Some(a) => json!(a),
                    None => Value::String("-inf".into()),
                })
                .collect(),
        )
    } else {
        Value::Null
    };
    Ok(Output::json(json!({
        "limit": report.limit,
        "argmax": argmax,
        "i0_flagged": report.i0_flagged,
        "levels": levels,
        "quotient_a_invariants": quotient_a,
    })))
}

fn cmd_reg_table(args: RegTableArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let report = regularity_limit(&ring, &j)?;
    if args.verify {
        eprintln!("verify: no independent route for regularity results; skipped");
    }
    let mut rows: Vec<Value> = Vec::new();
    let mut text = String::from("e,q,value\n");
    for e in 0..=args.emax {
        let level = ring.level(e)?;
        let value = scaled_regularity_at_level(&ring, &j, level)?;
        let mut row = json!({ "e": e, "q": level.q(), "value": rat(&value) });
        if args.approx {
            add_approx(&mut row, "value", &value);
        }
        rows.push(row);
        text.push_str(&format!("{},{},{}\n", e, level.q(), to_fraction_string(&value)));
    }
    Ok(Output {
        json: json!({ "limit": report.limit, "rows": rows }),
        csv: Some(text),
    })
}

fn cmd_oracle_nu(args: OracleNuArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let budget = OracleBudget::from_env()?;
    let nu = bf_nu(&ring, &a, &j, level, &budget)?;
    Ok(Output::json(json!({
        "p": level.p(),
        "e": level.e(),
        "q": level.q(),
        "nu": nu,
    })))
}

fn cmd_oracle_je(args: OracleJeArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let beta = parse_one_monomial(&args.m, ring.vars())?;
    let budget = OracleBudget::from_env()?;
    let contained = bf_contraction_trace(&ring, &j, level, &beta, &budget)?;
    Ok(Output::json(json!({
        "p": level.p(),
        "e": level.e(),
        "q": level.q(),
        "monomial": monomial_json(&beta, ring.vars()),
        "contained": contained,
    })))
}

fn cmd_oracle_bracket(args: OracleBracketArgs) -> CmdResult {
    let ring = args.ring.load()?;
    let a = parse_ideal(&args.a, ring.vars())?;
    let j = parse_ideal(&args.j, ring.vars())?;
    let level = ring.level(args.e)?;
    let budget = OracleBudget::from_env()?;
    let bracket = bf_threshold_bracket(&ring, &a, &j, level, &budget)?;
    let mut out = json!({
        "p": bracket.p,
        "e": bracket.e,
        "q": bracket.q,
        "nu": bracket.nu,
        "lower": rat(&bracket.lower),
        "upper": rat(&bracket.upper),
    });
    if args.approx {
        add_approx(&mut out, "lower", &bracket.lower);
        add_approx(&mut out, "upper", &bracket.upper);
    }
    Ok(Output::json(out))
}
