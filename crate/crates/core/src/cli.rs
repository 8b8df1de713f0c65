//! Command-line front end.
//!
//! Exit codes: 0 success, 2 inconsistent data (failed cross-check, golden
//! mismatch, corrupted word), 64 usage error, 65 domain error.

pub mod tables;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::codec;
use crate::codes::{code_pair, code_single, CodeDescriptor, CodeSpec};
use crate::distance;
use crate::error::Error;
use crate::gf::FieldSpec;
use crate::irred;
use crate::lrcopt::{self, ClassLabel};
use crate::oracle::{self, Check, Grid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;

const DEFAULT_ENUM_BUDGET: u128 = 1 << 20;

#[derive(Debug, Parser)]
#[command(name = "rrlrc", version, about = "Repeated-root constacyclic codes as locally repairable codes")]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration budget (number of candidates / words).
    #[arg(long, global = true, env = "LRC_BUDGET")]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Profile, bound and classes of a single-root code (or a pair code with --j).
    Analyze(CodeArgs),
    /// Profile, bound and classes of a pair-root code.
    AnalyzePair(PairArgs),
    /// All optimal single-root codes for fixed field, eta, s, lambda0.
    Enumerate(FamilyArgs),
    /// All optimal pair-root codes for fixed field, s, lambda0.
    EnumeratePair(PairFamilyArgs),
    /// Known optimal families a code belongs to.
    Classify(CodeArgs),
    /// Irreducibility of x^eta - a, with certificate.
    Irreducible(IrreducibleArgs),
    /// All eta up to --max with x^eta - a irreducible.
    AdmissibleEta(AdmissibleArgs),
    /// Systematically encode a message.
    Encode(EncodeArgs),
    /// Repair a single erasure.
    Repair(RepairArgs),
    /// Compare closed forms with brute-force oracles over a grid.
    Oracle(OracleArgs),
    /// Regenerate a reference table and diff it against golden data.
    Tables(TablesArgs),
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long = "p")]
    p: u64,
    /// Extension degree.
    #[arg(long = "m", default_value_t = 1)]
    m: u32,
    /// Modulus coefficients, low degree first, comma separated (default: smallest irreducible).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec, Error> {
        FieldSpec::new(self.p, self.m, self.modulus.as_deref())
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct LambdaArgs {
    /// lambda0 as an element repr.
    #[arg(long)]
    lambda0: Option<u32>,
    /// lambda0 as g^k for the smallest primitive element g.
    #[arg(long)]
    lambda0_power: Option<u64>,
}

impl LambdaArgs {
    fn resolve(&self, field: &FieldSpec) -> Result<u32, Error> {
        element(field, self.lambda0, self.lambda0_power, "--lambda0")
    }
}

fn element(field: &FieldSpec, repr: Option<u32>, power: Option<u64>, flag: &str) -> Result<u32, Error> {
    let v = match (repr, power) {
        (Some(v), _) => v,
        (None, Some(k)) => field.primitive_power(k),
        (None, None) => return Err(Error::InvalidParams(format!("{flag} or {flag}-power is required"))),
    };
    field.check(v)?;
    Ok(v)
}

#[derive(Debug, Args)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    s: u32,
    #[arg(long, default_value_t = 1)]
    eta: usize,
    #[command(flatten)]
    lambda: LambdaArgs,
    #[arg(long)]
    i: u64,
    /// Second exponent; selects the pair-root family.
    #[arg(long)]
    j: Option<u64>,
}

impl CodeArgs {
    fn code(&self) -> Result<CodeSpec, Error> {
        let field = self.field.field()?;
        let lambda0 = self.lambda.resolve(&field)?;
        match self.j {
            Some(j) => code_pair(&field, self.s, lambda0, self.i, j),
            None => code_single(&field, self.eta, self.s, lambda0, self.i),
        }
    }
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    s: u32,
    #[command(flatten)]
    lambda: LambdaArgs,
    #[arg(long)]
    i: u64,
    #[arg(long)]
    j: u64,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    s: u32,
    #[arg(long, default_value_t = 1)]
    eta: usize,
    #[command(flatten)]
    lambda: LambdaArgs,
}

#[derive(Debug, Args)]
struct PairFamilyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    s: u32,
    #[command(flatten)]
    lambda: LambdaArgs,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ElementArgs {
    /// The constant a as an element repr.
    #[arg(long)]
    a: Option<u32>,
    /// The constant as g^k for the smallest primitive element g.
    #[arg(long)]
    a_power: Option<u64>,
}

#[derive(Debug, Args)]
struct IrreducibleArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    a: ElementArgs,
    #[arg(long)]
    eta: u64,
}

#[derive(Debug, Args)]
struct AdmissibleArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    a: ElementArgs,
    #[arg(long)]
    max: u64,
}

/// A code given either as a JSON descriptor file or by flags.
#[derive(Debug, Args)]
struct CodeSource {
    /// JSON code descriptor (as printed under "code" by `analyze --json`).
    #[arg(long)]
    code: Option<PathBuf>,
    #[arg(long = "p", requires = "s")]
    p: Option<u64>,
    #[arg(long = "m", default_value_t = 1)]
    m: u32,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, default_value_t = 1)]
    eta: usize,
    #[arg(long, conflicts_with = "lambda0_power")]
    lambda0: Option<u32>,
    #[arg(long)]
    lambda0_power: Option<u64>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
}

impl CodeSource {
    fn code(&self) -> Result<CodeSpec, CliError> {
        if let Some(path) = &self.code {
            let text = read(path)?;
            let desc: CodeDescriptor = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            return Ok(CodeSpec::from_descriptor(&desc)?);
        }
        let (Some(p), Some(s), Some(i)) = (self.p, self.s, self.i) else {
            return Err(CliError::Usage("give --code FILE or --p, --s and --i".into()));
        };
        let field = FieldSpec::new(p, self.m, None)?;
        if self.lambda0.is_none() && self.lambda0_power.is_none() {
            return Err(CliError::Usage("--lambda0 or --lambda0-power is required".into()));
        }
        let lambda0 = element(&field, self.lambda0, self.lambda0_power, "--lambda0")?;
        Ok(match self.j {
            Some(j) => code_pair(&field, s, lambda0, i, j)?,
            None => code_single(&field, self.eta, s, lambda0, i)?,
        })
    }
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Message symbols, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "message_file")]
    message: Option<Vec<u32>>,
    /// File with one message symbol per line.
    #[arg(long)]
    message_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RepairArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Received word: one symbol per line, `?` marks the erasure.
    #[arg(long)]
    word: PathBuf,
    /// Treat this position as erased regardless of its content.
    #[arg(long)]
    erased: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Distance,
    Dual,
    Locality,
    Duality,
    Irreducible,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GridArg {
    Default,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    check: CheckArg,
    #[arg(long, value_enum, default_value = "default")]
    grid: GridArg,
}

#[derive(Debug, Args)]
struct TablesArgs {
    /// One of table1-instances, example-25, example-48, example-64, example-54.
    name: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(Error),
    /// Output already written; the data failed a consistency check.
    Inconsistent(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InconsistentWord | Error::Inconsistent(_) => CliError::Inconsistent(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(CliError::Inconsistent(msg)) => {
            let _ = writeln!(err, "inconsistent: {msg}");
            EXIT_INCONSISTENT
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}").map_err(|e| CliError::Usage(e.to_string()))
}

fn line(out: &mut dyn Write, text: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", text.as_ref()).map_err(|e| CliError::Usage(e.to_string()))
}

fn class_list(classes: &[ClassLabel]) -> String {
    if classes.is_empty() {
        "-".into()
    } else {
        classes.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let budget = cli.budget.unwrap_or(DEFAULT_ENUM_BUDGET);
    match &cli.command {
        Command::Analyze(args) => analyze(cli.json, &args.code()?, out),
        Command::AnalyzePair(args) => {
            let field = args.field.field()?;
            let lambda0 = args.lambda.resolve(&field)?;
            analyze(cli.json, &code_pair(&field, args.s, lambda0, args.i, args.j)?, out)
        }
        Command::Enumerate(args) => {
            let field = args.field.field()?;
            let lambda0 = args.lambda.resolve(&field)?;
            let found = lrcopt::enumerate_optimal_single(&field, args.eta, args.s, lambda0)?;
            let rows: Vec<_> = found
                .iter()
                .map(|(i, r)| {
                    let p = r.profile;
                    json!({"i": i, "n": p.n, "k": p.k, "d": p.d, "r": p.r, "classes": r.classes})
                })
                .collect();
            if cli.json {
                return emit(out, &rows);
            }
            line(out, format!("{:>6} {:>6} {:>6} {:>6} {:>6}  classes", "i", "n", "k", "d", "r"))?;
            for (i, r) in &found {
                let p = r.profile;
                line(out, format!("{i:>6} {:>6} {:>6} {:>6} {:>6}  {}", p.n, p.k, p.d, p.r, class_list(&r.classes)))?;
            }
            Ok(())
        }
        Command::EnumeratePair(args) => {
            let field = args.field.field()?;
            let lambda0 = args.lambda.resolve(&field)?;
            let result = lrcopt::enumerate_optimal_pair(&field, args.s, lambda0, budget)?;
            let rows: Vec<_> = result
                .optimal
                .iter()
                .map(|((i, j), r)| {
                    let p = r.profile;
                    json!({"i": i, "j": j, "n": p.n, "k": p.k, "d": p.d, "r": p.r, "classes": r.classes})
                })
                .collect();
            if cli.json {
                return emit(out, &json!({"optimal": rows, "findings": result.findings}));
            }
            line(out, format!("{:>6} {:>6} {:>6} {:>6} {:>6} {:>6}  classes", "i", "j", "n", "k", "d", "r"))?;
            for ((i, j), r) in &result.optimal {
                let p = r.profile;
                line(
                    out,
                    format!("{i:>6} {j:>6} {:>6} {:>6} {:>6} {:>6}  {}", p.n, p.k, p.d, p.r, class_list(&r.classes)),
                )?;
            }
            line(out, format!("optimal pairs outside the known families: {:?}", result.findings))
        }
        Command::Classify(args) => {
            let classes = lrcopt::classify(&args.code()?);
            if cli.json {
                emit(out, &classes)
            } else {
                line(out, class_list(&classes))
            }
        }
        Command::Irreducible(args) => {
            let field = args.field.field()?;
            let a = field.elem(element(&field, args.a.a, args.a.a_power, "--a")?)?;
            let irreducible = irred::binomial_irreducible(args.eta, &a)?;
            let certificate = irred::certificate(&a)?;
            if cli.json {
                return emit(out, &json!({"eta": args.eta, "irreducible": irreducible, "certificate": certificate}));
            }
            line(out, format!("x^{} - {} over {field}: {}", args.eta, a.repr(), if irreducible { "irreducible" } else { "reducible" }))?;
            line(out, format!("order e = {}", certificate.e))?;
            line(out, format!("q - 1 = {:?}", certificate.q_minus_1_factorization))?;
            line(out, format!("S = {:?}, e0 rule = {:?}", certificate.s, certificate.e0_rule))
        }
        Command::AdmissibleEta(args) => {
            let field = args.field.field()?;
            let a = field.elem(element(&field, args.a.a, args.a.a_power, "--a")?)?;
            let list = irred::admissible_eta(&a, args.max)?;
            if cli.json {
                emit(out, &list)
            } else {
                line(out, list.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            }
        }
        Command::Encode(args) => {
            let code = args.source.code()?;
            let message = match (&args.message, &args.message_file) {
                (Some(m), _) => m.clone(),
                (None, Some(path)) => parse_symbols(&read(path)?)?
                    .into_iter()
                    .map(|v| v.ok_or_else(|| CliError::Usage("message may not contain `?`".into())))
                    .collect::<Result<_, _>>()?,
                (None, None) => return Err(CliError::Usage("give --message or --message-file".into())),
            };
            let c = codec::encode(&code, &message)?;
            if cli.json {
                emit(out, &json!({"code": code, "codeword": c.coeffs()}))
            } else {
                c.coeffs().iter().try_for_each(|v| line(out, v.to_string()))
            }
        }
        Command::Repair(args) => {
            let code = args.source.code()?;
            let mut word = parse_symbols(&read(&args.word)?)?;
            if let Some(e) = args.erased {
                let slot = word
                    .get_mut(e)
                    .ok_or_else(|| CliError::Usage(format!("--erased {e} is outside the word")))?;
                *slot = None;
            }
            let erased = word.iter().position(Option::is_none);
            let repaired = codec::repair(&code, &word)?;
            if cli.json {
                let plan = erased.map(|e| codec::repair_plan(&code, e)).transpose()?;
                emit(out, &json!({"codeword": repaired.coeffs(), "plan": plan}))
            } else {
                repaired.coeffs().iter().try_for_each(|v| line(out, v.to_string()))
            }
        }
        Command::Oracle(args) => {
            let check = match args.check {
                CheckArg::Distance => Check::Distance,
                CheckArg::Dual => Check::Dual,
                CheckArg::Locality => Check::Locality,
                CheckArg::Duality => Check::Duality,
                CheckArg::Irreducible => Check::Irreducible,
            };
            let grid = match args.grid {
                GridArg::Default => Grid::default(),
            };
            let oracle_budget = cli.budget.unwrap_or(1 << 16);
            let report = oracle::run_check(check, &grid, oracle_budget)?;
            let mismatches = report.mismatches();
            if cli.json {
                emit(out, &report)?;
            } else {
                for r in &report.rows {
                    line(
                        out,
                        format!(
                            "{:<4} {:<50} expected {:<12} observed {}",
                            if r.pass { "ok" } else { "FAIL" },
                            r.subject,
                            r.expected,
                            r.observed
                        ),
                    )?;
                }
                line(
                    out,
                    format!(
                        "{} compared, {mismatches} mismatches, {} beyond budget",
                        report.rows.len(),
                        report.out_of_budget
                    ),
                )?;
            }
            if mismatches > 0 {
                return Err(CliError::Inconsistent(format!("{mismatches} oracle mismatches")));
            }
            Ok(())
        }
        Command::Tables(args) => {
            let report = tables::table(&args.name)?;
            if cli.json {
                emit(out, &report)?;
            } else {
                write!(out, "{}", report.render()).map_err(|e| CliError::Usage(e.to_string()))?;
            }
            if !report.matches {
                return Err(CliError::Inconsistent(format!("table {} differs from golden data", report.name)));
            }
            Ok(())
        }
    }
}

fn analyze(json: bool, code: &CodeSpec, out: &mut dyn Write) -> Result<(), CliError> {
    let report = lrcopt::check_optimal(code)?;
    let witness = distance::min_distance(code)?;
    let p = report.profile;
    if json {
        return emit(
            out,
            &json!({
                "code": code,
                "n": p.n, "k": p.k, "d": p.d, "d_dual": p.d_dual, "r": p.r,
                "d_bound": report.d_bound, "optimal": report.optimal, "classes": report.classes,
                "witness": witness.witness.coeffs(),
            }),
        );
    }
    line(out, format!("code      {code}"))?;
    line(out, format!("(n,k,d,r) ({},{},{},{})", p.n, p.k, p.d, p.r))?;
    line(out, format!("d_dual    {}", p.d_dual))?;
    line(out, format!("bound     {}", report.d_bound))?;
    line(out, format!("optimal   {}", report.optimal))?;
    line(out, format!("classes   {}", class_list(&report.classes)))
}

/// One symbol per non-empty line; `?` is an erasure.
fn parse_symbols(text: &str) -> Result<Vec<Option<u32>>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            if l == "?" {
                Ok(None)
            } else {
                l.parse::<u32>()
                    .map(Some)
                    .map_err(|_| CliError::Usage(format!("bad symbol `{l}`")))
            }
        })
        .collect()
}
