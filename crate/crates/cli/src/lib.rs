//! Command-line frontend for `skolem-core`: argument schema, dispatch and
//! report rendering. The binary is a thin wrapper around [`run`].

pub mod corpus;
pub mod parse;
mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skolem_core::skolem::{LinearLoop, LrsSpec, DEFAULT_PRECISION_CAP};
use skolem_core::spectral::SearchPredicate;
use skolem_core::{CancelToken, Error, IntPolynomial};

use parse::{parse_loop_file, parse_lrs_file, parse_polynomial, parse_polynomial_file, InputError};

pub use report::{strip_timings, Report};

pub const SCHEMA_VERSION: &str = "1";

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const INCOMPLETE: i32 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "skolem", version, about = "Zero sets, positivity and root structure of integer linear recurrences")]
#[command(arg_required_else_help = true)]
pub struct Cli {
    /// Emit a versioned JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Run every `.lrs` (skolem) and `.poly` (analyze) file in a directory.
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,

    /// Where corpus reports go (default: `<DIR>/reports`).
    #[arg(long, value_name = "DIR", requires = "corpus")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Modulus classes, H1/H2, degeneracy witnesses and circle structure of a polynomial.
    Analyze(PolyArg),
    /// Zero set of a recurrence given as a `.lrs` file.
    Skolem(SkolemArgs),
    /// Whether every term of a recurrence is nonnegative.
    Positivity(PositivityArgs),
    /// Galois group of a monic palindromic octic.
    Galois(GaloisArgs),
    /// Powers of a seed octic that keep H1, H2 and palindromy.
    Family(FamilyArgs),
    /// Exhaustive search of a coefficient box.
    Search(SearchArgs),
    /// Termination of a linear loop given as a loop file.
    Loop(LoopArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Skolem(_) => "skolem",
            Command::Positivity(_) => "positivity",
            Command::Galois(_) => "galois",
            Command::Family(_) => "family",
            Command::Search(_) => "search",
            Command::Loop(_) => "loop",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PolyArg {
    /// `x^2 - x - 1`, `[1,-1,-1]` (high to low), or a file holding either.
    pub polynomial: String,
}

#[derive(Debug, Clone, Args)]
pub struct SkolemArgs {
    /// Recurrence file: `rec: a_{d-1} ... a_0` and `init: X_0 ... X_{d-1}`.
    pub file: PathBuf,
    /// Search bound N used when no certificate covers the sequence.
    #[arg(long, default_value_t = 1000)]
    pub search: u64,
}

#[derive(Debug, Clone, Args)]
pub struct PositivityArgs {
    /// Recurrence file in the same format as `skolem`.
    pub file: PathBuf,
    /// Terms checked when no certificate applies.
    #[arg(long, default_value_t = 1000)]
    pub cap: u64,
}

#[derive(Debug, Clone, Args)]
pub struct GaloisArgs {
    /// Octic as `x^8 + ...` or a high-to-low list.
    pub polynomial: String,
    /// Report the quartic group even when H1/H2 fail.
    #[arg(long)]
    pub relaxed: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Seed octic.
    pub polynomial: String,
    #[arg(long, default_value_t = 5)]
    pub count: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredicateArg {
    H1h2,
    Order10,
}

impl From<PredicateArg> for SearchPredicate {
    fn from(p: PredicateArg) -> Self {
        match p {
            PredicateArg::H1h2 => SearchPredicate::H1AndH2,
            PredicateArg::Order10 => SearchPredicate::Order10PositivityPattern,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub degree: usize,
    /// Bound on the non-leading, non-constant coefficients.
    #[arg(long)]
    pub height: u64,
    /// Constant terms restricted to +-1.
    #[arg(long, conflicts_with = "constants")]
    pub unit_constant: bool,
    /// Comma-separated constant terms (default: every nonzero value within the height).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub constants: Vec<i64>,
    /// Only palindromic polynomials.
    #[arg(long)]
    pub palindromic: bool,
    #[arg(long, value_enum, default_value_t = PredicateArg::H1h2)]
    pub predicate: PredicateArg,
}

#[derive(Debug, Clone, Args)]
pub struct LoopArgs {
    /// Loop file: `A: row; row; ...`, `b: ...`, `w: ...`.
    pub file: PathBuf,
    #[arg(long, default_value_t = 1000)]
    pub search: u64,
}

/// Settings read from the environment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub precision_cap: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { precision_cap: DEFAULT_PRECISION_CAP }
    }
}

impl Settings {
    /// Reads `SKOLEM_PRECISION_CAP`.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var("SKOLEM_PRECISION_CAP") {
            Err(_) => Ok(Settings::default()),
            Ok(v) => match v.trim().parse::<u32>() {
                Ok(n) if n > 0 => Ok(Settings { precision_cap: n }),
                _ => Err(format!("SKOLEM_PRECISION_CAP must be a positive integer, got '{v}'")),
            },
        }
    }
}

/// A failed command, already classified by exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn from_core(e: &Error) -> Self {
        Failure { code: error_code(e), kind: error_kind(e).into(), message: e.to_string() }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Parse(p) => Failure { code: exit::PARSE, kind: "ParseError".into(), message: p.to_string() },
            InputError::Spec(e) => Failure::from_core(&e),
            InputError::Io { .. } => Failure { code: exit::PARSE, kind: "Io".into(), message: e.to_string() },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_core(&e)
    }
}

/// Exit code for a library error.
pub fn error_code(e: &Error) -> i32 {
    use Error::*;
    match e {
        ArityMismatch { .. } | ZeroTrailingCoefficient | EmptyRecurrence | DimensionMismatch(_) => exit::PARSE,
        ZeroPolynomial | NotMonic | ZeroConstantTerm | NotPalindromic | OddDegree | NotSquarefree
        | NotIrreducible | NotUnitConstant | DegreeTooSmall { .. } | NotQuartic | NotPalindromicOctic
        | PreconditionH1H2 { .. } | IndexOutOfRange { .. } | SingularLoop | NotReversible | NotDegenerate
        | PreconditionDominance(_) => exit::PRECONDITION,
        PrecisionExhausted(_) => exit::INCOMPLETE,
        TheoremViolation(_) | Cancelled | Internal(_) => exit::INTERNAL,
    }
}

fn error_kind(e: &Error) -> &'static str {
    use Error::*;
    match e {
        ZeroPolynomial => "ZeroPolynomial",
        NotMonic => "NotMonic",
        ZeroConstantTerm => "ZeroConstantTerm",
        NotPalindromic => "NotPalindromic",
        OddDegree => "OddDegree",
        NotSquarefree => "NotSquarefree",
        NotIrreducible => "NotIrreducible",
        NotUnitConstant => "NotUnitConstant",
        DegreeTooSmall { .. } => "DegreeTooSmall",
        NotQuartic => "NotQuartic",
        NotPalindromicOctic => "NotPalindromicOctic",
        PreconditionH1H2 { .. } => "PreconditionH1H2",
        IndexOutOfRange { .. } => "IndexOutOfRange",
        TheoremViolation(_) => "TheoremViolation",
        DimensionMismatch(_) => "DimensionMismatch",
        SingularLoop => "SingularLoop",
        NotReversible => "NotReversible",
        NotDegenerate => "NotDegenerate",
        PreconditionDominance(_) => "PreconditionDominance",
        ArityMismatch { .. } => "ArityMismatch",
        ZeroTrailingCoefficient => "ZeroTrailingCoefficient",
        EmptyRecurrence => "EmptyRecurrence",
        Cancelled => "Cancelled",
        PrecisionExhausted(_) => "PrecisionExhausted",
        Internal(_) => "Internal",
    }
}

/// A polynomial given inline or as the path of a file holding one.
fn load_polynomial(arg: &str) -> Result<IntPolynomial, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(parse_polynomial_file(path)?)
    } else {
        parse_polynomial(arg).map_err(|e| InputError::Parse(e).into())
    }
}

fn load_lrs(path: &Path) -> Result<LrsSpec, Failure> {
    Ok(parse_lrs_file(path)?)
}

fn load_loop(path: &Path) -> Result<LinearLoop, Failure> {
    Ok(parse_loop_file(path)?)
}

/// Runs one command and builds its report.
pub fn run_command(cmd: &Command, settings: Settings, cancel: &CancelToken) -> Report {
    let start = Instant::now();
    let input = report::input_echo(cmd);
    let outcome = match cmd {
        Command::Analyze(a) => load_polynomial(&a.polynomial).and_then(|f| report::analyze(&f)),
        Command::Skolem(a) => {
            load_lrs(&a.file).and_then(|s| report::skolem(&s, a.search, settings.precision_cap, cancel))
        }
        Command::Positivity(a) => {
            load_lrs(&a.file).and_then(|s| report::positivity(&s, a.cap, settings.precision_cap))
        }
        Command::Galois(a) => load_polynomial(&a.polynomial).and_then(|f| report::galois(&f, a.relaxed)),
        Command::Family(a) => load_polynomial(&a.polynomial).and_then(|f| report::family(&f, a.count)),
        Command::Search(a) => report::search(a, cancel),
        Command::Loop(a) => {
            load_loop(&a.file).and_then(|l| report::linear_loop(&l, a.search, settings.precision_cap, cancel))
        }
    };
    Report::new(cmd.name(), input, outcome, start.elapsed())
}

/// Parses `argv`, runs it and prints the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::PARSE } else { exit::OK };
        }
    };
    let settings = match Settings::from_env() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return exit::PARSE;
        }
    };
    let cancel = CancelToken::new();
    if cli.corpus.is_some() && cli.command.is_some() {
        eprintln!("error: --corpus cannot be combined with a subcommand");
        return exit::PARSE;
    }
    if let Some(dir) = &cli.corpus {
        let out = cli.out.clone().unwrap_or_else(|| dir.join("reports"));
        return match corpus::run_corpus(dir, &out, cli.json, settings, &cancel) {
            Ok(summary) => {
                print!("{}", summary.render());
                exit::OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit::PARSE
            }
        };
    }
    let Some(cmd) = cli.command else {
        eprintln!("error: a subcommand or --corpus is required (see --help)");
        return exit::PARSE;
    };
    let report = run_command(&cmd, settings, &cancel);
    if cli.json {
        println!("{}", report.to_json_string());
    } else {
        print!("{}", report.text());
    }
    report.exit_code()
}

pub(crate) fn big(n: impl ToString) -> Value {
    Value::String(n.to_string())
}

pub(crate) fn poly_json(f: &IntPolynomial) -> Value {
    json!({
        "text": f.to_string(),
        "coefficients": f.coeffs().iter().rev().map(big).collect::<Vec<_>>(),
    })
}
