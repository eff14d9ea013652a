//! Command-line front end. Every subcommand is a thin mapping onto one
//! library call; no arithmetic happens here. With `--json` each run prints a
//! single-line report
//!
//!   {"command": ..., "inputs": ..., "result": ..., "status": ...}
//!
//! with keys in fixed (sorted) order, so output is golden-file stable.
//! Exit codes: 0 ok (including an expected, detected erratum), 1 when a
//! check came back false, 2 for usage or domain errors.
//!
//! `ZECKIT_INDEX_CAP` overrides the process-wide index cap before dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, CheckStatus};
use crate::error::{Error, Result};
use crate::identity::{self, DiophantineKind, IdentityPattern};
use crate::quad::{self, PowerFamily, QuadInt, RingTag};
use crate::recurrence::{self, RatValue, RecurrenceSpec, SeqValue, SequenceFamily};
use crate::tiling;
use crate::zeck::{self, Representation};

/// Parses argv, runs one command, prints the report, returns the exit code.
/// The binary is nothing but `std::process::exit(run(args_os()))`.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    if let Ok(raw) = std::env::var("ZECKIT_INDEX_CAP") {
        match raw.trim().parse::<i64>() {
            Ok(cap) if cap >= 0 => {
                recurrence::set_index_cap(cap);
            }
            _ => {
                eprintln!("error: ZECKIT_INDEX_CAP must be a nonnegative integer, got {raw:?}");
                return 2;
            }
        }
    }
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; those exit 0.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(outcome) => outcome.emit(json),
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[derive(Parser)]
#[command(
    name = "zeckit",
    version,
    about = "Exact arithmetic for Fibonacci-like recurrences: evaluation, Zeckendorf codecs, \
             tiling oracles, quadratic-ring powers, and identity checking"
)]
struct Cli {
    /// Machine-readable one-line report instead of human output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a sequence at any signed index.
    Eval(EvalArgs),
    /// Encode an integer in Zeckendorf or negafibonacci form.
    Encode(EncodeArgs),
    /// Decode a representation (text like F[10]+F[8]+F[4], or JSON) back to its integer.
    Decode(DecodeArgs),
    /// Check an identity c*S(n) = sum S(n+e_i); symbolic proof first, numeric witness hunt on failure.
    Verify(VerifyArgs),
    /// Search for offset sets whose golden/silver power sum hits a target multiplier.
    Discover(DiscoverArgs),
    /// Generate the two-term identity c*S(n) = S(n+r) + S(n-r) for even r.
    Family(FamilyArgs),
    /// Colored board-tiling oracles.
    #[command(subcommand)]
    Tile(TileCmd),
    /// Arithmetic in Z[phi] and Z[sqrt2].
    #[command(subcommand)]
    Ring(RingCmd),
    /// Diophantine characterizations (Lucas/Fibonacci and Pell-Lucas/Pell).
    Diophantine(DioArgs),
    /// The shipped identity catalog.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args)]
struct EvalArgs {
    /// fibonacci | lucas | pell | pell-lucas | tiling | custom
    family: String,
    #[arg(allow_negative_numbers = true)]
    n: i64,
    /// Recurrence coefficients c1,c2,... (for tiling/custom families).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
    /// Initial values a0,a1,... (custom families only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    initials: Option<Vec<i64>>,
}

#[derive(Args)]
struct EncodeArgs {
    kind: KindArg,
    #[arg(allow_negative_numbers = true, value_parser = parse_bigint)]
    n: SeqValue,
}

#[derive(Args)]
struct DecodeArgs {
    /// Inline representation; omit and use --file to read it from disk.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    input: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// fibonacci | lucas | pell | pell-lucas | tiling | custom
    #[arg(long)]
    family: String,
    /// The multiplier c on the left-hand side.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
    mult: SeqValue,
    /// Right-hand side offsets, e.g. 1,-1,-2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    offsets: Vec<i64>,
    /// Claimed starting index (default: smallest n keeping all indices >= 0).
    #[arg(long, allow_negative_numbers = true)]
    min_n: Option<i64>,
    /// Skip the symbolic proof and sample the range directly.
    #[arg(long)]
    numeric: bool,
    /// lo,hi for the numeric check (default min_n,min_n+50).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    range: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    initials: Option<Vec<i64>>,
}

#[derive(Args)]
struct DiscoverArgs {
    #[arg(long)]
    family: PowFamArg,
    /// The multiplier whose power expansion is wanted.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
    target: SeqValue,
    /// Offsets are searched in [-window, window].
    #[arg(long, default_value_t = 8)]
    window: i64,
    /// Minimum spacing between chosen offsets (default 2 for fibonacci, 1 for pell).
    #[arg(long)]
    min_gap: Option<i64>,
}

#[derive(Args)]
struct FamilyArgs {
    /// fibonacci | lucas | pell | pell-lucas | tiling | custom (t = 1 required)
    family: String,
    /// Even shift r >= 2.
    #[arg(allow_negative_numbers = true)]
    r: i64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    initials: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum TileCmd {
    /// Number of tilings of an n-board, by streaming enumeration.
    Count(TileArgs),
    /// Every tiling of an n-board, sorted.
    List(TileArgs),
    /// Split the tilings of an n-board by breakability at cell m.
    Break(BreakArgs),
    /// Check the six-copies Pell map 6*p(n) = p(n+2) + p(n-2) explicitly.
    Bijection {
        n: u64,
    },
}

#[derive(Args)]
struct TileArgs {
    n: u64,
    /// fibonacci (1 square, 1 domino color) or pell (2 square colors).
    #[arg(long, default_value = "fibonacci")]
    board: String,
    /// Colors per tile length, overriding --board: 2,1 means 2 square colors, 1 domino color.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
}

#[derive(Args)]
struct BreakArgs {
    n: u64,
    /// Interior cell, 1 <= m < n.
    m: u64,
    #[arg(long, default_value = "fibonacci")]
    board: String,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum RingCmd {
    /// Integer power of the fundamental unit (phi, or 1+sqrt2).
    Pow {
        ring: RingArg,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        /// Also show a floating-point approximation (display only).
        #[arg(long)]
        approx: bool,
    },
    /// omega^r + omega^(-r); an integer exactly when r is even.
    LucasSum {
        family: PowFamArg,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Closed-form check: phi^n - phibar^n = sqrt5*F(n), and the Pell analogue.
    Binet {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Args)]
struct DioArgs {
    kind: DioArg,
    n: i64,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Verify every entry against its own metadata (errata must fail).
    Check {
        /// External catalog JSON instead of the shipped one.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Numeric check length per entry.
        #[arg(long, default_value_t = catalog::DEFAULT_SPAN)]
        span: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Zeckendorf,
    Negafibonacci,
}

impl KindArg {
    fn name(self) -> &'static str {
        match self {
            Self::Zeckendorf => "zeckendorf",
            Self::Negafibonacci => "negafibonacci",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingArg {
    Golden,
    Silver,
}

impl From<RingArg> for RingTag {
    fn from(value: RingArg) -> Self {
        match value {
            RingArg::Golden => RingTag::Golden,
            RingArg::Silver => RingTag::Silver,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PowFamArg {
    Fibonacci,
    Pell,
}

impl From<PowFamArg> for PowerFamily {
    fn from(value: PowFamArg) -> Self {
        match value {
            PowFamArg::Fibonacci => PowerFamily::Fibonacci,
            PowFamArg::Pell => PowerFamily::Pell,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DioArg {
    FibLucas,
    PellPellLucas,
}

impl From<DioArg> for DiophantineKind {
    fn from(value: DioArg) -> Self {
        match value {
            DioArg::FibLucas => DiophantineKind::FibLucas,
            DioArg::PellPellLucas => DiophantineKind::PellPellLucas,
        }
    }
}

fn parse_bigint(s: &str) -> std::result::Result<SeqValue, String> {
    s.trim()
        .parse::<SeqValue>()
        .map_err(|e| format!("not an integer: {e}"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
    ErratumDetected,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Failed => "failed",
            Self::ErratumDetected => "erratum-detected",
        }
    }

    fn exit_code(self) -> i32 {
        // A detected erratum is the expected outcome, not a failure.
        match self {
            Self::Ok | Self::ErratumDetected => 0,
            Self::Failed => 1,
        }
    }

    fn from_holds(holds: bool) -> Self {
        if holds {
            Self::Ok
        } else {
            Self::Failed
        }
    }
}

struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    status: Status,
    human: String,
}

impl Outcome {
    fn emit(self, as_json: bool) -> i32 {
        use std::io::Write;
        // Ignore write failures (e.g. a closed pipe): the exit code is the
        // contract, and panicking over `zeckit ... | head` helps nobody.
        let mut out = std::io::stdout().lock();
        let _ = if as_json {
            let report = json!({
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "status": self.status.as_str(),
            });
            writeln!(out, "{report}")
        } else {
            writeln!(out, "{}", self.human)
        };
        self.status.exit_code()
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Eval(args) => cmd_eval(args),
        Command::Encode(args) => cmd_encode(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Discover(args) => cmd_discover(args),
        Command::Family(args) => cmd_family(args),
        Command::Tile(cmd) => cmd_tile(cmd),
        Command::Ring(cmd) => cmd_ring(cmd),
        Command::Diophantine(args) => cmd_diophantine(args),
        Command::Catalog(cmd) => cmd_catalog(cmd),
    }
}

/// Maps CLI family names onto [`SequenceFamily`]. `tiling` takes its
/// initials from the tiling convention, so only --coeffs is consulted;
/// `custom` needs both flags.
fn resolve_family(
    name: &str,
    coeffs: Option<&[i64]>,
    initials: Option<&[i64]>,
) -> Result<SequenceFamily> {
    match name {
        "fibonacci" => Ok(SequenceFamily::Fibonacci),
        "lucas" => Ok(SequenceFamily::Lucas),
        "pell" => Ok(SequenceFamily::Pell),
        "pell-lucas" => Ok(SequenceFamily::PellLucas),
        "tiling" => {
            let c = coeffs.ok_or(Error::InvalidArgument("the tiling family needs --coeffs"))?;
            Ok(SequenceFamily::TilingOf(RecurrenceSpec::tiling_from_ints(
                c,
            )?))
        }
        "custom" => {
            let c = coeffs.ok_or(Error::InvalidArgument(
                "a custom family needs --coeffs and --initials",
            ))?;
            let i = initials.ok_or(Error::InvalidArgument(
                "a custom family needs --coeffs and --initials",
            ))?;
            Ok(SequenceFamily::Custom(RecurrenceSpec::from_ints(c, i)?))
        }
        other => Err(Error::InvalidSpec(format!(
            "unknown family '{other}' (expected fibonacci, lucas, pell, pell-lucas, tiling, or custom)"
        ))),
    }
}

fn big_json(v: &SeqValue) -> Value {
    Value::Number(v.to_string().parse().expect("integer is a JSON number"))
}

/// Integers become JSON numbers; proper fractions become "p/q" strings.
fn rat_json(v: &RatValue) -> Value {
    if v.is_integer() {
        big_json(&v.to_integer())
    } else {
        Value::String(v.to_string())
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn attach_spec_inputs(inputs: &mut Value, coeffs: &Option<Vec<i64>>, initials: &Option<Vec<i64>>) {
    let map = inputs.as_object_mut().expect("inputs is an object");
    if let Some(c) = coeffs {
        map.insert("coeffs".into(), json!(c));
    }
    if let Some(i) = initials {
        map.insert("initials".into(), json!(i));
    }
}

fn yn(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

/// Display name of the fundamental unit whose powers `ring pow` and
/// `ring lucas-sum` take (not the ring's radical).
fn unit_symbol(tag: RingTag) -> &'static str {
    match tag {
        RingTag::Golden => "φ",
        RingTag::Silver => "(1+√2)",
    }
}

fn cmd_eval(args: EvalArgs) -> Result<Outcome> {
    let family = resolve_family(&args.family, args.coeffs.as_deref(), args.initials.as_deref())?;
    let value = recurrence::eval(&family, args.n)?;
    let mut inputs = json!({ "family": args.family, "n": args.n });
    attach_spec_inputs(&mut inputs, &args.coeffs, &args.initials);
    Ok(Outcome {
        command: "eval",
        inputs,
        result: json!({ "value": rat_json(&value) }),
        status: Status::Ok,
        human: value.to_string(),
    })
}

fn cmd_encode(args: EncodeArgs) -> Result<Outcome> {
    let rep = match args.kind {
        KindArg::Zeckendorf => zeck::zeck_encode(&args.n)?,
        KindArg::Negafibonacci => zeck::nega_encode(&args.n),
    };
    let text = rep.to_string();
    Ok(Outcome {
        command: "encode",
        inputs: json!({ "kind": args.kind.name(), "n": big_json(&args.n) }),
        result: json!({
            "representation": to_json(&rep),
            "text": text,
            "value": big_json(&args.n),
        }),
        status: Status::Ok,
        human: text,
    })
}

fn cmd_decode(args: DecodeArgs) -> Result<Outcome> {
    let (text, inputs) = match (&args.input, &args.file) {
        (Some(inline), None) => (inline.clone(), json!({ "input": inline })),
        (None, Some(path)) => {
            let content = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            (content, json!({ "file": path.display().to_string() }))
        }
        _ => unreachable!("clap enforces exactly one input source"),
    };
    let trimmed = text.trim();
    let rep: Representation = if trimmed.starts_with('{') {
        serde_json::from_str(trimmed)
            .map_err(|e| Error::InvalidRepresentation(format!("bad JSON: {e}")))?
    } else {
        trimmed.parse()?
    };
    let value = zeck::decode(&rep)?;
    Ok(Outcome {
        command: "decode",
        inputs,
        result: json!({ "representation": to_json(&rep), "value": big_json(&value) }),
        status: Status::Ok,
        human: value.to_string(),
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome> {
    let family = resolve_family(&args.family, args.coeffs.as_deref(), args.initials.as_deref())?;
    let mut pattern = IdentityPattern::new(family, args.mult.clone(), args.offsets.clone())?;
    if let Some(m) = args.min_n {
        pattern = pattern.with_min_n(m);
    }
    let (lo, hi) = match &args.range {
        Some(r) if r.len() == 2 && r[0] <= r[1] => (r[0], r[1]),
        Some(_) => return Err(Error::InvalidArgument("--range takes lo,hi with lo <= hi")),
        None => (pattern.min_n(), pattern.min_n() + 50),
    };

    // Symbolic is a proof over the whole range, so a passing symbolic check
    // needs no sampling; a failing one still gets a numeric pass to surface
    // a concrete witness.
    let second_order = pattern.family().spec().order() == 2;
    let symbolic = if second_order && !args.numeric {
        Some(identity::verify_symbolic(&pattern)?)
    } else {
        None
    };
    let numeric = match &symbolic {
        Some(v) if v.holds => None,
        _ => Some(identity::verify_numeric(&pattern, lo, hi)?),
    };
    let holds = symbolic.as_ref().map_or(true, |v| v.holds)
        && numeric.as_ref().map_or(true, |v| v.holds);

    let mut human = pattern.to_string();
    if let Some(v) = &symbolic {
        human.push_str(if v.holds {
            "\nsymbolic: holds"
        } else {
            "\nsymbolic: fails"
        });
    }
    if let Some(v) = &numeric {
        match &v.witness {
            None => human.push_str(&format!("\nnumeric on [{lo}, {hi}]: holds")),
            Some(w) => human.push_str(&format!(
                "\nnumeric on [{lo}, {hi}]: fails at n = {} (lhs {}, rhs {})",
                w.n, w.lhs, w.rhs
            )),
        }
    }

    let mut inputs = json!({
        "family": args.family,
        "min_n": args.min_n,
        "mult": big_json(&args.mult),
        "numeric": args.numeric,
        "offsets": args.offsets,
        "range": [lo, hi],
    });
    attach_spec_inputs(&mut inputs, &args.coeffs, &args.initials);
    Ok(Outcome {
        command: "verify",
        inputs,
        result: json!({
            "holds": holds,
            "numeric": to_json(&numeric),
            "pattern": to_json(&pattern),
            "symbolic": to_json(&symbolic),
        }),
        status: Status::from_holds(holds),
        human,
    })
}

fn cmd_discover(args: DiscoverArgs) -> Result<Outcome> {
    let family: PowerFamily = args.family.into();
    let hits = match args.min_gap {
        Some(gap) => identity::discover_with_gap(family, &args.target, args.window, gap)?,
        None => identity::discover(family, &args.target, args.window)?,
    };
    let human = if hits.is_empty() {
        format!("no offset sets found within window {}", args.window)
    } else {
        hits.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(Outcome {
        command: "discover",
        inputs: json!({
            "family": family,
            "min_gap": args.min_gap,
            "target": big_json(&args.target),
            "window": args.window,
        }),
        result: json!({ "count": hits.len(), "patterns": to_json(&hits) }),
        status: Status::Ok,
        human,
    })
}

fn cmd_family(args: FamilyArgs) -> Result<Outcome> {
    let family = resolve_family(&args.family, args.coeffs.as_deref(), args.initials.as_deref())?;
    let pattern = identity::family_generate(&family, args.r)?;
    let text = pattern.to_string();
    let mut inputs = json!({ "family": args.family, "r": args.r });
    attach_spec_inputs(&mut inputs, &args.coeffs, &args.initials);
    Ok(Outcome {
        command: "family",
        inputs,
        result: json!({ "pattern": to_json(&pattern), "text": text }),
        status: Status::Ok,
        human: text,
    })
}

fn board_spec(board: &str, coeffs: Option<&[i64]>) -> Result<RecurrenceSpec> {
    if let Some(c) = coeffs {
        return RecurrenceSpec::tiling_from_ints(c);
    }
    match board {
        "fibonacci" => Ok(tiling::fibonacci_board_spec()),
        "pell" => Ok(tiling::pell_board_spec()),
        other => Err(Error::InvalidSpec(format!(
            "unknown board '{other}' (expected fibonacci or pell, or give --coeffs)"
        ))),
    }
}

fn tile_inputs(n: u64, board: &str, coeffs: &Option<Vec<i64>>) -> Value {
    let mut inputs = json!({ "board": board, "n": n });
    attach_spec_inputs(&mut inputs, coeffs, &None);
    inputs
}

fn cmd_tile(cmd: TileCmd) -> Result<Outcome> {
    match cmd {
        TileCmd::Count(args) => {
            let spec = board_spec(&args.board, args.coeffs.as_deref())?;
            let count = tiling::count(&spec, args.n)?;
            Ok(Outcome {
                command: "tile count",
                inputs: tile_inputs(args.n, &args.board, &args.coeffs),
                result: json!({ "count": big_json(&count), "n": args.n }),
                status: Status::Ok,
                human: count.to_string(),
            })
        }
        TileCmd::List(args) => {
            let spec = board_spec(&args.board, args.coeffs.as_deref())?;
            let tilings = tiling::enumerate(&spec, args.n)?;
            let human = tilings
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                command: "tile list",
                inputs: tile_inputs(args.n, &args.board, &args.coeffs),
                result: json!({ "count": tilings.len(), "tilings": to_json(&tilings) }),
                status: Status::Ok,
                human,
            })
        }
        TileCmd::Break(args) => {
            let spec = board_spec(&args.board, args.coeffs.as_deref())?;
            let part = tiling::break_at(&spec, args.n, args.m)?;
            let (b, u) = (part.breakable.len(), part.unbreakable.len());
            let mut inputs = tile_inputs(args.n, &args.board, &args.coeffs);
            inputs
                .as_object_mut()
                .expect("inputs is an object")
                .insert("m".into(), json!(args.m));
            Ok(Outcome {
                command: "tile break",
                inputs,
                result: json!({
                    "breakable": to_json(&part.breakable),
                    "breakable_count": b,
                    "cell": part.cell,
                    "unbreakable": to_json(&part.unbreakable),
                    "unbreakable_count": u,
                }),
                status: Status::Ok,
                human: format!(
                    "cell {}: {b} breakable + {u} unbreakable = {} tilings",
                    part.cell,
                    b + u
                ),
            })
        }
        TileCmd::Bijection { n } => {
            let report = tiling::six_pell_bijection(n)?;
            let human = format!(
                "n = {}: 6·{} = {} + {}\ntotal {} | injective {} | surjective {} | round-trip {}\n{}",
                report.n,
                report.domain_size / 6,
                report.upper_size,
                report.lower_size,
                yn(report.total),
                yn(report.injective),
                yn(report.surjective),
                yn(report.round_trip),
                if report.holds {
                    "bijection holds"
                } else {
                    "bijection FAILS"
                },
            );
            Ok(Outcome {
                command: "tile bijection",
                inputs: json!({ "n": n }),
                result: to_json(&report),
                status: Status::from_holds(report.holds),
                human,
            })
        }
    }
}

fn cmd_ring(cmd: RingCmd) -> Result<Outcome> {
    match cmd {
        RingCmd::Pow { ring, r, approx } => {
            let tag: RingTag = ring.into();
            let value = QuadInt::omega(tag).pow(r)?;
            let text = value.to_string();
            let mut result = json!({
                "a": big_json(&value.a),
                "b": big_json(&value.b),
                "r": r,
                "ring": tag,
                "text": text,
            });
            let mut human = format!("{}^{} = {}", unit_symbol(tag), r, text);
            if approx {
                result
                    .as_object_mut()
                    .expect("result is an object")
                    .insert("approx".into(), json!(value.approx()));
                human.push_str(&format!(" ≈ {}", value.approx()));
            }
            Ok(Outcome {
                command: "ring pow",
                inputs: json!({ "approx": approx, "r": r, "ring": tag }),
                result,
                status: Status::Ok,
                human,
            })
        }
        RingCmd::LucasSum { family, r } => {
            let fam: PowerFamily = family.into();
            let sum = quad::lucas_power_sum(fam, r)?;
            let sym = unit_symbol(fam.ring());
            let human = if sum.holds {
                format!("{sym}^{r} + {sym}^{} = {}", -r, sum.value)
            } else {
                let full = QuadInt::new(fam.ring(), sum.value.clone(), sum.omega_coefficient.clone());
                format!("{sym}^{r} + {sym}^{} = {full} (not an integer)", -r)
            };
            Ok(Outcome {
                command: "ring lucas-sum",
                inputs: json!({ "family": fam, "r": r }),
                result: json!({
                    "holds": sum.holds,
                    "omega_coefficient": big_json(&sum.omega_coefficient),
                    "value": big_json(&sum.value),
                }),
                status: Status::from_holds(sum.holds),
                human,
            })
        }
        RingCmd::Binet { n } => {
            let holds = quad::binet_check(n)?;
            Ok(Outcome {
                command: "ring binet",
                inputs: json!({ "n": n }),
                result: json!({ "holds": holds, "n": n }),
                status: Status::from_holds(holds),
                human: if holds {
                    format!("closed forms agree at n = {n}")
                } else {
                    format!("closed forms DISAGREE at n = {n}")
                },
            })
        }
    }
}

fn cmd_diophantine(args: DioArgs) -> Result<Outcome> {
    let kind: DiophantineKind = args.kind.into();
    let holds = identity::diophantine_check(kind, args.n)?;
    Ok(Outcome {
        command: "diophantine",
        inputs: json!({ "kind": kind, "n": args.n }),
        result: json!({ "holds": holds, "kind": kind, "n": args.n }),
        status: Status::from_holds(holds),
        human: format!(
            "{kind} at n = {}: {}",
            args.n,
            if holds { "holds" } else { "fails" }
        ),
    })
}

fn cmd_catalog(cmd: CatalogCmd) -> Result<Outcome> {
    match cmd {
        CatalogCmd::Check { file, span } => {
            let entries = match &file {
                Some(path) => {
                    let content = std::fs::read_to_string(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    catalog::parse(&content)
                        .map_err(|e| Error::InvalidSpec(format!("catalog JSON: {e}")))?
                }
                None => catalog::builtin(),
            };
            let report = catalog::check_all(&entries, span)?;
            let status = match report.status {
                CheckStatus::Ok => Status::Ok,
                CheckStatus::Failed => Status::Failed,
                CheckStatus::ErratumDetected => Status::ErratumDetected,
            };
            let mut lines: Vec<String> = report
                .entries
                .iter()
                .map(|e| {
                    let tag = match e.status {
                        CheckStatus::Ok => "ok",
                        CheckStatus::Failed => "FAILED",
                        CheckStatus::ErratumDetected => "erratum-detected",
                    };
                    let mut line = format!("{:<6} {tag}", e.label);
                    if let Some(w) = &e.witness {
                        line.push_str(&format!(" (n = {}: lhs {}, rhs {})", w.n, w.lhs, w.rhs));
                    }
                    line
                })
                .collect();
            lines.push(format!(
                "{} entries: {} ok, {} erratum detected, {} failed",
                report.total, report.ok, report.errata_detected, report.failed
            ));
            Ok(Outcome {
                command: "catalog check",
                inputs: json!({
                    "file": file.as_ref().map(|p| p.display().to_string()),
                    "span": span,
                }),
                result: to_json(&report),
                status,
                human: lines.join("\n"),
            })
        }
    }
}
