//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 usage or invalid request, 2 data unavailable, 3 a
//! verification failed.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::asymptotics::{
    double_limit_table, limit_table, reference_volume, table_to_csv, table_to_json, RootSchedule,
};
use crate::catalog::{invariant_41_direct, Catalog, KnotRecord, Source};
use crate::complex::{with_consts, BigComplex, DEFAULT_PRECISION, RM};
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::lobachevsky::{lobachevsky, lobachevsky_pi_rational};
use crate::quantum::{tilde_coeff, Basis, CoeffQuery};
use crate::solver::{check_congruence_color, check_congruence_rank, rank_reduction_at_root, solve_hk};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qknot", version, about = "Cyclotomic expansions and root-of-unity asymptotics of SU(n) knot invariants")]
pub struct Cli {
    /// Working precision in bits for evaluations at roots of unity.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Knot catalog (JSON).
    #[arg(long, global = true, env = "QKNOT_CATALOG", default_value = "data/catalog.json")]
    pub catalog: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact J_N^{SU(n)} as a Laurent polynomial.
    Invariant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "N")]
        color: u32,
        /// Build 4_1 from its product sum instead of the cyclotomic expansion.
        #[arg(long)]
        direct: bool,
    },
    /// A single H_k^{(n)}.
    Hk {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        k: u32,
    },
    /// Recover H_0..H_M from J_0..J_M.
    Solve {
        #[command(flatten)]
        source: SequenceArgs,
        #[arg(long, value_enum, default_value_t = BasisArg::Cyclotomic)]
        basis: BasisArg,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Q-statistic convergence table.
    Limit {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        s: i64,
        /// Colors: comma list and/or ranges `start..end[:step]` (inclusive).
        #[arg(long = "N", value_delimiter = ',', required = true)]
        colors: Vec<String>,
        /// Use rank N + a + n at each row.
        #[arg(long)]
        double: bool,
        /// Add the knot's reference complex volume as extra columns.
        #[arg(long)]
        reference: bool,
    },
    /// The Lobachevsky function at radians `x` or at a multiple of pi such as `pi/3`, `5pi/6`.
    Lobachevsky {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    #[arg(long)]
    pub knot: String,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(long)]
    pub n: u32,
    /// Take J_0..J_M from this knot's catalog entry.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    pub knot: Option<String>,
    #[arg(long = "max-N", required_unless_present = "input")]
    pub max_color: Option<u32>,
    /// Read J_0..J_M from a JSON array of polynomials (term lists or text).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Cyclotomic,
    Tilde,
    Habiro,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Forward substitution must divide exactly at every step.
    Cyclotomic {
        #[command(flatten)]
        source: SequenceArgs,
    },
    /// Tilde coefficients are Laurent polynomials and the tilde-basis solve is integral.
    Tilde {
        #[command(flatten)]
        source: SequenceArgs,
    },
    /// [N-k][N+k+n] divides J_N - J_k for all 0 <= k < N <= max-N, or one pair.
    ColorCongruence {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "max-N", required_unless_present = "color")]
        max_color: Option<u32>,
        #[arg(long = "N", requires = "k")]
        color: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// [m] divides J_N^{SU(n)} - J_N^{SU(n-m)}.
    RankCongruence {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        m: u32,
        #[arg(long = "N")]
        color: u32,
    },
    /// Ranks n and n + N + a agree at the root where [N+a] vanishes.
    RankReduction {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "N")]
        color: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        s: i64,
    },
}

/// A failure already carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match &e {
            e if e.is_data_unavailable() => EXIT_DATA,
            Error::Catalog(_) => EXIT_DATA,
            _ => EXIT_USAGE,
        };
        Exit { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Exit {
    Exit { code: EXIT_USAGE, message: message.into() }
}

type Outcome = std::result::Result<i32, Exit>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn load_catalog(cli: &Cli) -> std::result::Result<Catalog, Exit> {
    Catalog::from_path(&cli.catalog).map_err(Exit::from)
}

fn knot<'c>(catalog: &'c Catalog, name: &str) -> std::result::Result<&'c KnotRecord, Exit> {
    catalog.get(name).map_err(Exit::from)
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json")).map_err(io_exit)?;
    Ok(EXIT_OK)
}

fn io_exit(e: std::io::Error) -> Exit {
    Exit { code: EXIT_USAGE, message: format!("cannot write output: {e}") }
}

fn emit_poly(cli: &Cli, out: &mut dyn Write, poly: &LaurentPoly) -> Outcome {
    match cli.format {
        Format::Json => emit_json(out, &json!(poly.to_string())),
        Format::Text => {
            writeln!(out, "{poly}").map_err(io_exit)?;
            Ok(EXIT_OK)
        }
        Format::Csv => Err(usage("csv output is only available for limit tables")),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Invariant { knot: k, color, direct } => {
            let catalog = load_catalog(cli)?;
            let record = knot(&catalog, &k.knot)?;
            let poly = if *direct {
                if record.source() != Source::ClosedForm41 {
                    return Err(usage("--direct is only defined for the figure-eight knot"));
                }
                invariant_41_direct(k.n, color + 1)?
            } else {
                record.invariant_poly(k.n, *color)?
            };
            emit_poly(cli, out, &poly)
        }
        Command::Hk { knot: k, k: depth } => {
            let catalog = load_catalog(cli)?;
            emit_poly(cli, out, &knot(&catalog, &k.knot)?.hk(k.n, *depth)?)
        }
        Command::Solve { source, basis } => {
            let js = sequence(cli, source)?;
            let basis = match basis {
                BasisArg::Cyclotomic => Basis::Cyclotomic { rank: source.n },
                BasisArg::Tilde => Basis::Tilde { rank: source.n },
                BasisArg::Habiro => Basis::Habiro,
            };
            if basis == Basis::Habiro && source.n != 2 {
                return Err(usage("the Habiro basis is for rank 2"));
            }
            let solution = solve_hk(&js, basis)?;
            match cli.format {
                Format::Json => emit_json(out, &serde_json::to_value(&solution).expect("json")),
                Format::Text => {
                    for e in &solution.entries {
                        if e.integral {
                            writeln!(out, "H_{} = {}", e.k, e.numerator)
                        } else {
                            writeln!(out, "H_{} = ({}) / ({})  [not integral]", e.k, e.numerator, e.denominator)
                        }
                        .map_err(io_exit)?;
                    }
                    Ok(EXIT_OK)
                }
                Format::Csv => Err(usage("csv output is only available for limit tables")),
            }
        }
        Command::Verify(v) => verify(cli, v, out),
        Command::Limit { knot: k, a, s, colors, double, reference } => {
            let catalog = load_catalog(cli)?;
            let record = knot(&catalog, &k.knot)?;
            let sched = RootSchedule::new(*a, *s, cli.precision)?;
            let colors = parse_colors(colors)?;
            let reference = if *reference { Some(reference_volume(&k.knot, cli.precision)?) } else { None };
            let rows = if *double {
                double_limit_table(record, k.n, &sched, &colors)
            } else {
                limit_table(record, k.n, &sched, &colors)
            };
            match cli.format {
                Format::Csv => write!(out, "{}", table_to_csv(&rows, reference.as_ref())).map_err(io_exit)?,
                Format::Json => {
                    emit_json(out, &table_to_json(&rows, reference.as_ref()))?;
                }
                Format::Text => {
                    for row in &rows {
                        match &row.sample {
                            Ok(q) => writeln!(out, "N={:<6} Q={}  log_ratio={}", row.color, q.q_step, q.log_ratio),
                            Err(e) => writeln!(out, "N={:<6} error: {e}", row.color),
                        }
                        .map_err(io_exit)?;
                    }
                }
            }
            if rows.is_empty() || rows.iter().any(|r| r.sample.is_ok()) {
                Ok(EXIT_OK)
            } else if rows.iter().all(|r| r.sample.as_ref().is_err_and(Error::is_data_unavailable)) {
                Ok(EXIT_DATA)
            } else {
                Ok(EXIT_USAGE)
            }
        }
        Command::Lobachevsky { x } => {
            let p = cli.precision.max(crate::complex::MIN_PRECISION);
            let value = match parse_pi_multiple(x) {
                Some((num, den)) => lobachevsky_pi_rational(num, den, p),
                None => {
                    let parsed = with_consts(|cc| astro_float::BigFloat::parse(x, astro_float::Radix::Dec, p + 64, RM, cc));
                    if parsed.is_nan() {
                        return Err(usage(format!("cannot read {x:?} as radians or a multiple of pi")));
                    }
                    lobachevsky(&parsed, p)
                }
            };
            let z = BigComplex::from_real(value, p);
            let decimal = z.to_decimal_string();
            let re = decimal.split(" + ").next().unwrap_or(&decimal).to_string();
            match cli.format {
                Format::Json => emit_json(out, &json!({ "x": x, "value": re, "approx": z.re_f64(), "precision_bits": p })),
                Format::Text => {
                    writeln!(out, "{re}").map_err(io_exit)?;
                    Ok(EXIT_OK)
                }
                Format::Csv => Err(usage("csv output is only available for limit tables")),
            }
        }
    }
}

fn sequence(cli: &Cli, source: &SequenceArgs) -> std::result::Result<Vec<LaurentPoly>, Exit> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Exit { code: EXIT_DATA, message: format!("cannot read {}: {e}", path.display()) })?;
        let values: Vec<serde_json::Value> =
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return values
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => s.parse::<LaurentPoly>(),
                other => LaurentPoly::from_json(other),
            })
            .collect::<Result<_, _>>()
            .map_err(Exit::from);
    }
    let catalog = load_catalog(cli)?;
    let record = knot(&catalog, source.knot.as_deref().expect("clap enforces --knot"))?;
    let top = source.max_color.expect("clap enforces --max-N");
    (0..=top).map(|c| record.invariant_poly(source.n, c)).collect::<Result<_, _>>().map_err(Exit::from)
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    check: &'static str,
    holds: bool,
    #[serde(flatten)]
    detail: T,
}

fn finish<T: Serialize>(out: &mut dyn Write, cli: &Cli, check: &'static str, holds: bool, detail: T) -> Outcome {
    let report = Report { check, holds, detail };
    match cli.format {
        Format::Text => writeln!(out, "{check}: {}", if holds { "holds" } else { "FAILED" }).map_err(io_exit)?,
        _ => {
            emit_json(out, &serde_json::to_value(&report).expect("json"))?;
        }
    }
    Ok(if holds { EXIT_OK } else { EXIT_CHECK })
}

fn verify(cli: &Cli, cmd: &VerifyCommand, out: &mut dyn Write) -> Outcome {
    if cli.format == Format::Csv {
        return Err(usage("csv output is only available for limit tables"));
    }
    match cmd {
        VerifyCommand::Cyclotomic { source } => {
            let js = sequence(cli, source)?;
            match solve_hk(&js, Basis::Cyclotomic { rank: source.n }) {
                Ok(sol) => finish(out, cli, "cyclotomic", sol.all_integral(), json!({ "solution": sol })),
                Err(Error::BadNormalization(found)) => {
                    finish(out, cli, "cyclotomic", false, json!({ "reason": "J_0 != 1", "J_0": found }))
                }
                Err(e) => Err(e.into()),
            }
        }
        VerifyCommand::Tilde { source } => {
            let js = sequence(cli, source)?;
            let top = js.len().saturating_sub(1) as u32;
            let mut failures = Vec::new();
            for color in 0..=top {
                for k in 0..=color {
                    match tilde_coeff(&CoeffQuery::new(color, k, source.n)?) {
                        Ok(_) => {}
                        Err(Error::NotDivisible { .. }) => failures.push(json!({ "N": color, "k": k })),
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            match solve_hk(&js, Basis::Tilde { rank: source.n }) {
                Ok(sol) => {
                    let holds = failures.is_empty() && sol.all_integral();
                    finish(out, cli, "tilde", holds, json!({ "non_integral_coefficients": failures, "solution": sol }))
                }
                Err(Error::BadNormalization(found)) => {
                    finish(out, cli, "tilde", false, json!({ "reason": "J_0 != 1", "J_0": found }))
                }
                Err(e) => Err(e.into()),
            }
        }
        VerifyCommand::ColorCongruence { knot: k, max_color, color, k: depth } => {
            let catalog = load_catalog(cli)?;
            let record = knot(&catalog, &k.knot)?;
            let pairs: Vec<(u32, u32)> = match (color, depth) {
                (Some(c), Some(d)) => vec![(*c, *d)],
                _ => {
                    let top = max_color.expect("clap enforces --max-N");
                    (1..=top).flat_map(|c| (0..c).map(move |d| (c, d))).collect()
                }
            };
            let mut witnesses = Vec::new();
            for (c, d) in pairs {
                let w = check_congruence_color(record, k.n, c, d)?;
                witnesses.push(json!({ "N": c, "k": d, "witness": w }));
            }
            let holds = witnesses.iter().all(|w| w["witness"]["holds"] == json!(true));
            finish(out, cli, "color-congruence", holds, json!({ "knot": k.knot, "n": k.n, "witnesses": witnesses }))
        }
        VerifyCommand::RankCongruence { knot: k, m, color } => {
            let catalog = load_catalog(cli)?;
            let w = check_congruence_rank(knot(&catalog, &k.knot)?, k.n, *m, *color)?;
            let holds = w.holds;
            finish(out, cli, "rank-congruence", holds, json!({ "knot": k.knot, "n": k.n, "m": m, "N": color, "witness": w }))
        }
        VerifyCommand::RankReduction { knot: k, color, a, s } => {
            let catalog = load_catalog(cli)?;
            let record = knot(&catalog, &k.knot)?;
            let sched = RootSchedule::new(*a, *s, cli.precision)?;
            let big = i64::from(k.n) + i64::from(*color) + a;
            let big = u32::try_from(big).map_err(|_| usage(format!("rank n + N + a = {big} is negative")))?;
            let r = rank_reduction_at_root(record, big, k.n, *color, &sched)?;
            let bound = -(cli.precision as f64 - 16.0);
            let holds = r.residual_log2() < bound;
            finish(
                out,
                cli,
                "rank-reduction",
                holds,
                json!({
                    "knot": k.knot, "n_small": k.n, "n_big": big, "N": color, "a": a, "s": s,
                    "residual_log2": if r.residual == 0.0 { None } else { Some(r.residual_log2()) },
                    "bound_log2": bound,
                }),
            )
        }
    }
}

/// `pi`, `pi/3`, `5pi/6`, `-2*pi/7`, `0`.
fn parse_pi_multiple(text: &str) -> Option<(i64, i64)> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" {
        return Some((0, 1));
    }
    let at = t.find("pi")?;
    let (head, tail) = (&t[..at], &t[at + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let num = match head {
        "" => 1,
        "-" => -1,
        h => h.parse().ok()?,
    };
    let den = match tail {
        "" => 1,
        t => t.strip_prefix('/')?.parse().ok()?,
    };
    (den != 0).then_some((num, den))
}

fn parse_colors(items: &[String]) -> std::result::Result<Vec<u32>, Exit> {
    let mut out = Vec::new();
    for item in items {
        let item = item.trim();
        if let Some((start, rest)) = item.split_once("..") {
            let (end, step) = rest.split_once(':').unwrap_or((rest, "1"));
            let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| usage(format!("bad color range {item:?}")));
            let (start, end, step) = (parse(start)?, parse(end)?, parse(step)?);
            if step == 0 {
                return Err(usage("range step must be positive"));
            }
            out.extend((start..=end).step_by(step as usize));
        } else {
            out.push(item.parse().map_err(|_| usage(format!("bad color {item:?}")))?);
        }
    }
    Ok(out)
}
