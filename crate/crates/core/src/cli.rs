//! The `gysin` command line.
//!
//! Exit status: 0 on success, 1 when a verification (or inequality)
//! fails, 2 on malformed input or usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chow::{schur_det, ClassSeries, GeneratorTable, RingConfig, RingExt};
use crate::error::Error;
use crate::grass::{FiberedClass, GrassSetup};
use crate::ineq;
use crate::partition::{Partition, DEFAULT_SYT_CAP};
use crate::verify::{run_suite, CaseKind, SuiteConfig};

const MAX_RANK: u32 = 64;
const MAX_DIM: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Series {
    #[default]
    Chern,
    Segre,
}

#[derive(Debug, Parser)]
#[command(name = "gysin", version, about = "Exact push-forward calculus on Grassmann bundles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard Young tableau count by formula and by brute force.
    Syt {
        #[arg(long)]
        partition: String,
        /// Largest weight enumerated by brute force.
        #[arg(long, default_value_t = DEFAULT_SYT_CAP)]
        cap: usize,
    },
    /// Push a class on Gr_d(E) forward to the base.
    Pushforward {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        /// JSON class file (`-` for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Push forward χ^N instead of reading a file.
        #[arg(long = "N")]
        power: Option<u32>,
    },
    /// Run the verification suite.
    Verify {
        /// JSON suite config; defaults to the built-in sweep.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated case kinds.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        /// Show per-case wall time in table output.
        #[arg(long)]
        timings: bool,
    },
    /// Segre-class inequality values for a projective-bundle class.
    SegreIneq {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        /// Codimension of the class.
        #[arg(long = "N")]
        codim: u32,
        /// JSON intersection table.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print the expressions without evaluating.
        #[arg(long)]
        symbolic: bool,
    },
    /// Evaluate a Schur determinant on a generic Chern or Segre series.
    Schur {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: u32,
        /// Rank of E; defaults to n.
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value_t = Series::Chern)]
        series: Series,
    },
}

/// Failure carrying its exit status.
#[derive(Debug)]
struct Fail {
    code: i32,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: 2,
        message: message.into(),
    }
}

struct Output {
    text: String,
    code: i32,
}

/// Parses `args` (including the program name), runs the command, writes
/// to the process's stdout/stderr and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout(), &mut io::stderr())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &output.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(output.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(err, "error: {msg}");
                return 2;
            }
            output.code
        }
        Err(fail) => {
            let _ = writeln!(err, "error: {}", fail.message);
            fail.code
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Fail> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: invalid JSON: {e}", path.display())))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn check_rank(r: u32) -> Result<(), Fail> {
    if r > MAX_RANK {
        return Err(usage(format!("rank r = {r} exceeds the supported maximum {MAX_RANK}")));
    }
    Ok(())
}

fn check_dim(n: u32) -> Result<(), Fail> {
    if n > MAX_DIM {
        return Err(usage(format!("dimension n = {n} exceeds the supported maximum {MAX_DIM}")));
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Fail> {
    let p: Partition = s.parse()?;
    if p.len() > 63 {
        return Err(usage("partitions longer than 63 rows are not supported"));
    }
    Ok(p)
}

fn execute(cli: &Cli) -> Result<Output, Fail> {
    match &cli.command {
        Command::Syt { partition, cap } => cmd_syt(partition, *cap, cli.format),
        Command::Pushforward {
            r,
            d,
            n,
            input,
            power,
        } => cmd_pushforward(*r, *d, *n, input.as_deref(), *power, cli.format),
        Command::Verify {
            input,
            only,
            r,
            d,
            timings,
        } => cmd_verify(input.as_deref(), only.as_deref(), *r, *d, *timings, cli.format),
        Command::SegreIneq {
            r,
            n,
            codim,
            input,
            symbolic,
        } => cmd_segre_ineq(*r, *n, *codim, input.as_deref(), *symbolic, cli.format),
        Command::Schur {
            partition,
            n,
            r,
            series,
        } => cmd_schur(partition, *n, r.unwrap_or(*n), *series, cli.format),
    }
}

fn cmd_syt(partition: &str, cap: usize, format: Format) -> Result<Output, Fail> {
    let lambda = parse_partition(partition)?;
    let formula = lambda.syt_count_formula();
    let brute = match lambda.syt_count_bruteforce(cap) {
        Ok(b) => Some(b),
        Err(Error::EnumerationCap { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let agree = brute.as_ref().is_none_or(|b| *b == formula);
    let text = match format {
        Format::Json => json_text(&json!({
            "partition": lambda,
            "formula": formula.to_string(),
            "bruteforce": brute.as_ref().map(|b| b.to_string()),
            "agree": agree,
        })),
        Format::Table => {
            let brute_text = brute
                .as_ref()
                .map_or_else(|| format!("skipped (weight > cap {cap})"), |b| b.to_string());
            format!("partition    {lambda}\nformula      {formula}\nbrute force  {brute_text}\n")
        }
    };
    Ok(Output {
        text,
        code: if agree { 0 } else { 1 },
    })
}

fn cmd_pushforward(
    r: u32,
    d: u32,
    n: u32,
    input: Option<&Path>,
    power: Option<u32>,
    format: Format,
) -> Result<Output, Fail> {
    check_rank(r)?;
    check_dim(n)?;
    let setup = GrassSetup::new(n, r, d)?;
    let (ring, class) = match (input, power) {
        (Some(_), Some(_)) => return Err(usage("give either --input or --N, not both")),
        (None, None) => return Err(usage("pushforward needs --input or --N")),
        (None, Some(k)) => {
            let ring = GeneratorTable::chern(r, n);
            // beyond this the push-forward lands above the truncation degree
            let class = if k > setup.reldim() + n {
                FiberedClass::zero(&ring, d)
            } else {
                setup.chi(&ring).power(k)?
            };
            (ring, class)
        }
        (Some(path), None) => {
            let v = read_json(path)?;
            match &v {
                Value::Array(_) => {
                    let ring = GeneratorTable::chern(r, n);
                    let class = FiberedClass::from_json(&ring, d, &v)?;
                    (ring, class)
                }
                Value::Object(obj) => {
                    let config: RingConfig = serde_json::from_value(
                        obj.get("ring").cloned().ok_or_else(|| usage("input object needs a `ring`"))?,
                    )
                    .map_err(|e| usage(format!("bad `ring`: {e}")))?;
                    if config.n != n {
                        return Err(usage(format!(
                            "ring truncation n = {} does not match --n {n}",
                            config.n
                        )));
                    }
                    let ring = GeneratorTable::from_config(config)?;
                    let class = FiberedClass::from_json(
                        &ring,
                        d,
                        obj.get("class").ok_or_else(|| usage("input object needs a `class`"))?,
                    )?;
                    (ring, class)
                }
                _ => return Err(usage("class input must be a JSON array or object")),
            }
        }
    };
    let segre = ClassSeries::chern(&ring, r)?.unsigned_segre();
    let result = setup.pushforward(&class, &segre)?;
    let text = match format {
        Format::Json => json_text(&json!({
            "setup": setup,
            "result": result.to_json(),
            "text": result.to_string(),
        })),
        Format::Table => format!("{result}\n"),
    };
    Ok(Output { text, code: 0 })
}

fn cmd_verify(
    input: Option<&Path>,
    only: Option<&str>,
    r: Option<u32>,
    d: Option<u32>,
    timings: bool,
    format: Format,
) -> Result<Output, Fail> {
    let mut config = match input {
        Some(path) => serde_json::from_value::<SuiteConfig>(read_json(path)?)
            .map_err(|e| usage(format!("bad suite config: {e}")))?,
        None => SuiteConfig::default(),
    };
    if let Some(list) = only {
        let kinds = list
            .split(',')
            .map(|s| CaseKind::parse(s.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        config.only = Some(kinds);
    }
    if let Some(r) = r {
        check_rank(r)?;
        config.r = Some(r);
        config.r_max = config.r_max.max(r);
        config.g_r_max = config.g_r_max.max(r);
        config.classical_r_max = config.classical_r_max.max(r);
    }
    if d.is_some() {
        config.d = d;
    }
    for bound in [config.r_max, config.g_r_max, config.classical_r_max] {
        check_rank(bound)?;
    }
    let report = run_suite(&config)?;
    let text = match format {
        Format::Json => {
            let mut s = report.to_json_string();
            s.push('\n');
            s
        }
        Format::Table => report.render_table(timings),
    };
    Ok(Output {
        text,
        code: if report.all_pass { 0 } else { 1 },
    })
}

fn cmd_segre_ineq(
    r: u32,
    n: u32,
    codim: u32,
    input: Option<&Path>,
    symbolic: bool,
    format: Format,
) -> Result<Output, Fail> {
    check_rank(r)?;
    check_dim(n)?;
    let ring = ineq::segre_ring(r, n, codim)?;
    if symbolic {
        let exprs = (1..=n)
            .map(|k| ineq::segre_lhs_symbolic(r, n, k, codim))
            .collect::<Result<Vec<_>, _>>()?;
        let text = match format {
            Format::Json => json_text(&Value::Array(
                exprs
                    .iter()
                    .zip(1..)
                    .map(|(e, k): (_, u32)| json!({ "k": k, "expression": e.to_string(), "terms": e.to_json() }))
                    .collect(),
            )),
            Format::Table => exprs
                .iter()
                .zip(1..)
                .map(|(e, k): (_, u32)| format!("k={k}  {e}\n"))
                .collect(),
        };
        return Ok(Output { text, code: 0 });
    }
    let path = input.ok_or_else(|| usage("segre-ineq needs --input (or --symbolic)"))?;
    let table = ineq::IntersectionTable::from_json(&ring, &read_json(path)?)?;
    let report = ineq::check_inequalities(r, n, codim, &table)?;
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&report).expect("report serializes")),
        Format::Table => {
            let mut s = String::new();
            for v in &report.values {
                let sign = if v.nonnegative { ">= 0" } else { "< 0  VIOLATION" };
                s.push_str(&format!("k={}  value={}  {sign}\n", v.k, v.value));
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if report.violations.is_empty() { 0 } else { 1 },
    })
}

fn cmd_schur(partition: &str, n: u32, r: u32, series: Series, format: Format) -> Result<Output, Fail> {
    check_rank(r)?;
    check_dim(n)?;
    let lambda = parse_partition(partition)?;
    let ring = GeneratorTable::chern(r, n);
    let c = ClassSeries::chern(&ring, r)?;
    let target = match series {
        Series::Chern => c,
        Series::Segre => c.unsigned_segre(),
    };
    let value = if lambda.weight() > n as usize {
        ring.zero()
    } else {
        schur_det(&lambda.padded(lambda.len()), &target)
    };
    let text = match format {
        Format::Json => json_text(&json!({
            "partition": lambda,
            "series": match series { Series::Chern => "chern", Series::Segre => "segre" },
            "result": value.to_json(),
            "text": value.to_string(),
        })),
        Format::Table => format!("{value}\n"),
    };
    Ok(Output { text, code: 0 })
}
