//! Command-line front end. Exit codes: 0 success, 1 a verification failed,
//! 2 usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::abacus::{core_charges, decompose};
use crate::error::Error;
use crate::partitions::{color_weight, ColoringContext, Partition};
use crate::table::{cmd_table, OutputFormat, TableRequest};
use crate::verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "colored-partitions",
    version,
    about = "Generating series of diagonally colored Young diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficient table of the series of colored diagram tuples. The
    /// coefficient of q^v is the Euler characteristic of the quiver variety
    /// M(v, w), where w counts the offsets of each color.
    Table {
        #[arg(long)]
        n: usize,
        /// One offset per diagram, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Same table, indexed by the framing dimension vector w instead of offsets
    Euler {
        /// Dimension vector w_0,...,w_{n-1}
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<usize>,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run identity checks
    Verify {
        /// theorem1, products, jacobi, core-quotient, frobenius or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Core, quotient and charges of one partition
    Core {
        /// Comma separated parts, "" for the empty partition
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        a: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Table {
            n,
            offsets,
            max_degree,
            format,
        } => {
            let req = TableRequest::new(n, offsets, max_degree, format.into())?;
            let _ = write!(out, "{}", cmd_table(&req)?);
            Ok(EXIT_OK)
        }
        Command::Euler {
            w,
            max_degree,
            format,
        } => {
            let req = TableRequest::for_dimension_vector(&w, max_degree, format.into())?;
            let _ = write!(out, "{}", cmd_table(&req)?);
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            n_max,
            max_degree,
        } => {
            let suite: Suite = suite.parse().map_err(Error::UnknownSuite)?;
            let outcomes = run_suite(suite, VerifyOptions { n_max, max_degree })?;
            for o in &outcomes {
                let _ = writeln!(out, "{o}");
            }
            let mut all_passed = true;
            for s in Suite::EACH {
                let mine: Vec<_> = outcomes.iter().filter(|o| o.suite == s).collect();
                if mine.is_empty() {
                    continue;
                }
                let passed = mine.iter().filter(|o| o.passed).count();
                all_passed &= passed == mine.len();
                let _ = writeln!(
                    out,
                    "suite {}: {}/{} passed{}",
                    s.name(),
                    passed,
                    mine.len(),
                    if passed == mine.len() { "" } else { " FAILED" }
                );
            }
            Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Core { partition, n, a } => {
            let p: Partition = partition.parse()?;
            let ctx = ColoringContext::new(n, a)?;
            let (report, ok) = core_report(&p, &ctx);
            let _ = write!(out, "{report}");
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn vector<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Text report for the `core` subcommand, and whether both weight checks held.
pub fn core_report(p: &Partition, ctx: &ColoringContext) -> (String, bool) {
    let n = ctx.modulus();
    let cq = decompose(p, n);
    let wp = color_weight(p, ctx);
    let wc = color_weight(&cq.core, ctx);
    let qw = cq.quotient_weight();
    let weight_ok = p.weight() == cq.core.weight() + n * qw;
    let balance_ok = wp
        .counts()
        .iter()
        .zip(wc.counts())
        .all(|(x, y)| *x == y + qw);
    let quotient: Vec<String> = cq.quotient.iter().map(|q| q.to_string()).collect();
    let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
    let mut s = String::new();
    s += &format!("partition: {p}\n");
    s += &format!("modulus: {n}\noffset: {}\n", ctx.offset());
    s += &format!("weight: {}\n", p.weight());
    s += &format!("colored weight: {}\n", vector(wp.counts()));
    s += &format!("core: {}\n", cq.core);
    s += &format!("core colored weight: {}\n", vector(wc.counts()));
    s += &format!("quotient: [{}]\n", quotient.join(", "));
    s += &format!("quotient weight: {qw}\n");
    s += &format!("charges: {}\n", vector(core_charges(p, ctx).as_slice()));
    s += &format!(
        "weight identity: {} = {} + {}*{} {}\n",
        p.weight(),
        cq.core.weight(),
        n,
        qw,
        verdict(weight_ok)
    );
    s += &format!(
        "color balance: {} = {} + {}*(1,...,1) {}\n",
        vector(wp.counts()),
        vector(wc.counts()),
        qw,
        verdict(balance_ok)
    );
    (s, weight_ok && balance_ok)
}
