//! `phibase` — exact golden-ratio-base conversions and verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse/I/O error,
//! 3 decode of a digit string whose value is not an integer.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use phibase::zeckendorf::ZeckendorfRep;
use phibase::{Error, PhiDigits};
use phibase_cli::table::{self, TableKind};
use phibase_cli::verify::{self, Suite, VerifyOptions, ALL_SUITES};

#[derive(Parser)]
#[command(
    name = "phibase",
    version,
    about = "Exact golden-ratio-base numeration: conversions, tables, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a positive integer as a canonical base-phi digit string.
    Encode {
        /// The integer, any size; read from stdin when omitted.
        n: Option<String>,
    },
    /// Decode a digit string to its integer value, or to its exact
    /// "a+b*phi" form (exit 3) when the value is not an integer.
    Decode {
        /// Digit string matching [01]+ ('.' [01]+)?; read from stdin when
        /// omitted.
        digits: Option<String>,
    },
    /// Print the Zeckendorf decomposition of a positive integer.
    Zeckendorf {
        /// The integer, any size; read from stdin when omitted.
        n: Option<String>,
    },
    /// Regenerate the expansion tables for N = 2..=max.
    Table {
        #[arg(long, value_enum, default_value = "fib")]
        kind: TableKind,
        /// Upper end of the table range.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..=1_000_000))]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification sweeps over [LO, HI] and report every check.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        lo: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        hi: u64,
        /// Comma-separated subset of suites; all of them by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        suites: Option<Vec<Suite>>,
        /// Worker threads; the report is identical for any count.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
        workers: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    match command {
        Command::Encode { n } => cmd_encode(n),
        Command::Decode { digits } => cmd_decode(digits),
        Command::Zeckendorf { n } => cmd_zeckendorf(n),
        Command::Table { kind, max, format, out } => cmd_table(kind, max, format, out),
        Command::Verify { lo, hi, suites, workers, format, out } => {
            cmd_verify(lo, hi, suites, workers as usize, format, out)
        }
    }
}

fn cmd_encode(arg: Option<String>) -> i32 {
    let n = match read_integer_arg(arg) {
        Ok(n) => n,
        Err(code) => return code,
    };
    match PhiDigits::encode(&n) {
        Ok(digits) => {
            println!("{digits}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_decode(arg: Option<String>) -> i32 {
    let text = match read_string_arg(arg) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let digits = match PhiDigits::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match digits.decode_integer() {
        Ok(value) => {
            println!("{value}");
            0
        }
        Err(Error::NotAnInteger(exact)) => {
            println!("{exact}");
            eprintln!("warning: value is not an integer; printed exact a+b*phi form");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_zeckendorf(arg: Option<String>) -> i32 {
    let n = match read_integer_arg(arg) {
        Ok(n) => n,
        Err(code) => return code,
    };
    match ZeckendorfRep::encode(&n) {
        Ok(rep) => {
            let terms: Vec<String> = rep.indices().iter().map(|k| format!("F_{k}")).collect();
            println!("{n} = {}", terms.join(" + "));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_table(kind: TableKind, max: u64, format: OutputFormat, out: Option<PathBuf>) -> i32 {
    let table = table::generate(kind, max);
    let result = write_out(out, |writer| match format {
        OutputFormat::Text => table.write_text(writer),
        OutputFormat::Csv => table.write_csv(writer),
        OutputFormat::Json => writer.write_all(table.to_json().as_bytes()),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_verify(
    lo: u64,
    hi: u64,
    suites: Option<Vec<Suite>>,
    workers: usize,
    format: OutputFormat,
    out: Option<PathBuf>,
) -> i32 {
    if lo > hi {
        eprintln!("error: empty range: lo = {lo} exceeds hi = {hi}");
        return 2;
    }
    let suites = suites.unwrap_or_else(|| ALL_SUITES.to_vec());
    let report = verify::run(&VerifyOptions { lo, hi, suites, workers });
    let result = write_out(out, |writer| match format {
        OutputFormat::Text => report.write_text(writer),
        OutputFormat::Csv => report.write_csv(writer),
        OutputFormat::Json => writer.write_all(report.to_json().as_bytes()),
    });
    match result {
        Ok(()) => {
            if report.summary.failed == 0 {
                0
            } else {
                eprintln!("error: {} checks failed", report.summary.failed);
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn write_out(
    path: Option<PathBuf>,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> io::Result<()> {
    match path {
        Some(path) => {
            let mut file = File::create(path)?;
            write(&mut file)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

fn read_integer_arg(arg: Option<String>) -> Result<BigInt, i32> {
    let text = read_string_arg(arg)?;
    match BigInt::from_str(&text) {
        Ok(n) => Ok(n),
        Err(_) => {
            eprintln!("error: not an integer: {text:?}");
            Err(2)
        }
    }
}

fn read_string_arg(arg: Option<String>) -> Result<String, i32> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut buf = String::new();
            if let Err(e) = io::stdin().read_to_string(&mut buf) {
                eprintln!("error: {e}");
                return Err(2);
            }
            Ok(buf.trim().to_string())
        }
    }
}
