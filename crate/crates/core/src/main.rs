use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use specht_gtensor::module_builder::{build_dual_weyl, build_gtensor_specht, u_lambda_dim};
use specht_gtensor::report::{Report, ReportItem, SuiteOutcome};
use specht_gtensor::theorems::{self, DPolicy, DecompositionData, DECOMPOSITION_DATA_ENV};
use specht_gtensor::{FieldPrime, Partition};

#[derive(Parser)]
#[command(name = "specht-gtensor", version, about = "Exact GF(p) dual Weyl and twisted Specht module computations")]
struct Cli {
    /// Decomposition data file (defaults to the embedded copy).
    #[arg(long, global = true, env = DECOMPOSITION_DATA_ENV)]
    data: Option<PathBuf>,
    /// Worker threads (defaults to available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension of a module.
    Dim {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=255))]
        d: u64,
        #[arg(long, default_value_t = 2, value_parser = parse_prime)]
        p: u8,
        /// Emit a JSON report instead of the bare number.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest n for partition sweeps (default 6, or 10 for d1).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Policy::Threshold)]
        d_policy: Policy,
        /// Omit the timing field so identical runs produce identical bytes.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a table as CSV and compare it with the golden copy.
    Table {
        #[arg(long, value_enum)]
        which: TableKind,
        /// Alphabet size for table1.
        #[arg(long, default_value_t = 5)]
        d: usize,
        /// Restrict table3 to one block (4 or 5).
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=5))]
        n: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Nabla,
    Gtensor,
    U,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Thm1,
    Thm2,
    D1,
    HooksD2,
    Tables,
    Example61,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Threshold,
    ThresholdAndN,
    Weak,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Table1,
    Table3,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: specht_gtensor::Error| e.to_string())
}

fn parse_prime(s: &str) -> Result<u8, String> {
    let p: u64 = s.parse().map_err(|_| format!("'{s}' is not an integer"))?;
    FieldPrime::new(p).map(FieldPrime::p).map_err(|e| e.to_string())
}

fn load_data(path: Option<&PathBuf>) -> specht_gtensor::Result<DecompositionData> {
    match path {
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| specht_gtensor::Error::Io(format!("{}: {e}", p.display())))?;
            DecompositionData::load(&text)
        }
        None => DecompositionData::embedded(),
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> specht_gtensor::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| specht_gtensor::Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_suite(
    suite: Suite,
    n_max: Option<usize>,
    policy: &DPolicy,
    data: Option<&PathBuf>,
) -> specht_gtensor::Result<SuiteOutcome> {
    let n6 = n_max.unwrap_or(6);
    let mut out = SuiteOutcome::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Thm1 {
        out.extend(theorems::suite_thm1(n6, 4)?);
    }
    if all || suite == Suite::Thm2 {
        out.extend(theorems::suite_thm2(n6, policy)?);
    }
    if all || suite == Suite::D1 {
        out.extend(theorems::suite_d1(n_max.unwrap_or(10))?);
    }
    if all || suite == Suite::HooksD2 {
        out.extend(theorems::suite_hooks_d2(6)?);
    }
    if all || suite == Suite::Tables {
        out.extend(theorems::suite_tables(&load_data(data)?)?);
    }
    if all || suite == Suite::Example61 {
        out.extend(theorems::suite_example61()?);
    }
    Ok(out)
}

fn run(cli: Cli) -> specht_gtensor::Result<bool> {
    let data = cli.data.as_ref();
    match cli.command {
        Command::Dim { which, lambda, d, p, json } => {
            let d = d as usize;
            let field = FieldPrime::new(p as u64)?;
            let (kind, value) = match which {
                Which::Nabla => ("dim-nabla", build_dual_weyl(&lambda, d, field)?.dim()),
                Which::Gtensor => ("dim-gtensor", build_gtensor_specht(&lambda, d, field)?.dim()),
                Which::U => ("dim-u", u_lambda_dim(&lambda, d)?),
            };
            if json {
                let mut o = SuiteOutcome::default();
                o.push(ReportItem::new(&lambda, kind).d(d).p(p).value(value));
                println!("{}", Report::new("dim", o).to_json());
            } else {
                println!("{value}");
            }
            Ok(true)
        }
        Command::Verify { suite, n_max, d_policy, no_timing, out } => {
            let policy = match d_policy {
                Policy::Threshold => DPolicy::Threshold,
                Policy::ThresholdAndN => DPolicy::ThresholdAndN,
                Policy::Weak => DPolicy::WeakBound,
            };
            let start = Instant::now();
            let outcome = run_suite(suite, n_max, &policy, data)?;
            let name = suite.to_possible_value().expect("named").get_name().to_string();
            let mut report = Report::new(format!("verify --suite {name}"), outcome);
            if !no_timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            write_out(out.as_ref(), &(report.to_json() + "\n"))?;
            for f in &report.failures {
                eprintln!("FAIL {f}");
            }
            Ok(report.passed())
        }
        Command::Table { which, d, n, out } => match which {
            TableKind::Table1 => {
                if d < 4 {
                    return Err(specht_gtensor::Error::Unsupported("table1 needs d >= 4".into()));
                }
                let counts = theorems::table1_weight_counts(d)?;
                let csv = theorems::table1_csv(d, &counts);
                write_out(out.as_ref(), &csv)?;
                let mut ok = true;
                for f in theorems::table1_formulas() {
                    let got = counts.get(&f.sorted_type).copied().unwrap_or(0);
                    if got != f.eval(d) {
                        eprintln!("FAIL {}: counted {got}, golden {} = {}", f.sorted_type, f, f.eval(d));
                        ok = false;
                    }
                }
                if counts.len() != theorems::table1_formulas().len() {
                    eprintln!("FAIL expected 6 weight classes, found {}", counts.len());
                    ok = false;
                }
                Ok(ok)
            }
            TableKind::Table3 => {
                let data = load_data(data)?;
                let blocks: Vec<usize> = n.map_or(vec![4, 5], |n| vec![n as usize]);
                let mut text = String::new();
                let mut ok = true;
                for (k, &n) in blocks.iter().enumerate() {
                    let csv = theorems::table3_csv(&theorems::table3_rows(n, &data)?);
                    if csv != theorems::table3_golden(n).expect("golden exists") {
                        eprintln!("FAIL n={n} block differs from the golden file");
                        ok = false;
                    }
                    if k > 0 {
                        text.push('\n');
                    }
                    text.push_str(&csv);
                }
                write_out(out.as_ref(), &text)?;
                Ok(ok)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Dim { which: Which::U, p, .. } = &cli.command {
        if *p != 2 {
            Cli::command().error(ErrorKind::ArgumentConflict, "--which u is only defined for --p 2").exit();
        }
    }
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().ok();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
