use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use closedmine::bench::{bench_dataset, write_csv};
use closedmine::merge::{run_dac_with, DacOptions};
use closedmine::oracle::MAX_ORACLE_ITEMS;
use closedmine::{
    compare, gen_synthetic, mine_closed, oracle_closed, parse_fimi, MinsupSpec, PatternSet,
    TransactionDatabase,
};

#[derive(Parser)]
#[command(name = "closedmine", version, about = "Frequent closed itemsets with minimal generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine the whole database sequentially.
    Mine {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Partition, mine each part, and merge.
    Dac {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
        #[arg(short, long, default_value_t = 2)]
        partitions: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Log every merge decision to stderr.
        #[arg(long)]
        trace_merge: bool,
    },
    /// Diff partitioned against sequential output, and both against the
    /// brute-force oracle when the universe is small enough.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(short, long, default_value_t = 2)]
        partitions: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time both modes over datasets and thresholds, writing CSV.
    Bench {
        #[arg(short, long = "input", required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short = 's', long = "minsup", value_delimiter = ',', required = true)]
        minsups: Vec<f64>,
        #[arg(short, long, default_value_t = 2)]
        partitions: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a random FIMI dataset.
    Gen {
        #[arg(long)]
        transactions: usize,
        #[arg(long)]
        items: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(short, long)]
    input: PathBuf,
    /// Relative minimum support in (0, 1].
    #[arg(short = 's', long)]
    minsup: f64,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Mine { common, output } => {
            let (db, minsup) = load(&common)?;
            let ps = mine_closed(&db, minsup.absolute(db.n_transactions()));
            emit(&render(&ps, minsup, output.format), output.out.as_deref())
        }
        Command::Dac {
            common,
            output,
            partitions,
            threads,
            trace_merge,
        } => {
            let (db, minsup) = load(&common)?;
            check_partitions(&db, partitions)?;
            let outcome = with_threads(threads, || {
                run_dac_with(&db, DacOptions { n_partitions: partitions, minsup })
            })??;
            if trace_merge {
                let mut err = io::stderr().lock();
                for (k, m) in outcome.local_minsup.iter().enumerate() {
                    writeln!(err, "# partition {k} minsup_abs={m}")?;
                }
                for d in &outcome.decisions {
                    writeln!(err, "{d}")?;
                }
            }
            emit(&render(&outcome.patterns, minsup, output.format), output.out.as_deref())
        }
        Command::Verify {
            common,
            partitions,
            threads,
            format,
        } => {
            let (db, minsup) = load(&common)?;
            check_partitions(&db, partitions)?;
            verify(&db, minsup, partitions, threads, format)
        }
        Command::Bench {
            inputs,
            minsups,
            partitions,
            threads,
            out,
        } => {
            let mut records = Vec::new();
            for path in &inputs {
                let db = read_db(path)?;
                check_partitions(&db, partitions)?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                for &m in &minsups {
                    let spec = MinsupSpec::new(m)?;
                    let rows = with_threads(threads, || bench_dataset(&name, &db, spec, partitions))??;
                    records.extend(rows);
                }
            }
            let mut buf = Vec::new();
            write_csv(&mut buf, &records)?;
            emit(&String::from_utf8(buf)?, out.as_deref())
        }
        Command::Gen {
            transactions,
            items,
            density,
            seed,
            out,
        } => {
            let db = gen_synthetic(transactions, items, density, seed)?;
            emit(&db.to_fimi(), out.as_deref())
        }
    }
}

fn verify(
    db: &TransactionDatabase,
    minsup: MinsupSpec,
    partitions: usize,
    threads: Option<usize>,
    format: Format,
) -> Result<(), Failure> {
    let abs = minsup.absolute(db.n_transactions());
    let seq = mine_closed(db, abs);
    let dac = with_threads(threads, || {
        run_dac_with(db, DacOptions { n_partitions: partitions, minsup })
    })??
    .patterns;
    let mut reports = vec![("dac_vs_sequential", compare(&dac, &seq))];
    if db.universe().len() <= MAX_ORACLE_ITEMS {
        let oracle = oracle_closed(db, abs)?;
        reports.push(("sequential_vs_oracle", compare(&seq, &oracle)));
        reports.push(("dac_vs_oracle", compare(&dac, &oracle)));
    }
    let text = match format {
        Format::Text => reports
            .iter()
            .map(|(name, r)| format!("## {name}\n{r}"))
            .collect::<String>(),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = reports
                .iter()
                .map(|(name, r)| (name.to_string(), serde_json::to_value(r).expect("serializes")))
                .collect();
            format!("{:#}\n", json!(map))
        }
    };
    emit(&text, None)?;
    if reports.iter().all(|(_, r)| r.is_identical()) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn load(common: &Common) -> Result<(TransactionDatabase, MinsupSpec), Failure> {
    let minsup = MinsupSpec::new(common.minsup)?;
    Ok((read_db(&common.input)?, minsup))
}

fn read_db(path: &Path) -> Result<TransactionDatabase, Failure> {
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_fimi(BufReader::new(file)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_partitions(db: &TransactionDatabase, partitions: usize) -> Result<(), Failure> {
    if partitions == 0 || (partitions > db.n_transactions() && partitions > 1) {
        return Err(Failure::Usage(format!(
            "--partitions must lie in 1..={} for this input, got {partitions}",
            db.n_transactions()
        )));
    }
    Ok(())
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

fn render(ps: &PatternSet, minsup: MinsupSpec, format: Format) -> String {
    match format {
        Format::Text => format!(
            "# minsup={} minsup_abs={} transactions={} patterns={}\n{}",
            minsup.relative(),
            ps.minsup_abs,
            ps.context_size,
            ps.len(),
            ps.to_text()
        ),
        Format::Json => ps.to_json() + "\n",
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
