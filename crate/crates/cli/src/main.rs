use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use mimalloc::MiMalloc;
use num_bigint::BigUint;

use mkdiv3_core::harness::{self, Grid, DEFAULT_REPS};
use mkdiv3_core::ImplId;

#[global_allocator]
static GLOBAL: MiMalloc = MiMalloc;

/// Divisibility-by-three relations: decide, enumerate and benchmark.
#[derive(Parser)]
#[command(name = "mkdiv3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether N is a multiple of three; exits 0 for yes, 1 for no.
    Solve {
        #[arg(long = "impl")]
        id: ImplId,
        #[arg(long)]
        n: BigUint,
    },
    /// Print the first answers of a relation on a fresh numeral.
    Enumerate {
        #[arg(long = "impl")]
        id: ImplId,
        #[arg(long)]
        count: usize,
        /// Also list the ground numerals each answer stands for.
        #[arg(long)]
        expand: bool,
    },
    /// Run the timing and reach experiments, writing CSV.
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Subcommand)]
enum Bench {
    /// Mean time of run* on ground inputs.
    Speed {
        /// Defaults to all six, minus the multiplication-based ones when the
        /// grid goes past 2000.
        #[arg(long, value_delimiter = ',')]
        impls: Vec<ImplId>,
        #[arg(long, value_name = "START:STOP:STEP")]
        n: Grid,
        #[arg(long, default_value_t = DEFAULT_REPS, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Number of distinct multiples of three covered by the first i answers.
    Reach {
        /// Defaults to dfa,even-odd.
        #[arg(long, value_delimiter = ',')]
        impls: Vec<ImplId>,
        #[arg(long, value_name = "START:STOP:STEP")]
        i: Grid,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn write<T: serde::Serialize>(&self, rows: &[T]) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => {
                let file = File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?;
                harness::write_csv(BufWriter::new(file), rows)?;
            }
            None => harness::write_csv(io::stdout().lock(), rows)?,
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve { id, n } => {
            let yes = harness::solve(id, &n);
            println!("{}", if yes { "yes" } else { "no" });
            Ok(ExitCode::from(if yes { 0 } else { 1 }))
        }
        Command::Enumerate { id, count, expand } => {
            let mut stdout = io::stdout().lock();
            for answer in harness::enumerate(id, count) {
                if expand {
                    writeln!(stdout, "{}", harness::describe_family(&answer)?)?;
                } else {
                    writeln!(stdout, "{answer}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench(Bench::Speed {
            impls,
            n,
            reps,
            out,
        }) => {
            let impls = if !impls.is_empty() {
                impls
            } else if n.max() > 2000 {
                ImplId::FAST.to_vec()
            } else {
                ImplId::ALL.to_vec()
            };
            out.write(&harness::speed_sweep(&impls, &n, reps)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench(Bench::Reach { impls, i, out }) => {
            let impls = if impls.is_empty() {
                vec![ImplId::Dfa, ImplId::EvenOdd]
            } else {
                impls
            };
            out.write(&harness::reach_sweep(&impls, &i)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
