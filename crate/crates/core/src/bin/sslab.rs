use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sslab::harness::{bench_dir, generate, run_algo, to_csv, verify_instance, Algo, GenKind, InstanceFile};
use sslab::{Error, PointSet, SolverConfig, WorkCounters};

#[derive(Parser)]
#[command(name = "sslab", version, about = "Output-sensitive subset sum toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the subset sums of an instance file.
    Solve {
        path: PathBuf,
        #[arg(long, default_value = "fast")]
        algo: Algo,
        #[command(flatten)]
        solver: SolverArgs,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long)]
        kind: GenKind,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (default: stdout). footnote2 writes `<out>.A` and `<out>.B`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the fast solver over several seeds and compare with the oracles.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Benchmark every instance in a directory and print CSV.
    Bench {
        dir: PathBuf,
        /// Algorithms to run (repeatable); each runs only on instances of its mode.
        #[arg(long, default_values = ["bellman", "fast", "unbounded"])]
        algo: Vec<Algo>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "k-const", default_value_t = 8.0)]
    k_const: f64,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            seed: self.seed,
            k_const: self.k_const,
            ..Default::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::RetriesExhausted { .. } => 2,
                _ => 1,
            })
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> sslab::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        }),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn read_instance(path: &Path) -> sslab::Result<InstanceFile> {
    let parsed = InstanceFile::read(path)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.instance)
}

fn render(set: &PointSet) -> String {
    let mut text = String::new();
    for p in set.iter() {
        let line: Vec<String> = p.iter().map(u64::to_string).collect();
        text.push_str(&line.join(" "));
        text.push('\n');
    }
    text
}

fn run(cmd: Cmd) -> sslab::Result<u8> {
    match cmd {
        Cmd::Solve { path, algo, solver, out } => {
            let inst = read_instance(&path)?;
            if algo.mode() != inst.mode {
                eprintln!("usage: --algo {algo} does not apply to {} instances", inst.mode);
                eprintln!("       use --algo bellman|fast for bounded, --algo unbounded for unbounded");
                return Ok(1);
            }
            let counters = WorkCounters::new();
            let set = run_algo(&inst, algo, &solver.config(), &counters)?;
            emit(out.as_deref(), &render(&set))?;
            let c = counters.snapshot();
            eprintln!("|S| = {}", set.len());
            eprintln!(
                "sumset_elems={} pr_nodes={} pr_work={} hashes={} max_depth={} retries={}",
                c.sumset_elems, c.pr_nodes, c.pr_work, c.hashes, c.max_depth, c.retries
            );
            Ok(0)
        }
        Cmd::Gen { kind, n, t, d, seed, out } => {
            let files = generate(kind, n, t, d, seed)?;
            match (files.as_slice(), out) {
                ([one], out) => emit(out.as_deref(), &one.serialize())?,
                ([a, b], Some(out)) => {
                    for (file, tag) in [(a, "A"), (b, "B")] {
                        let mut name = out.clone().into_os_string();
                        name.push(format!(".{tag}"));
                        emit(Some(Path::new(&name)), &file.serialize())?;
                    }
                }
                _ => {
                    eprintln!("usage: --kind {kind} writes two files and needs --out");
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Cmd::Verify { path, seeds, solver } => {
            let inst = read_instance(&path)?;
            let report = verify_instance(&inst, seeds, &solver.config())?;
            println!("runs: {}", report.runs);
            println!("oracles: bellman{}", if report.naive_checked { ", naive" } else { "" });
            println!("mismatches: {}", report.mismatches);
            for line in &report.failures {
                println!("  {line}");
            }
            Ok(if report.mismatches > 0 { 3 } else { 0 })
        }
        Cmd::Bench { dir, algo, solver, out } => {
            let records = bench_dir(&dir, &algo, &solver.config())?;
            emit(out.as_deref(), &to_csv(&records))?;
            Ok(0)
        }
    }
}
