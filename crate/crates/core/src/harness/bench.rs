//! Benchmark runs over an instance directory, written as CSV.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use super::instance::{InstanceFile, Mode};
use crate::baseline::bellman;
use crate::counters::WorkCounters;
use crate::error::{Error, Result};
use crate::solver::{solve_with, SolverConfig};
use crate::types::PointSet;
use crate::unbounded::fast_unbounded_with;

pub const CSV_HEADER: &str = "id,n,t,d,setsize,algo,seed,wall_ms,sumset_elems,pr_nodes,hashes";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Bellman,
    Fast,
    Unbounded,
}

impl Algo {
    pub fn mode(self) -> Mode {
        match self {
            Algo::Unbounded => Mode::Unbounded,
            _ => Mode::Bounded,
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Bellman => "bellman",
            Algo::Fast => "fast",
            Algo::Unbounded => "unbounded",
        })
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bellman" => Ok(Algo::Bellman),
            "fast" => Ok(Algo::Fast),
            "unbounded" => Ok(Algo::Unbounded),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

/// Solves `inst` with `algo`, refusing algorithms made for the other mode.
pub fn run_algo(inst: &InstanceFile, algo: Algo, cfg: &SolverConfig, counters: &WorkCounters) -> Result<PointSet> {
    if algo.mode() != inst.mode {
        return Err(Error::InvalidArgument(format!(
            "--algo {algo} cannot solve a {} instance",
            inst.mode
        )));
    }
    let x = inst.multiset()?;
    match algo {
        Algo::Bellman => Ok(bellman(&x, inst.t)),
        Algo::Fast => solve_with(&x, inst.t, cfg, counters),
        Algo::Unbounded => fast_unbounded_with(&x, inst.t, cfg, counters),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub id: String,
    pub n: u64,
    pub t: u64,
    pub d: usize,
    pub setsize: u64,
    pub algo: Algo,
    pub seed: u64,
    pub wall_ms: f64,
    pub sumset_elems: u64,
    pub pr_nodes: u64,
    pub hashes: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.3},{},{},{}",
            self.id,
            self.n,
            self.t,
            self.d,
            self.setsize,
            self.algo,
            self.seed,
            self.wall_ms,
            self.sumset_elems,
            self.pr_nodes,
            self.hashes
        )
    }
}

pub fn bench_instance(id: &str, inst: &InstanceFile, algo: Algo, cfg: &SolverConfig) -> Result<BenchRecord> {
    let counters = WorkCounters::new();
    let start = Instant::now();
    let out = run_algo(inst, algo, cfg, &counters)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let c = counters.snapshot();
    Ok(BenchRecord {
        id: id.to_string(),
        n: inst.multiset()?.n(),
        t: inst.t,
        d: inst.dim,
        setsize: out.len() as u64,
        algo,
        seed: cfg.seed,
        wall_ms,
        sumset_elems: c.sumset_elems,
        pr_nodes: c.pr_nodes,
        hashes: c.hashes,
    })
}

/// Runs every algorithm matching each instance's mode over the files of
/// `dir` (hidden files skipped). Rows come back sorted by instance id.
pub fn bench_dir(dir: &Path, algos: &[Algo], cfg: &SolverConfig) -> Result<Vec<BenchRecord>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        let name = entry.file_name().to_string_lossy().into_owned();
        if path.is_file() && !name.starts_with('.') {
            files.push((name, path));
        }
    }
    files.sort();
    let mut records = Vec::new();
    for (id, path) in files {
        let inst = InstanceFile::read(&path)?.instance;
        for &algo in algos.iter().filter(|a| a.mode() == inst.mode) {
            records.push(bench_instance(&id, &inst, algo, cfg)?);
        }
    }
    Ok(records)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
