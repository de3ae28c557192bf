// Generates a small instance directory and benchmarks it to CSV.

use sslab::harness::{bench_dir, generate, to_csv, Algo, GenKind, InstanceFile, Mode};
use sslab::SolverConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    for (i, kind) in [GenKind::Uniform, GenKind::Dense, GenKind::SparseStructured].into_iter().enumerate() {
        let inst = &generate(kind, 20, 256, 1, i as u64)?[0];
        inst.write(&dir.path().join(format!("{i:02}-{kind}.inst")))?;
    }
    let unb = InstanceFile::new(1, 200, Mode::Unbounded, vec![vec![7], vec![11], vec![13]])?;
    unb.write(&dir.path().join("03-unbounded.inst"))?;

    let records = bench_dir(dir.path(), &[Algo::Bellman, Algo::Fast, Algo::Unbounded], &SolverConfig::with_seed(1))?;
    print!("{}", to_csv(&records));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
