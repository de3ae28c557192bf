// Work counters on a family with nearly fixed output size and growing n.

use sslab::solver::solve_with;
use sslab::{ItemMultiset, SolverConfig, WorkCounters};

/// `n` random multiples of `step` in `[step, t/4]`; the sums saturate the
/// lattice `step * [0..t/step]` quickly, so `|S|` barely moves with `n`.
pub fn lattice_family(n: u64, t: u64, step: u64, seed: u64) -> ItemMultiset {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    ItemMultiset::from_values((0..n).map(|_| step * rng.gen_range(1..=t / 4 / step)))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t, step) = (4096u64, 32u64);
    println!("{:>5} {:>6} {:>10} {:>10}", "n", "|S|", "work", "work/(|S|sqrt n)");
    for e in 4..=8 {
        let n = 1u64 << e;
        let x = lattice_family(n, t, step, e);
        let counters = WorkCounters::new();
        let s = solve_with(&x, t, &SolverConfig::with_seed(e), &counters)?;
        let work = counters.snapshot().total_work();
        let ratio = work as f64 / (s.len() as f64 * (n as f64).sqrt());
        println!("{n:>5} {:>6} {work:>10} {ratio:>10.2}", s.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
