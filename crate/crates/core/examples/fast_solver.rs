// The randomized solver against Bellman, with its work counters.

use sslab::solver::solve_with;
use sslab::{bellman, decide, ItemMultiset, SolverConfig, WorkCounters};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = ItemMultiset::from_values([3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 3, 5, 8, 13, 21, 34]);
    let t = 700;
    let cfg = SolverConfig::with_seed(2024);
    let counters = WorkCounters::new();
    let fast = solve_with(&x, t, &cfg, &counters)?;
    assert_eq!(fast, bellman(&x, t));
    let c = counters.snapshot();
    println!("|S(X, {t})| = {}; sumset elems {}, pr nodes {}, hashes {}", fast.len(), c.sumset_elems, c.pr_nodes, c.hashes);

    // pin K so the small-item recursion runs at this size
    let cfg = SolverConfig {
        k_override: Some(2),
        base_n: 2,
        base_t: 8,
        ..SolverConfig::with_seed(5)
    };
    let x = ItemMultiset::from_values([1, 2, 2, 3, 5, 90, 110, 150]);
    let counters = WorkCounters::new();
    let fast = solve_with(&x, 300, &cfg, &counters)?;
    assert_eq!(fast, bellman(&x, 300));
    println!("with K = 2: {} sums, recursion depth {}", fast.len(), counters.snapshot().max_depth);

    let x = ItemMultiset::from_values([2, 4, 6]);
    println!("11 reachable from {{2,4,6}}: {}", decide(&x, 11, &SolverConfig::default())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
