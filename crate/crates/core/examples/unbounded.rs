// Unbounded subset sums, deterministic and checked against the dense table.

use sslab::{fast_unbounded, unbounded_oracle, ItemMultiset, SolverConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = ItemMultiset::from_values([3, 5]);
    println!("S*({{3,5}}, 11) = {:?}", fast_unbounded(&x, 11, &SolverConfig::default())?.values());

    let x = ItemMultiset::from_copies(2, [[2u64, 7], [5, 3], [9, 1]])?;
    let a = fast_unbounded(&x, 120, &SolverConfig::with_seed(1))?;
    let b = fast_unbounded(&x, 120, &SolverConfig::with_seed(99))?;
    assert_eq!(a, b);
    assert_eq!(a, unbounded_oracle(&x, 120)?);
    println!("2-d, t = 120: {} sums, same for every seed", a.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
