// Preprocessing, Bellman's DP and the exhaustive oracle on a small instance.

use sslab::{bellman, naive_oracle, preprocess_items};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // four copies of 1 collapse to two under t = 2; 5 does not fit at all
    let x = preprocess_items(&[[1i64], [1], [1], [1], [5]], 2, 1)?;
    println!("distinct {:?} with multiplicities {:?}", x.distinct().values(), x.multiplicities());

    let x = preprocess_items(&[[1i64, 0], [0, 1], [1, 1], [2, 1]], 2, 2)?;
    let dp = bellman(&x, 2);
    let brute = naive_oracle(&x, 2)?;
    assert_eq!(dp, brute);
    println!("S(X, 2) in 2-d has {} points: {:?}", dp.len(), dp.to_vecs());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
