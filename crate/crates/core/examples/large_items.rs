// The Reed-Solomon hash family and large-item combination.

use num_bigint::BigInt;
use num_rational::BigRational;
use sslab::color::{build_rs_family, combine_large_items, random_partition};
use sslab::{ItemMultiset, PointSet, PrefixConfig, WorkCounters};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = build_rs_family(4, 2)?;
    println!("n = 4, m = 2: p = {}, D = {}", fam.p, fam.degree);

    let fam = build_rs_family(1000, 5)?;
    let picks = [3u64, 141, 592, 653, 999];
    let first = (0..fam.len()).find(|&i| fam.is_injective(i, &picks)).expect("perfect family");
    println!("n = 1000, m = 5: p = {}, h_{first} separates {picks:?}", fam.p);

    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let z = PointSet::from_values([0, 1]);
    let xl = ItemMultiset::from_values([9]);
    let out = combine_large_items(&z, &xl, 10, &half, &PrefixConfig::default(), &WorkCounters::new())?;
    println!("Z = {{0,1}}, X_L = {{9}}, t = 10 -> {:?}", out.values());

    let xs = ItemMultiset::from_values([1, 1, 2, 2, 3, 4, 5]);
    for (i, part) in random_partition(&xs, 3, 11)?.iter().enumerate() {
        println!("bucket {i}: {:?}", part.flat_copies());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
