// The dense and output-sensitive sumset engines, and the vector encoding.

use sslab::sumset::{decode_points, direct_sumset, encode_points};
use sslab::{sumset, PointSet, SumsetEngineConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // sparse sets spread over a wide range
    let a = PointSet::from_values((0..300u64).map(|i| i * i * 1_009));
    let b = PointSet::from_values((0..200u64).map(|i| i * 7_919 + 3));
    let dense = sumset(&a, &b, &SumsetEngineConfig::dense())?;
    let hashed = sumset(
        &a,
        &b,
        &SumsetEngineConfig {
            dense_cutoff: 0,
            pairwise_cutoff: 0,
            ..SumsetEngineConfig::output_sensitive(7)
        },
    )?;
    assert_eq!(dense, hashed);
    println!("|A| = {}, |B| = {}, |A+B| = {} up to {}", a.len(), b.len(), dense.len(), dense.values().last().unwrap());

    let p = PointSet::from_points(2, [[1u64, 2]])?;
    let e = encode_points(&p, 2)?;
    println!("(1,2) with t = 2 encodes to {:?}", e.values());
    assert_eq!(decode_points(&e, 2, 2)?, p);

    let q = PointSet::from_points(2, [[0u64, 1], [2, 0], [1, 1]])?;
    assert_eq!(sumset(&q, &q, &SumsetEngineConfig::default())?, direct_sumset(&q, &q)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
