// Exact check of the sub-multiplicativity bound on a few families.

use sslab::harness::check_submultiplicativity;
use sslab::PointSet;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = PointSet::from_values([0, 1]);
    let families = vec![
        vec![pair.clone(), pair.clone(), pair],
        vec![
            PointSet::from_values([0, 10, 20]),
            PointSet::from_values([0, 1, 2, 3]),
            PointSet::from_values([0, 100]),
            PointSet::from_values([5, 6, 50]),
        ],
    ];
    for sets in &families {
        let r = check_submultiplicativity(sets)?;
        println!(
            "K = {}: |sum| = {}, |B_i| = {:?}, {} <= {}: {}",
            r.k,
            r.total,
            r.leave_one_out,
            r.lhs,
            r.rhs,
            r.holds()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
