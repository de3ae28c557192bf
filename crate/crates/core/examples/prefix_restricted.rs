// Capped sumsets on the adversarial pair where the full sumset is large
// but nothing survives the cap.

use sslab::prefix::{build_block_partition, prefix_restricted_run};
use sslab::sumset::direct_sumset;
use sslab::{prefix_restricted_sumset, PointSet, PrefixConfig, TargetBox, WorkCounters};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (n, t) = (8u64, 1000u64);
    let a = PointSet::from_values((1..=n).map(|i| t / 2 + i));
    let b = PointSet::from_values((1..=n).map(|j| t / 2 + j * n));
    let bx = TargetBox::new(1, t, 1)?;
    let full = direct_sumset(&a, &b)?;
    let capped = prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::default())?;
    println!("|A+B| = {}, |(A+B) ∩ [0..{t}]| = {}", full.len(), capped.len());

    // 2-d, capped in the first coordinate only
    let a = PointSet::from_points(2, (0..40u64).map(|i| [i * 3 % 50, i]))?;
    let b = PointSet::from_points(2, (0..30u64).map(|i| [i * 7 % 45, 2 * i]))?;
    let bx = TargetBox::new(2, 40, 1)?;
    let counters = WorkCounters::new();
    let run = prefix_restricted_run(&a, &b, &bx, &PrefixConfig::default(), &counters)?;
    assert_eq!(run.set, direct_sumset(&a, &b)?.clip(&bx));
    println!(
        "2-d capped: {} points; guess {} completed using {} of its budget {}; {} work in total",
        run.set.len(),
        run.final_guess,
        run.final_work,
        run.final_budget,
        run.work
    );

    let part = build_block_partition(&a, &b, 4, &bx)?;
    part.check_properties(40).map_err(|e| e.to_string())?;
    println!("g = 4: {} A-blocks, {} B-blocks", part.a_blocks.len(), part.b_blocks.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
