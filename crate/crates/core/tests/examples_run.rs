mod bellman_baseline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bellman_baseline.rs"));
}

mod sumset_engines {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sumset_engines.rs"));
}

mod prefix_restricted {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/prefix_restricted.rs"));
}

mod large_items {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/large_items.rs"));
}

mod fast_solver {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fast_solver.rs"));
}

mod unbounded {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/unbounded.rs"));
}

mod submultiplicativity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/submultiplicativity.rs"));
}

mod benchmark_harness {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/benchmark_harness.rs"));
}

mod scaling {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scaling.rs"));
}

#[test]
fn bellman_baseline_example_runs() {
    bellman_baseline::run_example().expect("bellman_baseline example should run");
}

#[test]
fn sumset_engines_example_runs() {
    sumset_engines::run_example().expect("sumset_engines example should run");
}

#[test]
fn prefix_restricted_example_runs() {
    prefix_restricted::run_example().expect("prefix_restricted example should run");
}

#[test]
fn large_items_example_runs() {
    large_items::run_example().expect("large_items example should run");
}

#[test]
fn fast_solver_example_runs() {
    fast_solver::run_example().expect("fast_solver example should run");
}

#[test]
fn unbounded_example_runs() {
    unbounded::run_example().expect("unbounded example should run");
}

#[test]
fn submultiplicativity_example_runs() {
    submultiplicativity::run_example().expect("submultiplicativity example should run");
}

#[test]
fn benchmark_harness_example_runs() {
    benchmark_harness::run_example().expect("benchmark_harness example should run");
}

#[test]
fn scaling_example_runs() {
    scaling::run_example().expect("scaling example should run");
}
