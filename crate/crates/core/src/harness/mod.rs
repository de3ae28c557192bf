//! Instance files, generators, oracle verification, benchmarks and the
//! sub-multiplicativity checker used by the `sslab` binary.

pub mod bench;
pub mod gen;
pub mod instance;
pub mod submult;
pub mod verify;

pub use bench::{bench_dir, run_algo, to_csv, Algo, BenchRecord, CSV_HEADER};
pub use gen::{generate, GenKind};
pub use instance::{InstanceFile, Mode, Parsed};
pub use submult::{check_submultiplicativity, SubmultReport};
pub use verify::{verify_instance, VerifyReport};
