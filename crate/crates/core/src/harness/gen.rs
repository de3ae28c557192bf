//! Instance generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::instance::{InstanceFile, Mode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Items uniform on `[1..t]^d`.
    Uniform,
    /// Items on `[1..ceil(t/n)]^d`, so the sums fill most of the box.
    Dense,
    /// Coordinates `r * 2^e` with `r` in `{1, 2, 3}` and `e >= log2(t) / 2`,
    /// so all sums lie on a coarse lattice.
    SparseStructured,
    /// The pair `A = t/2 + {1..n}`, `B = t/2 + {n, 2n, .., n^2}`.
    Footnote2,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [GenKind::Uniform, GenKind::Dense, GenKind::SparseStructured, GenKind::Footnote2];
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::Uniform => "uniform",
            GenKind::Dense => "dense",
            GenKind::SparseStructured => "sparse-structured",
            GenKind::Footnote2 => "footnote2",
        })
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| format!("unknown kind {s:?}"))
    }
}

/// Generates one instance, or two (`A` then `B`) for [`GenKind::Footnote2`].
pub fn generate(kind: GenKind, n: u64, t: u64, dim: usize, seed: u64) -> Result<Vec<InstanceFile>> {
    if n == 0 || t == 0 || dim == 0 {
        return Err(Error::InvalidArgument(format!("n, t, d must be positive (got {n}, {t}, {dim})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |f: &mut dyn FnMut(&mut ChaCha8Rng) -> u64| -> Vec<Vec<u64>> {
        (0..n).map(|_| (0..dim).map(|_| f(&mut rng)).collect()).collect()
    };
    let items = match kind {
        GenKind::Uniform => draw(&mut |r| r.gen_range(1..=t)),
        GenKind::Dense => {
            let hi = t.div_ceil(n);
            draw(&mut |r| r.gen_range(1..=hi))
        }
        GenKind::SparseStructured => {
            let top = 63 - t.leading_zeros();
            let low = top.div_ceil(2);
            draw(&mut |r| {
                let e = r.gen_range(low..=top);
                let v = r.gen_range(1..=3u64) << e;
                if v <= t {
                    v
                } else {
                    1 << e
                }
            })
        }
        GenKind::Footnote2 => {
            if dim != 1 {
                return Err(Error::InvalidArgument("footnote2 instances are one-dimensional".into()));
            }
            let half = t / 2;
            if half + n * n > t {
                return Err(Error::InvalidArgument(format!("footnote2 needs n^2 <= t/2 (n = {n}, t = {t})")));
            }
            let a = (1..=n).map(|i| vec![half + i]).collect();
            let b = (1..=n).map(|j| vec![half + j * n]).collect();
            return Ok(vec![
                InstanceFile::new(1, t, Mode::Bounded, a)?,
                InstanceFile::new(1, t, Mode::Bounded, b)?,
            ]);
        }
    };
    Ok(vec![InstanceFile::new(dim, t, Mode::Bounded, items)?])
}
