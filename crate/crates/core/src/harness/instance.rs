//! Plain-text instance files.
//!
//! ```text
//! d t n mode
//! x_1 ... x_d      (n lines, one item per line, duplicates allowed)
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::baseline::preprocess_items;
use crate::error::{Error, Result};
use crate::types::ItemMultiset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Bounded,
    Unbounded,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Bounded => "bounded",
            Mode::Unbounded => "unbounded",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bounded" => Ok(Mode::Bounded),
            "unbounded" => Ok(Mode::Unbounded),
            other => Err(format!("unknown mode {other:?} (expected bounded or unbounded)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub dim: usize,
    pub t: u64,
    pub mode: Mode,
    /// Items in file order.
    pub items: Vec<Vec<u64>>,
}

/// A parsed instance plus warnings about items dropped for exceeding `t`.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub instance: InstanceFile,
    pub warnings: Vec<String>,
}

impl InstanceFile {
    pub fn new(dim: usize, t: u64, mode: Mode, items: Vec<Vec<u64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        if let Some(bad) = items.iter().find(|p| p.len() != dim) {
            return Err(Error::WrongArity {
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(InstanceFile { dim, t, mode, items })
    }

    pub fn read(path: &Path) -> Result<Parsed> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    /// Parses `text`; `path` is only used in error messages.
    pub fn parse(text: &str, path: &Path) -> Result<Parsed> {
        let err = |line: usize, msg: String| Error::Parse {
            path: PathBuf::from(path),
            line,
            msg,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(err(hline, format!("header needs `d t n mode`, got {header:?}")));
        }
        let num = |s: &str, what: &str| s.parse::<u64>().map_err(|e| err(hline, format!("bad {what} {s:?}: {e}")));
        let dim = num(fields[0], "d")? as usize;
        let t = num(fields[1], "t")?;
        let n = num(fields[2], "n")? as usize;
        let mode: Mode = fields[3].parse().map_err(|m| err(hline, m))?;
        if dim == 0 {
            return Err(err(hline, "d must be at least 1".into()));
        }

        let mut items = Vec::with_capacity(n);
        let mut warnings = Vec::new();
        let mut seen = 0;
        for (lineno, line) in lines {
            seen += 1;
            let coords: Vec<u64> = line
                .split_whitespace()
                .map(|s| s.parse::<u64>().map_err(|e| err(lineno, format!("bad coordinate {s:?}: {e}"))))
                .collect::<Result<_>>()?;
            if coords.len() != dim {
                return Err(err(lineno, format!("expected {dim} coordinates, got {}", coords.len())));
            }
            if coords.iter().any(|&c| c > t) {
                warnings.push(format!("{}:{lineno}: item {coords:?} exceeds t = {t}, dropped", path.display()));
                continue;
            }
            items.push(coords);
        }
        if seen != n {
            return Err(err(hline, format!("header announces {n} items, found {seen}")));
        }
        Ok(Parsed {
            instance: InstanceFile { dim, t, mode, items },
            warnings,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.dim, self.t, self.items.len(), self.mode);
        for item in &self.items {
            let line: Vec<String> = item.iter().map(u64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    /// The preprocessed item multiset.
    pub fn multiset(&self) -> Result<ItemMultiset> {
        let raw: Vec<Vec<i64>> = self
            .items
            .iter()
            .map(|p| p.iter().map(|&c| i64::try_from(c).unwrap_or(i64::MAX)).collect())
            .collect();
        preprocess_items(&raw, self.t, self.dim)
    }
}
