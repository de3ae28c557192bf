//! Point sets, item multisets and target boxes.
//!
//! Everything is stored in canonical lexicographic order so that set
//! equality is plain slice equality and sumset dedup is a sort + merge.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A deduplicated set of `dim`-dimensional nonnegative integer points,
/// strictly increasing in lexicographic order.
///
/// Coordinates are stored flat: point `i` occupies
/// `coords[i * dim..(i + 1) * dim]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    coords: Vec<u64>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        PointSet {
            dim,
            coords: Vec::new(),
        }
    }

    /// The set `{0}` in `dim` dimensions.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        PointSet {
            dim,
            coords: vec![0; dim],
        }
    }

    /// Builds a set from flat coordinates in any order, with duplicates.
    pub fn from_flat(dim: usize, coords: Vec<u64>) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        assert_eq!(coords.len() % dim, 0, "flat coordinates not a multiple of dim");
        PointSet {
            dim,
            coords: canonicalize(dim, coords),
        }
    }

    /// Wraps flat coordinates that are already strictly lexicographically
    /// increasing. Checked in debug builds.
    pub fn from_sorted_flat(dim: usize, coords: Vec<u64>) -> Self {
        let set = PointSet { dim, coords };
        debug_assert!(set.is_canonical(), "from_sorted_flat given unsorted input");
        set
    }

    pub fn from_points<P: AsRef<[u64]>>(dim: usize, points: impl IntoIterator<Item = P>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut coords = Vec::new();
        for p in points {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::WrongArity {
                    expected: dim,
                    got: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Ok(PointSet::from_flat(dim, coords))
    }

    /// One-dimensional set from integer values.
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        PointSet::from_flat(1, values.into_iter().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, u64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_flat(self) -> Vec<u64> {
        self.coords
    }

    /// The coordinate values of a one-dimensional set.
    pub fn values(&self) -> &[u64] {
        assert_eq!(self.dim, 1, "values() is only defined for dim = 1");
        &self.coords
    }

    pub fn to_vecs(&self) -> Vec<Vec<u64>> {
        self.iter().map(|p| p.to_vec()).collect()
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        if point.len() != self.dim {
            return false;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(point) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn is_zero_only(&self) -> bool {
        self.len() == 1 && self.coords.iter().all(|&c| c == 0)
    }

    /// Sorted-merge union.
    pub fn union(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Vec::with_capacity(self.coords.len() + other.coords.len());
        let (mut i, mut j) = (0, 0);
        let (n, m) = (self.len(), other.len());
        while i < n && j < m {
            match self.get(i).cmp(other.get(j)) {
                Ordering::Less => {
                    out.extend_from_slice(self.get(i));
                    i += 1;
                }
                Ordering::Greater => {
                    out.extend_from_slice(other.get(j));
                    j += 1;
                }
                Ordering::Equal => {
                    out.extend_from_slice(self.get(i));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.coords[i * d..]);
        out.extend_from_slice(&other.coords[j * d..]);
        PointSet::from_sorted_flat(d, out)
    }

    /// Keeps the points satisfying `keep`, preserving order.
    pub fn filter(&self, mut keep: impl FnMut(&[u64]) -> bool) -> PointSet {
        let mut out = Vec::new();
        for p in self.iter() {
            if keep(p) {
                out.extend_from_slice(p);
            }
        }
        PointSet::from_sorted_flat(self.dim, out)
    }

    /// Restriction to a target box.
    pub fn clip(&self, bx: &TargetBox) -> PointSet {
        self.filter(|p| bx.contains(p))
    }

    fn is_canonical(&self) -> bool {
        self.coords.len().is_multiple_of(self.dim)
            && self
                .coords
                .chunks_exact(self.dim)
                .zip(self.coords.chunks_exact(self.dim).skip(1))
                .all(|(a, b)| a < b)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 1 {
            f.debug_set().entries(self.coords.iter()).finish()
        } else {
            f.debug_set().entries(self.iter()).finish()
        }
    }
}

/// Sorts flat points lexicographically and removes duplicates.
pub(crate) fn canonicalize(dim: usize, mut coords: Vec<u64>) -> Vec<u64> {
    if dim == 1 {
        coords.sort_unstable();
        coords.dedup();
        return coords;
    }
    let n = coords.len() / dim;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&a, &b| coords[a * dim..(a + 1) * dim].cmp(&coords[b * dim..(b + 1) * dim]));
    let mut out: Vec<u64> = Vec::with_capacity(coords.len());
    for idx in order {
        let p = &coords[idx * dim..(idx + 1) * dim];
        if out.len() >= dim && &out[out.len() - dim..] == p {
            continue;
        }
        out.extend_from_slice(p);
    }
    out
}

/// A multiset of items: distinct points with multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct ItemMultiset {
    points: PointSet,
    mult: Vec<u64>,
}

impl ItemMultiset {
    pub fn empty(dim: usize) -> Self {
        ItemMultiset {
            points: PointSet::empty(dim),
            mult: Vec::new(),
        }
    }

    /// Builds a multiset from a list of item copies (duplicates allowed).
    pub fn from_copies<P: AsRef<[u64]>>(dim: usize, copies: impl IntoIterator<Item = P>) -> Result<Self> {
        let mut flat = Vec::new();
        for p in copies {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::WrongArity {
                    expected: dim,
                    got: p.len(),
                });
            }
            flat.extend_from_slice(p);
        }
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(Self::from_flat_copies(dim, flat))
    }

    /// One-dimensional multiset from item values.
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        Self::from_flat_copies(1, values.into_iter().collect())
    }

    pub(crate) fn from_flat_copies(dim: usize, flat: Vec<u64>) -> Self {
        let n = flat.len() / dim;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| flat[a * dim..(a + 1) * dim].cmp(&flat[b * dim..(b + 1) * dim]));
        let mut coords: Vec<u64> = Vec::new();
        let mut mult: Vec<u64> = Vec::new();
        for idx in order {
            let p = &flat[idx * dim..(idx + 1) * dim];
            if coords.len() >= dim && &coords[coords.len() - dim..] == p {
                *mult.last_mut().unwrap() += 1;
            } else {
                coords.extend_from_slice(p);
                mult.push(1);
            }
        }
        ItemMultiset {
            points: PointSet::from_sorted_flat(dim, coords),
            mult,
        }
    }

    /// Builds from distinct points and parallel multiplicities; entries with
    /// multiplicity zero are dropped.
    pub fn from_entries(points: PointSet, mult: Vec<u64>) -> Result<Self> {
        if points.len() != mult.len() {
            return Err(Error::InvalidArgument(format!(
                "{} points but {} multiplicities",
                points.len(),
                mult.len()
            )));
        }
        if mult.iter().all(|&m| m > 0) {
            return Ok(ItemMultiset { points, mult });
        }
        let dim = points.dim();
        let mut coords = Vec::new();
        let mut kept = Vec::new();
        for (p, &m) in points.iter().zip(&mult) {
            if m > 0 {
                coords.extend_from_slice(p);
                kept.push(m);
            }
        }
        Ok(ItemMultiset {
            points: PointSet::from_sorted_flat(dim, coords),
            mult: kept,
        })
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    /// Distinct points.
    pub fn distinct(&self) -> &PointSet {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    /// Total number of items counted with multiplicity.
    pub fn n(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `(point, multiplicity)` pairs in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&[u64], u64)> + '_ {
        self.points.iter().zip(self.mult.iter().copied())
    }

    /// Every copy, in canonical order (copies of a point are consecutive).
    pub fn copies(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.entries()
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
    }

    pub fn flat_copies(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n() as usize * self.dim());
        for p in self.copies() {
            out.extend_from_slice(p);
        }
        out
    }

    /// Splits into (entries satisfying `pred`, the rest).
    pub fn split_by(&self, mut pred: impl FnMut(&[u64]) -> bool) -> (ItemMultiset, ItemMultiset) {
        let dim = self.dim();
        let (mut yes_c, mut yes_m, mut no_c, mut no_m) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (p, m) in self.entries() {
            if pred(p) {
                yes_c.extend_from_slice(p);
                yes_m.push(m);
            } else {
                no_c.extend_from_slice(p);
                no_m.push(m);
            }
        }
        (
            ItemMultiset {
                points: PointSet::from_sorted_flat(dim, yes_c),
                mult: yes_m,
            },
            ItemMultiset {
                points: PointSet::from_sorted_flat(dim, no_c),
                mult: no_m,
            },
        )
    }
}

impl fmt::Debug for ItemMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (p, m) in self.entries() {
            if self.dim() == 1 {
                list.entry(&format_args!("{}x{}", p[0], m));
            } else {
                list.entry(&format_args!("{:?}x{}", p, m));
            }
        }
        list.finish()
    }
}

/// The region `[0..t]^capped x [0..inf)^(dim - capped)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TargetBox {
    pub dim: usize,
    pub t: u64,
    pub capped: usize,
}

impl TargetBox {
    pub fn new(dim: usize, t: u64, capped: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        if capped > dim {
            return Err(Error::InvalidArgument(format!(
                "capped coordinates {capped} exceed dimension {dim}"
            )));
        }
        Ok(TargetBox { dim, t, capped })
    }

    /// The full box `[0..t]^dim`.
    pub fn full(dim: usize, t: u64) -> Self {
        assert!(dim >= 1);
        TargetBox { dim, t, capped: dim }
    }

    pub fn contains(&self, p: &[u64]) -> bool {
        p[..self.capped].iter().all(|&c| c <= self.t)
    }

    pub fn with_capped(self, capped: usize) -> Self {
        TargetBox { capped, ..self }
    }
}
