use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::polyring::ZPoly;

/// A lattice point `(i, j)` with non-negative coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub i: u32,
    pub j: u32,
}

impl Point {
    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }

    /// `A_ij = i x + j y + z`.
    pub fn linear_form(&self) -> ZPoly {
        ZPoly::linear(self.i as i64, self.j as i64, 1, 0)
    }

    pub fn checked_sub(&self, di: u32, dj: u32) -> Option<Point> {
        Some(Point::new(self.i.checked_sub(di)?, self.j.checked_sub(dj)?))
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.i <= other.i && self.j <= other.j
    }
}

impl From<(u32, u32)> for Point {
    fn from((i, j): (u32, u32)) -> Self {
        Self::new(i, j)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ordered finite set of distinct points. The order is the row order of every
/// matrix built from the set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(Error::DuplicatePoint(*p));
            }
        }
        Ok(Self { points })
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&p| p.into()).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn position(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn as_set(&self) -> BTreeSet<Point> {
        self.points.iter().copied().collect()
    }

    /// The first point whose left or lower neighbour is missing, with that
    /// neighbour.
    pub fn missing_predecessor(&self) -> Option<(Point, Point)> {
        let set = self.as_set();
        self.points.iter().find_map(|p| {
            [p.checked_sub(1, 0), p.checked_sub(0, 1)]
                .into_iter()
                .flatten()
                .find(|q| !set.contains(q))
                .map(|q| (*p, q))
        })
    }

    /// Down-closed in both coordinates, i.e. the exponents of the standard
    /// monomials of a zero-dimensional monomial ideal in two variables.
    pub fn is_staircase(&self) -> bool {
        self.missing_predecessor().is_none()
    }

    pub fn require_staircase(&self) -> Result<()> {
        match self.missing_predecessor() {
            Some((point, missing)) => Err(Error::NotStaircase { point, missing }),
            None => Ok(()),
        }
    }

    /// Subset keeping this set's order.
    pub fn filtered(&self, keep: impl Fn(&Point) -> bool) -> PointSet {
        Self {
            points: self.points.iter().copied().filter(|p| keep(p)).collect(),
        }
    }

    pub fn linear_forms(&self) -> Vec<ZPoly> {
        self.points.iter().map(Point::linear_form).collect()
    }

    /// Staircase of a partition: row `j` holds `(0, j) .. (parts[j]-1, j)`.
    /// Points are listed row by row.
    pub fn from_partition(parts: &[u32]) -> Self {
        let points = parts
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| Point::new(i, j as u32)))
            .collect();
        Self { points }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, p) in self.points.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// All partitions of `n` as non-increasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every staircase with exactly `r` points (one per partition of `r`).
pub fn staircases(r: u32) -> Vec<PointSet> {
    partitions(r)
        .iter()
        .map(|p| PointSet::from_partition(p))
        .collect()
}

/// Multiplicities `n_ij` attached to the points of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    counts: BTreeMap<Point, u32>,
}

impl Multiplicity {
    pub fn new(counts: BTreeMap<Point, u32>) -> Self {
        Self { counts }
    }

    pub fn uniform(set: &PointSet, n: u32) -> Self {
        Self::new(set.points().iter().map(|p| (*p, n)).collect())
    }

    /// Pairs `counts[k]` with the `k`-th point of `set`.
    pub fn from_counts(set: &PointSet, counts: &[u32]) -> Result<Self> {
        if counts.len() != set.len() {
            return Err(Error::LengthMismatch {
                expected: set.len(),
                found: counts.len(),
            });
        }
        Ok(Self::new(
            set.points()
                .iter()
                .copied()
                .zip(counts.iter().copied())
                .collect(),
        ))
    }

    pub fn get(&self, p: &Point) -> Option<u32> {
        self.counts.get(p).copied()
    }

    pub fn total(&self) -> usize {
        self.counts.values().map(|&n| n as usize).sum()
    }

    /// Counts in the order of `set`, checking that the keys are exactly the
    /// points of `set` and every count is positive.
    pub fn aligned(&self, set: &PointSet) -> Result<Vec<u32>> {
        if let Some(p) = self.counts.keys().find(|p| !set.contains(p)) {
            return Err(Error::UnknownPoint(*p));
        }
        set.points()
            .iter()
            .map(|p| match self.counts.get(p) {
                None => Err(Error::MissingMultiplicity(*p)),
                Some(0) => Err(Error::ZeroMultiplicity(*p)),
                Some(&n) => Ok(n),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_examples() {
        assert!(PointSet::from_pairs(&[(0, 0)]).unwrap().is_staircase());
        let axis: Vec<(u32, u32)> = (0..6).map(|i| (i, 0)).collect();
        assert!(PointSet::from_pairs(&axis).unwrap().is_staircase());
        let gap = PointSet::from_pairs(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 4)])
            .unwrap();
        assert!(!gap.is_staircase());
        assert_eq!(
            gap.require_staircase(),
            Err(Error::NotStaircase {
                point: Point::new(0, 4),
                missing: Point::new(0, 3)
            })
        );
        assert!(!PointSet::from_pairs(&[(1, 0)]).unwrap().is_staircase());
        assert!(PointSet::from_pairs(&[]).unwrap().is_staircase());
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            PointSet::from_pairs(&[(0, 0), (0, 0)]),
            Err(Error::DuplicatePoint(Point::new(0, 0)))
        );
    }

    #[test]
    fn staircase_counts_match_partition_numbers() {
        let counts: Vec<usize> = (1..=7).map(|r| staircases(r).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15]);
        for r in 1..=6 {
            for s in staircases(r) {
                assert!(s.is_staircase());
                assert_eq!(s.len(), r as usize);
            }
        }
    }

    #[test]
    fn multiplicity_alignment() {
        let set = PointSet::from_pairs(&[(0, 0), (1, 0)]).unwrap();
        let m = Multiplicity::from_counts(&set, &[2, 1]).unwrap();
        assert_eq!(m.aligned(&set).unwrap(), [2, 1]);
        assert_eq!(m.total(), 3);
        let zero = Multiplicity::from_counts(&set, &[0, 1]).unwrap();
        assert_eq!(
            zero.aligned(&set),
            Err(Error::ZeroMultiplicity(Point::new(0, 0)))
        );
        let other = PointSet::from_pairs(&[(0, 0)]).unwrap();
        assert_eq!(
            m.aligned(&other),
            Err(Error::UnknownPoint(Point::new(1, 0)))
        );
    }
}
