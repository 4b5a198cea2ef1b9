use alloc::vec::Vec;

use super::cpoly::CGenerator;
use super::points::{Point, PointSet};
use crate::error::{Error, Result};
use crate::polyring::{Coeff, MultiPoly, ZPoly};

/// `M_{R,l}`: one row per point `(k1, k2)` of `R`, in the set's order, and
/// columns `C(k1, k2, 0), ..., C(k1, k2, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    rows: Vec<Point>,
    entries: Vec<Vec<ZPoly>>,
}

impl CMatrix {
    pub fn build(set: &PointSet, l: usize) -> Self {
        let mut g = CGenerator::new();
        Self::build_with(&mut g, set, l)
    }

    pub fn build_with(g: &mut CGenerator, set: &PointSet, l: usize) -> Self {
        let entries = set
            .points()
            .iter()
            .map(|p| (0..=l as u32).map(|c| g.c(p.i, p.j, c)).collect())
            .collect();
        Self {
            rows: set.points().to_vec(),
            entries,
        }
    }

    /// The square matrix `M_R = M_{R, r-1}`.
    pub fn square(set: &PointSet) -> Self {
        Self::build(set, set.len().saturating_sub(1))
    }

    pub fn rows(&self) -> &[Point] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, row: usize, col: usize) -> &ZPoly {
        &self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[ZPoly] {
        &self.entries[row]
    }

    pub fn entries(&self) -> &[Vec<ZPoly>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Vec<ZPoly>> {
        self.entries
    }

    /// `M v` for a vector of the matching length.
    pub fn apply<C: Coeff>(
        &self,
        v: &[MultiPoly<C>],
        lift: impl Fn(&ZPoly) -> MultiPoly<C>,
    ) -> Result<Vec<MultiPoly<C>>> {
        let cols = self.num_cols();
        if v.len() != cols {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: v.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(MultiPoly::zero(), |acc, (m, c)| {
                    if m.is_zero() || c.is_zero() {
                        acc
                    } else {
                        &acc + &(&lift(m) * c)
                    }
                })
            })
            .collect())
    }
}

/// `M_{R,l} (c_0, ..., c_l)^t` with `l = coeffs.len() - 1`. All entries zero
/// means the coefficient vector solves the homogenized system.
pub fn residual(set: &PointSet, coeffs: &[ZPoly]) -> Vec<ZPoly> {
    if coeffs.is_empty() {
        return alloc::vec![ZPoly::zero(); set.len()];
    }
    let m = CMatrix::build(set, coeffs.len() - 1);
    m.apply(coeffs, Clone::clone).expect("lengths agree")
}
