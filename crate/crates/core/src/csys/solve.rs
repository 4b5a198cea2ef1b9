use alloc::format;
use alloc::vec::Vec;

use super::matrix::{residual, CMatrix};
use super::points::{Multiplicity, PointSet};
use crate::error::{Error, Result};
use crate::polyring::{UniPoly, ZPoly};

/// `b_R(s) = prod_{(i,j) in R} (s - A_ij)`.
pub fn b_r(set: &PointSet) -> UniPoly {
    UniPoly::from_roots(&set.linear_forms(), &alloc::vec![1; set.len()]).expect("lengths agree")
}

/// Root-encoded solution of `M_{R,l} (a, 1)^t = 0` for a staircase `R`:
/// `b_a(s) = prod (s - A_ij)^{n_ij}` with every `n_ij > 0` and
/// `l = sum n_ij >= r`.
///
/// The result is always checked against the full matrix before it is
/// returned.
pub fn solve(set: &PointSet, mults: &Multiplicity) -> Result<UniPoly> {
    set.require_staircase()?;
    let counts = mults.aligned(set)?;
    let ell: usize = counts.iter().map(|&n| n as usize).sum();
    if ell < set.len() {
        return Err(Error::LengthTooSmall { ell, r: set.len() });
    }
    let b = UniPoly::from_roots(&set.linear_forms(), &counts)?;
    let res = residual(set, b.coeffs());
    if let Some(k) = res.iter().position(|e| !e.is_zero()) {
        return Err(Error::VerificationFailed(format!(
            "row {} of M_(R,{ell}) does not vanish",
            set.points()[k]
        )));
    }
    Ok(b)
}

/// Residual of an arbitrary multiplicity vector (zeros allowed), aligned with
/// the points of `set`. Used to show that positivity of the `n_ij` matters.
pub fn residual_for_counts(set: &PointSet, counts: &[u32]) -> Result<Vec<ZPoly>> {
    let b = UniPoly::from_roots(&set.linear_forms(), counts)?;
    Ok(residual(set, b.coeffs()))
}

/// Residual over a prebuilt `M_{R,l}`, for sweeps that reuse one matrix.
pub fn residual_with(m: &CMatrix, b: &UniPoly) -> Result<Vec<ZPoly>> {
    m.apply(b.coeffs(), Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csys::Point;
    use crate::num::{binomial, sign};
    use num_bigint::BigInt;

    fn set(pairs: &[(u32, u32)]) -> PointSet {
        PointSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn single_point_power() {
        let s = set(&[(0, 0)]);
        for ell in 1..7u32 {
            let b = solve(&s, &Multiplicity::from_counts(&s, &[ell]).unwrap()).unwrap();
            for j in 0..ell {
                let a_j = ZPoly::z()
                    .pow(ell - j)
                    .scale(&(binomial(ell, j) * BigInt::from(sign(ell - j))));
                assert_eq!(b.coeff(j as usize), a_j);
            }
        }
    }

    #[test]
    fn three_points_unit_multiplicities() {
        let s = set(&[(0, 0), (1, 0), (0, 1)]);
        let b = solve(&s, &Multiplicity::uniform(&s, 1)).unwrap();
        assert_eq!(b, b_r(&s));
        assert!(residual(&s, b.coeffs()).iter().all(ZPoly::is_zero));
    }

    #[test]
    fn square_staircase_longer_system() {
        let s = set(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let m = Multiplicity::from_counts(&s, &[2, 1, 1, 1]).unwrap();
        let b = solve(&s, &m).unwrap();
        assert_eq!(b.degree(), Some(5));
        assert!(residual(&s, b.coeffs()).iter().all(ZPoly::is_zero));
    }

    #[test]
    fn rejects_bad_input() {
        let gap = set(&[(0, 0), (0, 2)]);
        assert_eq!(
            solve(&gap, &Multiplicity::uniform(&gap, 1)),
            Err(Error::NotStaircase {
                point: Point::new(0, 2),
                missing: Point::new(0, 1)
            })
        );
        let s = set(&[(0, 0), (1, 0)]);
        let zero = Multiplicity::from_counts(&s, &[2, 0]).unwrap();
        assert_eq!(
            solve(&s, &zero),
            Err(Error::ZeroMultiplicity(Point::new(1, 0)))
        );
    }

    #[test]
    fn zero_multiplicity_breaks_the_solution() {
        let s = set(&[(0, 0), (1, 0)]);
        let res = residual_for_counts(&s, &[2, 0]).unwrap();
        // Row (1,0): x (-2z) + (x^2 + 2xz) = x^2.
        assert_eq!(res, [ZPoly::zero(), ZPoly::x().pow(2)]);
    }
}
