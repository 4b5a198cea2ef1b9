//! Uniqueness of the monic solution at `l = r`, checked at a rational point.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::CMatrix;
use super::points::PointSet;
use super::solve::b_r;
use crate::error::Result;

/// Solves `m v = rhs` over the rationals by Gaussian elimination. Returns
/// `None` when `m` is singular.
pub fn solve_rational(
    mut m: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = m.len();
    assert_eq!(rhs.len(), n, "right-hand side length");
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(p, k);
        rhs.swap(p, k);
        let inv = BigRational::one() / &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k..n {
                let d = &f * &m[k][j];
                m[i][j] -= d;
            }
            let d = &f * &rhs[k];
            rhs[i] -= d;
        }
    }
    let mut v = alloc::vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in k + 1..n {
            acc -= &m[k][j] * &v[j];
        }
        v[k] = acc / &m[k][k];
    }
    Some(v)
}

/// Outcome of [`unique_at_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniqueCheck {
    /// The specialized `M_R` is singular; the point tells nothing.
    Singular,
    /// The solution of the specialized system, and whether it equals the
    /// evaluated coefficients `a_0..a_{r-1}` of `b_R`.
    Solved {
        solution: Vec<BigRational>,
        matches: bool,
    },
}

/// Specializes `M_{R,r} (a, 1)^t = 0` at `(x, y, z) = point` and solves
/// `M_R a = -(C(p, r))_p` by elimination.
pub fn unique_at_point(set: &PointSet, point: &[BigRational; 3]) -> Result<UniqueCheck> {
    set.require_staircase()?;
    let r = set.len();
    let full = CMatrix::build(set, r);
    let m: Vec<Vec<BigRational>> = full
        .entries()
        .iter()
        .map(|row| row[..r].iter().map(|e| e.eval(point)).collect())
        .collect();
    let rhs: Vec<BigRational> = full
        .entries()
        .iter()
        .map(|row| -row[r].eval(point))
        .collect();
    let Some(solution) = solve_rational(m, rhs) else {
        return Ok(UniqueCheck::Singular);
    };
    let b = b_r(set);
    let matches = solution
        .iter()
        .enumerate()
        .all(|(k, v)| b.coeff(k).eval(point) == *v);
    Ok(UniqueCheck::Solved { solution, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rational;

    #[test]
    fn small_rational_system() {
        let q = |n| rational(n, 1);
        // [[0, 2], [1, 1]] v = [4, 3] -> v = (1, 2)
        let v = solve_rational(
            alloc::vec![alloc::vec![q(0), q(2)], alloc::vec![q(1), q(1)]],
            alloc::vec![q(4), q(3)],
        );
        assert_eq!(v, Some(alloc::vec![q(1), q(2)]));
        assert!(solve_rational(
            alloc::vec![alloc::vec![q(1), q(2)], alloc::vec![q(2), q(4)]],
            alloc::vec![q(0), q(0)]
        )
        .is_none());
    }

    #[test]
    fn matches_b_r() {
        let s = PointSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (2, 0)]).unwrap();
        let pt = [rational(3, 2), rational(-2, 1), rational(1, 3)];
        match unique_at_point(&s, &pt).unwrap() {
            UniqueCheck::Solved { matches, .. } => assert!(matches),
            UniqueCheck::Singular => panic!("x y (x - y) != 0 here"),
        }
    }

    #[test]
    fn singular_when_x_vanishes() {
        let s = PointSet::from_pairs(&[(0, 0), (1, 0)]).unwrap();
        let pt = [rational(0, 1), rational(1, 1), rational(1, 1)];
        assert_eq!(unique_at_point(&s, &pt).unwrap(), UniqueCheck::Singular);
    }
}
