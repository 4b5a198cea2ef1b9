//! The seven-point set `{(0,0),(1,0),(2,0),(3,0),(0,1),(0,2),(0,4)}`, which is
//! not a staircase (`(0,3)` is missing). Its square matrix has a determinant
//! with an irreducible quadratic factor and its length-7 system has no
//! polynomial solution, only a rational one.

use alloc::vec;
use alloc::vec::Vec;

use super::det::{bareiss, det_bareiss};
use super::matrix::{residual, CMatrix};
use super::points::PointSet;
use crate::polyring::{UniPoly, ZPoly};

pub fn seven_point_set() -> PointSet {
    PointSet::from_pairs(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 4)])
        .expect("distinct")
}

/// The largest staircase inside [`seven_point_set`], same row order.
pub fn six_point_staircase() -> PointSet {
    PointSet::from_pairs(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2)]).expect("distinct")
}

/// `11x^2 - 42xy + 37y^2`.
pub fn quadratic_factor() -> ZPoly {
    let (x, y) = (ZPoly::x(), ZPoly::y());
    let c = |n: i64| ZPoly::from_int(n);
    &(&(&c(11) * &x.pow(2)) - &(&c(42) * &(&x * &y))) + &(&c(37) * &y.pow(2))
}

/// `-2 x^6 y^7 (2x-y)(3x-y)(x-2y)(3x-2y)(x-y)^2 (11x^2 - 42xy + 37y^2)`, expanded.
pub fn factored_det() -> ZPoly {
    let lin = |a: i64, b: i64| ZPoly::linear(a, b, 0, 0);
    [
        ZPoly::from_int(-2),
        ZPoly::x().pow(6),
        ZPoly::y().pow(7),
        lin(2, -1),
        lin(3, -1),
        lin(1, -2),
        lin(3, -2),
        lin(1, -1).pow(2),
        quadratic_factor(),
    ]
    .iter()
    .fold(ZPoly::one(), |acc, f| &acc * f)
}

/// `p(s) = (11x^2 - 42xy + 37y^2) s + 6x^3 - 175y^3 - 11x^2 z - 77x^2 y
/// + 42xyz - 37y^2 z + 222xy^2`.
pub fn numerator_factor() -> UniPoly {
    let (x, y, z) = (ZPoly::x(), ZPoly::y(), ZPoly::z());
    let c = |n: i64| ZPoly::from_int(n);
    let terms: Vec<ZPoly> = vec![
        &c(6) * &x.pow(3),
        &c(-175) * &y.pow(3),
        &c(-11) * &(&x.pow(2) * &z),
        &c(-77) * &(&x.pow(2) * &y),
        &c(42) * &(&(&x * &y) * &z),
        &c(-37) * &(&y.pow(2) * &z),
        &c(222) * &(&x * &y.pow(2)),
    ];
    let constant = terms.iter().fold(ZPoly::zero(), |acc, t| &acc + t);
    UniPoly::new(vec![constant, quadratic_factor()])
}

/// `(s-z)(s-z-y)(s-z-2y)(s-z-3x)(s-z-x)(s-z-2x) p(s)`: the rational solution
/// multiplied through by the quadratic factor. Its leading coefficient is the
/// quadratic factor rather than 1.
pub fn cleared_solution() -> UniPoly {
    let roots: Vec<ZPoly> = [(0, 0), (0, 1), (0, 2), (3, 0), (1, 0), (2, 0)]
        .iter()
        .map(|&(i, j)| ZPoly::linear(i, j, 1, 0))
        .collect();
    UniPoly::from_roots(&roots, &[1; 6])
        .expect("lengths agree")
        .mul(&numerator_factor())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    /// `det(M_R)`, rows in the listed order, columns `l = 0..6`.
    pub det: ZPoly,
    pub factored: ZPoly,
    pub det_matches_factored: bool,
    /// Whether the factored form equals the determinant taken with the columns
    /// in reverse order, i.e. `(-1)^{21} det(M_R)`.
    pub reversed_columns_match: bool,
    /// `M_{R,7}` applied to the cleared coefficient vector vanishes.
    pub cleared_residual_zero: bool,
    /// `det(M_R) = det(M_{R0}) y^4 (11x^2 - 42xy + 37y^2)`.
    pub factorization_holds: bool,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.det_matches_factored && self.cleared_residual_zero && self.factorization_holds
    }
}

pub fn verify_counterexample() -> CounterexampleReport {
    let set = seven_point_set();
    let det = det_bareiss(&set);
    let factored = factored_det();

    let mut reversed = CMatrix::square(&set).into_entries();
    reversed.iter_mut().for_each(|row| row.reverse());
    let reversed_det = bareiss(reversed);

    let cleared = cleared_solution();
    let cleared_residual_zero =
        cleared.degree() == Some(7) && residual(&set, cleared.coeffs()).iter().all(ZPoly::is_zero);

    let sub = det_bareiss(&six_point_staircase());
    let factorization_holds = det == &(&sub * &ZPoly::y().pow(4)) * &quadratic_factor();

    CounterexampleReport {
        det_matches_factored: det == factored,
        reversed_columns_match: reversed_det == factored,
        cleared_residual_zero,
        factorization_holds,
        det,
        factored,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_a_staircase() {
        assert!(!seven_point_set().is_staircase());
        assert!(six_point_staircase().is_staircase());
    }

    #[test]
    fn cleared_vector_shape() {
        let c = cleared_solution();
        assert_eq!(c.degree(), Some(7));
        assert_eq!(c.coeff(7), quadratic_factor());
    }

    #[test]
    fn determinant_is_factored_form_up_to_orientation() {
        let r = verify_counterexample();
        assert_eq!(r.det, -r.factored.clone());
        assert!(r.reversed_columns_match);
        assert!(r.factorization_holds);
        assert!(r.cleared_residual_zero);
    }
}
