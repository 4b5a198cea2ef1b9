use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::matrix::CMatrix;
use super::points::PointSet;
use crate::error::{Error, Result};
use crate::num::factorial;
use crate::polyring::{Coeff, MultiPoly, QPoly, ZPoly};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every division is exact: after step `k` the entries are `k+1`-minors of the
/// input, so dividing by the previous pivot never leaves a remainder.
pub fn bareiss<C: Coeff>(mut m: Vec<Vec<MultiPoly<C>>>) -> MultiPoly<C> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "square matrix required");
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return MultiPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(M_R)` for any point set, by [`bareiss`].
pub fn det_bareiss(set: &PointSet) -> ZPoly {
    bareiss(CMatrix::square(set).into_entries())
}

/// The closed form of `det(M_R)` for a staircase, kept factored: a rational
/// prefactor times a product of linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    /// `prod 1 / (i! j!)` over the points.
    pub prefactor: BigRational,
    /// `A_q - A_p` for each pair `p` before `q` in row order.
    pub factors: Vec<ZPoly>,
}

impl ClosedForm {
    pub fn of(set: &PointSet) -> Self {
        let denom = set.points().iter().fold(BigInt::one(), |acc, p| {
            acc * factorial(p.i) * factorial(p.j)
        });
        let forms = set.linear_forms();
        let mut factors = Vec::new();
        for p in 0..forms.len() {
            for q in p + 1..forms.len() {
                factors.push(&forms[q] - &forms[p]);
            }
        }
        Self {
            prefactor: BigRational::new(BigInt::one(), denom),
            factors,
        }
    }

    pub fn expand(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::constant(self.prefactor.clone()), |acc, f| {
                &acc * &f.to_rational()
            })
    }
}

/// `det(M_R) = prod_{(i,j) in R} 1/(i! j!) * prod_{p < q} (A_q - A_p)` for a
/// staircase `R`, where `p < q` follows the row order.
///
/// The orientation `A_q - A_p` is the one of the Vandermonde determinant
/// `det(A_p^l)`; writing `A_p - A_q` instead changes the sign by
/// `(-1)^{r(r-1)/2}`. Sets with fewer than two points fall back to
/// [`det_bareiss`].
pub fn det_closed_form(set: &PointSet) -> Result<ZPoly> {
    set.require_staircase()?;
    if set.len() < 2 {
        return Ok(det_bareiss(set));
    }
    ClosedForm::of(set)
        .expand()
        .to_integer()
        .ok_or(Error::NotIntegral)
}

/// `(-1)^{r(r-1)/2}`: the sign relating `prod_{p<q}(A_p - A_q)` to
/// `prod_{p<q}(A_q - A_p)`, equivalently the sign of reversing `r` columns.
pub fn reversal_sign(r: usize) -> i64 {
    if (r * r.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
