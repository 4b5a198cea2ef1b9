use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::cert::verify_certificates;
use super::{reduce_set, RepresentativePolicy};
use crate::csys::{residual, ClosedForm, Multiplicity, PointSet};
use crate::error::{Error, Result};
use crate::num::factorial;
use crate::polyring::{QPoly, QuotientRel, UniPoly, ZPoly};

/// Normal forms of the `A_ij`, without repetition, in order of first
/// appearance.
pub fn distinct_normal_forms(set: &PointSet, rel: QuotientRel) -> Vec<ZPoly> {
    let mut out: Vec<ZPoly> = Vec::new();
    for f in set.linear_forms() {
        let nf = rel.reduce(&f);
        if !out.contains(&nf) {
            out.push(nf);
        }
    }
    out
}

/// `r0`: the number of distinct normal forms among the `A_ij`.
pub fn r0(set: &PointSet, rel: QuotientRel) -> usize {
    distinct_normal_forms(set, rel).len()
}

/// `(b_R(s))_red`: the product of `s - A` over the distinct normal forms `A`.
pub fn reduced_b_r(set: &PointSet, rel: QuotientRel) -> UniPoly {
    let roots = distinct_normal_forms(set, rel);
    UniPoly::from_roots(&roots, &alloc::vec![1; roots.len()]).expect("lengths agree")
}

/// Coefficientwise normal form of a polynomial in `s`.
pub fn reduce_uni(b: &UniPoly, rel: QuotientRel) -> UniPoly {
    b.map(|c| rel.reduce(c))
}

/// `b_a(s) = prod_{(i,j) in H} (s - A_ij)^{n_ij}` for the reduced set `H` of
/// `set` under `rel`, with `mults` keyed by the points of `H`.
///
/// Checked before returning: every entry of `M_{R,l} (a, 1)^t` over the full
/// set reduces to zero.
pub fn solve_quotient(
    set: &PointSet,
    rel: QuotientRel,
    mults: &Multiplicity,
    policy: &RepresentativePolicy,
) -> Result<UniPoly> {
    let reduced = reduce_set(set, rel, policy)?.reduced_set;
    let counts = mults.aligned(&reduced)?;
    let ell: usize = counts.iter().map(|&n| n as usize).sum();
    if ell < reduced.len() {
        return Err(Error::LengthTooSmall {
            ell,
            r: reduced.len(),
        });
    }
    let b = UniPoly::from_roots(&reduced.linear_forms(), &counts)?;
    let res = residual(set, b.coeffs());
    if let Some(k) = res.iter().position(|e| !rel.reduce(e).is_zero()) {
        return Err(Error::VerificationFailed(format!(
            "row {} of M_(R,{ell}) does not vanish modulo {rel}",
            set.points()[k]
        )));
    }
    Ok(b)
}

/// Checks that the dropped rows of `M_{R,l}` are combinations of the kept
/// rows modulo `rel`, using the certificates from [`reduce_set`].
pub fn check_system_equivalence(
    set: &PointSet,
    rel: QuotientRel,
    l: usize,
    policy: &RepresentativePolicy,
) -> Result<bool> {
    let red = reduce_set(set, rel, policy)?;
    Ok(verify_certificates(set, rel, &red.certificates, l).is_none())
}

/// Normal form of `prod 1/(i! j!) prod_{p<q} (A_q - A_p)` over `h`, the
/// factors taken in the row order of `h`.
pub fn det_quotient_closed_form(h: &PointSet, rel: QuotientRel) -> Result<ZPoly> {
    let cf = if h.len() < 2 {
        let denom = h.points().iter().fold(BigInt::one(), |acc, p| {
            acc * factorial(p.i) * factorial(p.j)
        });
        ClosedForm {
            prefactor: BigRational::new(BigInt::one(), denom),
            factors: Vec::new(),
        }
    } else {
        ClosedForm::of(h)
    };
    let prod = cf
        .factors
        .iter()
        .fold(QPoly::constant(cf.prefactor.clone()), |acc, f| {
            &acc * &rel.reduce(f).to_rational()
        });
    prod.to_integer().ok_or(Error::NotIntegral)
}
