use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::multi::{Coeff, MultiPoly};
use crate::error::{Error, Result};
use crate::num::binomial_table;

/// Power series in `t` truncated after `t^order`, in exponential convention:
/// `coeffs[m]` is the coefficient of `t^m / m!`.
///
/// Working with `t^m / m!` keeps integer coefficients integral under
/// multiplication, since the product is the binomial convolution
/// `w_m = sum_i binom(m, i) u_i v_{m-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<C: Coeff = BigInt> {
    order: usize,
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn constant(c: MultiPoly<C>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    /// `e^{c t}`: the coefficient of `t^m / m!` is `c^m`.
    pub fn exp(c: &MultiPoly<C>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = MultiPoly::one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p = &p * c;
        }
        Self { order, coeffs }
    }

    /// `e^{c t} - 1`.
    pub fn exp_minus_one(c: &MultiPoly<C>, order: usize) -> Self {
        let mut s = Self::exp(c, order);
        s.coeffs[0] = MultiPoly::zero();
        s
    }

    /// Builds a series from EGF coefficients, padding or truncating to `order`.
    pub fn from_coeffs(mut coeffs: Vec<MultiPoly<C>>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^m / m!`.
    pub fn coeff(&self, m: usize) -> &MultiPoly<C> {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let binom = binomial_table(self.order as u32);
        let mut out = Self::zero(self.order);
        for m in 0..=self.order {
            let mut acc = MultiPoly::zero();
            for i in 0..=m {
                let (u, v) = (&self.coeffs[i], &other.coeffs[m - i]);
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                acc += &(u * v).scale(&C::from_bigint(binom[m][i].clone()));
            }
            out.coeffs[m] = acc;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ZPoly;

    #[test]
    fn exponential_series() {
        let s = TruncSeries::exp(&ZPoly::z(), 2);
        assert_eq!(s.coeffs(), &[ZPoly::one(), ZPoly::z(), ZPoly::z().pow(2)]);
        let e = TruncSeries::exp_minus_one(&ZPoly::x(), 4);
        assert!(e.coeff(0).is_zero());
        assert_eq!(e.coeff(3), &ZPoly::x().pow(3));
    }

    #[test]
    fn binomial_convolution() {
        let s = TruncSeries::exp_minus_one(&ZPoly::x(), 2)
            .mul(&TruncSeries::exp(&ZPoly::z(), 2))
            .unwrap();
        // 2xz + x^2
        let expect = &(&ZPoly::x() * &ZPoly::z()).scale(&2.into()) + &ZPoly::x().pow(2);
        assert_eq!(s.coeff(2), &expect);
    }

    #[test]
    fn exponentials_multiply() {
        let a = TruncSeries::exp(&ZPoly::x(), 6);
        let b = TruncSeries::exp(&ZPoly::y(), 6);
        let ab = TruncSeries::exp(&(&ZPoly::x() + &ZPoly::y()), 6);
        assert_eq!(a.mul(&b).unwrap(), ab);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = TruncSeries::exp(&ZPoly::x(), 3);
        let b = TruncSeries::exp(&ZPoly::x(), 4);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(3, 4)));
        assert!(a.add(&b).is_err());
    }
}
