use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::num::{binomial_table, factorial};
use crate::polyring::{TruncSeries, ZPoly};
use crate::stirling::StirlingTable;

/// Generator for `C(k1, k2, l)` sharing one second-kind Stirling table and
/// one binomial table across calls.
#[derive(Clone, Debug)]
pub struct CGenerator {
    s2: StirlingTable,
    binom: Vec<Vec<BigInt>>,
}

impl Default for CGenerator {
    fn default() -> Self {
        Self::new()
    }
}

impl CGenerator {
    pub fn new() -> Self {
        Self {
            s2: StirlingTable::second(),
            binom: binomial_table(0),
        }
    }

    fn ensure(&mut self, l: u32) {
        if self.binom.len() <= l as usize {
            self.binom = binomial_table(l.max(2 * self.binom.len() as u32));
        }
        self.s2.ensure(l);
    }

    /// `C(k1, k2, l) = sum binom(l, i1) binom(l - i1, i2) S(i1, k1) S(i2, k2)
    /// x^i1 y^i2 z^(l - i1 - i2)` over `i1 >= k1`, `i2 >= k2`, `i1 + i2 <= l`.
    pub fn c(&mut self, k1: u32, k2: u32, l: u32) -> ZPoly {
        if k1 + k2 > l {
            return ZPoly::zero();
        }
        self.ensure(l);
        let mut terms = Vec::new();
        for i1 in k1..=l - k2 {
            let s_a = self.s2.peek(i1, k1).expect("table extended");
            if s_a.is_zero() {
                continue;
            }
            let outer = &self.binom[l as usize][i1 as usize] * s_a;
            for i2 in k2..=l - i1 {
                let s_b = self.s2.peek(i2, k2).expect("table extended");
                if s_b.is_zero() {
                    continue;
                }
                let c = &outer * &self.binom[(l - i1) as usize][i2 as usize] * s_b;
                terms.push(([i1, i2, l - i1 - i2], c));
            }
        }
        ZPoly::from_terms(terms)
    }
}

/// `C(k1, k2, l)` from its defining double sum.
pub fn cpoly(k1: u32, k2: u32, l: u32) -> ZPoly {
    CGenerator::new().c(k1, k2, l)
}

/// `C(k1, k2, l)` as the coefficient of `t^l / l!` in
/// `(e^{xt} - 1)^k1 (e^{yt} - 1)^k2 e^{zt} / (k1! k2!)`.
pub fn cpoly_egf(k1: u32, k2: u32, l: u32) -> ZPoly {
    let order = l as usize;
    let ex = TruncSeries::exp_minus_one(&ZPoly::x(), order).pow(k1);
    let ey = TruncSeries::exp_minus_one(&ZPoly::y(), order).pow(k2);
    let ez = TruncSeries::exp(&ZPoly::z(), order);
    let prod = ex.mul(&ey).and_then(|p| p.mul(&ez)).expect("same order");
    let denom = ZPoly::constant(factorial(k1) * factorial(k2));
    prod.coeff(order)
        .div_exact(&denom)
        .expect("coefficients divisible by k1! k2!")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::stirling2;
    use num_rational::BigRational;

    #[test]
    fn vanishes_below_degree() {
        assert!(cpoly(2, 1, 2).is_zero());
        assert!(cpoly_egf(2, 1, 2).is_zero());
    }

    #[test]
    fn diagonal_value() {
        // binom(2,1) x y
        let expect = (&ZPoly::x() * &ZPoly::y()).scale(&2.into());
        assert_eq!(cpoly(1, 1, 2), expect);
        assert_eq!(cpoly_egf(1, 1, 2), expect);
    }

    #[test]
    fn pure_z_power() {
        assert_eq!(cpoly(0, 0, 3), ZPoly::z().pow(3));
        for l in 0..6 {
            assert_eq!(cpoly_egf(0, 0, l), ZPoly::z().pow(l));
        }
    }

    #[test]
    fn hand_expansion() {
        // x^2 + 2xz
        let expect = &ZPoly::x().pow(2) + &(&ZPoly::x() * &ZPoly::z()).scale(&2.into());
        assert_eq!(cpoly(1, 0, 2), expect);
    }

    #[test]
    fn specialization_gives_stirling() {
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::from_integer(0.into());
        let pt = [one, zero.clone(), zero];
        for l in 0..9 {
            for i in 0..=l {
                let v = cpoly_egf(i, 0, l).eval(&pt);
                assert_eq!(v, BigRational::from_integer(stirling2(l, i)));
            }
        }
    }

    #[test]
    fn generator_reuse() {
        let mut g = CGenerator::new();
        for l in (0..10).rev() {
            for k1 in 0..4 {
                for k2 in 0..4 {
                    assert_eq!(g.c(k1, k2, l), cpoly(k1, k2, l));
                }
            }
        }
    }
}
