//! Inversion identities between the `C(i, j, l)` and the powers `A_ij^l` over
//! the grid `S_{k1,k2} = [0, k1] x [0, k2]`, with weights
//! `c_ij = binom(k1,i) binom(k2,j) (-1)^{k1+k2-i-j}` and
//! `d_ij = binom(k1,i) binom(k2,j) i! j!`.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use super::cpoly::CGenerator;
use super::points::Point;
use crate::num::{binomial, factorial, sign};
use crate::polyring::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaPart {
    /// `sum_S d_ij C(i,j,l) = A_{k1 k2}^l`
    I,
    /// `k1! k2! C(k1,k2,l) = sum_S c_ij A_ij^l`
    Ii,
    /// `sum_{S*} c_ij A_ij^l = -sum_{S*} d_ij C(i,j,l)`, `S* = S \ {(k1,k2)}`
    Iii,
}

impl FromStr for LemmaPart {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "i" => Ok(Self::I),
            "ii" => Ok(Self::Ii),
            "iii" => Ok(Self::Iii),
            _ => Err(()),
        }
    }
}

impl fmt::Display for LemmaPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "i",
            Self::Ii => "ii",
            Self::Iii => "iii",
        })
    }
}

fn c_weight(k1: u32, k2: u32, i: u32, j: u32) -> BigInt {
    binomial(k1, i) * binomial(k2, j) * sign(k1 + k2 - i - j)
}

fn d_weight(k1: u32, k2: u32, i: u32, j: u32) -> BigInt {
    binomial(k1, i) * binomial(k2, j) * factorial(i) * factorial(j)
}

fn grid(k1: u32, k2: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=k1).flat_map(move |i| (0..=k2).map(move |j| (i, j)))
}

/// `sum_{(i,j)} c_ij A_ij^l` over the grid, optionally skipping the corner.
pub fn c_sum(k1: u32, k2: u32, l: u32, skip_corner: bool) -> ZPoly {
    grid(k1, k2)
        .filter(|&(i, j)| !(skip_corner && (i, j) == (k1, k2)))
        .fold(ZPoly::zero(), |acc, (i, j)| {
            &acc + &Point::new(i, j)
                .linear_form()
                .pow(l)
                .scale(&c_weight(k1, k2, i, j))
        })
}

fn d_sum(g: &mut CGenerator, k1: u32, k2: u32, l: u32, skip_corner: bool) -> ZPoly {
    grid(k1, k2)
        .filter(|&(i, j)| !(skip_corner && (i, j) == (k1, k2)))
        .fold(ZPoly::zero(), |acc, (i, j)| {
            &acc + &g.c(i, j, l).scale(&d_weight(k1, k2, i, j))
        })
}

/// Checks one part of the identity for `(k1, k2, l)` by exact expansion.
pub fn lemma_comb_check(k1: u32, k2: u32, l: u32, part: LemmaPart) -> bool {
    let mut g = CGenerator::new();
    match part {
        LemmaPart::I => d_sum(&mut g, k1, k2, l, false) == Point::new(k1, k2).linear_form().pow(l),
        LemmaPart::Ii => {
            g.c(k1, k2, l).scale(&(factorial(k1) * factorial(k2))) == c_sum(k1, k2, l, false)
        }
        LemmaPart::Iii => c_sum(k1, k2, l, true) == -d_sum(&mut g, k1, k2, l, true),
    }
}

/// `sum_S c_ij A_ij^{k1+k2-1} = 0` whenever `k1 + k2 >= 1`.
pub fn vanishing_below_corner(k1: u32, k2: u32) -> bool {
    assert!(k1 + k2 >= 1, "needs k1 + k2 >= 1");
    c_sum(k1, k2, k1 + k2 - 1, false).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_case() {
        for l in 0..6 {
            assert!(lemma_comb_check(0, 0, l, LemmaPart::I));
        }
    }

    #[test]
    fn part_ii_example() {
        assert!(lemma_comb_check(2, 1, 5, LemmaPart::Ii));
    }

    #[test]
    fn all_parts_small() {
        for k1 in 0..3 {
            for k2 in 0..3 {
                for l in 0..6 {
                    for part in [LemmaPart::I, LemmaPart::Ii, LemmaPart::Iii] {
                        assert!(lemma_comb_check(k1, k2, l, part), "{k1} {k2} {l} {part}");
                    }
                }
            }
        }
    }

    #[test]
    fn corner_corollary() {
        for k1 in 0..4 {
            for k2 in 0..4 {
                if k1 + k2 > 0 {
                    assert!(vanishing_below_corner(k1, k2));
                }
            }
        }
        // At the corner degree itself the sum is k1! k2! binom(k1+k2,k1) x^k1 y^k2.
        assert!(!c_sum(1, 1, 2, false).is_zero());
    }

    #[test]
    fn part_parse() {
        assert_eq!("iii".parse::<LemmaPart>(), Ok(LemmaPart::Iii));
        assert!("iv".parse::<LemmaPart>().is_err());
    }
}
