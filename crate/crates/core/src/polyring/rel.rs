use alloc::format;
use core::fmt;

use num_integer::Integer;

use super::multi::{Coeff, MultiPoly, X, Y, Z};
use crate::error::{Error, Result};

/// A linear relation in `x, y`, split into the four sign cases.
///
/// `Neg { a, b }` stores `ax - by = 0` with both `a, b` positive. The pair
/// `(a, b)` is never reduced to lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientRel {
    /// `ax + by = 0`, `a, b > 0`.
    Pos { a: u32, b: u32 },
    /// `ax - by = 0`, `a, b > 0`.
    Neg { a: u32, b: u32 },
    /// `x = 0`.
    XZero,
    /// `y = 0`.
    YZero,
}

impl QuotientRel {
    pub fn pos(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidRelation(format!("{a}x+{b}y needs a, b > 0")));
        }
        Ok(Self::Pos { a, b })
    }

    pub fn neg(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidRelation(format!("{a}x-{b}y needs a, b > 0")));
        }
        Ok(Self::Neg { a, b })
    }

    /// The relation `ax + by = 0` for arbitrary integers, not both zero.
    pub fn from_linear(a: i64, b: i64) -> Result<Self> {
        let (a, b) = if a < 0 { (-a, -b) } else { (a, b) };
        let small = |v: i64| {
            u32::try_from(v.unsigned_abs())
                .map_err(|_| Error::InvalidRelation(format!("coefficient {v} too large")))
        };
        match (a, b) {
            (0, 0) => Err(Error::InvalidRelation("0x+0y".into())),
            (0, _) => Ok(Self::YZero),
            (_, 0) => Ok(Self::XZero),
            (a, b) if b > 0 => Ok(Self::Pos {
                a: small(a)?,
                b: small(b)?,
            }),
            (a, b) => Ok(Self::Neg {
                a: small(a)?,
                b: small(b)?,
            }),
        }
    }

    /// Case tag: `pos`, `neg`, `x_zero` or `y_zero`.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Pos { .. } => "pos",
            Self::Neg { .. } => "neg",
            Self::XZero => "x_zero",
            Self::YZero => "y_zero",
        }
    }

    /// `(a / g, b / g)` with `g = gcd(a, b)`, for the two line cases.
    pub fn primitive_step(&self) -> Option<(u32, u32)> {
        match *self {
            Self::Pos { a, b } | Self::Neg { a, b } => {
                let g = a.gcd(&b);
                Some((a / g, b / g))
            }
            _ => None,
        }
    }

    /// Canonical representative of `p` modulo the relation.
    ///
    /// The line cases parametrize the line: `x -> -b t, y -> a t` for
    /// `ax + by`, and `x -> b t, y -> a t` for `ax - by`. The result stores
    /// `t` in the `x` slot. The axis cases just set the variable to zero.
    /// Two polynomials are congruent iff their normal forms are equal.
    pub fn reduce<C: Coeff>(&self, p: &MultiPoly<C>) -> MultiPoly<C> {
        let t = MultiPoly::<C>::var(X);
        let y = MultiPoly::<C>::var(Y);
        let z = MultiPoly::<C>::var(Z);
        let int = |n: i64| MultiPoly::<C>::from_int(n);
        match *self {
            Self::Pos { a, b } => {
                let xi = &t * &int(-(b as i64));
                let yi = &t * &int(a as i64);
                p.substitute([&xi, &yi, &z])
            }
            Self::Neg { a, b } => {
                let xi = &t * &int(b as i64);
                let yi = &t * &int(a as i64);
                p.substitute([&xi, &yi, &z])
            }
            Self::XZero => p.substitute([&MultiPoly::zero(), &y, &z]),
            Self::YZero => p.substitute([&t, &MultiPoly::zero(), &z]),
        }
    }

    pub fn congruent<C: Coeff>(&self, p: &MultiPoly<C>, q: &MultiPoly<C>) -> bool {
        self.reduce(&(p - q)).is_zero()
    }

    /// Variable names for printing normal forms.
    pub fn names(&self) -> [&'static str; 3] {
        match self {
            Self::Pos { .. } | Self::Neg { .. } => ["t", "y", "z"],
            _ => ["x", "y", "z"],
        }
    }
}

impl fmt::Display for QuotientRel {
    /// Same syntax the command line accepts: `ax+by`, `ax-by`, `x`, `y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pos { a, b } => write!(f, "{a}x+{b}y"),
            Self::Neg { a, b } => write!(f, "{a}x-{b}y"),
            Self::XZero => f.write_str("x"),
            Self::YZero => f.write_str("y"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ZPoly;

    #[test]
    fn relation_itself_vanishes() {
        let rel = QuotientRel::pos(1, 1).unwrap();
        assert!(rel.reduce(&(&ZPoly::x() + &ZPoly::y())).is_zero());
        let rel = QuotientRel::neg(2, 3).unwrap();
        assert!(rel.reduce(&ZPoly::linear(2, -3, 0, 0)).is_zero());
    }

    #[test]
    fn difference_reduces_to_minus_two_t() {
        let rel = QuotientRel::pos(1, 1).unwrap();
        let nf = rel.reduce(&(&ZPoly::x() - &ZPoly::y()));
        assert_eq!(nf, ZPoly::x().scale(&(-2).into()));
        assert_eq!(
            alloc::format!("{}", nf.display_with(rel.names())),
            "-2 * t^1"
        );
    }

    #[test]
    fn axis_cases() {
        assert!(QuotientRel::XZero.reduce(&ZPoly::x()).is_zero());
        assert_eq!(
            QuotientRel::XZero.reduce(&ZPoly::linear(3, 1, 1, 0)),
            ZPoly::linear(0, 1, 1, 0)
        );
        assert_eq!(
            QuotientRel::YZero.reduce(&ZPoly::linear(3, 1, 1, 0)),
            ZPoly::linear(3, 0, 1, 0)
        );
    }

    #[test]
    fn linear_constructor_cases() {
        assert_eq!(
            QuotientRel::from_linear(2, 3).unwrap(),
            QuotientRel::Pos { a: 2, b: 3 }
        );
        assert_eq!(
            QuotientRel::from_linear(2, -3).unwrap(),
            QuotientRel::Neg { a: 2, b: 3 }
        );
        assert_eq!(
            QuotientRel::from_linear(-2, 3).unwrap(),
            QuotientRel::Neg { a: 2, b: 3 }
        );
        assert_eq!(QuotientRel::from_linear(5, 0).unwrap(), QuotientRel::XZero);
        assert_eq!(QuotientRel::from_linear(0, -1).unwrap(), QuotientRel::YZero);
        assert!(QuotientRel::from_linear(0, 0).is_err());
        assert!(QuotientRel::pos(0, 1).is_err());
    }

    #[test]
    fn non_coprime_kept() {
        let rel = QuotientRel::pos(2, 4).unwrap();
        assert_eq!(rel, QuotientRel::Pos { a: 2, b: 4 });
        assert_eq!(rel.primitive_step(), Some((1, 2)));
        assert!(rel.reduce(&ZPoly::linear(1, 2, 0, 0)).is_zero());
    }
}
