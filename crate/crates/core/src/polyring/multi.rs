use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponents of `(x, y, z)`.
pub type Exp = [u32; 3];

/// Coefficient ring of a [`MultiPoly`]: `BigInt` or `BigRational`.
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_bigint(n: BigInt) -> Self;
    /// `self / d` when the quotient lies in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn is_negative(&self) -> bool;
}

impl Coeff for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Coeff for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Sparse polynomial in `x, y, z`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent triple, so iteration is in
/// lexicographic exponent order and no zero coefficient is ever stored. Two
/// polynomials are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C = BigInt> {
    terms: BTreeMap<Exp, C>,
}

pub type ZPoly = MultiPoly<BigInt>;
pub type QPoly = MultiPoly<BigRational>;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;

impl<C: Coeff> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_bigint(n.into()))
    }

    pub fn monomial(c: C, exp: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable with index `X`, `Y` or `Z`.
    pub fn var(index: usize) -> Self {
        let mut exp = [0; 3];
        exp[index] = 1;
        Self::monomial(C::one(), exp)
    }

    pub fn x() -> Self {
        Self::var(X)
    }

    pub fn y() -> Self {
        Self::var(Y)
    }

    pub fn z() -> Self {
        Self::var(Z)
    }

    /// `i x + j y + k z + c` with small integer coefficients.
    pub fn linear(i: i64, j: i64, k: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term([1, 0, 0], C::from_bigint(i.into()));
        p.add_term([0, 1, 0], C::from_bigint(j.into()));
        p.add_term([0, 0, 1], C::from_bigint(k.into()));
        p.add_term([0, 0, 0], C::from_bigint(c.into()));
        p
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Exp, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exp) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exp, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exp: Exp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut v = v.clone();
                v *= c;
                (*e, v)
            })
            .collect();
        Self { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Power with a signed exponent; negative exponents are rejected.
    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        let e = u32::try_from(e).map_err(|_| Error::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Uses repeated division by the lexicographically leading term.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dexp, dc) = d.leading_term()?;
        let (dexp, dc) = (*dexp, dc.clone());
        if let Some(c) = d.as_constant() {
            let mut terms = BTreeMap::new();
            for (e, v) in &self.terms {
                terms.insert(*e, v.div_exact(&c)?);
            }
            return Some(Self { terms });
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rexp, rc)) = rem.leading_term() {
            if (0..3).any(|i| rexp[i] < dexp[i]) {
                return None;
            }
            let qexp = [rexp[0] - dexp[0], rexp[1] - dexp[1], rexp[2] - dexp[2]];
            let qc = rc.div_exact(&dc)?;
            let step = Self::monomial(qc.clone(), qexp);
            rem = &rem - &(&step * d);
            quot.add_term(qexp, qc);
        }
        Some(quot)
    }

    /// Substitutes `images[v]` for each variable `v`.
    pub fn substitute(&self, images: [&Self; 3]) -> Self {
        let mut powers: [Vec<Self>; 3] = [vec![Self::one()], vec![Self::one()], vec![Self::one()]];
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for v in 0..3 {
                let need = e[v] as usize;
                while powers[v].len() <= need {
                    let next = powers[v].last().unwrap() * images[v];
                    powers[v].push(next);
                }
                if need > 0 {
                    term = &term * &powers[v][need];
                }
            }
            out += &term;
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Display using custom names for the three variable slots.
    pub fn display_with<'a>(&'a self, names: [&'a str; 3]) -> Named<'a, C> {
        Named { poly: self, names }
    }
}

impl ZPoly {
    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        self.to_rational().eval(point)
    }
}

impl QPoly {
    /// The same polynomial over `Z` if all coefficients are integers.
    pub fn to_integer(&self) -> Option<ZPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            terms.insert(*e, c.to_integer());
        }
        Some(MultiPoly { terms })
    }

    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..3 {
                if e[v] > 0 {
                    t *= num_traits::pow(point[v].clone(), e[v] as usize);
                }
            }
            acc += t;
        }
        acc
    }
}

// Arithmetic -----------------------------------------------------------------

impl<C: Coeff> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &MultiPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut c = ca.clone();
                c *= cb;
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], c);
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect();
        MultiPoly { terms }
    }
}

impl<C: Coeff> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Coeff> MulAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn mul_assign(&mut self, rhs: &MultiPoly<C>) {
        *self = &*self * rhs;
    }
}

// Formatting -----------------------------------------------------------------

/// [`MultiPoly`] printed with caller-chosen variable names.
pub struct Named<'a, C> {
    poly: &'a MultiPoly<C>,
    names: [&'a str; 3],
}

impl<C: Coeff> fmt::Display for Named<'_, C> {
    /// Canonical text form: `c * x^i y^j z^k` terms in decreasing
    /// lexicographic exponent order, joined by ` + ` / ` - `. Zero exponents
    /// are omitted; a constant term is printed as its coefficient alone.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            write!(f, "{abs}")?;
            if *e == [0, 0, 0] {
                continue;
            }
            f.write_str(" *")?;
            for v in 0..3 {
                if e[v] > 0 {
                    write!(f, " {}^{}", self.names[v], e[v])?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display_with(["x", "y", "z"]), f)
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x() -> ZPoly {
        ZPoly::x()
    }
    fn y() -> ZPoly {
        ZPoly::y()
    }
    fn z() -> ZPoly {
        ZPoly::z()
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, &x().pow(2) - &y().pow(2));
    }

    #[test]
    fn zero_absorbs() {
        let p = &x() + &ZPoly::from_int(3);
        assert!((&p * &ZPoly::zero()).is_zero());
    }

    #[test]
    fn trinomial_square() {
        let s = &(&x() + &y()) + &z();
        let two = ZPoly::from_int(2);
        let expect = [
            x().pow(2),
            y().pow(2),
            z().pow(2),
            &two * &(&x() * &y()),
            &two * &(&x() * &z()),
            &two * &(&y() * &z()),
        ]
        .iter()
        .fold(ZPoly::zero(), |acc, t| &acc + t);
        assert_eq!(s.pow(2), expect);
    }

    #[test]
    fn negative_power_rejected() {
        assert_eq!(x().pow_signed(-1), Err(Error::NegativeExponent(-1)));
        assert_eq!(x().pow_signed(3).unwrap(), x().pow(3));
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = &(&x() + &y()) - &x();
        assert_eq!(p.len(), 1);
        assert_eq!(p, y());
        assert!((&p - &p).is_empty());
    }

    #[test]
    fn exact_division() {
        let a = &(&x() - &y()) * &(&(&x() * &z()) + &ZPoly::from_int(3));
        let q = a.div_exact(&(&x() - &y())).unwrap();
        assert_eq!(q, &(&x() * &z()) + &ZPoly::from_int(3));
        assert!(x().div_exact(&y()).is_none());
        assert!(ZPoly::from_int(3).div_exact(&ZPoly::from_int(2)).is_none());
        assert_eq!(
            ZPoly::from_int(6)
                .scale(&BigInt::from(1))
                .div_exact(&ZPoly::from_int(2)),
            Some(ZPoly::from_int(3))
        );
    }

    #[test]
    fn eval_points() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let pt = [q(2), q(3), q(5)];
        assert_eq!((&(&x() * &y()) * &z()).eval(&pt), q(30));
        assert_eq!(ZPoly::zero().eval(&pt), q(0));
        let p = &x().pow(2) - &y();
        assert_eq!(p.eval(&[q(3), q(4), q(0)]), q(5));
    }

    #[test]
    fn substitution() {
        let p = &x().pow(2) - &y();
        let t = ZPoly::x();
        let img = p.substitute([&(-&t), &t, &z()]);
        assert_eq!(img, &t.pow(2) - &t);
    }

    #[test]
    fn canonical_text() {
        let p = &(&x() * &y()).scale(&BigInt::from(2)) - &ZPoly::from_int(1);
        assert_eq!(p.to_string(), "2 * x^1 y^1 - 1");
        assert_eq!((-&x()).to_string(), "-1 * x^1");
        assert_eq!(ZPoly::zero().to_string(), "0");
        let half = QPoly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!((&half * &QPoly::z()).to_string(), "1/2 * z^1");
    }
}
