use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::multi::{Coeff, MultiPoly};
use crate::error::{Error, Result};

/// Polynomial in `s` with [`MultiPoly`] coefficients, stored from `s^0` up.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<C = num_bigint::BigInt> {
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(mut coeffs: Vec<MultiPoly<C>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![MultiPoly::one()])
    }

    /// `prod (s - roots[i])^mults[i]`, expanded. A multiplicity of zero
    /// contributes no factor; an empty product is `1`.
    pub fn from_roots(roots: &[MultiPoly<C>], mults: &[u32]) -> Result<Self> {
        if roots.len() != mults.len() {
            return Err(Error::LengthMismatch {
                expected: roots.len(),
                found: mults.len(),
            });
        }
        let mut acc = Self::one();
        for (root, &m) in roots.iter().zip(mults) {
            for _ in 0..m {
                acc = acc.mul_linear(root);
            }
        }
        Ok(acc)
    }

    /// `self * (s - root)`.
    pub fn mul_linear(&self, root: &MultiPoly<C>) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![MultiPoly::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= &(c * root);
        }
        Self::new(out)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients from `s^0` to `s^deg`.
    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly<C>> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> MultiPoly<C> {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Value at `s = value` by Horner's rule.
    pub fn eval(&self, value: &MultiPoly<C>) -> MultiPoly<C> {
        self.coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| &(&acc * value) + c)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&MultiPoly<C>) -> MultiPoly<D>) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![MultiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    /// `(c_d) * s^d + ... + (c_0)`, highest power first; zero coefficients
    /// are skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c}) * s^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
