//! Stirling numbers of the first (signed) and second kind.
//!
//! Both are defined by their generating polynomials: `s(n, k)` is the
//! coefficient of `x^k` in the falling factorial `x (x-1) ... (x-n+1)`, and
//! `S(n, k)` expresses `x^n` in the falling-factorial basis. Tables grow row
//! by row:
//!
//! - `s(n+1, k) = s(n, k-1) - n s(n, k)` (multiply the falling factorial by `x - n`)
//! - `S(n+1, k) = S(n, k-1) + k S(n, k)`

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::num::{binomial, binomial_signed, factorial, sign};
use crate::polyring::{TruncSeries, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    First,
    Second,
}

/// Triangular table of Stirling numbers of one kind, extended on demand.
/// Entries with `k > n` are not stored and read as zero.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    kind: Kind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn first() -> Self {
        Self::new(Kind::First)
    }

    pub fn second() -> Self {
        Self::new(Kind::Second)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn ensure(&mut self, max_n: u32) {
        while self.max_n() < max_n {
            let n = self.max_n() as usize;
            let prev = &self.rows[n];
            let mut next = vec![BigInt::zero(); n + 2];
            for k in 1..=n + 1 {
                let left = &prev[k - 1];
                let stay = prev.get(k).cloned().unwrap_or_default();
                next[k] = match self.kind {
                    Kind::First => left - stay * n,
                    Kind::Second => left + stay * k,
                };
            }
            self.rows.push(next);
        }
    }

    pub fn get(&mut self, n: u32, k: u32) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.ensure(n);
        self.rows[n as usize][k as usize].clone()
    }

    /// Borrowing lookup; `None` if `n` is beyond the current table.
    pub fn peek(&self, n: u32, k: u32) -> Option<&BigInt> {
        self.rows
            .get(n as usize)
            .map(|row| row.get(k as usize).unwrap_or(&ZERO))
    }

    pub fn row(&mut self, n: u32) -> &[BigInt] {
        self.ensure(n);
        &self.rows[n as usize]
    }
}

static ZERO: BigInt = BigInt::ZERO;

/// `S(n, k)`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    StirlingTable::second().get(n, k)
}

/// `s(n, k)`, signed.
pub fn stirling1(n: u32, k: u32) -> BigInt {
    StirlingTable::first().get(n, k)
}

/// `S(n, m) = (1/m!) sum_{k=0}^{m} (-1)^{m-k} binom(m, k) k^n`.
pub fn stirling2_explicit(n: u32, m: u32) -> BigInt {
    let sum = (0..=m).fold(BigInt::zero(), |acc, k| {
        acc + binomial(m, k) * num_traits::pow(BigInt::from(k), n as usize) * sign(m - k)
    });
    let (q, r) = num_integer::Integer::div_rem(&sum, &factorial(m));
    debug_assert!(r.is_zero());
    q
}

/// `S(m, n)` read off `(e^t - 1)^n / n!` as the coefficient of `t^m / m!`.
pub fn stirling2_egf(m: u32, n: u32) -> BigInt {
    let series = TruncSeries::exp_minus_one(&ZPoly::one(), m as usize).pow(n);
    let c = series
        .coeff(m as usize)
        .as_constant()
        .expect("constant series");
    let (q, r) = num_integer::Integer::div_rem(&c, &factorial(n));
    debug_assert!(r.is_zero());
    q
}

/// Orthogonality: `sum_k s(k, m) S(d, k) = sum_k s(d, k) S(k, m) = delta_{md}`
/// for every `0 <= m <= d`.
pub fn check_orthogonality(d: u32) -> bool {
    let mut s1 = StirlingTable::first();
    let mut s2 = StirlingTable::second();
    s1.ensure(d);
    s2.ensure(d);
    (0..=d).all(|m| {
        let delta = if m == d {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        let left = (m..=d).fold(BigInt::zero(), |acc, k| acc + s1.get(k, m) * s2.get(d, k));
        let right = (m..=d).fold(BigInt::zero(), |acc, k| acc + s1.get(d, k) * s2.get(k, m));
        left == delta && right == delta
    })
}

/// `k^n = sum_{m=0}^{k} binom(k, m) m! S(n, m)` for `1 <= k <= kmax`.
pub fn check_power_identity(n: u32, kmax: u32) -> bool {
    let mut s2 = StirlingTable::second();
    (1..=kmax).all(|k| {
        let rhs = (0..=k).fold(BigInt::zero(), |acc, m| {
            acc + binomial(k, m) * factorial(m) * s2.get(n, m)
        });
        rhs == num_traits::pow(BigInt::from(k), n as usize)
    })
}

/// `s(n, m)` through the alternating sum over second-kind numbers
/// `sum_{k=0}^{n-m} (-1)^k binom(n-1+k, n-m+k) binom(2n-m, n-m-k) S(n-m+k, k)`.
/// The top `n-1+k` may be `-1` when `n = 0`, hence the signed binomial.
pub fn stirling1_via_second(n: u32, m: u32) -> BigInt {
    assert!(m <= n, "need m <= n");
    let mut s2 = StirlingTable::second();
    let (n, m) = (n as i64, m as i64);
    (0..=n - m).fold(BigInt::zero(), |acc, k| {
        let term = binomial_signed(n - 1 + k, n - m + k)
            * binomial_signed(2 * n - m, n - m - k)
            * s2.get((n - m + k) as u32, k as u32);
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Compares [`stirling1_via_second`] with the generating-function value.
pub fn check_s1_closed_form(n: u32, m: u32) -> bool {
    stirling1_via_second(n, m) == stirling1(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(2, 3), BigInt::zero());
        assert_eq!(stirling2(5, 0), BigInt::zero());
        assert_eq!(stirling1(0, 0), BigInt::one());
        assert_eq!(stirling1(4, 0), BigInt::zero());
        assert_eq!(stirling1(1, 3), BigInt::zero());
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2_explicit(4, 2), BigInt::from(7));
        assert_eq!(stirling1(2, 1), BigInt::from(-1));
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(3, 2), BigInt::from(-3));
        assert_eq!(stirling1(6, 3), BigInt::from(-225));
    }

    #[test]
    fn first_kind_expands_falling_factorial() {
        // Expand x(x-1)...(x-n+1) directly as an integer polynomial.
        let mut poly = vec![BigInt::one()];
        for n in 0..12u32 {
            for k in 0..=n {
                assert_eq!(stirling1(n, k), poly[k as usize], "s({n},{k})");
            }
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * n;
            }
            poly = next;
        }
    }

    #[test]
    fn table_lookup() {
        let mut t = StirlingTable::second();
        assert!(t.peek(3, 1).is_none());
        assert_eq!(t.get(6, 3), BigInt::from(90));
        assert_eq!(t.peek(3, 1), Some(&BigInt::one()));
        assert_eq!(t.peek(3, 5), Some(&BigInt::zero()));
        assert_eq!(t.row(4), &[0, 1, 7, 6, 1].map(BigInt::from));
    }

    #[test]
    fn orthogonality_small() {
        assert!(check_orthogonality(0));
        assert!(check_orthogonality(5));
    }

    #[test]
    fn power_identity_small() {
        assert!(check_power_identity(1, 6));
        assert!(check_power_identity(3, 5));
    }

    #[test]
    fn alternating_sum_for_first_kind() {
        assert!(check_s1_closed_form(3, 3));
        assert_eq!(stirling1_via_second(3, 1), BigInt::from(2));
        assert!(check_s1_closed_form(6, 3));
        assert!(check_s1_closed_form(0, 0));
    }

    #[test]
    fn egf_route() {
        for m in 0..=8 {
            for n in 0..=m {
                assert_eq!(stirling2_egf(m, n), stirling2(m, n));
            }
        }
    }
}
