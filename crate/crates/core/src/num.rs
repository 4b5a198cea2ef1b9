//! Small exact combinatorial helpers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n! / (n - k)!`, zero when `k > n`.
pub fn falling(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, m| acc * m)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with an arbitrary integer top, `n (n-1) ... (n-k+1) / k!`.
/// Zero for negative `k`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(-1)^e` as a small integer.
pub fn sign(e: u32) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rpow(base: &BigRational, e: u32) -> BigRational {
    num_traits::pow(base.clone(), e as usize)
}

/// Binomial rows `0..=n`, each row `0..=m`.
pub fn binomial_table(n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n as usize {
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            if k == 0 || k == m {
                row.push(BigInt::one());
            } else {
                row.push(&rows[m - 1][k - 1] + &rows[m - 1][k]);
            }
        }
        rows.push(row);
    }
    rows
}
