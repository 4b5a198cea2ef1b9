//! Stirling-number identities obtained by specializing `C(k1, k2, l)` and the
//! row relations of the quotient systems. Each checker expands both sides
//! exactly and reports every clause it compared.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::csys::{cpoly, lemma_comb_check, CGenerator, LemmaPart, Point};
use crate::error::{Error, Result};
use crate::num::{binomial, factorial, falling, rpow, sign};
use crate::polyring::{QPoly, QuotientRel, TruncSeries, ZPoly};
use crate::quotient::lemgp_check;
use crate::stirling::StirlingTable;

/// One compared equation. Informational clauses are reported but do not
/// count towards the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub clauses: Vec<Clause>,
}

impl IdentityReport {
    fn new(id: &'static str, params: &[(&'static str, &dyn ToString)]) -> Self {
        Self {
            id,
            params: params.iter().map(|(k, v)| (*k, v.to_string())).collect(),
            clauses: Vec::new(),
        }
    }

    fn push<T: PartialEq + ToString>(&mut self, name: &'static str, lhs: T, rhs: T) {
        self.push_clause(name, lhs, rhs, false);
    }

    fn push_clause<T: PartialEq + ToString>(
        &mut self,
        name: &'static str,
        lhs: T,
        rhs: T,
        informational: bool,
    ) {
        self.clauses.push(Clause {
            name,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            informational,
        });
    }

    /// All non-informational clauses hold.
    pub fn verdict(&self) -> bool {
        self.clauses
            .iter()
            .filter(|c| !c.informational)
            .all(|c| c.holds)
    }
}

fn qint(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn linear_q(i: u32, j: u32) -> QPoly {
    Point::new(i, j).linear_form().to_rational()
}

/// `sum_{S_{k1,k2}} (-1)^{k1+k2-i-j} / (i! j! (k1-i)! (k2-j)!) (ix + jy + z)^l
/// = C(k1, k2, l)`, and for `k2 = 0` also the one-variable form
/// `sum_k binom(n,k) (-1)^k (kx + z)^m = (-1)^n n! sum_{j=n}^m binom(m,j) x^j z^(m-j) S(j,n)`.
pub fn gen_palma_check(k1: u32, k2: u32, l: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("gen_palma", &[("k1", &k1), ("k2", &k2), ("l", &l)]);
    let mut lhs = QPoly::zero();
    for i in 0..=k1 {
        for j in 0..=k2 {
            let denom = factorial(i) * factorial(j) * factorial(k1 - i) * factorial(k2 - j);
            let w = BigRational::new(BigInt::from(sign(k1 + k2 - i - j)), denom);
            lhs += &linear_q(i, j).pow(l).scale(&w);
        }
    }
    rep.push("generalized", lhs, cpoly(k1, k2, l).to_rational());

    if k2 == 0 {
        let (n, m) = (k1, l);
        let left = (0..=n).fold(ZPoly::zero(), |acc, k| {
            &acc + &ZPoly::linear(k as i64, 0, 1, 0)
                .pow(m)
                .scale(&(binomial(n, k) * sign(k)))
        });
        let mut s2 = StirlingTable::second();
        let inner = (n..=m).fold(ZPoly::zero(), |acc, j| {
            let mono = &ZPoly::x().pow(j) * &ZPoly::z().pow(m - j);
            &acc + &mono.scale(&(binomial(m, j) * s2.get(j, n)))
        });
        let right = inner.scale(&(factorial(n) * sign(n)));
        rep.push("one_variable", left, right);
    }
    rep
}

/// `binom(k1+k2, k1) S(l, k1+k2) = sum_{i=k1}^{l-k2} binom(l, i) S(l-i, k2) S(i, k1)`,
/// together with the chain `C(k1, k2, l) = binom(k1+k2, k1) C(k1+k2, 0, l)`
/// at `x = y`, `z = 0`, one neg-case step `(1, 1)` at a time.
pub fn convolution_check(k1: u32, k2: u32, l: u32) -> Result<IdentityReport> {
    if k2 == 0 {
        return Err(Error::OutOfRange("convolution needs k2 > 0".into()));
    }
    let mut rep = IdentityReport::new("convolution", &[("k1", &k1), ("k2", &k2), ("l", &l)]);
    let mut s2 = StirlingTable::second();
    let lhs = binomial(k1 + k2, k1) * s2.get(l, k1 + k2);
    let rhs = if l >= k1 + k2 {
        (k1..=l - k2).fold(BigInt::zero(), |acc, i| {
            acc + binomial(l, i) * s2.get(l - i, k2) * s2.get(i, k1)
        })
    } else {
        BigInt::zero()
    };
    rep.push("convolution", lhs, rhs);

    let diag = |p: &ZPoly| p.substitute([&ZPoly::x(), &ZPoly::x(), &ZPoly::zero()]);
    let mut g = CGenerator::new();
    let closed = if l >= k1 + k2 {
        (k1..=l - k2).fold(BigInt::zero(), |acc, i| {
            acc + binomial(l, i) * s2.get(i, k1) * s2.get(l - i, k2)
        })
    } else {
        BigInt::zero()
    };
    rep.push(
        "diagonal_value",
        diag(&g.c(k1, k2, l)),
        ZPoly::x().pow(l).scale(&closed),
    );

    let mut steps = true;
    for m in 0..k2 {
        steps &= lemgp_check(1, 1, k1 + m, k2 - m, l)?;
    }
    rep.push("chain_steps", steps, true);
    let end = diag(&g.c(k1 + k2, 0, l)).scale(&binomial(k1 + k2, k1));
    rep.push("chain_end", diag(&g.c(k1, k2, l)), end);
    Ok(rep)
}

/// The two `b = 1`, `y = ax`, `z = 0` identities:
///
/// - `sum_{j=1}^a a!/(a-j)! binom(k1+j, k1) S(l, k1+j) = sum_{i=k1}^{l-1} binom(l,i) S(i,k1) a^(l-i)`
/// - `k2 S(l, k2) = sum_{j=1}^a a!/(a-j)! sum_{i=j}^{l-k2+1} binom(l,i) a^(-i) S(i,j) S(l-i, k2-1)`,
///   only for `k2 >= 1`.
pub fn spec_b1_checks(a: u32, k1: u32, k2: u32, l: u32) -> Result<IdentityReport> {
    if a == 0 {
        return Err(Error::OutOfRange("a must be positive".into()));
    }
    let mut rep = IdentityReport::new("spec_b1", &[("a", &a), ("k1", &k1), ("k2", &k2), ("l", &l)]);
    let mut s2 = StirlingTable::second();
    let lhs = (1..=a).fold(BigInt::zero(), |acc, j| {
        acc + falling(a, j) * binomial(k1 + j, k1) * s2.get(l, k1 + j)
    });
    let rhs = (k1..l).fold(BigInt::zero(), |acc, i| {
        acc + binomial(l, i) * s2.get(i, k1) * num_traits::pow(BigInt::from(a), (l - i) as usize)
    });
    rep.push("point_k1_1", lhs, rhs);

    if k2 >= 1 {
        let lhs = qint(BigInt::from(k2) * s2.get(l, k2));
        let inv_a = BigRational::new(BigInt::one(), BigInt::from(a));
        let mut rhs = BigRational::zero();
        for j in 1..=a {
            let mut inner = BigRational::zero();
            for i in j..=(l + 1).saturating_sub(k2) {
                if i > l {
                    break;
                }
                inner +=
                    qint(binomial(l, i) * s2.get(i, j) * s2.get(l - i, k2 - 1)) * rpow(&inv_a, i);
            }
            rhs += qint(falling(a, j)) * inner;
        }
        rep.push("point_0_k2", lhs, rhs);
    }
    Ok(rep)
}

fn abt_side(a: u32, l: u32, t: &BigRational, s2: &mut StirlingTable) -> BigRational {
    (1..=a).fold(BigRational::zero(), |acc, j| {
        let inner = (j..=l).fold(BigRational::zero(), |acc, i| {
            acc + qint(binomial(l, i) * s2.get(i, j)) * rpow(t, i)
        });
        acc + qint(falling(a, j)) * inner
    })
}

/// `sum_{j=1}^a a!/(a-j)! sum_{i=j}^l binom(l,i) S(i,j) t^i
/// = sum_{j=1}^b b!/(b-j)! sum_{i=j}^l binom(l,i) S(i,j) (a t / b)^i`.
pub fn spec_abt_check(a: u32, b: u32, t: &BigRational, l: u32) -> Result<IdentityReport> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("a and b must be positive".into()));
    }
    if t.is_zero() {
        return Err(Error::OutOfRange("t must be nonzero".into()));
    }
    let mut rep = IdentityReport::new("spec_abt", &[("a", &a), ("b", &b), ("t", t), ("l", &l)]);
    let mut s2 = StirlingTable::second();
    let lhs = abt_side(a, l, t, &mut s2);
    let scaled = t * BigRational::new(a.into(), b.into());
    let rhs = abt_side(b, l, &scaled, &mut s2);
    rep.push("abt", lhs, rhs);
    Ok(rep)
}

/// `S(n, w, z) = C(w, 0, n)` at `x = 1`, a polynomial in `z`.
pub fn weighted_stirling(n: u32, w: u32) -> ZPoly {
    cpoly(w, 0, n).substitute([&ZPoly::one(), &ZPoly::zero(), &ZPoly::z()])
}

/// `S(n, w, z)` read off `(e^t - 1)^w e^{zt} / w!`.
pub fn weighted_stirling_egf(n: u32, w: u32) -> ZPoly {
    let order = n as usize;
    let series = TruncSeries::exp_minus_one(&ZPoly::one(), order)
        .pow(w)
        .mul(&TruncSeries::exp(&ZPoly::z(), order))
        .expect("same order");
    series
        .coeff(order)
        .div_exact(&ZPoly::constant(factorial(w)))
        .expect("divisible by w!")
}

/// Weighted Stirling numbers: the two routes, the form derived from the
/// alternating-sum identity at `k2 = 0`, `x = 1`,
/// `w! S(n,w,z) = sum_{i=0}^w binom(w,i) (-1)^(w-i) (i+z)^n`,
/// and, as an informational clause, the variant
/// `n! S(n,w,z) = sum_{i=0}^n binom(n,i) (-1)^(n-1) (z+i)^n`.
pub fn weighted_stirling_report(n: u32, w: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("weighted_stirling", &[("n", &n), ("w", &w)]);
    let s = weighted_stirling(n, w);
    rep.push("egf", s.clone(), weighted_stirling_egf(n, w));
    let zi = |i: u32| ZPoly::linear(0, 0, 1, i as i64);
    let derived = (0..=w).fold(ZPoly::zero(), |acc, i| {
        &acc + &zi(i).pow(n).scale(&(binomial(w, i) * sign(w - i)))
    });
    rep.push("derived", s.scale(&factorial(w)), derived);
    let sgn = if n == 0 { -1 } else { sign(n - 1) };
    let variant = (0..=n).fold(ZPoly::zero(), |acc, i| {
        &acc + &zi(i).pow(n).scale(&(binomial(n, i) * sgn))
    });
    rep.push_clause("variant", s.scale(&factorial(n)), variant, true);
    rep
}

/// Generalized Stirling numbers `S^z(n, k, x) = sum_{i=0}^n binom(n,i) z^(n-i) x^i S(i,k)`:
/// equality with `C(k, 0, n)`, the alternating closed form
/// `k! S^z(n,k,x) = sum_{i=0}^k binom(k,i) (-1)^(k-i) (ix+z)^n`, and
/// `sum_{j=1}^a a!/(a-j)! S^z(n, j, x) = (ax + z)^n - z^n`.
pub fn gen_stirling_checks(n: u32, k: u32, a: u32) -> Result<IdentityReport> {
    if a == 0 {
        return Err(Error::OutOfRange("a must be positive".into()));
    }
    let mut rep = IdentityReport::new("gen_stirling", &[("n", &n), ("k", &k), ("a", &a)]);
    let mut s2 = StirlingTable::second();
    let mut sz = |k: u32| {
        (0..=n).fold(ZPoly::zero(), |acc, i| {
            let mono = &ZPoly::z().pow(n - i) * &ZPoly::x().pow(i);
            &acc + &mono.scale(&(binomial(n, i) * s2.get(i, k)))
        })
    };
    let s = sz(k);
    rep.push("c_identification", s.clone(), cpoly(k, 0, n));
    let alt = (0..=k).fold(ZPoly::zero(), |acc, i| {
        &acc + &ZPoly::linear(i as i64, 0, 1, 0)
            .pow(n)
            .scale(&(binomial(k, i) * sign(k - i)))
    });
    rep.push("alternating", s.scale(&factorial(k)), alt);
    let sum = (1..=a).fold(ZPoly::zero(), |acc, j| &acc + &sz(j).scale(&falling(a, j)));
    let rhs = &ZPoly::linear(a as i64, 0, 1, 0).pow(n) - &ZPoly::z().pow(n);
    rep.push("a_sum", sum, rhs);
    Ok(rep)
}

/// `(e^{xt}-1)^k1 (e^{yt}-1)^k2 e^{zt} = k1! k2! sum_l C(k1,k2,l) t^l / l!`
/// through `t^order`.
pub fn egf_relation_check(k1: u32, k2: u32, order: u32) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "egf_relation",
        &[("k1", &k1), ("k2", &k2), ("order", &order)],
    );
    let o = order as usize;
    let series = TruncSeries::exp_minus_one(&ZPoly::x(), o)
        .pow(k1)
        .mul(&TruncSeries::exp_minus_one(&ZPoly::y(), o).pow(k2))
        .and_then(|p| p.mul(&TruncSeries::exp(&ZPoly::z(), o)))
        .expect("same order");
    let f = factorial(k1) * factorial(k2);
    let mut g = CGenerator::new();
    let expect: Vec<ZPoly> = (0..=order).map(|l| g.c(k1, k2, l).scale(&f)).collect();
    let got = series.coeffs().to_vec();
    rep.push("coefficients", format!("{got:?}"), format!("{expect:?}"));
    rep
}

/// Whether [`gen_palma_check`] and part (ii) of the alternating-sum identity
/// give the same verdict at `(k1, k2, l)`.
pub fn palma_agrees_with_lemma(k1: u32, k2: u32, l: u32) -> bool {
    gen_palma_check(k1, k2, l).verdict() == lemma_comb_check(k1, k2, l, LemmaPart::Ii)
}

/// `(k1 + 1) C(k1 + 1, k2 - 1, l) = k2 C(k1, k2, l)` modulo `x - y`.
pub fn diagonal_step(k1: u32, k2: u32, l: u32) -> Result<bool> {
    let rel = QuotientRel::neg(1, 1)?;
    if k2 == 0 {
        return Err(Error::OutOfRange("k2 must be positive".into()));
    }
    let lhs = cpoly(k1 + 1, k2 - 1, l).scale(&BigInt::from(k1 + 1));
    let rhs = cpoly(k1, k2, l).scale(&BigInt::from(k2));
    Ok(rel.congruent(&lhs, &rhs))
}

/// Runs every checker once on a small default tuple.
pub fn sample_reports() -> Vec<IdentityReport> {
    let half = BigRational::new(1.into(), 2.into());
    vec![
        gen_palma_check(2, 2, 7),
        convolution_check(2, 3, 9).expect("k2 > 0"),
        spec_b1_checks(2, 1, 2, 6).expect("a > 0"),
        spec_abt_check(2, 1, &half, 6).expect("t != 0"),
        weighted_stirling_report(5, 2),
        gen_stirling_checks(6, 3, 3).expect("a > 0"),
        egf_relation_check(2, 1, 8),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rational;

    #[test]
    fn palma_examples() {
        let r = gen_palma_check(0, 0, 4);
        assert!(r.verdict());
        assert_eq!(r.clauses[0].rhs, "1 * z^4");
        assert!(gen_palma_check(2, 2, 7).verdict());
        let r = gen_palma_check(3, 0, 6);
        assert_eq!(r.clauses.len(), 2);
        assert!(r.verdict());
    }

    #[test]
    fn convolution_examples() {
        let r = convolution_check(1, 1, 2).unwrap();
        assert_eq!(
            (r.clauses[0].lhs.as_str(), r.clauses[0].rhs.as_str()),
            ("2", "2")
        );
        assert!(r.verdict());
        assert!(convolution_check(3, 2, 4).unwrap().verdict());
        assert!(convolution_check(2, 3, 9).unwrap().verdict());
        assert!(convolution_check(1, 0, 3).is_err());
    }

    #[test]
    fn b1_examples() {
        for l in 0..6 {
            assert!(spec_b1_checks(1, 0, 0, l).unwrap().verdict());
        }
        assert!(spec_b1_checks(2, 1, 0, 5).unwrap().verdict());
        let r = spec_b1_checks(2, 0, 2, 6).unwrap();
        assert_eq!(r.clauses.len(), 2);
        assert!(r.verdict());
    }

    #[test]
    fn abt_examples() {
        assert!(spec_abt_check(3, 3, &rational(5, 7), 6).unwrap().verdict());
        assert!(spec_abt_check(2, 3, &rational(1, 1), 5).unwrap().verdict());
        assert!(spec_abt_check(2, 1, &rational(1, 2), 6).unwrap().verdict());
        assert!(spec_abt_check(2, 3, &rational(3, 1), 7).unwrap().verdict());
        assert!(spec_abt_check(2, 3, &rational(0, 1), 7).is_err());
    }

    #[test]
    fn abt_is_not_vacuous() {
        let mut s2 = StirlingTable::second();
        let t = rational(1, 1);
        assert_ne!(abt_side(2, 5, &t, &mut s2), abt_side(3, 5, &t, &mut s2));
    }

    #[test]
    fn weighted_examples() {
        for n in 0..6 {
            assert_eq!(weighted_stirling(n, 0), ZPoly::z().pow(n));
            assert_eq!(weighted_stirling(n, n), ZPoly::one());
        }
        assert_eq!(weighted_stirling(3, 1), weighted_stirling_egf(3, 1));
        let r = weighted_stirling_report(4, 2);
        assert!(r.verdict());
        assert!(r.clauses.iter().any(|c| c.informational));
    }

    #[test]
    fn gen_stirling_examples() {
        assert!(gen_stirling_checks(4, 0, 1).unwrap().verdict());
        let r = gen_stirling_checks(5, 2, 1).unwrap();
        assert!(r.verdict());
        assert_eq!(
            r.clauses[2].rhs,
            (&ZPoly::linear(1, 0, 1, 0).pow(5) - &ZPoly::z().pow(5)).to_string()
        );
        assert!(gen_stirling_checks(6, 3, 3).unwrap().verdict());
    }

    #[test]
    fn egf_relation_small() {
        assert!(egf_relation_check(2, 1, 7).verdict());
    }

    #[test]
    fn diagonal_steps() {
        for k1 in 0..3 {
            for k2 in 1..3 {
                for l in 0..7 {
                    assert!(diagonal_step(k1, k2, l).unwrap());
                }
            }
        }
    }

    #[test]
    fn samples_all_hold() {
        assert!(sample_reports().iter().all(IdentityReport::verdict));
    }
}
