use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Certificate;
use crate::csys::{CGenerator, CMatrix, Point, PointSet};
use crate::error::{Error, Result};
use crate::num::{binomial, falling};
use crate::polyring::{QPoly, QuotientRel, ZPoly};

/// A row of `M_{R,l}` written as a combination of rows.
type Combo = BTreeMap<Point, BigRational>;

fn add_scaled(dst: &mut Combo, src: &Combo, c: &BigRational) {
    for (p, v) in src {
        let e = dst.entry(*p).or_insert_with(BigRational::zero);
        *e += v * c;
        if e.is_zero() {
            dst.remove(p);
        }
    }
}

fn q(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `(point, weight)` pairs of the relation `sum w_ij row(k + (i,j)) = 0` over
/// `S_{a,b} \ {(0,0)}`.
fn lemgp0_terms(a: u32, b: u32, k1: u32, k2: u32) -> Vec<(Point, BigInt)> {
    let mut out = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            if (i, j) != (0, 0) {
                let w = falling(a, i) * falling(b, j) * binomial(k1 + i, k1) * binomial(k2 + j, k2);
                out.push((Point::new(k1 + i, k2 + j), w));
            }
        }
    }
    out
}

/// `(point, weight)` pairs of the relation `sum w row = 0` obtained by moving
/// the right-hand side of the neg-case identity to the left. Needs `k2 >= b`.
fn lemgp_terms(a: u32, b: u32, k1: u32, k2: u32) -> Vec<(Point, BigInt)> {
    let base = k2 - b;
    let mut out = Vec::new();
    for j in 1..=a {
        out.push((
            Point::new(k1 + j, base),
            falling(a, j) * binomial(k1 + j, k1),
        ));
    }
    for j in 1..=b {
        out.push((
            Point::new(k1, base + j),
            -(falling(b, j) * binomial(base + j, base)),
        ));
    }
    out
}

fn weighted_sum(g: &mut CGenerator, terms: &[(Point, BigInt)], l: u32) -> ZPoly {
    terms.iter().fold(ZPoly::zero(), |acc, (p, w)| {
        &acc + &g.c(p.i, p.j, l).scale(w)
    })
}

/// `sum_{S_{a,b} \ {(0,0)}} a!/(a-i)! b!/(b-j)! binom(k1+i, k1) binom(k2+j, k2)
/// C(k1+i, k2+j, l)` vanishes modulo `ax + by`.
pub fn lemgp0_check(a: u32, b: u32, k1: u32, k2: u32, l: u32) -> Result<bool> {
    let rel = QuotientRel::pos(a, b)?;
    let mut g = CGenerator::new();
    Ok(rel
        .reduce(&weighted_sum(&mut g, &lemgp0_terms(a, b, k1, k2), l))
        .is_zero())
}

/// `sum_{j=1}^a a!/(a-j)! binom(k1+j, k1) C(k1+j, k2-b, l)` and
/// `sum_{j=1}^b b!/(b-j)! binom(k2-b+j, k2-b) C(k1, k2-b+j, l)` agree modulo
/// `ax - by`. Requires `k2 >= b`.
pub fn lemgp_check(a: u32, b: u32, k1: u32, k2: u32, l: u32) -> Result<bool> {
    let rel = QuotientRel::neg(a, b)?;
    if k2 < b {
        return Err(Error::OutOfRange(format!(
            "k2 = {k2} is smaller than b = {b}"
        )));
    }
    let mut g = CGenerator::new();
    Ok(rel
        .reduce(&weighted_sum(&mut g, &lemgp_terms(a, b, k1, k2), l))
        .is_zero())
}

/// Expresses `target` from a relation `sum w_p row(p) = 0` in which every
/// other point already has an expression in `exprs`.
fn solve_for(target: Point, terms: &[(Point, BigInt)], exprs: &BTreeMap<Point, Combo>) -> Combo {
    let wt = terms
        .iter()
        .find(|(p, _)| *p == target)
        .map(|(_, w)| q(w.clone()))
        .expect("target in relation");
    let mut out = Combo::new();
    for (p, w) in terms {
        if *p != target {
            add_scaled(&mut out, &exprs[p], &(-q(w.clone()) / &wt));
        }
    }
    out
}

pub(super) fn build(
    set: &PointSet,
    rel: QuotientRel,
    kept: &PointSet,
    classes: &[Vec<Point>],
) -> Vec<Certificate> {
    let mut exprs: BTreeMap<Point, Combo> = kept
        .points()
        .iter()
        .map(|p| (*p, [(*p, BigRational::one())].into_iter().collect()))
        .collect();
    let mut dropped: Vec<Point> = set
        .points()
        .iter()
        .copied()
        .filter(|p| !kept.contains(p))
        .collect();
    match rel {
        QuotientRel::XZero | QuotientRel::YZero => {
            for p in &dropped {
                exprs.insert(*p, Combo::new());
            }
        }
        QuotientRel::Pos { .. } => {
            let (a, b) = rel.primitive_step().expect("line case");
            // Every other point of a relation has smaller i + j.
            dropped.sort_by_key(|p| (p.i + p.j, p.i));
            for p in &dropped {
                let base = p
                    .checked_sub(a, b)
                    .expect("dropped points have a predecessor");
                let combo = solve_for(*p, &lemgp0_terms(a, b, base.i, base.j), &exprs);
                exprs.insert(*p, combo);
            }
        }
        QuotientRel::Neg { .. } => {
            // Classes come by increasing b i + a j; the non-top points of each
            // relation lie in earlier classes.
            for class in classes {
                let Some(rep) = class.iter().position(|p| kept.contains(p)) else {
                    continue;
                };
                for s in rep + 1..class.len() {
                    let (lo, hi) = (class[s - 1], class[s]);
                    let terms = lemgp_terms(hi.i - lo.i, lo.j - hi.j, lo.i, lo.j);
                    let combo = solve_for(hi, &terms, &exprs);
                    exprs.insert(hi, combo);
                }
                for s in (0..rep).rev() {
                    let (lo, hi) = (class[s], class[s + 1]);
                    let terms = lemgp_terms(hi.i - lo.i, lo.j - hi.j, lo.i, lo.j);
                    let combo = solve_for(lo, &terms, &exprs);
                    exprs.insert(lo, combo);
                }
            }
        }
    }
    set.points()
        .iter()
        .filter(|p| !kept.contains(p))
        .map(|p| Certificate {
            dropped: *p,
            combination: exprs[p].iter().map(|(k, v)| (*k, v.clone())).collect(),
        })
        .collect()
}

/// Checks every certificate against the columns of `M_{R,l}` modulo `rel`.
/// Returns the first dropped point whose certificate fails, if any.
pub fn verify_certificates(
    set: &PointSet,
    rel: QuotientRel,
    certs: &[Certificate],
    l: usize,
) -> Option<Point> {
    let m = CMatrix::build(set, l);
    let reduced: BTreeMap<Point, Vec<QPoly>> = set
        .points()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            (
                *p,
                m.row(k)
                    .iter()
                    .map(|e| rel.reduce(e).to_rational())
                    .collect(),
            )
        })
        .collect();
    certs
        .iter()
        .find(|c| {
            (0..=l).any(|col| {
                let combo = c.combination.iter().fold(QPoly::zero(), |acc, (p, v)| {
                    &acc + &reduced[p][col].scale(v)
                });
                reduced[&c.dropped][col] != combo
            })
        })
        .map(|c| c.dropped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{reduce_set, RepresentativePolicy};

    #[test]
    fn lemgp0_examples() {
        assert!(lemgp0_check(1, 1, 0, 0, 0).unwrap());
        assert!(lemgp0_check(1, 1, 0, 0, 2).unwrap());
        assert!(lemgp0_check(2, 1, 1, 1, 5).unwrap());
        assert!(lemgp0_check(2, 2, 1, 0, 6).unwrap());
    }

    #[test]
    fn lemgp0_needs_the_relation() {
        // Without reduction the sum for (1,1,0,0,2) is (x+y+z)^2 - z^2.
        let mut g = CGenerator::new();
        let s = weighted_sum(&mut g, &lemgp0_terms(1, 1, 0, 0), 2);
        assert!(!s.is_zero());
        assert_eq!(s, &ZPoly::linear(1, 1, 1, 0).pow(2) - &ZPoly::z().pow(2));
    }

    #[test]
    fn lemgp_examples() {
        for l in 0..7 {
            assert!(lemgp_check(1, 1, 0, 1, l).unwrap());
        }
        assert!(lemgp_check(2, 3, 0, 3, 6).unwrap());
        assert!(lemgp_check(1, 2, 1, 2, 5).unwrap());
        assert!(lemgp_check(2, 3, 0, 2, 6).is_err());
    }

    #[test]
    fn square_certificate() {
        // (1,1) under x + y: C(1,0) + C(0,1) + C(1,1) = 0.
        let s = PointSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        let rel = QuotientRel::pos(1, 1).unwrap();
        let r = reduce_set(&s, rel, &RepresentativePolicy::Lowest).unwrap();
        let m1 = -BigRational::one();
        assert_eq!(
            r.certificates[0].combination,
            [(Point::new(0, 1), m1.clone()), (Point::new(1, 0), m1)]
        );
        assert_eq!(verify_certificates(&s, rel, &r.certificates, 4), None);
    }

    #[test]
    fn wrong_certificate_detected() {
        let s = PointSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        let rel = QuotientRel::pos(1, 1).unwrap();
        let bogus = Certificate {
            dropped: Point::new(1, 1),
            combination: alloc::vec![(Point::new(1, 0), BigRational::one())],
        };
        assert_eq!(
            verify_certificates(&s, rel, &[bogus], 4),
            Some(Point::new(1, 1))
        );
    }
}
