//! The systems `M_{R,l} (a, 1)^t = 0` read in `C[x,y,z]/(rel)` for a linear
//! relation `rel` in `x, y`.
//!
//! Rows of `M_{R,l}` become linearly dependent modulo the relation, so a
//! smaller point set carries an equivalent system. [`reduce_set`] picks that
//! set and records, for every dropped row, constant coefficients expressing it
//! through the kept rows.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::csys::{Point, PointSet};
use crate::error::{Error, Result};
use crate::polyring::QuotientRel;

mod cert;
mod system;

pub use cert::{lemgp0_check, lemgp_check, verify_certificates};
pub use system::{
    check_system_equivalence, det_quotient_closed_form, distinct_normal_forms, r0, reduce_uni,
    reduced_b_r, solve_quotient,
};

/// Which member of each `~_{a,-b}` class is kept in the neg case.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum RepresentativePolicy {
    /// Smallest `j` in each class.
    #[default]
    Lowest,
    /// Largest `j` in each class.
    Highest,
    /// Exactly one listed point per class.
    Explicit(Vec<Point>),
}

/// `row(dropped) = sum c_p row(p)` modulo the relation, for every column of
/// `M_{R,l}` and every `l`. All `p` are kept points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub dropped: Point,
    pub combination: Vec<(Point, BigRational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub rel: QuotientRel,
    /// Kept points, in the order of the input set.
    pub reduced_set: PointSet,
    /// `~_{a,-b}` classes ordered by `b i + a j`, members by increasing `i`.
    /// Empty outside the neg case.
    pub classes: Vec<Vec<Point>>,
    pub certificates: Vec<Certificate>,
}

/// Groups the points of `set` by `b i + a j` (neg case).
fn neg_classes(set: &PointSet, a: u32, b: u32) -> Vec<Vec<Point>> {
    let mut by_inv: BTreeMap<u64, Vec<Point>> = BTreeMap::new();
    for p in set.points() {
        by_inv
            .entry(b as u64 * p.i as u64 + a as u64 * p.j as u64)
            .or_default()
            .push(*p);
    }
    by_inv
        .into_values()
        .map(|mut c| {
            c.sort_by_key(|p| p.i);
            c
        })
        .collect()
}

fn pick_representatives(
    classes: &[Vec<Point>],
    policy: &RepresentativePolicy,
) -> Result<Vec<Point>> {
    match policy {
        RepresentativePolicy::Lowest => Ok(classes
            .iter()
            .map(|c| *c.iter().min_by_key(|p| p.j).unwrap())
            .collect()),
        RepresentativePolicy::Highest => Ok(classes
            .iter()
            .map(|c| *c.iter().max_by_key(|p| p.j).unwrap())
            .collect()),
        RepresentativePolicy::Explicit(reps) => {
            let mut out = Vec::with_capacity(classes.len());
            for c in classes {
                let chosen: Vec<Point> = reps.iter().copied().filter(|p| c.contains(p)).collect();
                match chosen.as_slice() {
                    [p] => out.push(*p),
                    [] => {
                        return Err(Error::BadRepresentatives(format!(
                            "no representative for the class of {}",
                            c[0]
                        )))
                    }
                    _ => {
                        return Err(Error::BadRepresentatives(format!(
                            "several representatives for the class of {}",
                            c[0]
                        )))
                    }
                }
            }
            if let Some(p) = reps.iter().find(|p| !classes.iter().any(|c| c.contains(p))) {
                return Err(Error::BadRepresentatives(format!(
                    "{p} is not in the point set"
                )));
            }
            Ok(out)
        }
    }
}

/// Reduced point set of a staircase `set` under `rel`, with certificates for
/// the dropped rows.
///
/// - `ax + by`: keeps `(i,j)` with `(i,j) - (a', b')` outside the set, where
///   `(a', b') = (a, b) / gcd(a, b)`.
/// - `ax - by`: keeps one point per class of `b i + a j`, chosen by `policy`.
/// - `x`, `y`: keeps the points with `i = 0`, resp. `j = 0`.
///
/// `policy` only matters in the neg case.
pub fn reduce_set(
    set: &PointSet,
    rel: QuotientRel,
    policy: &RepresentativePolicy,
) -> Result<ReductionResult> {
    set.require_staircase()?;
    let (kept, classes): (Vec<Point>, Vec<Vec<Point>>) = match rel {
        QuotientRel::Pos { .. } => {
            let (a, b) = rel.primitive_step().expect("line case");
            let kept = set
                .points()
                .iter()
                .copied()
                .filter(|p| p.checked_sub(a, b).is_none_or(|q| !set.contains(&q)))
                .collect();
            (kept, Vec::new())
        }
        QuotientRel::Neg { a, b } => {
            let classes = neg_classes(set, a, b);
            (pick_representatives(&classes, policy)?, classes)
        }
        QuotientRel::XZero => (
            set.points().iter().copied().filter(|p| p.i == 0).collect(),
            Vec::new(),
        ),
        QuotientRel::YZero => (
            set.points().iter().copied().filter(|p| p.j == 0).collect(),
            Vec::new(),
        ),
    };
    let reduced_set = set.filtered(|p| kept.contains(p));
    let certificates = cert::build(set, rel, &reduced_set, &classes);
    Ok(ReductionResult {
        rel,
        reduced_set,
        classes,
        certificates,
    })
}

/// Every reduced set the neg case allows (one per choice of representatives),
/// in lexicographic order of the choices. Other cases have exactly one.
pub fn all_representative_choices(set: &PointSet, rel: QuotientRel) -> Result<Vec<PointSet>> {
    set.require_staircase()?;
    let QuotientRel::Neg { a, b } = rel else {
        return Ok(alloc::vec![
            reduce_set(set, rel, &RepresentativePolicy::Lowest)?.reduced_set
        ]);
    };
    let classes = neg_classes(set, a, b);
    let mut choices: Vec<Vec<Point>> = alloc::vec![Vec::new()];
    for class in &classes {
        choices = choices
            .into_iter()
            .flat_map(|prefix| {
                class.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(*p);
                    next
                })
            })
            .collect();
    }
    Ok(choices
        .into_iter()
        .map(|reps| set.filtered(|p| reps.contains(p)))
        .collect())
}
