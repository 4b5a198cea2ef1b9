//! Parameter-box sweeps over the library checkers. Records come out in
//! parameter order; every random draw comes from one seeded ChaCha stream.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stirsys_core::csys::{
    b_r, cpoly, cpoly_egf, det_bareiss, det_closed_form, lemma_comb_check, residual,
    residual_for_counts, solve, staircases, unique_at_point, LemmaPart, Multiplicity, PointSet,
    UniqueCheck,
};
use stirsys_core::identities::{
    convolution_check, egf_relation_check, gen_palma_check, gen_stirling_checks,
    palma_agrees_with_lemma, spec_abt_check, spec_b1_checks, weighted_stirling_report,
    IdentityReport,
};
use stirsys_core::quotient::{
    all_representative_choices, det_quotient_closed_form, lemgp0_check, lemgp_check, r0,
    reduce_set, reduce_uni, reduced_b_r, solve_quotient, verify_certificates, RepresentativePolicy,
};
use stirsys_core::stirling::{
    check_orthogonality, check_power_identity, check_s1_closed_form, stirling2, stirling2_egf,
    stirling2_explicit,
};
use stirsys_core::{QuotientRel, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub family: &'static str,
    pub params: String,
    pub pass: bool,
    pub note: Option<String>,
}

impl Record {
    fn new(family: &'static str, params: impl Into<String>, pass: bool) -> Self {
        Self {
            family,
            params: params.into(),
            pass,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.family,
            self.params,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Pass/fail counts per family, in first-seen order.
pub fn summarize(records: &[Record]) -> Vec<(&'static str, usize, usize)> {
    let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
    for r in records {
        let idx = match out.iter().position(|(f, _, _)| *f == r.family) {
            Some(i) => i,
            None => {
                out.push((r.family, 0, 0));
                out.len() - 1
            }
        };
        if r.pass {
            out[idx].1 += 1;
        } else {
            out[idx].2 += 1;
        }
    }
    out
}

pub fn all_pass(records: &[Record]) -> bool {
    records.iter().all(|r| r.pass)
}

/// All staircases with `1 <= r <= max_r`, by size then partition order.
pub fn staircases_up_to(max_r: u32) -> Vec<PointSet> {
    (1..=max_r).flat_map(staircases).collect()
}

/// A composition of `l` into `r` positive parts, uniform over all of them.
pub fn random_composition(rng: &mut impl Rng, l: u32, r: u32) -> Vec<u32> {
    assert!(r >= 1 && l >= r, "need 1 <= r <= l");
    let mut cuts: Vec<u32> = sample(rng, (l - 1) as usize, (r - 1) as usize)
        .into_iter()
        .map(|c| c as u32 + 1)
        .collect();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut out = Vec::with_capacity(r as usize);
    for c in cuts.into_iter().chain(std::iter::once(l)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

fn counts_str(c: &[u32]) -> String {
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Root-encoded solutions for every staircase with `r <= max_r`, every
/// `l in {r, r+1, r+2}` and `draws` random compositions each.
pub fn thest(max_r: u32, draws: usize, seed: u64) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for set in staircases_up_to(max_r) {
        let r = set.len() as u32;
        for l in r..=r + 2 {
            for _ in 0..draws {
                let counts = random_composition(&mut rng, l, r);
                let params = format!("R={set} l={l} n={}", counts_str(&counts));
                let mults = Multiplicity::from_counts(&set, &counts).expect("aligned");
                out.push(match solve(&set, &mults) {
                    Ok(_) => Record::new("thest", params, true),
                    Err(e) => Record::new("thest", params, false).with_note(e.to_string()),
                });
            }
        }
    }
    out
}

/// First `(R, counts)` with a zero count, `sum = l >= r` and nonzero residual,
/// scanning staircases with `2 <= r <= max_r` and `l in {r, r+1, r+2}`.
pub fn thest_necessity(max_r: u32) -> Option<(PointSet, Vec<u32>)> {
    fn vectors(len: usize, total: u32) -> Vec<Vec<u32>> {
        if len == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .flat_map(|first| {
                vectors(len - 1, total - first)
                    .into_iter()
                    .map(move |mut v| {
                        v.insert(0, first);
                        v
                    })
            })
            .collect()
    }
    for set in (2..=max_r).flat_map(staircases) {
        let r = set.len() as u32;
        for l in r..=r + 2 {
            for counts in vectors(set.len(), l) {
                if !counts.contains(&0) {
                    continue;
                }
                let res = residual_for_counts(&set, &counts).expect("aligned");
                if res.iter().any(|e| !e.is_zero()) {
                    return Some((set, counts));
                }
            }
        }
    }
    None
}

/// Bareiss against the closed form for every staircase with `r <= max_r`.
pub fn det(max_r: u32) -> Vec<Record> {
    staircases_up_to(max_r)
        .into_iter()
        .map(|set| {
            let b = det_bareiss(&set);
            let params = format!("R={set}");
            match det_closed_form(&set) {
                Ok(c) if c == b => Record::new("det", params, true),
                Ok(c) => Record::new("det", params, false)
                    .with_note(format!("bareiss {b}, closed form {c}")),
                Err(e) => Record::new("det", params, false).with_note(e.to_string()),
            }
        })
        .collect()
}

/// `C` by the defining sum against the generating-function route.
pub fn cpoly_routes(max_k: u32, max_l: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for k1 in 0..=max_k {
        for k2 in 0..=max_k {
            for l in 0..=max_l {
                let pass = cpoly(k1, k2, l) == cpoly_egf(k1, k2, l);
                out.push(Record::new("cpoly", format!("k1={k1} k2={k2} l={l}"), pass));
            }
        }
    }
    out
}

/// Zero pattern and leading diagonal of `C`.
pub fn cpoly_shape(max_k: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for k1 in 0..=max_k {
        for k2 in 0..=max_k {
            let below = (0..k1 + k2).all(|l| cpoly(k1, k2, l).is_zero());
            let diag = &ZPoly::x().pow(k1) * &ZPoly::y().pow(k2);
            let expect = diag.scale(&stirsys_core::num::binomial(k1 + k2, k1));
            let pass = below && cpoly(k1, k2, k1 + k2) == expect;
            out.push(Record::new("cpoly_shape", format!("k1={k1} k2={k2}"), pass));
        }
    }
    out
}

/// The three parts of the alternating-sum identity.
pub fn lemma(max_k: u32, max_l: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for k1 in 0..=max_k {
        for k2 in 0..=max_k {
            for l in 0..=max_l {
                for part in [LemmaPart::I, LemmaPart::Ii, LemmaPart::Iii] {
                    let pass = lemma_comb_check(k1, k2, l, part);
                    out.push(Record::new(
                        "lemma",
                        format!("k1={k1} k2={k2} l={l} part={part}"),
                        pass,
                    ));
                }
            }
        }
    }
    out
}

/// The relation boxes of the quotient sweep: `pos(a,b)`, `neg(a,b)` for
/// `a, b <= max_ab`, then `x`, `y`.
pub fn relations(max_ab: u32) -> Vec<QuotientRel> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            out.push(QuotientRel::Pos { a, b });
        }
    }
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            out.push(QuotientRel::Neg { a, b });
        }
    }
    out.push(QuotientRel::XZero);
    out.push(QuotientRel::YZero);
    out
}

/// Checks of one `(R, rel)` pair, one record per clause.
pub fn quotient_case(set: &PointSet, rel: QuotientRel) -> Vec<Record> {
    let params = format!("R={set} rel={rel}");
    let rec = |family: &'static str, pass: bool| Record::new(family, params.clone(), pass);
    let mut out = Vec::new();
    let base = match reduce_set(set, rel, &RepresentativePolicy::Lowest) {
        Ok(r) => r,
        Err(e) => return vec![rec("quotient.reduce", false).with_note(e.to_string())],
    };
    let expect_r0 = r0(set, rel);
    out.push(rec("quotient.r0", base.reduced_set.len() == expect_r0));
    if matches!(rel, QuotientRel::Pos { .. }) {
        out.push(rec("quotient.heredity", base.reduced_set.is_staircase()));
    }
    let red_b = reduced_b_r(set, rel);
    let choices = all_representative_choices(set, rel).expect("staircase");
    let mut forms = Vec::new();
    let (mut solved, mut matches, mut dets, mut certs) = (true, true, true, true);
    let mut notes = Vec::new();
    for h in &choices {
        let policy = RepresentativePolicy::Explicit(h.points().to_vec());
        let ones = Multiplicity::uniform(h, 1);
        match solve_quotient(set, rel, &ones, &policy) {
            Ok(b) => {
                let nf = reduce_uni(&b, rel);
                matches &= nf == red_b;
                forms.push(nf);
            }
            Err(e) => {
                solved = false;
                notes.push(format!("H={h}: {e}"));
            }
        }
        match det_quotient_closed_form(h, rel) {
            Ok(d) => dets &= !d.is_zero() && d == rel.reduce(&det_bareiss(h)),
            Err(e) => {
                dets = false;
                notes.push(format!("H={h}: {e}"));
            }
        }
        let red = reduce_set(set, rel, &policy).expect("valid choice");
        if let Some(p) = verify_certificates(set, rel, &red.certificates, set.len() + 2) {
            certs = false;
            notes.push(format!("H={h}: certificate for {p} fails"));
        }
    }
    let note = notes.join("; ");
    let with = |r: Record, ok: bool| {
        if ok || note.is_empty() {
            r
        } else {
            r.with_note(note.clone())
        }
    };
    out.push(with(rec("quotient.solve", solved), solved));
    out.push(with(rec("quotient.reduced_b", matches), matches));
    if matches!(rel, QuotientRel::Neg { .. }) {
        let same = forms.windows(2).all(|w| w[0] == w[1]);
        out.push(rec("quotient.choices", same && solved));
    }
    out.push(with(rec("quotient.det", dets), dets));
    out.push(with(rec("quotient.certificates", certs), certs));
    out
}

pub fn quotient(max_r: u32, max_ab: u32) -> Vec<Record> {
    let rels = relations(max_ab);
    staircases_up_to(max_r)
        .iter()
        .flat_map(|set| rels.iter().flat_map(move |rel| quotient_case(set, *rel)))
        .collect()
}

pub fn lemgp0(max_ab: u32, max_k: u32, max_l: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            for k1 in 0..=max_k {
                for k2 in 0..=max_k {
                    for l in 0..=max_l {
                        let pass = lemgp0_check(a, b, k1, k2, l).unwrap_or(false);
                        out.push(Record::new(
                            "lemgp0",
                            format!("a={a} b={b} k1={k1} k2={k2} l={l}"),
                            pass,
                        ));
                    }
                }
            }
        }
    }
    out
}

pub fn lemgp(max_ab: u32, max_k1: u32, max_k2: u32, max_l: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            for k1 in 0..=max_k1 {
                for k2 in b..=max_k2 {
                    for l in 0..=max_l {
                        let pass = lemgp_check(a, b, k1, k2, l).unwrap_or(false);
                        out.push(Record::new(
                            "lemgp",
                            format!("a={a} b={b} k1={k1} k2={k2} l={l}"),
                            pass,
                        ));
                    }
                }
            }
        }
    }
    out
}

fn report_record(
    family: &'static str,
    r: Result<IdentityReport, stirsys_core::Error>,
    params: String,
) -> Record {
    match r {
        Ok(rep) => {
            let failed: Vec<&str> = rep
                .clauses
                .iter()
                .filter(|c| !c.informational && !c.holds)
                .map(|c| c.name)
                .collect();
            let rec = Record::new(family, params, rep.verdict());
            if failed.is_empty() {
                rec
            } else {
                rec.with_note(format!("failed: {}", failed.join(",")))
            }
        }
        Err(e) => Record::new(family, params, false).with_note(e.to_string()),
    }
}

/// The identity boxes: `k1, k2, k, a, b <= 4`, `l, n <= 10` (12 for the
/// convolution), `t in {1, 1/2, -2, 3}`.
pub fn identities() -> Vec<Record> {
    let mut out = Vec::new();
    for k1 in 0..=4 {
        for k2 in 0..=4 {
            for l in 0..=10 {
                let p = format!("k1={k1} k2={k2} l={l}");
                out.push(report_record(
                    "gen_palma",
                    Ok(gen_palma_check(k1, k2, l)),
                    p.clone(),
                ));
                out.push(Record::new(
                    "palma_vs_lemma",
                    p,
                    palma_agrees_with_lemma(k1, k2, l),
                ));
            }
        }
    }
    for k1 in 0..=4 {
        for k2 in 1..=4 {
            for l in 0..=12 {
                out.push(report_record(
                    "convolution",
                    convolution_check(k1, k2, l),
                    format!("k1={k1} k2={k2} l={l}"),
                ));
            }
        }
    }
    for a in 1..=4 {
        for k1 in 0..=4 {
            for k2 in 0..=4 {
                for l in 0..=10 {
                    let p = format!("a={a} k1={k1} k2={k2} l={l}");
                    out.push(report_record("spec_b1", spec_b1_checks(a, k1, k2, l), p));
                }
            }
        }
    }
    let ts = [(1, 1), (1, 2), (-2, 1), (3, 1)]
        .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
    for a in 1..=4 {
        for b in 1..=4 {
            for t in &ts {
                for l in 0..=10 {
                    out.push(report_record(
                        "spec_abt",
                        spec_abt_check(a, b, t, l),
                        format!("a={a} b={b} t={t} l={l}"),
                    ));
                }
            }
        }
    }
    for n in 0..=10 {
        for k in 0..=4 {
            for a in 1..=4 {
                out.push(report_record(
                    "gen_stirling",
                    gen_stirling_checks(n, k, a),
                    format!("n={n} k={k} a={a}"),
                ));
            }
        }
    }
    for n in 0..=10 {
        for w in 0..=4 {
            out.push(report_record(
                "weighted_stirling",
                Ok(weighted_stirling_report(n, w)),
                format!("n={n} w={w}"),
            ));
        }
    }
    for k1 in 0..=3 {
        for k2 in 0..=3 {
            out.push(report_record(
                "egf_relation",
                Ok(egf_relation_check(k1, k2, 12)),
                format!("k1={k1} k2={k2} order=12"),
            ));
        }
    }
    out
}

/// How often the informational variant of the weighted-Stirling identity
/// holds over `n <= max_n`, `w <= max_w`: `(holds, total)`.
pub fn weighted_variant_tally(max_n: u32, max_w: u32) -> (usize, usize) {
    let mut holds = 0;
    let mut total = 0;
    for n in 0..=max_n {
        for w in 0..=max_w {
            let rep = weighted_stirling_report(n, w);
            for c in rep.clauses.iter().filter(|c| c.informational) {
                total += 1;
                holds += c.holds as usize;
            }
        }
    }
    (holds, total)
}

/// Orthogonality for `d <= 20`, recurrence against the explicit sum for
/// `n <= 25`, the generating function for `m <= 15`, the power identity for
/// `n <= 8`, and the first-kind alternating sum for `n <= 25`.
pub fn stirling() -> Vec<Record> {
    let mut out = Vec::new();
    for d in 0..=20 {
        out.push(Record::new(
            "orthogonality",
            format!("d={d}"),
            check_orthogonality(d),
        ));
    }
    for n in 0..=25 {
        let pass = (0..=n).all(|m| stirling2(n, m) == stirling2_explicit(n, m));
        out.push(Record::new("s2_explicit", format!("n={n}"), pass));
    }
    for m in 0..=15 {
        let pass = (0..=m).all(|n| stirling2_egf(m, n) == stirling2(m, n));
        out.push(Record::new("s2_egf", format!("m={m}"), pass));
    }
    for n in 1..=8 {
        out.push(Record::new(
            "power",
            format!("n={n}"),
            check_power_identity(n, 8),
        ));
    }
    for n in 0..=25 {
        let pass = (0..=n).all(|m| check_s1_closed_form(n, m));
        out.push(Record::new("s1_alternating", format!("n={n}"), pass));
    }
    out
}

/// `count` specializations at random rational points with nonzero
/// determinant; singular draws are skipped and redrawn.
pub fn unique(count: usize, max_r: u32, seed: u64) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets = staircases_up_to(max_r);
    let mut out = Vec::new();
    while out.len() < count {
        let set = &sets[rng.gen_range(0..sets.len())];
        let point: [BigRational; 3] = std::array::from_fn(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(-9i64..=9)),
                BigInt::from(rng.gen_range(1i64..=5)),
            )
        });
        let params = format!("R={set} at=({},{},{})", point[0], point[1], point[2]);
        match unique_at_point(set, &point) {
            Ok(UniqueCheck::Singular) => continue,
            Ok(UniqueCheck::Solved { matches, .. }) => {
                out.push(Record::new("unique", params, matches))
            }
            Err(e) => out.push(Record::new("unique", params, false).with_note(e.to_string())),
        }
    }
    out
}

/// `b_R` solves the square system of every staircase: sanity record used by
/// the default sweep alongside [`thest`].
pub fn b_r_square(max_r: u32) -> Vec<Record> {
    staircases_up_to(max_r)
        .into_iter()
        .map(|set| {
            let pass = residual(&set, b_r(&set).coeffs())
                .iter()
                .all(ZPoly::is_zero);
            Record::new("b_r", format!("R={set}"), pass)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Stirling,
    Cpoly,
    Lemma,
    Thest,
    Det,
    Unique,
    Quotient,
    Identities,
}

/// The default boxes of each family.
pub fn run_family(f: Family, seed: u64) -> Vec<Record> {
    match f {
        Family::Stirling => stirling(),
        Family::Cpoly => {
            let mut v = cpoly_routes(5, 12);
            v.extend(cpoly_shape(6));
            v
        }
        Family::Lemma => lemma(4, 10),
        Family::Thest => {
            let mut v = b_r_square(6);
            v.extend(thest(6, 20, seed));
            let nec = thest_necessity(6);
            let note = nec
                .as_ref()
                .map(|(s, c)| format!("R={s} n={}", counts_str(c)));
            let rec = Record::new("thest_necessity", "r<=6", nec.is_some());
            v.push(match note {
                Some(n) => rec.with_note(n),
                None => rec,
            });
            v
        }
        Family::Det => det(6),
        Family::Unique => unique(10, 6, seed),
        Family::Quotient => {
            let mut v = quotient(5, 3);
            v.extend(lemgp0(3, 3, 8));
            v.extend(lemgp(3, 3, 4, 8));
            v
        }
        Family::Identities => identities(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_are_valid_and_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for (l, r) in [(1, 1), (5, 3), (8, 8), (9, 2)] {
            let c = random_composition(&mut a, l, r);
            assert_eq!(c.len(), r as usize);
            assert!(c.iter().all(|&n| n > 0));
            assert_eq!(c.iter().sum::<u32>(), l);
            assert_eq!(c, random_composition(&mut b, l, r));
        }
    }

    #[test]
    fn compositions_cover_all_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..200 {
            seen.insert(random_composition(&mut rng, 5, 3));
        }
        // binom(4, 2) compositions of 5 into 3 parts
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(staircases_up_to(6).len(), 1 + 2 + 3 + 5 + 7 + 11);
    }

    #[test]
    fn necessity_found_early() {
        let (set, counts) = thest_necessity(3).unwrap();
        assert_eq!(set.len(), 2);
        assert!(counts.contains(&0));
    }

    #[test]
    fn summary_counts() {
        let recs = vec![
            Record::new("a", "1", true),
            Record::new("b", "1", false),
            Record::new("a", "2", true),
        ];
        assert_eq!(summarize(&recs), vec![("a", 2, 0), ("b", 0, 1)]);
        assert!(!all_pass(&recs));
    }
}
