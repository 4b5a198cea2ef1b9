//! Command-line front end for `stirsys-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns
//! the exit code together with everything that should be printed. Exit codes:
//! 0 on success or a true verdict, 1 on a false verdict, 2 on usage errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use stirsys_core::csys::{
    cpoly, cpoly_egf, det_bareiss, det_closed_form, lemma_comb_check, solve, unique_at_point,
    verify_counterexample, CMatrix, ClosedForm, LemmaPart, Multiplicity, PointSet, UniqueCheck,
};
use stirsys_core::identities::{self, IdentityReport};
use stirsys_core::quotient::{lemgp0_check, lemgp_check, r0, reduce_set, RepresentativePolicy};
use stirsys_core::stirling::{stirling1, stirling2};
use stirsys_core::{Error, QuotientRel};

pub mod io;
pub mod sweep;

use io::{
    parse_counts, parse_points, parse_points_json, parse_poly, parse_rational, parse_rel,
    points_json, poly_json, uni_json,
};

/// Everything one invocation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "stirsys",
    version,
    about = "Exact Stirling-coefficient polynomial systems"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized draws.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct PointsArg {
    /// Points as `i,j;i,j;...`, in row order.
    #[arg(long)]
    points: Option<String>,
    /// JSON file holding an array of `[i, j]` pairs.
    #[arg(long, conflicts_with = "points")]
    points_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct PolicyArg {
    /// Representative of each class in the `ax-by` case.
    #[arg(long, value_enum, default_value_t = Policy::Lowest)]
    policy: Policy,
    /// Explicit representatives `i,j;...` (overrides --policy).
    #[arg(long)]
    reps: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Policy {
    Lowest,
    Highest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Sum,
    Egf,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Stirling number of the first (signed) or second kind.
    Stirling {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'k')]
        k: u32,
    },
    /// The polynomial C(k1, k2, l).
    Cpoly {
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(short = 'l')]
        l: u32,
        #[arg(long, value_enum, default_value_t = Method::Sum)]
        method: Method,
    },
    /// The matrix M_{R,l} (default l = r - 1).
    Matrix {
        #[command(flatten)]
        points: PointsArg,
        #[arg(short = 'l')]
        l: Option<u32>,
    },
    /// det(M_R) by fraction-free elimination, with the closed form for staircases.
    Det {
        #[command(flatten)]
        points: PointsArg,
    },
    /// Root-encoded solution prod (s - A_ij)^n_ij for a staircase.
    Solve {
        #[command(flatten)]
        points: PointsArg,
        /// Multiplicities aligned with the points (default all 1).
        #[arg(long)]
        mults: Option<String>,
    },
    /// Reduced set and certificates modulo a relation, or the normal form of a polynomial.
    Reduce {
        #[command(flatten)]
        points: PointsArg,
        /// `ax+by`, `ax-by`, `x` or `y`.
        #[arg(long)]
        rel: String,
        #[command(flatten)]
        policy: PolicyArg,
        /// Polynomial in x, y, z to reduce instead of a point set.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Run one checker and report its verdict.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run parameter-box sweeps and print pass/fail counts.
    Sweep {
        /// Families to run (default all).
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<sweep::Family>,
        /// Print every record, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct IdentityArgs {
    /// Which identity (default: one sample of each).
    #[arg(long, value_enum)]
    id: Option<IdentityId>,
    #[arg(long, default_value_t = 2)]
    k1: u32,
    #[arg(long, default_value_t = 2)]
    k2: u32,
    #[arg(short = 'l', default_value_t = 7)]
    l: u32,
    #[arg(short = 'n', default_value_t = 6)]
    n: u32,
    #[arg(short = 'k', default_value_t = 3)]
    k: u32,
    #[arg(short = 'a', default_value_t = 2)]
    a: u32,
    #[arg(short = 'b', default_value_t = 3)]
    b: u32,
    #[arg(short = 't', default_value = "1", allow_hyphen_values = true)]
    t: String,
    #[arg(short = 'w', default_value_t = 2)]
    w: u32,
    #[arg(long, default_value_t = 8)]
    order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityId {
    GenPalma,
    Convolution,
    SpecB1,
    SpecAbt,
    Weighted,
    GenStirling,
    EgfRelation,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Residual of the root-encoded solution over M_{R,l}.
    Thest {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        mults: Option<String>,
    },
    /// Elimination determinant against the closed form.
    Det {
        #[command(flatten)]
        points: PointsArg,
    },
    /// The seven-point non-staircase example.
    Counterexample,
    /// Solution, reduced roots, representative choices, determinant and certificates modulo a relation.
    Quotient {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        rel: String,
    },
    /// Stirling-number identities.
    Identities(IdentityArgs),
    /// Classical Stirling identities over the default boxes.
    Stirling,
    /// The alternating-sum identities between C and the powers A_ij^l.
    Lemma {
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(short = 'l')]
        l: u32,
        /// i, ii or iii (default all three).
        #[arg(long)]
        part: Option<String>,
    },
    /// Row relation modulo ax+by.
    Lemgp0 {
        #[arg(short = 'a')]
        a: u32,
        #[arg(short = 'b')]
        b: u32,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(short = 'l')]
        l: u32,
    },
    /// Row relation modulo ax-by (needs k2 >= b).
    Lemgp {
        #[arg(short = 'a')]
        a: u32,
        #[arg(short = 'b')]
        b: u32,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(short = 'l')]
        l: u32,
    },
    /// C by its defining sum against the generating-function route.
    Cpoly {
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(short = 'l')]
        l: u32,
    },
    /// Uniqueness of the monic solution at a rational point.
    Unique {
        #[command(flatten)]
        points: PointsArg,
        /// `x,y,z` as rationals; drawn from --seed when absent.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_) => Failure::Verdict(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

/// One command's output before it is rendered.
struct Out {
    command: String,
    json: Map<String, Value>,
    text: String,
    verdict: Option<bool>,
    /// Extra JSON documents printed one per line after the main one.
    lines: Vec<Value>,
}

impl Out {
    fn new(command: &str, json: Value, text: String) -> Self {
        let Value::Object(map) = json else {
            panic!("object expected")
        };
        Self {
            command: command.into(),
            json: map,
            text,
            verdict: None,
            lines: Vec::new(),
        }
    }
}

struct Clause {
    name: String,
    holds: bool,
    informational: bool,
    detail: Option<String>,
}

impl Clause {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            holds,
            informational: false,
            detail: None,
        }
    }

    fn info(mut self) -> Self {
        self.informational = true;
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

fn verdict_out(
    command: &str,
    params: Value,
    clauses: Vec<Clause>,
    mut extra: Map<String, Value>,
    mut text: String,
) -> Out {
    let verdict = clauses.iter().filter(|c| !c.informational).all(|c| c.holds);
    let mut lines = Vec::new();
    for c in &clauses {
        let tag = match (c.holds, c.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "info: holds",
            (false, true) => "info: does not hold",
        };
        let mut line = format!("{}: {tag}", c.name);
        if let Some(d) = &c.detail {
            line.push_str(&format!(" ({d})"));
        }
        lines.push(line);
    }
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    text.push_str(&lines.join("\n"));
    text.push_str(&format!("\nparams: {params}\nverdict: {verdict}"));
    extra.insert("params".into(), params);
    extra.insert(
        "clauses".into(),
        Value::Array(
            clauses
                .iter()
                .map(|c| {
                    let mut m =
                        json!({"name": c.name, "holds": c.holds, "informational": c.informational});
                    if let Some(d) = &c.detail {
                        m["detail"] = json!(d);
                    }
                    m
                })
                .collect(),
        ),
    );
    extra.insert("verdict".into(), json!(verdict));
    let mut out = Out::new(command, Value::Object(extra), text);
    out.verdict = Some(verdict);
    out
}

fn load_points(p: &PointsArg) -> Result<PointSet, Failure> {
    match (&p.points, &p.points_file) {
        (Some(s), None) => Ok(parse_points(s)?),
        (None, Some(path)) => {
            let raw =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(parse_points_json(&raw)?)
        }
        _ => Err(Failure::Usage(
            "one of --points or --points-file is required".into(),
        )),
    }
}

fn load_mults(set: &PointSet, mults: &Option<String>) -> Result<Multiplicity, Failure> {
    match mults {
        None => Ok(Multiplicity::uniform(set, 1)),
        Some(s) => Ok(Multiplicity::from_counts(set, &parse_counts(s)?)?),
    }
}

fn load_policy(p: &PolicyArg) -> Result<RepresentativePolicy, Failure> {
    if let Some(reps) = &p.reps {
        return Ok(RepresentativePolicy::Explicit(
            parse_points(reps)?.points().to_vec(),
        ));
    }
    Ok(match p.policy {
        Policy::Lowest => RepresentativePolicy::Lowest,
        Policy::Highest => RepresentativePolicy::Highest,
    })
}

fn report_json(r: &IdentityReport) -> Value {
    let params: Map<String, Value> = r
        .params
        .iter()
        .map(|(k, v)| ((*k).to_string(), json!(v)))
        .collect();
    json!({
        "id": r.id,
        "params": params,
        "verdict": r.verdict(),
        "clauses": r.clauses.iter().map(|c| json!({
            "name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds, "informational": c.informational,
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &IdentityReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!(
        "{} {}: {}",
        r.id,
        params.join(" "),
        if r.verdict() { "PASS" } else { "FAIL" }
    );
    for c in &r.clauses {
        let tag = match (c.holds, c.informational) {
            (true, false) => "holds",
            (false, false) => "FAILS",
            (true, true) => "holds (informational)",
            (false, true) => "does not hold (informational)",
        };
        s.push_str(&format!(
            "\n  {}: {tag}\n    lhs = {}\n    rhs = {}",
            c.name, c.lhs, c.rhs
        ));
    }
    s
}

fn cmd_stirling(kind: u8, n: u32, k: u32) -> Out {
    let v = if kind == 1 {
        stirling1(n, k)
    } else {
        stirling2(n, k)
    };
    Out::new(
        "stirling",
        json!({"kind": kind, "n": n, "k": k, "value": v.to_string()}),
        v.to_string(),
    )
}

fn cmd_cpoly(k1: u32, k2: u32, l: u32, method: Method) -> Out {
    let p = match method {
        Method::Sum => cpoly(k1, k2, l),
        Method::Egf => cpoly_egf(k1, k2, l),
    };
    let m = if method == Method::Sum { "sum" } else { "egf" };
    Out::new(
        "cpoly",
        json!({"k1": k1, "k2": k2, "l": l, "method": m, "poly": poly_json(&p), "text": p.to_string()}),
        p.to_string(),
    )
}

fn cmd_matrix(set: &PointSet, l: Option<u32>) -> Out {
    let l = l.unwrap_or(set.len().saturating_sub(1) as u32) as usize;
    let m = CMatrix::build(set, l);
    let text = m
        .rows()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let cells: Vec<String> = m.row(k).iter().map(ToString::to_string).collect();
            format!("{p}: {}", cells.join(" | "))
        })
        .collect::<Vec<_>>()
        .join("\n");
    let entries: Vec<Value> = m
        .entries()
        .iter()
        .map(|row| Value::Array(row.iter().map(poly_json).collect()))
        .collect();
    Out::new(
        "matrix",
        json!({"points": points_json(set), "l": l, "entries": entries}),
        text,
    )
}

fn closed_form_json(set: &PointSet) -> Option<(Value, String)> {
    if !set.is_staircase() || set.len() < 2 {
        return None;
    }
    let cf = ClosedForm::of(set);
    let factors: Vec<String> = cf.factors.iter().map(ToString::to_string).collect();
    let text = format!(
        "{} * {}",
        cf.prefactor,
        factors.iter().map(|f| format!("({f})")).collect::<String>()
    );
    Some((
        json!({"prefactor": cf.prefactor.to_string(), "factors": factors}),
        text,
    ))
}

fn cmd_det(set: &PointSet) -> Out {
    let d = det_bareiss(set);
    let mut j = json!({"points": points_json(set), "staircase": set.is_staircase(), "det": poly_json(&d), "text": d.to_string()});
    let mut text = format!("det = {d}");
    if let Some((cf, t)) = closed_form_json(set) {
        j["closed_form"] = cf;
        text.push_str(&format!("\nclosed form = {t}"));
    }
    Out::new("det", j, text)
}

fn cmd_solve(set: &PointSet, mults: &Multiplicity) -> Result<Out, Failure> {
    let b = solve(set, mults)?;
    let counts = mults.aligned(set)?;
    Ok(Out::new(
        "solve",
        json!({"points": points_json(set), "mults": counts, "l": counts.iter().sum::<u32>(), "coeffs": uni_json(&b), "text": b.to_string()}),
        b.to_string(),
    ))
}

fn cmd_reduce(
    points: &PointsArg,
    rel: QuotientRel,
    policy: &PolicyArg,
    poly: &Option<String>,
) -> Result<Out, Failure> {
    if let Some(src) = poly {
        let p = parse_poly(src, ["x", "y", "z"])?;
        let nf = rel.reduce(&p);
        let shown = nf.display_with(rel.names()).to_string();
        return Ok(Out::new(
            "reduce",
            json!({"rel": rel.to_string(), "case": rel.tag(), "normal_form": poly_json(&nf), "text": shown, "variables": rel.names()}),
            shown,
        ));
    }
    let set = load_points(points)?;
    let res = reduce_set(&set, rel, &load_policy(policy)?)?;
    let certs: Vec<Value> = res
        .certificates
        .iter()
        .map(|c| {
            json!({
                "dropped": [c.dropped.i, c.dropped.j],
                "combination": c.combination.iter().map(|(p, v)| json!([p.i, p.j, v.to_string()])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let classes: Vec<Value> = res
        .classes
        .iter()
        .map(|c| Value::Array(c.iter().map(io::point_json).collect()))
        .collect();
    let mut text = format!(
        "rel: {rel} ({})\nreduced set: {}\nr0: {}",
        rel.tag(),
        res.reduced_set,
        r0(&set, rel)
    );
    if !res.classes.is_empty() {
        let cs: Vec<String> = res
            .classes
            .iter()
            .map(|c| format!("{}", PointSet::new(c.clone()).expect("distinct")))
            .collect();
        text.push_str(&format!("\nclasses: {}", cs.join(" ")));
    }
    for c in &res.certificates {
        let terms: Vec<String> = c
            .combination
            .iter()
            .map(|(p, v)| format!("({v}) row{p}"))
            .collect();
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        text.push_str(&format!("\nrow{} = {rhs}", c.dropped));
    }
    Ok(Out::new(
        "reduce",
        json!({
            "rel": rel.to_string(), "case": rel.tag(), "points": points_json(&set),
            "reduced_set": points_json(&res.reduced_set), "r0": r0(&set, rel),
            "classes": classes, "certificates": certs,
        }),
        text,
    ))
}

fn verify(cmd: &VerifyCmd, seed: u64) -> Result<Out, Failure> {
    match cmd {
        VerifyCmd::Thest { points, mults } => {
            let set = load_points(points)?;
            set.require_staircase()?;
            let m = load_mults(&set, mults)?;
            let counts = m.aligned(&set)?;
            let params = json!({"points": points_json(&set), "mults": counts});
            let clause = match solve(&set, &m) {
                Ok(_) => Clause::new("residual_zero", true),
                Err(e @ Error::VerificationFailed(_)) => {
                    Clause::new("residual_zero", false).detail(e.to_string())
                }
                Err(e) => return Err(e.into()),
            };
            Ok(verdict_out(
                "verify thest",
                params,
                vec![clause],
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Det { points } => {
            let set = load_points(points)?;
            set.require_staircase()?;
            let b = det_bareiss(&set);
            let clauses = match det_closed_form(&set) {
                Ok(c) => vec![
                    Clause::new("integral", true),
                    Clause::new("closed_form_matches", c == b),
                ],
                Err(Error::NotIntegral) => vec![Clause::new("integral", false)],
                Err(e) => return Err(e.into()),
            };
            let mut extra = Map::new();
            extra.insert("det".into(), poly_json(&b));
            Ok(verdict_out(
                "verify det",
                json!({"points": points_json(&set)}),
                clauses,
                extra,
                format!("det = {b}"),
            ))
        }
        VerifyCmd::Counterexample => {
            let r = verify_counterexample();
            let clauses = vec![
                Clause::new("det_matches_factored_form", r.det_matches_factored),
                Clause::new("cleared_solution_residual_zero", r.cleared_residual_zero),
                Clause::new("det_factorization", r.factorization_holds),
                Clause::new(
                    "factored_form_matches_reversed_columns",
                    r.reversed_columns_match,
                )
                .info(),
            ];
            let mut extra = Map::new();
            extra.insert("det".into(), poly_json(&r.det));
            extra.insert("factored".into(), poly_json(&r.factored));
            let text = format!("det      = {}\nfactored = {}", r.det, r.factored);
            let set = stirsys_core::csys::counterexample::seven_point_set();
            Ok(verdict_out(
                "verify counterexample",
                json!({"points": points_json(&set)}),
                clauses,
                extra,
                text,
            ))
        }
        VerifyCmd::Quotient { points, rel } => {
            let set = load_points(points)?;
            set.require_staircase()?;
            let rel = parse_rel(rel)?;
            let clauses = sweep::quotient_case(&set, rel)
                .into_iter()
                .map(|r| {
                    let c = Clause::new(r.family.trim_start_matches("quotient."), r.pass);
                    match r.note {
                        Some(n) => c.detail(n),
                        None => c,
                    }
                })
                .collect();
            let params = json!({"points": points_json(&set), "rel": rel.to_string()});
            Ok(verdict_out(
                "verify quotient",
                params,
                clauses,
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Identities(args) => verify_identities(args),
        VerifyCmd::Stirling => {
            let recs = sweep::stirling();
            let clauses = sweep::summarize(&recs)
                .into_iter()
                .map(|(f, pass, fail)| {
                    Clause::new(f, fail == 0).detail(format!("{pass} passed, {fail} failed"))
                })
                .collect();
            Ok(verdict_out(
                "verify stirling",
                json!({}),
                clauses,
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Lemma { k1, k2, l, part } => {
            let parts = match part {
                None => vec![LemmaPart::I, LemmaPart::Ii, LemmaPart::Iii],
                Some(p) => vec![p
                    .parse::<LemmaPart>()
                    .map_err(|_| format!("bad part `{p}` (expected i, ii or iii)"))?],
            };
            let clauses = parts
                .into_iter()
                .map(|p| Clause::new(format!("part_{p}"), lemma_comb_check(*k1, *k2, *l, p)))
                .collect();
            Ok(verdict_out(
                "verify lemma",
                json!({"k1": k1, "k2": k2, "l": l}),
                clauses,
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Lemgp0 { a, b, k1, k2, l } => {
            let holds = lemgp0_check(*a, *b, *k1, *k2, *l)?;
            let params = json!({"a": a, "b": b, "k1": k1, "k2": k2, "l": l});
            Ok(verdict_out(
                "verify lemgp0",
                params,
                vec![Clause::new("vanishes", holds)],
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Lemgp { a, b, k1, k2, l } => {
            let holds = lemgp_check(*a, *b, *k1, *k2, *l)?;
            let params = json!({"a": a, "b": b, "k1": k1, "k2": k2, "l": l});
            Ok(verdict_out(
                "verify lemgp",
                params,
                vec![Clause::new("sides_agree", holds)],
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Cpoly { k1, k2, l } => {
            let holds = cpoly(*k1, *k2, *l) == cpoly_egf(*k1, *k2, *l);
            let params = json!({"k1": k1, "k2": k2, "l": l});
            Ok(verdict_out(
                "verify cpoly",
                params,
                vec![Clause::new("routes_agree", holds)],
                Map::new(),
                String::new(),
            ))
        }
        VerifyCmd::Unique { points, at } => {
            let set = load_points(points)?;
            set.require_staircase()?;
            let point: [BigRational; 3] = match at {
                Some(s) => {
                    let vals = s
                        .split(',')
                        .map(parse_rational)
                        .collect::<Result<Vec<_>, String>>()?;
                    vals.try_into()
                        .map_err(|_| "--at needs three values x,y,z".to_string())?
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    std::array::from_fn(|_| {
                        BigRational::new(
                            rng.gen_range(-9i64..=9).into(),
                            rng.gen_range(1i64..=5).into(),
                        )
                    })
                }
            };
            let at_str: Vec<String> = point.iter().map(ToString::to_string).collect();
            let params = json!({"points": points_json(&set), "at": at_str});
            let clause = match unique_at_point(&set, &point)? {
                UniqueCheck::Singular => {
                    return Err(Failure::Usage(format!(
                        "M_R is singular at ({})",
                        at_str.join(",")
                    )))
                }
                UniqueCheck::Solved { matches, .. } => Clause::new("matches_b_r", matches),
            };
            Ok(verdict_out(
                "verify unique",
                params,
                vec![clause],
                Map::new(),
                String::new(),
            ))
        }
    }
}

fn verify_identities(args: &IdentityArgs) -> Result<Out, Failure> {
    let reports = match args.id {
        None => identities::sample_reports(),
        Some(id) => vec![match id {
            IdentityId::GenPalma => identities::gen_palma_check(args.k1, args.k2, args.l),
            IdentityId::Convolution => identities::convolution_check(args.k1, args.k2, args.l)?,
            IdentityId::SpecB1 => identities::spec_b1_checks(args.a, args.k1, args.k2, args.l)?,
            IdentityId::SpecAbt => {
                identities::spec_abt_check(args.a, args.b, &parse_rational(&args.t)?, args.l)?
            }
            IdentityId::Weighted => identities::weighted_stirling_report(args.n, args.w),
            IdentityId::GenStirling => identities::gen_stirling_checks(args.n, args.k, args.a)?,
            IdentityId::EgfRelation => identities::egf_relation_check(args.k1, args.k2, args.order),
        }],
    };
    let verdict = reports.iter().all(IdentityReport::verdict);
    let text = reports
        .iter()
        .map(report_text)
        .collect::<Vec<_>>()
        .join("\n");
    let mut out = Out::new(
        "verify identities",
        json!({"reports": reports.iter().map(report_json).collect::<Vec<_>>(), "verdict": verdict}),
        format!("{text}\nverdict: {verdict}"),
    );
    out.verdict = Some(verdict);
    Ok(out)
}

fn cmd_sweep(only: &[sweep::Family], verbose: bool, seed: u64) -> Out {
    let families: Vec<sweep::Family> = if only.is_empty() {
        sweep::Family::value_variants().to_vec()
    } else {
        only.to_vec()
    };
    let mut records = Vec::new();
    for f in families {
        records.extend(sweep::run_family(f, seed));
    }
    let summary = sweep::summarize(&records);
    let ok = sweep::all_pass(&records);
    let mut text = String::new();
    for r in records.iter().filter(|r| verbose || !r.pass) {
        text.push_str(&format!("{r}\n"));
    }
    for (f, pass, fail) in &summary {
        text.push_str(&format!("{f}: {pass} passed, {fail} failed\n"));
    }
    text.push_str(&format!("verdict: {ok}"));
    let lines = records
        .iter()
        .map(|r| json!({"schema": 1, "family": r.family, "params": r.params, "pass": r.pass, "note": r.note}))
        .collect();
    let fams: Vec<Value> = summary
        .iter()
        .map(|(f, p, n)| json!({"family": f, "passed": p, "failed": n}))
        .collect();
    let mut out = Out::new(
        "sweep",
        json!({"seed": seed, "summary": fams, "verdict": ok}),
        text,
    );
    out.verdict = Some(ok);
    out.lines = lines;
    out
}

fn dispatch(cli: &Cli) -> Result<Out, Failure> {
    match &cli.cmd {
        Cmd::Stirling { kind, n, k } => Ok(cmd_stirling(*kind, *n, *k)),
        Cmd::Cpoly { k1, k2, l, method } => Ok(cmd_cpoly(*k1, *k2, *l, *method)),
        Cmd::Matrix { points, l } => Ok(cmd_matrix(&load_points(points)?, *l)),
        Cmd::Det { points } => Ok(cmd_det(&load_points(points)?)),
        Cmd::Solve { points, mults } => {
            let set = load_points(points)?;
            let m = load_mults(&set, mults)?;
            cmd_solve(&set, &m)
        }
        Cmd::Reduce {
            points,
            rel,
            policy,
            poly,
        } => cmd_reduce(points, parse_rel(rel)?, policy, poly),
        Cmd::Verify(v) => verify(v, cli.seed),
        Cmd::Sweep { only, verbose } => Ok(cmd_sweep(only, *verbose, cli.seed)),
    }
}

fn render(out: Out, format: Format) -> (i32, String) {
    let code = match out.verdict {
        Some(false) => 1,
        _ => 0,
    };
    let body = match format {
        Format::Text => format!("{}\n", out.text),
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("schema".into(), json!(1));
            doc.insert("command".into(), json!(out.command));
            doc.extend(out.json);
            let mut s = serde_json::to_string(&Value::Object(doc)).expect("serializable");
            s.push('\n');
            for l in &out.lines {
                s.push_str(&serde_json::to_string(l).expect("serializable"));
                s.push('\n');
            }
            s
        }
    };
    (code, body)
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let (code, stdout) = render(out, cli.format);
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Verdict(msg)) => {
            let stdout = match cli.format {
                Format::Text => format!("{msg}\nverdict: false\n"),
                Format::Json => {
                    format!("{}\n", json!({"schema": 1, "error": msg, "verdict": false}))
                }
            };
            Outcome {
                code: 1,
                stdout,
                stderr: String::new(),
            }
        }
    }
}
