//! Text and JSON formats: point sets, relations, rationals, polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use stirsys_core::csys::{Point, PointSet};
use stirsys_core::polyring::{Coeff, MultiPoly, QPoly};
use stirsys_core::{QuotientRel, UniPoly};

/// `"0,0;1,0;0,1"`. Whitespace is ignored.
pub fn parse_points(s: &str) -> Result<PointSet, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return PointSet::new(Vec::new()).map_err(|e| e.to_string());
    }
    let points = s
        .split(';')
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let (i, j) = pair
                .split_once(',')
                .ok_or_else(|| format!("point `{pair}` is not `i,j`"))?;
            let coord = |v: &str| {
                v.parse::<u32>()
                    .map_err(|_| format!("bad coordinate `{v}` in `{pair}`"))
            };
            Ok(Point::new(coord(i)?, coord(j)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    PointSet::new(points).map_err(|e| e.to_string())
}

/// JSON array of `[i, j]` pairs.
pub fn parse_points_json(s: &str) -> Result<PointSet, String> {
    let v: Value = serde_json::from_str(s).map_err(|e| format!("points file: {e}"))?;
    let arr = v
        .as_array()
        .ok_or("points file: expected an array of [i, j] pairs")?;
    let points = arr
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([i, j]) => match (i.as_u64(), j.as_u64()) {
                (Some(i), Some(j)) if i <= u32::MAX as u64 && j <= u32::MAX as u64 => {
                    Ok(Point::new(i as u32, j as u32))
                }
                _ => Err(format!("points file: bad pair {p}")),
            },
            _ => Err(format!("points file: bad pair {p}")),
        })
        .collect::<Result<Vec<_>, String>>()?;
    PointSet::new(points).map_err(|e| e.to_string())
}

/// `"1,2,1"`.
pub fn parse_counts(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| format!("bad multiplicity `{t}`"))
        })
        .collect()
}

/// `"3"`, `"-1/2"`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("bad rational `{s}`");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `"ax+by"`, `"ax-by"`, `"x"`, `"y"`, or any signed combination such as
/// `"-2x+3y"`. Coefficients default to 1.
pub fn parse_rel(s: &str) -> Result<QuotientRel, String> {
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("bad relation `{s}` (expected e.g. `2x+3y`, `x-y`, `x`, `y`)");
    if src.is_empty() {
        return Err(bad());
    }
    let (mut a, mut b) = (0i64, 0i64);
    let mut rest = src.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'+' => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ if rest.len() == src.len() => (false, rest),
            _ => return Err(bad()),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let (coef, var) = term.split_at(term.len().checked_sub(1).ok_or_else(bad)?);
        let mut c: i64 = match coef.trim_end_matches('*') {
            "" => 1,
            digits => digits.parse().map_err(|_| bad())?,
        };
        if neg {
            c = -c;
        }
        match var {
            "x" => a += c,
            "y" => b += c,
            _ => return Err(bad()),
        }
    }
    QuotientRel::from_linear(a, b).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize(s: &str, names: [&str; 3]) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            out.push(Tok::Num(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                k += 1;
            }
            let name: String = chars[start..k].iter().collect();
            let v = names.iter().position(|n| *n == name).ok_or_else(|| {
                format!(
                    "unknown variable `{name}` (expected one of {})",
                    names.join(", ")
                )
            })?;
            out.push(Tok::Var(v));
        } else if "+-*/^".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(format!("unexpected character `{c}` in polynomial"));
        }
    }
    Ok(out)
}

/// Parses sums of terms `c * x^i y^j z^k`; `*` between factors is optional
/// and coefficients may be fractions. This accepts the canonical text form.
pub fn parse_poly(s: &str, names: [&str; 3]) -> Result<QPoly, String> {
    let toks = tokenize(s, names)?;
    if toks.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut k = 0;
    let mut total = QPoly::zero();
    let mut first = true;
    while k < toks.len() {
        let mut sign = BigRational::one();
        match toks[k] {
            Tok::Op('+') => k += 1,
            Tok::Op('-') => {
                sign = -sign;
                k += 1;
            }
            _ if first => {}
            _ => return Err(format!("expected `+` or `-` at token {k}")),
        }
        first = false;
        let mut term = QPoly::constant(sign);
        let mut factors = 0;
        while k < toks.len() && !matches!(toks[k], Tok::Op('+') | Tok::Op('-')) {
            match &toks[k] {
                Tok::Op('*')
                    if factors > 0 && toks.get(k + 1).is_some_and(|t| !matches!(t, Tok::Op(_))) =>
                {
                    k += 1
                }
                Tok::Num(n) => {
                    let mut c = BigRational::from_integer(n.clone());
                    k += 1;
                    if let Some(Tok::Op('/')) = toks.get(k) {
                        match toks.get(k + 1) {
                            Some(Tok::Num(d)) if !d.is_zero() => {
                                c /= BigRational::from_integer(d.clone())
                            }
                            _ => return Err("expected a nonzero denominator after `/`".into()),
                        }
                        k += 2;
                    }
                    term = term.scale(&c);
                    factors += 1;
                }
                Tok::Var(v) => {
                    k += 1;
                    let mut e = 1u32;
                    if let Some(Tok::Op('^')) = toks.get(k) {
                        match toks.get(k + 1) {
                            Some(Tok::Num(n)) => {
                                e = u32::try_from(n)
                                    .map_err(|_| "exponent too large".to_string())?
                            }
                            _ => return Err("expected an exponent after `^`".into()),
                        }
                        k += 2;
                    }
                    term = &term * &QPoly::var(*v).pow(e);
                    factors += 1;
                }
                t => return Err(format!("unexpected token {t:?}")),
            }
        }
        if factors == 0 {
            return Err("dangling sign".into());
        }
        total += &term;
    }
    Ok(total)
}

/// Terms as `[i, j, k, "c"]` records, decreasing lexicographic exponent order.
pub fn poly_json<C: Coeff>(p: &MultiPoly<C>) -> Value {
    Value::Array(
        p.terms()
            .rev()
            .map(|(e, c)| json!([e[0], e[1], e[2], c.to_string()]))
            .collect(),
    )
}

/// Coefficient list of a polynomial in `s`, index = power of `s`.
pub fn uni_json<C: Coeff>(b: &UniPoly<C>) -> Value {
    Value::Array(b.coeffs().iter().map(poly_json).collect())
}

pub fn point_json(p: &Point) -> Value {
    json!([p.i, p.j])
}

pub fn points_json(set: &PointSet) -> Value {
    Value::Array(set.points().iter().map(point_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use stirsys_core::ZPoly;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn points_text_and_json() {
        let a = parse_points("0,0; 1,0;0,1").unwrap();
        let b = parse_points_json("[[0,0],[1,0],[0,1]]").unwrap();
        assert_eq!(a, b);
        assert!(parse_points("0,0;0,0").is_err());
        assert!(parse_points("0;1").is_err());
        assert!(parse_points_json("[[0,-1]]").is_err());
    }

    #[test]
    fn relations() {
        assert_eq!(parse_rel("2x+3y").unwrap(), QuotientRel::Pos { a: 2, b: 3 });
        assert_eq!(parse_rel("2x-3y").unwrap(), QuotientRel::Neg { a: 2, b: 3 });
        assert_eq!(parse_rel("x - y").unwrap(), QuotientRel::Neg { a: 1, b: 1 });
        assert_eq!(parse_rel("-x+y").unwrap(), QuotientRel::Neg { a: 1, b: 1 });
        assert_eq!(parse_rel("x").unwrap(), QuotientRel::XZero);
        assert_eq!(parse_rel("y").unwrap(), QuotientRel::YZero);
        for bad in ["", "2z", "x+", "0x+0y", "x++y"] {
            assert!(parse_rel(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = &(&ZPoly::linear(1, -2, 3, 7).pow(3) * &ZPoly::y()) - &ZPoly::from_int(5);
        let text = p.to_string();
        assert_eq!(parse_poly(&text, XYZ).unwrap(), p.to_rational());
        let q = parse_poly("3/2 * z^1 - x^2 y", XYZ).unwrap();
        assert_eq!(q.to_string(), "-1 * x^2 y^1 + 3/2 * z^1");
        assert_eq!(
            parse_poly("-2*x*x + 0", XYZ).unwrap(),
            ZPoly::x().pow(2).scale(&(-2).into()).to_rational()
        );
    }

    #[test]
    fn malformed_polynomials() {
        for bad in ["", "x^", "2 +", "w", "1/0", "x ** 2", "(x)"] {
            assert!(parse_poly(bad, XYZ).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_terms() {
        let p = &ZPoly::x().scale(&2.into()) - &ZPoly::one();
        assert_eq!(poly_json(&p), json!([[1, 0, 0, "2"], [0, 0, 0, "-1"]]));
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-1/2").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }
}
