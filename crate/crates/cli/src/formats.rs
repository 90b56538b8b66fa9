//! Text and JSON input formats, and the JSON shapes used in reports.

use std::collections::BTreeSet;

use lsf_core::braid::BraidWord;
use lsf_core::rational::{parse_rational, ExtRational, Rational};
use lsf_core::seifert::{SeifertFamily, SeifertForm};
use lsf_core::{KnotPoly1, LinkPoly2};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;

/// Reads `@path` arguments from disk; anything else is taken literally.
pub fn resolve(field: &str, raw: &str) -> Result<String, CliError> {
    match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::parse(field, format!("{path}: {e}"))),
        None => Ok(raw.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Coeff {
    fn value(&self) -> Result<BigInt, String> {
        match self {
            Coeff::Small(c) => Ok(BigInt::from(*c)),
            Coeff::Big(s) => s.trim().parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Term1 {
    e: i64,
    c: Coeff,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Term2 {
    x: i64,
    y: i64,
    c: Coeff,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyFile<T> {
    terms: Vec<T>,
}

fn collect_terms<const N: usize>(
    field: &str,
    terms: impl IntoIterator<Item = ([i64; N], Result<BigInt, String>)>,
) -> Result<Vec<([i64; N], BigInt)>, CliError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, (exp, c)) in terms.into_iter().enumerate() {
        let c = c.map_err(|m| CliError::parse(&format!("{field}.terms[{i}].c"), m))?;
        if !seen.insert(exp) {
            return Err(CliError::parse(&format!("{field}.terms[{i}]"), format!("duplicate exponent {exp:?}")));
        }
        out.push((exp, c));
    }
    Ok(out)
}

pub fn parse_poly1(field: &str, text: &str) -> Result<KnotPoly1, CliError> {
    let file: PolyFile<Term1> = serde_json::from_str(text).map_err(|e| CliError::parse(field, e))?;
    let terms = collect_terms(field, file.terms.iter().map(|t| ([t.e], t.c.value())))?;
    Ok(KnotPoly1::from_terms(terms))
}

pub fn parse_poly2(field: &str, text: &str) -> Result<LinkPoly2, CliError> {
    let file: PolyFile<Term2> = serde_json::from_str(text).map_err(|e| CliError::parse(field, e))?;
    let terms = collect_terms(field, file.terms.iter().map(|t| ([t.x, t.y], t.c.value())))?;
    Ok(LinkPoly2::from_terms(terms))
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn poly1_json(p: &KnotPoly1) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({ "e": e[0], "c": big(c) })).collect();
    json!({ "terms": terms })
}

pub fn poly2_json(p: &LinkPoly2) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({ "x": e[0], "y": e[1], "c": big(c) })).collect();
    json!({ "terms": terms })
}

pub fn rational(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::parse(field, format!("{s:?}: {e}")))
}

pub fn rational_json(r: &Rational) -> Value {
    json!(r.to_string())
}

fn integer(field: &str, s: &str) -> Result<i64, CliError> {
    s.trim().parse().map_err(|_| CliError::parse(field, format!("bad integer {s:?}")))
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

/// `"b; r1,r2,…"` with `inf` marking a degenerate fiber.
pub fn parse_form(field: &str, s: &str) -> Result<SeifertForm, CliError> {
    let (b, rest) = s.split_once(';').ok_or_else(|| CliError::parse(field, "expected \"b; r1,r2,...\""))?;
    let b = integer(field, b)?;
    let ratios = split_list(rest)
        .map(|t| t.parse::<ExtRational>().map_err(|e| CliError::parse(field, format!("{t:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    SeifertForm::normalize(b, &ratios).map_err(|e| CliError::parse(field, e))
}

/// `"b; r1,…,r_{s-1}; t,u,v,w"`.
pub fn parse_family(field: &str, s: &str) -> Result<SeifertFamily, CliError> {
    let parts: Vec<&str> = s.split(';').collect();
    let [b, ratios, coeffs] = parts[..] else {
        return Err(CliError::parse(field, "expected \"b; r1,...; t,u,v,w\""));
    };
    let b = integer(field, b)?;
    let base = split_list(ratios).map(|t| rational(field, t)).collect::<Result<Vec<_>, _>>()?;
    let c = split_list(coeffs).map(|t| integer(field, t)).collect::<Result<Vec<_>, _>>()?;
    let [t, u, v, w] = c[..] else {
        return Err(CliError::parse(field, "expected four integers t,u,v,w"));
    };
    SeifertFamily::new(b, base, t, u, v, w).map_err(CliError::precondition)
}

/// `"lo,hi"` or `"lo..hi"`, inclusive and nonempty.
pub fn parse_window(field: &str, s: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = s
        .split_once("..")
        .or_else(|| s.split_once(','))
        .ok_or_else(|| CliError::parse(field, "expected \"lo,hi\""))?;
    let window = (integer(field, lo)?, integer(field, hi)?);
    if window.0 > window.1 {
        return Err(CliError::parse(field, "empty window"));
    }
    Ok(window)
}

/// Signed generator indices separated by spaces or commas.
pub fn parse_word(field: &str, s: &str, strands: Option<usize>) -> Result<BraidWord, CliError> {
    let letters = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| CliError::parse(field, format!("bad letter {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let strands = strands.unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1));
    BraidWord::new(strands, letters).map_err(|e| CliError::parse(field, e))
}

pub fn word_json(w: &BraidWord) -> Value {
    json!({ "strands": w.strands(), "letters": w.letters() })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurgeryFile {
    linking: Vec<Vec<i64>>,
    framings: Vec<String>,
}

pub fn parse_surgery(field: &str, text: &str) -> Result<lsf_core::homology::SurgeryDescription, CliError> {
    let file: SurgeryFile = serde_json::from_str(text).map_err(|e| CliError::parse(field, e))?;
    let framings = file
        .framings
        .iter()
        .enumerate()
        .map(|(i, f)| rational(&format!("{field}.framings[{i}]"), f))
        .collect::<Result<Vec<_>, _>>()?;
    lsf_core::homology::SurgeryDescription::new(file.linking, framings).map_err(|e| CliError::parse(field, e))
}

pub fn parse_matrix(field: &str, text: &str) -> Result<lsf_core::homology::IntMatrix, CliError> {
    let rows: Vec<Vec<Coeff>> = serde_json::from_str(text).map_err(|e| CliError::parse(field, e))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| c.value().map_err(|m| CliError::parse(field, m)))
                .collect::<Result<Vec<BigInt>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    lsf_core::homology::IntMatrix::from_rows(&rows).map_err(|e| CliError::parse(field, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly2_example() {
        let p = parse_poly2("poly2", r#"{"terms":[{"x":1,"y":0,"c":1},{"x":0,"y":1,"c":1},{"x":0,"y":0,"c":-1}]}"#).unwrap();
        let expected = LinkPoly2::from_terms([([1, 0], 1), ([0, 1], 1), ([0, 0], -1)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn poly_rejects_duplicates() {
        let dup_term = r#"{"terms":[{"e":1,"c":1},{"e":1,"c":2}]}"#;
        assert!(matches!(parse_poly1("p", dup_term), Err(CliError::Parse { .. })));
        let dup_key = r#"{"terms":[{"e":1,"e":2,"c":1}]}"#;
        assert!(matches!(parse_poly1("p", dup_key), Err(CliError::Parse { .. })));
        let unknown = r#"{"terms":[{"e":1,"c":1,"z":0}]}"#;
        assert!(parse_poly1("p", unknown).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let p = KnotPoly1::from_coeffs(-2, &[1, -1, 1, -1, 1]);
        let text = poly1_json(&p).to_string();
        assert_eq!(parse_poly1("p", &text).unwrap(), p);
        let q = LinkPoly2::from_terms([([1, 2], 3), ([-1, 0], -7)]);
        assert_eq!(parse_poly2("p", &poly2_json(&q).to_string()).unwrap(), q);
    }

    #[test]
    fn big_coefficients_round_trip() {
        let c: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = KnotPoly1::from_terms([([3], c)]);
        assert_eq!(parse_poly1("p", &poly1_json(&p).to_string()).unwrap(), p);
    }

    #[test]
    fn forms() {
        let f = parse_form("form", "-1; 1/2,1/2,1/3").unwrap();
        assert_eq!(f.to_string(), "-1; 1/3,1/2,1/2");
        assert!(matches!(parse_form("form", "-1; 1/2,1/0"), Err(CliError::Parse { .. })));
        assert!(parse_form("form", "-1; 1/2,inf").unwrap().is_degenerate());
        assert!(parse_form("form", "1/2,1/3").is_err());
    }

    #[test]
    fn families_and_windows() {
        let fam = parse_family("family", "-1; 1/2,1/2; 1,0,0,1").unwrap();
        assert_eq!(fam.coefficients(), (1, 0, 0, 1));
        assert!(matches!(parse_family("family", "-1; 1/2; 2,1,1,2"), Err(CliError::Precondition(_))));
        assert_eq!(parse_window("w", "-5,7").unwrap(), (-5, 7));
        assert_eq!(parse_window("w", "-5..7").unwrap(), (-5, 7));
        assert!(parse_window("w", "3,1").is_err());
    }

    #[test]
    fn words() {
        let w = parse_word("word", "1 -2, 1", None).unwrap();
        assert_eq!((w.strands(), w.letters()), (3, &[1, -2, 1][..]));
        assert!(parse_word("word", "1 3", Some(3)).is_err());
        assert!(parse_word("word", "1 x", None).is_err());
    }

    #[test]
    fn surgery_file() {
        let s = parse_surgery("surgery", r#"{"linking":[[0,1],[1,0]],"framings":["1","7/12"]}"#).unwrap();
        assert_eq!(lsf_core::homology::surgery_h1(&s), BigInt::from(5));
        assert!(parse_surgery("surgery", r#"{"linking":[[0,1],[1,0]],"framings":["1","7/0"]}"#).is_err());
    }
}
