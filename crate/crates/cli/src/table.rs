//! Human-readable rendering of reports. Not meant to be parsed back.

use std::fmt::Write;

use lsf_core::braid::census::CensusEntry;
use serde_json::Value;

/// `{"terms":[…]}` as `c·t^e + …` (one variable) or `c·x^a·y^b + …`.
fn poly_text(terms: &[Value]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = t["c"].to_string().trim_matches('"').to_string();
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut vars = Vec::new();
        for (key, name) in [("e", "t"), ("x", "x"), ("y", "y")] {
            match t[key].as_i64() {
                Some(0) | None => {}
                Some(1) => vars.push(name.to_string()),
                Some(k) => vars.push(format!("{name}^{k}")),
            }
        }
        if vars.is_empty() || mag != "1" {
            vars.insert(0, mag);
        }
        out.push_str(&vars.join("*"));
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Object(m) if m.len() == 1 && m.get("terms").is_some_and(Value::is_array) => poly_text(m["terms"].as_array().unwrap()),
        Value::Object(m) if m.contains_key("strands") && m.contains_key("letters") => format!("B{}{}", m["strands"], m["letters"]),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn rows(items: &[Value]) -> String {
    let Some(Value::Object(first)) = items.first() else {
        return items.iter().map(cell).collect::<Vec<_>>().join("\n") + "\n";
    };
    let keys: Vec<&String> = first.keys().collect();
    let grid: Vec<Vec<String>> = items.iter().map(|it| keys.iter().map(|k| cell(&it[k.as_str()])).collect()).collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| grid.iter().map(|r| r[i].chars().count()).max().unwrap_or(0).max(k.chars().count()))
        .collect();
    let mut out = String::new();
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&line(keys.iter().map(|k| k.to_string()).collect()));
    out.push('\n');
    for r in grid {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

pub fn render(v: &Value) -> String {
    let Value::Object(map) = v else {
        return cell(v) + "\n";
    };
    let mut out = String::new();
    let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
    let mut tables = Vec::new();
    for (k, val) in map {
        match val {
            Value::Array(items) if items.iter().any(Value::is_object) => tables.push((k, items)),
            _ => {
                let _ = writeln!(out, "{k:<width$}  {}", cell(val));
            }
        }
    }
    for (k, items) in tables {
        let _ = write!(out, "\n{k}:\n{}", rows(items));
    }
    out
}

pub fn census_header() -> String {
    let note = "# classes are keyed by (genus, alexander); distinct knots sharing both would be merged\n";
    note.to_string() + &format!("{:<6} {:<8} {:<7} {:<40} {}\n", "genus", "strands", "words", "representative", "alexander")
}

pub fn census_row(e: &CensusEntry) -> String {
    let word = e.representative.letters().iter().map(i32::to_string).collect::<Vec<_>>().join(" ");
    format!("{:<6} {:<8} {:<7} {:<40} {}\n", e.genus, e.representative.strands(), e.words, word, e.alexander)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn polynomials_render_as_text() {
        let p = json!({ "terms": [{ "e": -1, "c": 1 }, { "e": 0, "c": -1 }, { "e": 1, "c": 1 }] });
        assert_eq!(cell(&p), "t^-1 - 1 + t");
        let q = json!({ "terms": [{ "x": 1, "y": 2, "c": -3 }] });
        assert_eq!(cell(&q), "-3*x*y^2");
    }

    #[test]
    fn object_rendering() {
        let text = render(&json!({ "verdict": "LSpace", "certificate": "no-witness(3)" }));
        assert_eq!(text, "verdict      LSpace\ncertificate  no-witness(3)\n");
        let text = render(&json!({ "bounds": [{ "n": 1, "b": 2 }, { "n": 10, "b": 11 }] }));
        assert!(text.contains("n   b\n1   2\n10  11\n"));
    }
}
